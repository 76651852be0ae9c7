#pragma once

// Surgery scripts (.srg): a line-oriented description of a model manifold,
// its ambient pi_1 presentation, the tori to surger and optional H_2 / SW
// data. '#' starts a comment. Directives:
//
//   manifold sym2 <l> | manifold product <g> <h> | manifold custom e=<int> sign=<int>
//   generators <name> ...
//   relator <word> [= <word>]
//   torus <name> g1=<word> g2=<word> mu=<word>
//   surgery <torus> curve=<g1|g2> m=<int | affine expression in n> [sign=<1|-1>]
//   family <a>..<b>
//   surface <name> genus=<int> square=<int> vector=<ints>
//   lattice <names> Q=<row;row;...>
//   sw basic <vector> value=<int>
//   sw zsum <vector> value=<int>
//   sw family <a>..<b>
//   sw scenario <label> [<surface>.genus=<int> ...]
//   sw adjunction negative=<on|off>
//   expect pi1=<trivial|open>
//
// Words may only use the declared generators, or the model's generators when
// there is no generators line.

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "reveng/coset_enum.hpp"
#include "reveng/error.hpp"
#include "reveng/lattice.hpp"
#include "reveng/manifold.hpp"
#include "reveng/word.hpp"
#include "reveng/word_syntax.hpp"

namespace reveng {

struct ManifoldDecl {
  enum class Kind { Sym2, Product, Custom };
  Kind kind = Kind::Sym2;
  std::int64_t first = 0;   // l, g, or e
  std::int64_t second = 0;  // unused, h, or sigma

  friend bool operator==(ManifoldDecl const&, ManifoldDecl const&) = default;
};

struct TorusDecl {
  std::string name;
  DistinguishedTriple triple;

  friend bool operator==(TorusDecl const&, TorusDecl const&) = default;
};

// A surgery coefficient: a constant, or an affine function of the family
// parameter n.
struct Coefficient {
  AffineExponent value;
  bool hole = false;

  std::int64_t at(std::int64_t n) const { return hole ? value(n) : value.offset; }
  friend bool operator==(Coefficient const&, Coefficient const&) = default;
};

struct SurgeryDecl {
  std::string torus;
  SurgeryCurve curve = SurgeryCurve::G1;
  Coefficient m;
  int meridian_sign = 1;

  friend bool operator==(SurgeryDecl const&, SurgeryDecl const&) = default;
};

struct ScenarioDecl {
  std::string label;
  std::vector<std::pair<std::string, std::int64_t>> genus_overrides;

  friend bool operator==(ScenarioDecl const&, ScenarioDecl const&) = default;
};

struct SwDecl {
  std::vector<std::pair<ClassVector, std::int64_t>> basics;
  std::vector<std::pair<ClassVector, std::int64_t>> zsums;
  std::optional<IntRange> family;
  std::vector<ScenarioDecl> scenarios;
  bool allow_negative_square = true;
  bool adjunction_declared = false;

  bool any() const {
    return !basics.empty() || !zsums.empty() || family || !scenarios.empty() || adjunction_declared;
  }
  friend bool operator==(SwDecl const&, SwDecl const&) = default;
};

enum class Pi1Expectation { Trivial, Open };

struct LatticeDecl {
  std::vector<std::string> names;
  SymmetricForm pairing;

  friend bool operator==(LatticeDecl const&, LatticeDecl const&) = default;
};

struct SurgeryScript {
  ManifoldDecl manifold;
  bool explicit_generators = false;
  Alphabet alphabet;
  std::vector<Word> relators;
  std::vector<TorusDecl> tori;
  std::vector<SurgeryDecl> surgeries;
  std::optional<IntRange> family;
  std::vector<SurfaceClass> surfaces;
  std::optional<LatticeDecl> lattice;
  SwDecl sw;
  std::optional<Pi1Expectation> expect_pi1;

  bool has_family_hole() const {
    return std::any_of(surgeries.begin(), surgeries.end(), [](auto const& s) { return s.m.hole; });
  }
  TorusDecl const* find_torus(std::string_view name) const {
    for (auto const& t : tori)
      if (t.name == name) return &t;
    return nullptr;
  }

  friend bool operator==(SurgeryScript const&, SurgeryScript const&) = default;
};

inline ManifoldState model_state(ManifoldDecl const& m) {
  switch (m.kind) {
    case ManifoldDecl::Kind::Sym2:
      return model_sym2(m.first);
    case ManifoldDecl::Kind::Product:
      return model_product(m.first, m.second);
    case ManifoldDecl::Kind::Custom:
      break;
  }
  return custom_manifold("custom(e=" + std::to_string(m.first) + ", sign=" + std::to_string(m.second) + ")", m.first,
                         m.second, Presentation{});
}

namespace detail {

struct Line {
  std::size_t number = 0;
  std::string_view text;  // comment stripped, not trimmed
};

inline bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

inline std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!is_space(c)) out.push_back(c);
  return out;
}

// Cursor over one line that tracks 1-based columns for diagnostics.
class LineCursor {
 public:
  explicit LineCursor(Line const& l) : line_(l) {}

  std::size_t line() const { return line_.number; }
  std::size_t column_of(std::string_view piece) const {
    return static_cast<std::size_t>(piece.data() - line_.text.data()) + 1;
  }
  [[noreturn]] void fail(std::string_view at, std::string const& what) const {
    throw SyntaxError(line_.number, column_of(at), what);
  }
  [[noreturn]] void fail_column(std::size_t column, std::string const& what) const {
    throw SyntaxError(line_.number, column, what);
  }

  // Next whitespace-delimited token, empty at end of line.
  std::string_view token() {
    auto t = line_.text;
    while (pos_ < t.size() && is_space(t[pos_])) ++pos_;
    std::size_t start = pos_;
    while (pos_ < t.size() && !is_space(t[pos_])) ++pos_;
    return t.substr(start, pos_ - start);
  }
  std::string_view rest() {
    auto t = line_.text.substr(std::min(pos_, line_.text.size()));
    pos_ = line_.text.size();
    return t;
  }
  std::string_view text() const { return line_.text; }

 private:
  Line line_;
  std::size_t pos_ = 0;
};

inline std::int64_t to_int(LineCursor const& cur, std::string_view s, char const* what) {
  std::string_view digits = s;
  if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
  if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size())
    cur.fail(s.empty() ? cur.text().substr(cur.text().size()) : s,
             std::string("expected an integer for ") + what + ", got '" + std::string(s) + "'");
  return v;
}

// Splits "head k1=v1 k2=v2 ..." where values may contain spaces; a key is
// recognised only at the start of a token. Unknown or repeated keys fail.
inline std::map<std::string, std::string_view> split_keys(LineCursor const& cur, std::string_view text,
                                                          std::vector<std::string> const& allowed) {
  struct Hit {
    std::size_t key_pos;
    std::size_t value_pos;
    std::string key;
  };
  std::vector<Hit> hits;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (i != 0 && !is_space(text[i - 1])) continue;
    for (auto const& k : allowed) {
      if (text.substr(i, k.size() + 1) == k + "=") {
        hits.push_back({i, i + k.size() + 1, k});
        break;
      }
    }
  }
  std::map<std::string, std::string_view> out;
  if (hits.empty() || !trim(text.substr(0, hits.front().key_pos)).empty()) {
    auto stray = trim(text.substr(0, hits.empty() ? text.size() : hits.front().key_pos));
    if (!stray.empty()) cur.fail(stray, "unexpected '" + std::string(stray) + "'");
  }
  for (std::size_t h = 0; h < hits.size(); ++h) {
    std::size_t end = h + 1 < hits.size() ? hits[h + 1].key_pos : text.size();
    auto value = trim(text.substr(hits[h].value_pos, end - hits[h].value_pos));
    if (out.contains(hits[h].key)) cur.fail(text.substr(hits[h].key_pos), "repeated key '" + hits[h].key + "'");
    if (value.empty()) cur.fail(text.substr(hits[h].key_pos), "empty value for '" + hits[h].key + "'");
    out.emplace(hits[h].key, value);
  }
  return out;
}

inline std::string_view require_key(LineCursor const& cur, std::map<std::string, std::string_view> const& kv,
                                    std::string const& key) {
  auto it = kv.find(key);
  if (it == kv.end()) cur.fail_column(cur.text().size() + 1, "missing '" + key + "='");
  return it->second;
}

// Affine expressions in n: sums of integer constants and integer multiples
// of n, with parentheses, unary minus and optional '*'.
class AffineParser {
 public:
  AffineParser(LineCursor const& cur, std::string_view text) : cur_(cur), text_(text) {}

  AffineExponent parse() {
    AffineExponent v = sum();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "' in coefficient");
    return v;
  }

 private:
  [[noreturn]] void fail(std::string const& what) { cur_.fail_column(cur_.column_of(text_) + pos_, what); }
  void skip() {
    while (pos_ < text_.size() && is_space(text_[pos_])) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  AffineExponent sum() {
    AffineExponent v = product();
    while (peek() == '+' || peek() == '-') {
      bool minus = text_[pos_++] == '-';
      AffineExponent r = product();
      v.slope += minus ? -r.slope : r.slope;
      v.offset += minus ? -r.offset : r.offset;
    }
    return v;
  }

  AffineExponent product() {
    AffineExponent v = unary();
    while (true) {
      char c = peek();
      if (c == '*') {
        ++pos_;
      } else if (!(c == 'n' || c == '(' || std::isdigit(static_cast<unsigned char>(c)))) {
        break;
      }
      AffineExponent r = unary();
      if (v.slope != 0 && r.slope != 0) fail("coefficient must be affine in n");
      v = {v.slope * r.offset + r.slope * v.offset, v.offset * r.offset};
    }
    return v;
  }

  AffineExponent unary() {
    char c = peek();
    if (c == '-' || c == '+') {
      ++pos_;
      AffineExponent v = unary();
      return c == '-' ? AffineExponent{-v.slope, -v.offset} : v;
    }
    if (c == 'n') {
      ++pos_;
      return {1, 0};
    }
    if (c == '(') {
      ++pos_;
      AffineExponent v = sum();
      if (peek() != ')') fail("expected ')' in coefficient");
      ++pos_;
      return v;
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer, n, or '(' in coefficient");
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, v);
    if (ec != std::errc{}) fail("coefficient out of range");
    return {0, v};
  }

  LineCursor const& cur_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

inline IntRange parse_range(LineCursor const& cur, std::string_view s) {
  auto dots = s.find("..");
  if (dots == std::string_view::npos) cur.fail(s, "expected a range a..b");
  IntRange r{to_int(cur, s.substr(0, dots), "range start"), to_int(cur, s.substr(dots + 2), "range end")};
  if (r.last < r.first) cur.fail(s, "empty range");
  return r;
}

// `at` locates the value in the line for diagnostics; `text` is parsed.
inline ClassVector parse_vector(LineCursor const& cur, std::string_view at, std::string_view text) {
  std::string s = strip_spaces(text);
  std::string_view v = s;
  if (v.size() >= 2 && v.front() == '(' && v.back() == ')') v = v.substr(1, v.size() - 2);
  if (v.empty()) cur.fail(at, "empty vector");
  ClassVector out;
  std::size_t start = 0;
  while (true) {
    auto comma = v.find(',', start);
    auto piece = v.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    auto digits = piece;
    if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
    std::int64_t x = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), x);
    if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size())
      cur.fail(at, "bad vector entry '" + std::string(piece) + "'");
    out.push_back(x);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

inline SymmetricForm parse_pairing(LineCursor const& cur, std::string_view at) {
  std::string s = strip_spaces(at);
  std::vector<std::vector<std::int64_t>> rows;
  std::size_t start = 0;
  while (true) {
    auto semi = s.find(';', start);
    rows.push_back(parse_vector(cur, at, s.substr(start, semi == std::string::npos ? std::string::npos : semi - start)));
    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  try {
    return SymmetricForm(std::move(rows));
  } catch (InvalidArgument const& e) {
    cur.fail(at, e.what());
  }
}

inline bool valid_name(std::string_view name) {
  if (name.empty() || !(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) return false;
  return std::all_of(name.begin(), name.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; });
}

inline std::vector<std::string> parse_names(LineCursor const& cur, std::string_view text) {
  std::vector<std::string> names;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_space(text[i])) ++i;
    std::size_t start = i;
    while (i < text.size() && !is_space(text[i])) ++i;
    if (start == i) break;
    auto name = text.substr(start, i - start);
    if (!valid_name(name)) cur.fail(name, "bad name '" + std::string(name) + "'");
    names.emplace_back(name);
  }
  return names;
}

inline std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 1, start = 0;
  while (start <= text.size()) {
    auto nl = text.find('\n', start);
    auto raw = text.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    auto hash = raw.find('#');
    if (hash != std::string_view::npos) raw = raw.substr(0, hash);
    lines.push_back({number, raw});
    if (nl == std::string_view::npos) break;
    start = nl + 1;
    ++number;
  }
  return lines;
}

}  // namespace detail

inline SurgeryScript parse_script(std::string_view text) {
  using namespace detail;
  auto const lines = split_lines(text);
  SurgeryScript script;

  // Pass 1: manifold and generators fix the alphabet for every word.
  std::optional<std::size_t> manifold_line, generators_line;
  for (auto const& line : lines) {
    LineCursor cur(line);
    auto head = cur.token();
    if (head == "manifold") {
      if (manifold_line) cur.fail(head, "second manifold declaration (first on line " +
                                            std::to_string(*manifold_line) + ")");
      manifold_line = line.number;
      auto kind = cur.token();
      if (kind == "sym2") {
        auto l = cur.token();
        script.manifold = {ManifoldDecl::Kind::Sym2, to_int(cur, l, "genus"), 0};
        if (script.manifold.first < 2) cur.fail(l, "sym2 genus must be at least 2");
      } else if (kind == "product") {
        auto g = cur.token();
        auto h = cur.token();
        script.manifold = {ManifoldDecl::Kind::Product, to_int(cur, g, "genus"), to_int(cur, h, "genus")};
        if (script.manifold.first < 1 || script.manifold.second < 1) cur.fail(g, "product genera must be at least 1");
      } else if (kind == "custom") {
        auto kv = split_keys(cur, cur.rest(), {"e", "sign"});
        script.manifold = {ManifoldDecl::Kind::Custom, to_int(cur, require_key(cur, kv, "e"), "e"),
                           to_int(cur, require_key(cur, kv, "sign"), "sign")};
        continue;
      } else {
        cur.fail(kind, "unknown manifold kind '" + std::string(kind) + "' (expected sym2, product or custom)");
      }
      if (auto extra = cur.token(); !extra.empty()) cur.fail(extra, "unexpected '" + std::string(extra) + "'");
    } else if (head == "generators") {
      if (generators_line) cur.fail(head, "second generators line");
      generators_line = line.number;
      auto names = parse_names(cur, cur.rest());
      for (auto& n : names) {
        if (script.alphabet.find(n)) cur.fail(cur.text(), "duplicate generator '" + n + "'");
        script.alphabet.add(std::move(n));
      }
    }
  }
  if (!manifold_line) throw SyntaxError(1, 1, "missing manifold declaration");
  script.explicit_generators = generators_line.has_value();
  if (!script.explicit_generators) script.alphabet = model_state(script.manifold).pi1.alphabet();

  auto word = [&](LineCursor const& cur, std::string_view piece) {
    return parse_word(piece, script.alphabet, cur.line(), cur.column_of(piece));
  };

  std::vector<std::size_t> hole_lines;
  // Pass 2: everything else.
  for (auto const& line : lines) {
    LineCursor cur(line);
    auto head = cur.token();
    if (head.empty() || head == "manifold" || head == "generators") continue;

    if (head == "relator") {
      auto body = trim(cur.rest());
      if (body.empty()) cur.fail_column(cur.text().size() + 1, "relator needs a word");
      script.relators.push_back(parse_relator(body, script.alphabet, cur.line(), cur.column_of(body)));
    } else if (head == "torus") {
      auto name = cur.token();
      if (!valid_name(name)) cur.fail(name.empty() ? cur.text() : name, "torus needs a name");
      if (script.find_torus(name)) cur.fail(name, "duplicate torus '" + std::string(name) + "'");
      auto kv = split_keys(cur, cur.rest(), {"g1", "g2", "mu"});
      TorusDecl t{std::string(name),
                  {word(cur, require_key(cur, kv, "g1")), word(cur, require_key(cur, kv, "g2")),
                   word(cur, require_key(cur, kv, "mu"))}};
      script.tori.push_back(std::move(t));
    } else if (head == "surgery") {
      auto name = cur.token();
      if (name.empty()) cur.fail(cur.text(), "surgery needs a torus name");
      auto kv = split_keys(cur, cur.rest(), {"curve", "m", "sign"});
      SurgeryDecl s;
      s.torus = std::string(name);
      auto curve = require_key(cur, kv, "curve");
      if (curve == "g1")
        s.curve = SurgeryCurve::G1;
      else if (curve == "g2")
        s.curve = SurgeryCurve::G2;
      else
        cur.fail(curve, "curve must be g1 or g2");
      auto m = require_key(cur, kv, "m");
      s.m.value = AffineParser(cur, m).parse();
      s.m.hole = s.m.value.slope != 0 || m.find('n') != std::string_view::npos;
      if (s.m.hole) hole_lines.push_back(line.number);
      if (auto it = kv.find("sign"); it != kv.end()) {
        auto v = to_int(cur, it->second, "sign");
        if (v != 1 && v != -1) cur.fail(it->second, "sign must be 1 or -1");
        s.meridian_sign = static_cast<int>(v);
      }
      script.surgeries.push_back(std::move(s));
    } else if (head == "family") {
      auto r = cur.token();
      if (script.family) cur.fail(head, "second family line");
      script.family = parse_range(cur, r);
      if (auto extra = cur.token(); !extra.empty()) cur.fail(extra, "unexpected '" + std::string(extra) + "'");
    } else if (head == "surface") {
      auto name = cur.token();
      if (!valid_name(name)) cur.fail(name.empty() ? cur.text() : name, "surface needs a name");
      for (auto const& other : script.surfaces)
        if (other.name == name) cur.fail(name, "duplicate surface '" + std::string(name) + "'");
      auto kv = split_keys(cur, cur.rest(), {"genus", "square", "vector"});
      SurfaceClass sc{std::string(name), to_int(cur, require_key(cur, kv, "genus"), "genus"),
                      to_int(cur, require_key(cur, kv, "square"), "square"), {}};
      auto v = require_key(cur, kv, "vector");
      sc.vector = parse_vector(cur, v, v);
      if (sc.genus < 0) cur.fail(require_key(cur, kv, "genus"), "genus must be nonnegative");
      script.surfaces.push_back(std::move(sc));
    } else if (head == "lattice") {
      if (script.lattice) cur.fail(head, "second lattice line");
      auto rest = cur.rest();
      auto q = rest.find("Q=");
      if (q == std::string_view::npos) cur.fail_column(cur.text().size() + 1, "missing 'Q='");
      auto names = parse_names(cur, rest.substr(0, q));
      auto pairing = parse_pairing(cur, rest.substr(q + 2));
      if (names.size() != pairing.dimension())
        cur.fail(rest, std::to_string(names.size()) + " basis names for a rank " +
                           std::to_string(pairing.dimension()) + " pairing");
      script.lattice = LatticeDecl{std::move(names), std::move(pairing)};
    } else if (head == "sw") {
      auto kind = cur.token();
      if (kind == "basic" || kind == "zsum") {
        auto rest = cur.rest();
        auto v = rest.find("value=");
        if (v == std::string_view::npos) cur.fail_column(cur.text().size() + 1, "missing 'value='");
        auto vec_text = trim(rest.substr(0, v));
        auto value_text = trim(rest.substr(v + 6));
        auto entry = std::make_pair(parse_vector(cur, vec_text.empty() ? rest : vec_text, vec_text),
                                    to_int(cur, value_text, "value"));
        auto& list = kind == "basic" ? script.sw.basics : script.sw.zsums;
        for (auto const& [k, val] : list)
          if (k == entry.first) cur.fail(vec_text, "class " + to_string(k) + " declared twice");
        list.push_back(std::move(entry));
      } else if (kind == "family") {
        if (script.sw.family) cur.fail(kind, "second sw family line");
        script.sw.family = parse_range(cur, cur.token());
      } else if (kind == "scenario") {
        auto label = cur.token();
        if (!valid_name(label)) cur.fail(label.empty() ? cur.text() : label, "scenario needs a label");
        for (auto const& s : script.sw.scenarios)
          if (s.label == label) cur.fail(label, "duplicate scenario '" + std::string(label) + "'");
        ScenarioDecl sc{std::string(label), {}};
        for (auto tok = cur.token(); !tok.empty(); tok = cur.token()) {
          auto dot = tok.find(".genus=");
          if (dot == std::string_view::npos) cur.fail(tok, "expected <surface>.genus=<int>");
          sc.genus_overrides.emplace_back(std::string(tok.substr(0, dot)),
                                          to_int(cur, tok.substr(dot + 7), "genus"));
        }
        script.sw.scenarios.push_back(std::move(sc));
      } else if (kind == "adjunction") {
        auto kv = split_keys(cur, cur.rest(), {"negative"});
        auto v = require_key(cur, kv, "negative");
        if (v != "on" && v != "off") cur.fail(v, "negative must be on or off");
        script.sw.allow_negative_square = v == "on";
        script.sw.adjunction_declared = true;
      } else {
        cur.fail(kind.empty() ? cur.text() : kind, "unknown sw directive '" + std::string(kind) + "'");
      }
    } else if (head == "expect") {
      auto kv = split_keys(cur, cur.rest(), {"pi1"});
      auto v = require_key(cur, kv, "pi1");
      if (v == "trivial")
        script.expect_pi1 = Pi1Expectation::Trivial;
      else if (v == "open")
        script.expect_pi1 = Pi1Expectation::Open;
      else
        cur.fail(v, "pi1 expectation must be trivial or open");
    } else {
      cur.fail(head, "unknown directive '" + std::string(head) + "'");
    }
  }

  if (hole_lines.size() > 1)
    throw SyntaxError(hole_lines[1], 1, "multiple family holes (first on line " + std::to_string(hole_lines[0]) + ")");

  // Name resolution across lines.
  std::vector<std::string> surgered;
  std::size_t surgery_index = 0;
  for (auto const& line : lines) {
    LineCursor cur(line);
    if (cur.token() != "surgery") continue;
    auto const& s = script.surgeries[surgery_index++];
    auto name = cur.token();
    if (!script.find_torus(s.torus)) cur.fail(name, "unresolved torus '" + s.torus + "'");
    if (std::find(surgered.begin(), surgered.end(), s.torus) != surgered.end())
      cur.fail(name, "torus '" + s.torus + "' surgered twice");
    surgered.push_back(s.torus);
  }
  if (script.lattice) {
    auto const rank = script.lattice->names.size();
    for (auto const& sc : script.surfaces)
      if (sc.vector.size() != rank)
        throw SyntaxError(1, 1, "surface " + sc.name + " has " + std::to_string(sc.vector.size()) +
                                    " coordinates, lattice has rank " + std::to_string(rank));
  }
  return script;
}

namespace detail {

inline std::string format_affine(AffineExponent a) {
  if (a.slope == 0) return std::to_string(a.offset);
  std::string out;
  if (a.slope == 1)
    out = "n";
  else if (a.slope == -1)
    out = "-n";
  else
    out = std::to_string(a.slope) + "n";
  if (a.offset > 0) out += "+" + std::to_string(a.offset);
  if (a.offset < 0) out += std::to_string(a.offset);
  return out;
}

inline std::string format_vector(ClassVector const& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

}  // namespace detail

// Canonical text for a script; parse_script(to_text(s)) == s.
inline std::string to_text(SurgeryScript const& s) {
  using detail::format_vector;
  std::ostringstream os;
  switch (s.manifold.kind) {
    case ManifoldDecl::Kind::Sym2:
      os << "manifold sym2 " << s.manifold.first << '\n';
      break;
    case ManifoldDecl::Kind::Product:
      os << "manifold product " << s.manifold.first << ' ' << s.manifold.second << '\n';
      break;
    case ManifoldDecl::Kind::Custom:
      os << "manifold custom e=" << s.manifold.first << " sign=" << s.manifold.second << '\n';
      break;
  }
  if (s.explicit_generators) {
    os << "generators";
    for (auto const& g : s.alphabet.generators()) os << ' ' << g.name;
    os << '\n';
  }
  for (auto const& r : s.relators) os << "relator " << to_string(r, s.alphabet) << '\n';
  for (auto const& t : s.tori)
    os << "torus " << t.name << " g1=" << to_string(t.triple.g1, s.alphabet) << " g2="
       << to_string(t.triple.g2, s.alphabet) << " mu=" << to_string(t.triple.mu, s.alphabet) << '\n';
  for (auto const& g : s.surgeries) {
    os << "surgery " << g.torus << " curve=" << (g.curve == SurgeryCurve::G1 ? "g1" : "g2")
       << " m=" << (g.m.hole ? detail::format_affine(g.m.value) : std::to_string(g.m.value.offset));
    if (g.meridian_sign != 1) os << " sign=" << g.meridian_sign;
    os << '\n';
  }
  if (s.family) os << "family " << s.family->first << ".." << s.family->last << '\n';
  if (s.lattice) {
    os << "lattice";
    for (auto const& n : s.lattice->names) os << ' ' << n;
    os << " Q=";
    auto const& rows = s.lattice->pairing.rows();
    for (std::size_t i = 0; i < rows.size(); ++i) os << (i ? ";" : "") << format_vector(rows[i]);
    os << '\n';
  }
  for (auto const& sc : s.surfaces)
    os << "surface " << sc.name << " genus=" << sc.genus << " square=" << sc.square
       << " vector=" << format_vector(sc.vector) << '\n';
  for (auto const& [k, v] : s.sw.basics) os << "sw basic " << format_vector(k) << " value=" << v << '\n';
  for (auto const& [k, v] : s.sw.zsums) os << "sw zsum " << format_vector(k) << " value=" << v << '\n';
  if (s.sw.family) os << "sw family " << s.sw.family->first << ".." << s.sw.family->last << '\n';
  for (auto const& sc : s.sw.scenarios) {
    os << "sw scenario " << sc.label;
    for (auto const& [name, g] : sc.genus_overrides) os << ' ' << name << ".genus=" << g;
    os << '\n';
  }
  if (s.sw.adjunction_declared) os << "sw adjunction negative=" << (s.sw.allow_negative_square ? "on" : "off") << '\n';
  if (s.expect_pi1) os << "expect pi1=" << (*s.expect_pi1 == Pi1Expectation::Trivial ? "trivial" : "open") << '\n';
  return os.str();
}

// Presentation files: "generators ..." then "relator ..." lines, plus
// optional "subgroup <word>" lines.
struct PresentationFile {
  Presentation presentation;
  std::vector<Word> subgroup;
};

inline PresentationFile parse_presentation_file(std::string_view text) {
  using namespace detail;
  auto const lines = split_lines(text);
  Alphabet alphabet;
  bool have_generators = false;
  for (auto const& line : lines) {
    LineCursor cur(line);
    if (cur.token() != "generators") continue;
    if (have_generators) cur.fail(cur.text(), "second generators line");
    have_generators = true;
    for (auto& n : parse_names(cur, cur.rest())) {
      if (alphabet.find(n)) cur.fail(cur.text(), "duplicate generator '" + n + "'");
      alphabet.add(std::move(n));
    }
  }
  if (!have_generators) throw SyntaxError(1, 1, "missing generators line");
  PresentationFile out{Presentation{alphabet}, {}};
  for (auto const& line : lines) {
    LineCursor cur(line);
    auto head = cur.token();
    if (head.empty() || head == "generators") continue;
    auto body = trim(cur.rest());
    if (head == "relator") {
      if (body.empty()) cur.fail_column(cur.text().size() + 1, "relator needs a word");
      out.presentation.add_relator(parse_relator(body, alphabet, cur.line(), cur.column_of(body)));
    } else if (head == "subgroup") {
      if (body.empty()) cur.fail_column(cur.text().size() + 1, "subgroup needs a word");
      out.subgroup.push_back(parse_word(body, alphabet, cur.line(), cur.column_of(body)));
    } else {
      cur.fail(head, "unknown directive '" + std::string(head) + "'");
    }
  }
  return out;
}

}  // namespace reveng
