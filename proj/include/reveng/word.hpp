#pragma once

// Words over a finite generator alphabet and finite group presentations.
//
// A Word is always stored freely reduced; every constructor and operation
// reduces eagerly, so two words are equal as group elements of the free group
// iff they compare equal.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "reveng/error.hpp"

namespace reveng {

using GenId = std::uint32_t;

struct Letter {
  GenId gen = 0;
  bool inverse = false;

  constexpr Letter inverted() const noexcept { return {gen, !inverse}; }
  constexpr int sign() const noexcept { return inverse ? -1 : 1; }

  friend constexpr bool operator==(Letter, Letter) = default;
  friend constexpr auto operator<=>(Letter, Letter) = default;
};

constexpr Letter gen(GenId g) noexcept { return {g, false}; }
constexpr Letter inv(GenId g) noexcept { return {g, true}; }

class Word;
Word free_reduce(std::span<Letter const> letters);

class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters) : Word(std::vector<Letter>(letters)) {}
  explicit Word(std::vector<Letter> letters) {
    letters_.reserve(letters.size());
    for (Letter l : letters) push_reduced(l);
  }

  static Word generator(GenId g) { return Word{gen(g)}; }

  std::span<Letter const> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  Word inverse() const {
    Word w;
    w.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back(it->inverted());
    return w;
  }

  Word& operator*=(Word const& rhs) {
    for (Letter l : rhs.letters_) push_reduced(l);
    return *this;
  }
  friend Word operator*(Word lhs, Word const& rhs) { return lhs *= rhs; }

  // Integer power; negative exponents invert.
  Word pow(std::int64_t k) const {
    Word base = k < 0 ? inverse() : *this;
    std::uint64_t n = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1 : static_cast<std::uint64_t>(k);
    Word out;
    for (std::uint64_t i = 0; i < n; ++i) out *= base;
    return out;
  }

  // Largest generator id used, if any.
  std::optional<GenId> max_generator() const {
    std::optional<GenId> m;
    for (Letter l : letters_)
      if (!m || l.gen > *m) m = l.gen;
    return m;
  }

  // Number of occurrences of generator g (either sign).
  std::size_t occurrences(GenId g) const {
    return static_cast<std::size_t>(
        std::count_if(letters_.begin(), letters_.end(), [g](Letter l) { return l.gen == g; }));
  }

  // Sum of exponents of generator g.
  std::int64_t exponent_sum(GenId g) const {
    std::int64_t s = 0;
    for (Letter l : letters_)
      if (l.gen == g) s += l.sign();
    return s;
  }

  friend bool operator==(Word const&, Word const&) = default;
  friend auto operator<=>(Word const& a, Word const& b) {
    if (a.size() != b.size()) return a.size() <=> b.size();
    return std::lexicographical_compare_three_way(a.letters_.begin(), a.letters_.end(), b.letters_.begin(),
                                                  b.letters_.end());
  }

 private:
  void push_reduced(Letter l) {
    if (!letters_.empty() && letters_.back() == l.inverted())
      letters_.pop_back();
    else
      letters_.push_back(l);
  }

  std::vector<Letter> letters_;
};

inline Word free_reduce(std::span<Letter const> letters) {
  return Word(std::vector<Letter>(letters.begin(), letters.end()));
}

// [x, y] = x y x^-1 y^-1.
inline Word commutator(Word const& x, Word const& y) { return x * y * x.inverse() * y.inverse(); }

// Shortest cyclic conjugate obtained by cancelling matching ends.
inline Word cyclic_reduce(Word const& w) {
  auto l = w.letters();
  std::size_t lo = 0, hi = l.size();
  while (hi - lo >= 2 && l[lo] == l[hi - 1].inverted()) {
    ++lo;
    --hi;
  }
  return free_reduce(l.subspan(lo, hi - lo));
}

// Rotation of w starting at position k.
inline Word rotate(Word const& w, std::size_t k) {
  auto l = w.letters();
  std::vector<Letter> out(l.begin() + static_cast<std::ptrdiff_t>(k), l.end());
  out.insert(out.end(), l.begin(), l.begin() + static_cast<std::ptrdiff_t>(k));
  return Word(std::move(out));
}

// Replace every g^{+-1} in w by replacement^{+-1}. The replacement must not
// itself contain g.
inline Word substitute(Word const& w, GenId g, Word const& replacement) {
  if (replacement.occurrences(g) != 0)
    throw InvalidArgument("substitute: replacement word contains the generator being replaced");
  Word const replacement_inv = replacement.inverse();
  Word out;
  for (Letter l : w) {
    if (l.gen == g)
      out *= l.inverse ? replacement_inv : replacement;
    else
      out *= Word{l};
  }
  return out;
}

struct Generator {
  GenId id = 0;
  std::string name;

  friend bool operator==(Generator const&, Generator const&) = default;
};

// Ordered list of uniquely named generators with dense ids.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names) {
    for (auto& n : names) add(std::move(n));
  }

  GenId add(std::string name) {
    if (name.empty()) throw InvalidArgument("generator name must be nonempty");
    if (index_.contains(name)) throw InvalidArgument("duplicate generator name '" + name + "'");
    auto const id = static_cast<GenId>(gens_.size());
    index_.emplace(name, id);
    gens_.push_back({id, std::move(name)});
    return id;
  }

  std::size_t size() const noexcept { return gens_.size(); }
  bool empty() const noexcept { return gens_.empty(); }
  std::vector<Generator> const& generators() const noexcept { return gens_; }
  std::string const& name(GenId g) const { return gens_.at(g).name; }

  std::optional<GenId> find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  bool contains(Word const& w) const {
    auto m = w.max_generator();
    return !m || *m < gens_.size();
  }

  void require(Word const& w, std::string_view what) const {
    if (!contains(w))
      throw AlphabetMismatch(std::string(what) + " uses a generator outside the " + std::to_string(size()) +
                             "-letter alphabet");
  }

  friend bool operator==(Alphabet const& a, Alphabet const& b) { return a.gens_ == b.gens_; }

 private:
  std::vector<Generator> gens_;
  std::unordered_map<std::string, GenId> index_;
};

// Commutator with both words checked against an alphabet.
inline Word commutator(Alphabet const& alphabet, Word const& x, Word const& y) {
  alphabet.require(x, "commutator argument");
  alphabet.require(y, "commutator argument");
  return commutator(x, y);
}

// Prints a1 a2^-1 b1^3; the empty word prints as "1".
inline std::string to_string(Word const& w, Alphabet const& alphabet) {
  if (w.empty()) return "1";
  std::ostringstream os;
  auto l = w.letters();
  for (std::size_t i = 0; i < l.size();) {
    std::size_t j = i;
    while (j < l.size() && l[j] == l[i]) ++j;
    if (i != 0) os << ' ';
    os << alphabet.name(l[i].gen);
    auto const run = static_cast<long long>(j - i);
    if (l[i].inverse)
      os << "^-" << run;
    else if (run != 1)
      os << '^' << run;
    i = j;
  }
  return os.str();
}

class Presentation {
 public:
  Presentation() = default;
  explicit Presentation(Alphabet alphabet, std::vector<Word> relators = {}) : alphabet_(std::move(alphabet)) {
    for (auto& r : relators) add_relator(std::move(r));
  }

  Alphabet const& alphabet() const noexcept { return alphabet_; }
  std::size_t num_generators() const noexcept { return alphabet_.size(); }
  std::vector<Word> const& relators() const noexcept { return relators_; }

  void add_relator(Word r) {
    alphabet_.require(r, "relator");
    relators_.push_back(std::move(r));
  }

  friend bool operator==(Presentation const&, Presentation const&) = default;

 private:
  Alphabet alphabet_;
  std::vector<Word> relators_;
};

// Free abelian group on the given names: every pair of generators commutes.
inline Presentation free_abelian_presentation(std::vector<std::string> names) {
  Presentation p{Alphabet(std::move(names))};
  auto const n = static_cast<GenId>(p.num_generators());
  for (GenId i = 0; i < n; ++i)
    for (GenId j = i + 1; j < n; ++j) p.add_relator(commutator(Word::generator(i), Word::generator(j)));
  return p;
}

}  // namespace reveng
