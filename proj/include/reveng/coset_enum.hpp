#pragma once

// Todd-Coxeter coset enumeration, HLT strategy.
//
// Cosets are numbered in definition order. Coincidences are processed
// immediately with a union-find structure; the smaller index always survives.
// The bound applies to live cosets (defined and not yet identified with a
// smaller one). An enumeration that reports Completed has had its table
// checked against every relator and subgroup generator.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <future>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "reveng/error.hpp"
#include "reveng/word.hpp"

namespace reveng {

inline constexpr std::size_t kDefaultMaxCosets = 1'000'000;

// Closed coset table; cosets are 1-based, coset 1 is the subgroup.
class CosetTable {
 public:
  CosetTable(std::size_t num_cosets, std::size_t num_generators, std::vector<std::uint32_t> entries)
      : cosets_(num_cosets), gens_(num_generators), entries_(std::move(entries)) {}

  std::size_t num_cosets() const noexcept { return cosets_; }
  std::size_t num_generators() const noexcept { return gens_; }

  // Image of coset c (1-based) under a letter.
  std::size_t act(std::size_t c, Letter l) const {
    if (c == 0 || c > cosets_ || l.gen >= gens_) throw InvalidArgument("CosetTable::act out of range");
    return entries_[(c - 1) * 2 * gens_ + 2 * l.gen + (l.inverse ? 1 : 0)] + 1;
  }

  std::size_t act(std::size_t c, Word const& w) const {
    for (Letter l : w) c = act(c, l);
    return c;
  }

  // Permutation consistency, relators trace to the identity at every coset,
  // subgroup generators fix coset 1.
  bool verify(Presentation const& p, std::vector<Word> const& subgroup) const {
    if (p.num_generators() != gens_) return false;
    for (std::size_t c = 1; c <= cosets_; ++c)
      for (GenId g = 0; g < gens_; ++g)
        if (act(act(c, gen(g)), inv(g)) != c) return false;
    for (auto const& r : p.relators())
      for (std::size_t c = 1; c <= cosets_; ++c)
        if (act(c, r) != c) return false;
    for (auto const& h : subgroup)
      if (act(1, h) != 1) return false;
    return true;
  }

 private:
  std::size_t cosets_;
  std::size_t gens_;
  std::vector<std::uint32_t> entries_;
};

enum class EnumerationStatus { Completed, Exceeded };

struct EnumerationOutcome {
  EnumerationStatus status = EnumerationStatus::Exceeded;
  std::size_t index = 0;  // valid when Completed
  std::size_t bound = 0;  // the max_cosets in force
  std::size_t cosets_defined = 0;
  std::size_t coincidences = 0;  // cosets removed by identification
  std::optional<CosetTable> table;

  bool completed() const noexcept { return status == EnumerationStatus::Completed; }
};

inline std::string to_string(EnumerationOutcome const& o) {
  if (o.completed()) return "Completed(" + std::to_string(o.index) + ")";
  return "Exceeded(" + std::to_string(o.bound) + ")";
}

enum class RelatorOrder { AsGiven, ShortestFirst };

struct EnumerationOptions {
  std::size_t max_cosets = kDefaultMaxCosets;
  RelatorOrder order = RelatorOrder::AsGiven;
  std::ostream* progress = nullptr;  // "defined=<n> coincidences=<m>" lines
  std::size_t progress_interval = 10'000;
  bool keep_table = true;
};

namespace detail {

class HltEnumerator {
 public:
  static constexpr std::int32_t kUndefined = -1;

  HltEnumerator(Presentation const& p, std::vector<Word> const& subgroup, EnumerationOptions const& opt)
      : opt_(opt), cols_(2 * p.num_generators()) {
    for (auto const& r : p.relators()) {
      Word c = cyclic_reduce(r);
      if (!c.empty()) relators_.push_back(columns(c));
    }
    if (opt.order == RelatorOrder::ShortestFirst)
      std::stable_sort(relators_.begin(), relators_.end(),
                       [](auto const& a, auto const& b) { return a.size() < b.size(); });
    for (auto const& h : subgroup)
      if (!h.empty()) subgroup_.push_back(columns(h));
  }

  EnumerationOutcome run() {
    new_row();
    EnumerationOutcome out;
    out.bound = opt_.max_cosets;
    try {
      for (auto const& h : subgroup_) {
        scan_and_fill(0, h);
      }
      for (std::size_t a = 0; a < rows_; ++a) {
        maybe_compact(a);
        if (!alive(a)) continue;
        for (auto const& r : relators_) {
          scan_and_fill(a, r);
          if (!alive(a)) break;
        }
        if (!alive(a)) continue;
        for (std::size_t x = 0; x < cols_; ++x)
          if (entry(a, x) == kUndefined) define(a, x);
      }
    } catch (BoundReached const&) {
      out.status = EnumerationStatus::Exceeded;
      out.cosets_defined = defined_;
      out.coincidences = coincidences_;
      return out;
    }
    out.status = EnumerationStatus::Completed;
    out.index = live_;
    out.cosets_defined = defined_;
    out.coincidences = coincidences_;
    out.table = closed_table();
    return out;
  }

 private:
  struct BoundReached {};

  std::vector<std::size_t> columns(Word const& w) const {
    std::vector<std::size_t> c;
    c.reserve(w.size());
    for (Letter l : w) c.push_back(2 * l.gen + (l.inverse ? 1 : 0));
    return c;
  }
  static std::size_t inverse_col(std::size_t x) noexcept { return x ^ 1U; }

  std::int32_t& entry(std::size_t c, std::size_t x) { return table_[c * cols_ + x]; }
  bool alive(std::size_t c) const { return parent_[c] == static_cast<std::int32_t>(c); }

  void new_row() {
    table_.resize(table_.size() + cols_, kUndefined);
    parent_.push_back(static_cast<std::int32_t>(rows_));
    ++rows_;
    ++live_;
    ++defined_;
    if (opt_.progress && defined_ % opt_.progress_interval == 0)
      *opt_.progress << "defined=" << defined_ << " coincidences=" << coincidences_ << '\n';
  }

  void define(std::size_t c, std::size_t x) {
    if (live_ >= opt_.max_cosets) throw BoundReached{};
    std::size_t d = rows_;
    new_row();
    entry(c, x) = static_cast<std::int32_t>(d);
    entry(d, inverse_col(x)) = static_cast<std::int32_t>(c);
  }

  std::size_t rep(std::size_t k) {
    std::size_t r = k;
    while (parent_[r] != static_cast<std::int32_t>(r)) r = static_cast<std::size_t>(parent_[r]);
    while (parent_[k] != static_cast<std::int32_t>(r)) {
      std::size_t next = static_cast<std::size_t>(parent_[k]);
      parent_[k] = static_cast<std::int32_t>(r);
      k = next;
    }
    return r;
  }

  void merge(std::size_t k, std::size_t l) {
    std::size_t a = rep(k), b = rep(l);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = static_cast<std::int32_t>(a);
    queue_.push_back(b);
    --live_;
    ++coincidences_;
  }

  void coincidence(std::size_t a, std::size_t b) {
    queue_.clear();
    merge(a, b);
    for (std::size_t i = 0; i < queue_.size(); ++i) {
      std::size_t g = queue_[i];
      for (std::size_t x = 0; x < cols_; ++x) {
        std::int32_t target = entry(g, x);
        if (target == kUndefined) continue;
        auto d = static_cast<std::size_t>(target);
        entry(d, inverse_col(x)) = kUndefined;
        std::size_t mu = rep(g), nu = rep(d);
        if (entry(mu, x) != kUndefined) {
          merge(nu, static_cast<std::size_t>(entry(mu, x)));
        } else if (entry(nu, inverse_col(x)) != kUndefined) {
          merge(mu, static_cast<std::size_t>(entry(nu, inverse_col(x))));
        } else {
          entry(mu, x) = static_cast<std::int32_t>(nu);
          entry(nu, inverse_col(x)) = static_cast<std::int32_t>(mu);
        }
      }
    }
  }

  void scan_and_fill(std::size_t a, std::vector<std::size_t> const& w) {
    if (w.empty()) return;
    std::size_t f = a, b = a;
    std::size_t i = 0, j = w.size();  // unscanned letters are w[i, j)
    while (true) {
      while (i < j && entry(f, w[i]) != kUndefined) f = static_cast<std::size_t>(entry(f, w[i++]));
      if (i == j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j > i && entry(b, inverse_col(w[j - 1])) != kUndefined)
        b = static_cast<std::size_t>(entry(b, inverse_col(w[--j])));
      if (j == i) {
        coincidence(f, b);
        return;
      }
      if (j == i + 1) {
        entry(f, w[i]) = static_cast<std::int32_t>(b);
        entry(b, inverse_col(w[i])) = static_cast<std::int32_t>(f);
        return;
      }
      define(f, w[i]);
    }
  }

  // Called between cosets only, so no scan holds row indices.
  void maybe_compact(std::size_t& current) {
    std::size_t const threshold = std::max<std::size_t>(2 * opt_.max_cosets, 1024);
    if (rows_ < threshold || 2 * live_ > rows_) return;
    std::vector<std::int32_t> renumber(rows_, kUndefined);
    std::size_t next = 0;
    for (std::size_t c = 0; c < rows_; ++c)
      if (alive(c)) renumber[c] = static_cast<std::int32_t>(next++);
    std::vector<std::int32_t> table(next * cols_, kUndefined);
    for (std::size_t c = 0; c < rows_; ++c) {
      if (!alive(c)) continue;
      auto nc = static_cast<std::size_t>(renumber[c]);
      for (std::size_t x = 0; x < cols_; ++x) {
        std::int32_t t = entry(c, x);
        table[nc * cols_ + x] = t == kUndefined ? kUndefined : renumber[static_cast<std::size_t>(t)];
      }
    }
    // `current` is the next coset to process; advance past dead ones.
    std::size_t nc = 0;
    while (current < rows_ && !alive(current)) ++current;
    nc = current < rows_ ? static_cast<std::size_t>(renumber[current]) : next;
    table_ = std::move(table);
    rows_ = next;
    parent_.resize(next);
    for (std::size_t c = 0; c < next; ++c) parent_[c] = static_cast<std::int32_t>(c);
    current = nc;
  }

  std::optional<CosetTable> closed_table() {
    if (!opt_.keep_table) return std::nullopt;
    std::vector<std::int32_t> renumber(rows_, kUndefined);
    std::size_t next = 0;
    for (std::size_t c = 0; c < rows_; ++c)
      if (alive(c)) renumber[c] = static_cast<std::int32_t>(next++);
    std::vector<std::uint32_t> entries;
    entries.reserve(next * cols_);
    for (std::size_t c = 0; c < rows_; ++c) {
      if (!alive(c)) continue;
      for (std::size_t x = 0; x < cols_; ++x) {
        std::int32_t t = entry(c, x);
        if (t == kUndefined || renumber[static_cast<std::size_t>(t)] == kUndefined)
          throw InconsistentState("coset enumeration closed with an undefined or dead table entry");
        entries.push_back(static_cast<std::uint32_t>(renumber[static_cast<std::size_t>(t)]));
      }
    }
    return CosetTable(next, cols_ / 2, std::move(entries));
  }

  EnumerationOptions opt_;
  std::size_t cols_;
  std::vector<std::vector<std::size_t>> relators_;
  std::vector<std::vector<std::size_t>> subgroup_;
  std::vector<std::int32_t> table_;
  std::vector<std::int32_t> parent_;
  std::vector<std::size_t> queue_;
  std::size_t rows_ = 0;
  std::size_t live_ = 0;
  std::size_t defined_ = 0;
  std::size_t coincidences_ = 0;
};

}  // namespace detail

inline EnumerationOutcome todd_coxeter(Presentation const& p, std::vector<Word> const& subgroup,
                                       EnumerationOptions const& opt) {
  if (opt.max_cosets < 1) throw InvalidArgument("todd_coxeter: max_cosets must be at least 1");
  if (opt.max_cosets > static_cast<std::size_t>(INT32_MAX / 4))
    throw InvalidArgument("todd_coxeter: max_cosets too large");
  for (auto const& h : subgroup) p.alphabet().require(h, "subgroup generator");

  EnumerationOptions run_opt = opt;
  run_opt.keep_table = true;
  EnumerationOutcome out = detail::HltEnumerator(p, subgroup, run_opt).run();
  if (out.completed()) {
    if (!out.table || !out.table->verify(p, subgroup))
      throw InconsistentState("coset enumeration produced a table that fails verification");
    if (!opt.keep_table) out.table.reset();
  }
  return out;
}

inline EnumerationOutcome todd_coxeter(Presentation const& p, std::vector<Word> const& subgroup = {},
                                       std::size_t max_cosets = kDefaultMaxCosets) {
  EnumerationOptions opt;
  opt.max_cosets = max_cosets;
  return todd_coxeter(p, subgroup, opt);
}

// exponent(n) = slope * n + offset
struct AffineExponent {
  std::int64_t slope = 0;
  std::int64_t offset = 0;

  std::int64_t operator()(std::int64_t n) const { return slope * n + offset; }
  friend bool operator==(AffineExponent const&, AffineExponent const&) = default;
};

// Presentation with one relator of the form prefix * base^{exponent(n)} *
// suffix, all other relators fixed.
struct PresentationFamily {
  Alphabet alphabet;
  std::vector<Word> fixed;
  Word prefix;
  Word base;
  AffineExponent exponent;
  Word suffix;

  Presentation at(std::int64_t n) const {
    Presentation p{alphabet, fixed};
    p.add_relator(prefix * base.pow(exponent(n)) * suffix);
    return p;
  }
};

struct IntRange {
  std::int64_t first = 0;
  std::int64_t last = 0;  // inclusive

  std::size_t size() const noexcept { return last < first ? 0 : static_cast<std::size_t>(last - first + 1); }
  friend bool operator==(IntRange const&, IntRange const&) = default;
};

struct FamilyMember {
  std::int64_t n = 0;
  EnumerationOutcome outcome;
};

// Enumerates every member of the family; `threads` > 1 runs members
// concurrently. Results are in parameter order either way.
inline std::vector<FamilyMember> enumerate_family(PresentationFamily const& family, IntRange range,
                                                  std::vector<Word> const& subgroup, EnumerationOptions opt,
                                                  unsigned threads = 1) {
  for (auto const& h : subgroup) family.alphabet.require(h, "subgroup generator");
  opt.progress = nullptr;
  opt.keep_table = false;
  std::vector<FamilyMember> out(range.size());
  auto work = [&](std::size_t i) {
    std::int64_t n = range.first + static_cast<std::int64_t>(i);
    out[i] = {n, todd_coxeter(family.at(n), subgroup, opt)};
  };
  if (threads <= 1) {
    for (std::size_t i = 0; i < out.size(); ++i) work(i);
    return out;
  }
  std::size_t next = 0;
  while (next < out.size()) {
    std::vector<std::future<void>> batch;
    for (unsigned t = 0; t < threads && next < out.size(); ++t, ++next)
      batch.push_back(std::async(std::launch::async, work, next));
    for (auto& f : batch) f.get();
  }
  return out;
}

}  // namespace reveng
