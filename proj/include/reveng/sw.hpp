#pragma once

// Seiberg-Witten basic-class bookkeeping over a declared H_2 sublattice.
// Values are taken as given; nothing here solves the equations.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <iterator>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "reveng/coset_enum.hpp"
#include "reveng/error.hpp"
#include "reveng/lattice.hpp"

namespace reveng {

// z-sums may be zero, so they live in a plain map.
using ZSums = std::map<ClassVector, std::int64_t>;

// Square every basic class must have: 3 sigma + 2 e.
constexpr std::int64_t dimension_square(std::int64_t euler, std::int64_t signature) noexcept {
  return 3 * signature + 2 * euler;
}

// k.x = x.x (mod 2) for every basis vector x.
inline bool is_characteristic(SymmetricForm const& q, ClassVector const& k) {
  q.require(k, "class");
  for (std::size_t i = 0; i < q.dimension(); ++i) {
    std::int64_t kx = 0;
    for (std::size_t j = 0; j < q.dimension(); ++j) kx += q(i, j) * k[j];
    if ((kx - q(i, i)) % 2 != 0) return false;
  }
  return true;
}

// Adjunction inequality 2g - 2 >= [S]^2 + |k.S| for every surface of genus
// >= 1; surfaces of negative square only count when allow_negative_square.
inline bool satisfies_adjunction(ClassVector const& k, std::vector<SurfaceClass> const& surfaces,
                                 SymmetricForm const& q, bool allow_negative_square) {
  for (auto const& s : surfaces) {
    if (s.genus < 1) continue;
    if (s.square < 0 && !allow_negative_square) continue;
    std::int64_t const ks = q.pair(k, s.vector);
    if (2 * s.genus - 2 < s.square + std::abs(ks)) return false;
  }
  return true;
}

inline std::vector<ClassVector> adjunction_filter(std::vector<ClassVector> const& classes,
                                                  std::vector<SurfaceClass> const& surfaces, SymmetricForm const& q,
                                                  bool allow_negative_square = true) {
  std::vector<ClassVector> out;
  for (auto const& k : classes)
    if (satisfies_adjunction(k, surfaces, q, allow_negative_square)) out.push_back(k);
  return out;
}

// Characteristic vectors with |coords| <= bound, square 3 sigma + 2 e, that
// pass the adjunction filter. Output is in lexicographic order.
inline std::vector<ClassVector> enumerate_candidates(SymmetricForm const& q, std::vector<SurfaceClass> const& surfaces,
                                                     std::int64_t euler, std::int64_t signature, std::int64_t bound,
                                                     bool allow_negative_square = true) {
  if (bound < 1) throw InvalidArgument("enumerate_candidates: bound must be at least 1");
  std::size_t const d = q.dimension();
  if (d == 0) return {};
  for (auto const& s : surfaces) q.require(s.vector, "surface");
  std::int64_t const target = dimension_square(euler, signature);

  std::vector<ClassVector> out;
  ClassVector k(d, -bound);
  while (true) {
    if (is_characteristic(q, k) && q.square(k) == target && satisfies_adjunction(k, surfaces, q, allow_negative_square))
      out.push_back(k);
    std::size_t i = d;
    while (i > 0 && k[i - 1] == bound) k[--i] = -bound;
    if (i == 0) break;
    ++k[i - 1];
  }
  return out;
}

// SW'_{X_n}(k_n) = SW'_X(k) + n * sum_i SW'_{X_0}(k_0 + 2i[Lambda_0]).
constexpr std::int64_t mms_value(std::int64_t sw_parent, std::int64_t z_sum, std::int64_t n) noexcept {
  return sw_parent + n * z_sum;
}

inline BasicClassSet propagate_basics(BasicClassSet const& parent, ZSums const& z_sums, std::int64_t n) {
  std::optional<std::size_t> dim;
  auto check = [&](ClassVector const& k) {
    if (!dim) dim = k.size();
    if (k.size() != *dim) throw InvalidArgument("propagate_basics: classes live in lattices of different rank");
  };
  std::set<ClassVector> support;
  for (auto const& [k, v] : parent) {
    check(k);
    support.insert(k);
  }
  for (auto const& [k, v] : z_sums) {
    check(k);
    support.insert(k);
  }
  BasicClassSet out;
  for (auto const& k : support) {
    auto it = z_sums.find(k);
    out.set(k, mms_value(parent.value(k), it == z_sums.end() ? 0 : it->second, n));
  }
  return out;
}

struct FamilyRow {
  std::int64_t n = 0;
  BasicClassSet basics;
  std::int64_t s_n = 0;  // max |SW'| over basic classes, 0 if none
};

struct FamilyReport {
  std::vector<FamilyRow> rows;
  bool pairwise_distinct = false;
};

inline std::int64_t max_abs_value(BasicClassSet const& basics) {
  std::int64_t m = 0;
  for (auto const& [k, v] : basics) m = std::max(m, std::abs(v));
  return m;
}

inline FamilyReport family_report(BasicClassSet const& parent, ZSums const& z_sums, IntRange range) {
  if (range.size() == 0) throw InvalidArgument("family_report: empty parameter range");
  FamilyReport report;
  std::set<std::int64_t> seen;
  bool distinct = true;
  for (std::int64_t n = range.first; n <= range.last; ++n) {
    FamilyRow row{n, propagate_basics(parent, z_sums, n), 0};
    row.s_n = max_abs_value(row.basics);
    if (!seen.insert(row.s_n).second) distinct = false;
    report.rows.push_back(std::move(row));
  }
  report.pairwise_distinct = distinct;
  return report;
}

// Smallest |(k1 - k2)^2| over pairs of distinct basic classes.
inline std::optional<std::int64_t> min_difference_square(BasicClassSet const& basics, SymmetricForm const& q) {
  std::optional<std::int64_t> best;
  for (auto i = basics.begin(); i != basics.end(); ++i)
    for (auto j = std::next(i); j != basics.end(); ++j) {
      ClassVector diff = i->first;
      for (std::size_t c = 0; c < diff.size(); ++c) diff[c] -= j->first[c];
      std::int64_t const sq = std::abs(q.square(diff));
      if (!best || sq < *best) best = sq;
    }
  return best;
}

// False iff two basic classes differ by a class of square -4, as a pair
// k + E, k - E with E an exceptional sphere would.
inline bool check_minimality(BasicClassSet const& basics, SymmetricForm const& q) {
  for (auto i = basics.begin(); i != basics.end(); ++i)
    for (auto j = std::next(i); j != basics.end(); ++j) {
      ClassVector diff = i->first;
      for (std::size_t c = 0; c < diff.size(); ++c) diff[c] -= j->first[c];
      if (q.square(diff) == -4) return false;
    }
  return true;
}

}  // namespace reveng
