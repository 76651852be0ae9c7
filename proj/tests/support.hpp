#pragma once

// Independent oracles and random generators shared by the unit tests and the
// acceptance binary. Nothing here calls the code it is used to check.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "reveng/word.hpp"

namespace oracle {

using reveng::GenId;
using reveng::Letter;
using reveng::Word;

// ---- free groups ---------------------------------------------------------

// Deletes adjacent inverse pairs until none remain.
inline std::vector<Letter> naive_reduce(std::vector<Letter> w) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (w[i].gen == w[i + 1].gen && w[i].inverse != w[i + 1].inverse) {
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(i), w.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        changed = true;
        break;
      }
  }
  return w;
}

inline std::vector<Letter> random_letters(std::mt19937_64& rng, std::size_t gens, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<GenId> g(0, static_cast<GenId>(gens - 1));
  std::bernoulli_distribution inv(0.5);
  std::vector<Letter> out(len(rng));
  for (auto& l : out) l = {g(rng), inv(rng)};
  return out;
}

inline Word random_word(std::mt19937_64& rng, std::size_t gens, std::size_t max_len) {
  return Word(random_letters(rng, gens, max_len));
}

// ---- integer matrices ----------------------------------------------------

using Small = std::vector<std::vector<std::int64_t>>;

inline Small random_small(std::mt19937_64& rng, std::size_t max_dim, std::int64_t lo, std::int64_t hi) {
  std::uniform_int_distribution<std::size_t> dim(1, max_dim);
  std::uniform_int_distribution<std::int64_t> entry(lo, hi);
  Small m(dim(rng), std::vector<std::int64_t>(dim(rng)));
  for (auto& row : m)
    for (auto& x : row) x = entry(rng);
  return m;
}

// Determinant by Laplace expansion along the first row.
inline std::int64_t laplace_det(Small const& m) {
  std::size_t const n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  std::int64_t det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    Small minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<std::int64_t> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(m[r][j]);
      minor.push_back(std::move(row));
    }
    std::int64_t const term = m[0][c] * laplace_det(minor);
    det += (c % 2 == 0) ? term : -term;
  }
  return det;
}

inline void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// Invariant factors d_k = D_k / D_{k-1}, D_k the gcd of all k x k minors.
inline std::vector<std::int64_t> invariant_factors_by_minors(Small const& m) {
  std::size_t const rows = m.size(), cols = m.empty() ? 0 : m[0].size();
  std::vector<std::int64_t> out;
  std::int64_t prev = 1;
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    subsets(rows, k, 0, cur, rs);
    subsets(cols, k, 0, cur, cs);
    std::int64_t g = 0;
    for (auto const& r : rs)
      for (auto const& c : cs) {
        Small minor(k, std::vector<std::int64_t>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) minor[i][j] = m[r[i]][c[j]];
        g = std::gcd(g, laplace_det(minor));
      }
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

// Rank over Q by fraction-free elimination.
inline std::size_t rational_rank(Small m) {
  std::size_t rank = 0;
  std::size_t const rows = m.size(), cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (m[r][c] == 0) continue;
      std::int64_t const a = m[rank][c], b = m[r][c];
      std::int64_t g = 0;
      for (std::size_t j = 0; j < cols; ++j) {
        m[r][j] = m[r][j] * a - m[rank][j] * b;
        g = std::gcd(g, m[r][j]);
      }
      if (g > 1)
        for (auto& x : m[r]) x /= g;
    }
    ++rank;
  }
  return rank;
}

// ---- permutation groups ----------------------------------------------------

using Perm = std::vector<std::uint32_t>;

inline Perm compose(Perm const& p, Perm const& q) {  // apply p, then q
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
  return r;
}

inline Perm invert(Perm const& p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<std::uint32_t>(i);
  return r;
}

inline Perm identity_perm(std::size_t n) {
  Perm r(n);
  std::iota(r.begin(), r.end(), 0u);
  return r;
}

inline Perm evaluate(Word const& w, std::vector<Perm> const& gens) {
  Perm r = identity_perm(gens.front().size());
  for (Letter l : w) r = compose(r, l.inverse ? invert(gens[l.gen]) : gens[l.gen]);
  return r;
}

// Order of the group generated by the permutations, by closure.
inline std::size_t group_order(std::vector<Perm> const& gens) {
  std::set<Perm> seen{identity_perm(gens.front().size())};
  std::vector<Perm> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (auto const& g : frontier)
      for (auto const& s : gens) {
        Perm h = compose(g, s);
        if (seen.insert(h).second) next.push_back(std::move(h));
      }
    frontier = std::move(next);
  }
  return seen.size();
}

inline Perm cycle_perm(std::size_t n, std::vector<std::uint32_t> const& cycle) {
  Perm r = identity_perm(n);
  for (std::size_t i = 0; i < cycle.size(); ++i) r[cycle[i]] = cycle[(i + 1) % cycle.size()];
  return r;
}

struct GroupCase {
  std::string name;
  std::vector<std::string> generators;
  std::vector<std::string> relators;  // in the word syntax
  std::vector<Perm> perms;            // a faithful permutation image
};

// Cyclic, dihedral, S3, A4, Q8 and S4, each with a faithful permutation
// representation written out by hand.
inline std::vector<GroupCase> small_group_corpus() {
  std::vector<GroupCase> out;
  for (std::uint32_t n : {1u, 2u, 5u, 7u, 12u, 24u}) {
    std::vector<std::uint32_t> cyc(n);
    std::iota(cyc.begin(), cyc.end(), 0u);
    out.push_back({"C" + std::to_string(n), {"a"}, {"a^" + std::to_string(n)}, {cycle_perm(n, cyc)}});
  }
  for (std::uint32_t n : {3u, 4u, 6u, 12u}) {
    std::vector<std::uint32_t> cyc(n);
    std::iota(cyc.begin(), cyc.end(), 0u);
    Perm s = identity_perm(n);
    for (std::uint32_t i = 0; i < n; ++i) s[i] = (n - i) % n;
    out.push_back({"D" + std::to_string(n), {"r", "s"}, {"r^" + std::to_string(n), "s^2", "(s r)^2"},
                   {cycle_perm(n, cyc), s}});
  }
  out.push_back({"S3", {"x", "y"}, {"x^2", "y^2", "(x y)^3"}, {cycle_perm(3, {0, 1}), cycle_perm(3, {1, 2})}});
  {
    Perm a = compose(cycle_perm(4, {0, 1}), cycle_perm(4, {2, 3}));
    out.push_back({"A4", {"a", "b"}, {"a^2", "b^3", "(a b)^3"}, {a, cycle_perm(4, {0, 1, 2})}});
  }
  {
    // Left multiplication on Q8 = {+-1, +-i, +-j, +-k}, points numbered
    // 1, i, j, k, -1, -i, -j, -k.
    Perm i = {1, 4, 3, 6, 5, 0, 7, 2};
    Perm j = {2, 7, 4, 1, 6, 3, 0, 5};
    out.push_back({"Q8", {"i", "j"}, {"i^4", "i^2 j^-2", "j^-1 i j i"}, {i, j}});
  }
  out.push_back({"S4", {"a", "b"}, {"a^2", "b^3", "(a b)^4"}, {cycle_perm(4, {0, 1}), cycle_perm(4, {1, 2, 3})}});
  return out;
}

}  // namespace oracle
