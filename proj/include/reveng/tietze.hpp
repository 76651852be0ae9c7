#pragma once

// Tietze simplification.
//
// Moves, applied one at a time until none applies or the pass budget runs
// out:
//   1. tidy: cyclically reduce relators, drop trivial relators and relators
//      that repeat another one up to rotation and inversion;
//   2. eliminate a generator g occurring exactly once in some relator r
//      (choose the shortest such r, then the lowest generator id), solving
//      r for g and substituting everywhere;
//   3. shorten a relator s by a substring u of length > |r|/2 of a cyclic
//      conjugate u v of another relator r (or its inverse): u -> v^-1.
// Each move replaces the presentation by one of an isomorphic group.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "reveng/word.hpp"

namespace reveng {

struct TietzeOptions {
  std::size_t max_passes = 10'000;
  // Eliminations that would push the total relator length above this are
  // skipped.
  std::size_t max_total_length = 200'000;
};

struct TietzeResult {
  Presentation presentation;
  std::size_t eliminations = 0;
  std::size_t shortenings = 0;
  bool budget_exhausted = false;
};

// Least rotation of w or of w^-1; relators equal up to conjugation and
// inversion share it.
inline Word canonical_relator(Word const& w) {
  Word c = cyclic_reduce(w);
  if (c.empty()) return c;
  std::optional<Word> best;
  for (Word const& v : {c, c.inverse()})
    for (std::size_t k = 0; k < v.size(); ++k) {
      Word r = rotate(v, k);
      if (!best || r < *best) best = std::move(r);
    }
  return *best;
}

namespace detail {

struct TietzeState {
  std::vector<GenId> live;  // original generator ids still present
  std::vector<Word> relators;
};

inline void tidy(std::vector<Word>& relators) {
  std::set<Word> seen;
  std::vector<Word> out;
  out.reserve(relators.size());
  for (auto const& r : relators) {
    Word c = canonical_relator(r);
    if (c.empty() || !seen.insert(c).second) continue;
    out.push_back(std::move(c));
  }
  relators = std::move(out);
}

inline std::size_t total_length(std::vector<Word> const& rs) {
  std::size_t n = 0;
  for (auto const& r : rs) n += r.size();
  return n;
}

inline bool try_eliminate(TietzeState& st, TietzeOptions const& opt) {
  // (relator length, generator id, relator index)
  std::vector<std::tuple<std::size_t, GenId, std::size_t>> candidates;
  for (std::size_t ri = 0; ri < st.relators.size(); ++ri)
    for (GenId g : st.live)
      if (st.relators[ri].occurrences(g) == 1) candidates.emplace_back(st.relators[ri].size(), g, ri);
  std::sort(candidates.begin(), candidates.end());

  for (auto const& [len, g, ri] : candidates) {
    Word const& r = st.relators[ri];
    std::size_t k = 0;
    while (r[k].gen != g) ++k;
    Word rot = rotate(r, k);  // g^e rest = 1
    Word rest = free_reduce(rot.letters().subspan(1));
    Word value = rot[0].inverse ? rest : rest.inverse();

    std::vector<Word> next;
    next.reserve(st.relators.size() - 1);
    std::size_t length = 0;
    bool too_long = false;
    for (std::size_t j = 0; j < st.relators.size(); ++j) {
      if (j == ri) continue;
      next.push_back(substitute(st.relators[j], g, value));
      length += next.back().size();
      if (length > opt.max_total_length) {
        too_long = true;
        break;
      }
    }
    if (too_long) continue;
    tidy(next);
    st.relators = std::move(next);
    st.live.erase(std::find(st.live.begin(), st.live.end(), g));
    return true;
  }
  return false;
}

// Looks for a prefix of a cyclic conjugate of `piece` longer than half of it
// inside cyclic `target`; returns the shortened target.
inline std::optional<Word> shorten_with(Word const& piece, Word const& target) {
  std::size_t const n = piece.size();
  std::size_t const m = target.size();
  if (n == 0 || m == 0) return std::nullopt;
  auto const t = target.letters();
  for (std::size_t len = std::min(n, m); 2 * len > n; --len) {
    for (Word const& v : {piece, piece.inverse()}) {
      auto const vl = v.letters();
      for (std::size_t k = 0; k < n; ++k) {
        // cyclic conjugate c = v[k..] v[..k]; u = c[0, len)
        for (std::size_t s = 0; s < m; ++s) {
          bool match = true;
          for (std::size_t i = 0; i < len && match; ++i) match = t[(s + i) % m] == vl[(k + i) % n];
          if (!match) continue;
          std::vector<Letter> out;
          out.reserve(m - len + n - len);
          // v^-1 where c = u w  =>  u = w^-1
          for (std::size_t i = n; i > len; --i) out.push_back(vl[(k + i - 1) % n].inverted());
          for (std::size_t i = len; i < m; ++i) out.push_back(t[(s + i) % m]);
          return cyclic_reduce(Word(std::move(out)));
        }
      }
    }
  }
  return std::nullopt;
}

inline bool try_shorten(TietzeState& st) {
  for (std::size_t i = 0; i < st.relators.size(); ++i)
    for (std::size_t j = 0; j < st.relators.size(); ++j) {
      if (i == j) continue;
      if (auto shorter = shorten_with(st.relators[i], st.relators[j])) {
        st.relators[j] = std::move(*shorter);
        tidy(st.relators);
        return true;
      }
    }
  return false;
}

}  // namespace detail

inline TietzeResult tietze_simplify_detailed(Presentation const& p, TietzeOptions const& opt = {}) {
  detail::TietzeState st;
  for (GenId g = 0; g < p.num_generators(); ++g) st.live.push_back(g);
  st.relators = p.relators();
  detail::tidy(st.relators);

  TietzeResult result;
  std::size_t passes = 0;
  while (true) {
    if (passes == opt.max_passes) {
      result.budget_exhausted = true;
      break;
    }
    ++passes;
    if (detail::try_eliminate(st, opt)) {
      ++result.eliminations;
      continue;
    }
    if (detail::try_shorten(st)) {
      ++result.shortenings;
      continue;
    }
    break;
  }

  // Renumber surviving generators densely, keeping their names and order.
  std::vector<GenId> renumber(p.num_generators(), 0);
  Alphabet alphabet;
  for (GenId g : st.live) renumber[g] = alphabet.add(p.alphabet().name(g));
  Presentation out{alphabet};
  for (auto const& r : st.relators) {
    std::vector<Letter> letters;
    letters.reserve(r.size());
    for (Letter l : r) letters.push_back({renumber[l.gen], l.inverse});
    out.add_relator(Word(std::move(letters)));
  }
  result.presentation = std::move(out);
  return result;
}

inline Presentation tietze_simplify(Presentation const& p, std::size_t max_passes = 10'000) {
  return tietze_simplify_detailed(p, TietzeOptions{max_passes}).presentation;
}

}  // namespace reveng
