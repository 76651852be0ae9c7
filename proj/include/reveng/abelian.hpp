#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "reveng/int_matrix.hpp"
#include "reveng/word.hpp"

namespace reveng {

// Z^free_rank + Z/t_1 + ... + Z/t_k with t_i >= 2 and t_i | t_{i+1}.
struct AbelianInvariants {
  std::size_t free_rank = 0;
  std::vector<BigInt> torsion;

  bool trivial() const noexcept { return free_rank == 0 && torsion.empty(); }

  friend bool operator==(AbelianInvariants const&, AbelianInvariants const&) = default;
};

inline std::string to_string(AbelianInvariants const& a) {
  if (a.trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (a.free_rank != 0) {
    os << "Z";
    if (a.free_rank != 1) os << '^' << a.free_rank;
    first = false;
  }
  for (auto const& t : a.torsion) {
    os << (first ? "" : " + ") << "Z/" << t;
    first = false;
  }
  return os.str();
}

inline std::ostream& operator<<(std::ostream& os, AbelianInvariants const& a) { return os << to_string(a); }

inline std::vector<BigInt> exponent_vector(Word const& w, std::size_t num_generators) {
  std::vector<BigInt> v(num_generators);
  for (Letter l : w) v.at(l.gen) += l.sign();
  return v;
}

// One row per relator, one column per generator; entries are exponent sums.
inline IntMatrix relation_matrix(Presentation const& p) {
  IntMatrix m(p.relators().size(), p.num_generators());
  for (std::size_t r = 0; r < p.relators().size(); ++r)
    for (Letter l : p.relators()[r]) m(r, l.gen) += l.sign();
  return m;
}

inline AbelianInvariants invariants_of_cokernel(IntMatrix const& relations) {
  SmithForm s = smith_normal_form(relations);
  AbelianInvariants out;
  out.free_rank = relations.cols() - s.rank;
  for (auto const& d : s.diag)
    if (d != 1) out.torsion.push_back(d);
  return out;
}

inline AbelianInvariants abelianization(Presentation const& p) { return invariants_of_cokernel(relation_matrix(p)); }

inline bool is_perfect(Presentation const& p) { return abelianization(p).trivial(); }

// True iff w maps to zero in the abelianization of p.
inline bool abelianizes_to_zero(Presentation const& p, Word const& w) {
  p.alphabet().require(w, "word");
  return in_row_lattice(relation_matrix(p), exponent_vector(w, p.num_generators()));
}

}  // namespace reveng
