#pragma once

// Symbolic closed oriented 4-manifold states and torus surgery on them.
//
// A state carries the Euler characteristic and signature (never changed by
// torus surgery), a presentation of pi_1, and optional H_2 data. Betti
// numbers are derived: b1 from the abelianization, b2 = e - 2 + 2 b1, and
// b+ = (b2 + sigma) / 2.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "reveng/abelian.hpp"
#include "reveng/coset_enum.hpp"
#include "reveng/error.hpp"
#include "reveng/lattice.hpp"
#include "reveng/word.hpp"

namespace reveng {

// Pushoffs of the two torus curves and the meridian, all based words.
struct DistinguishedTriple {
  Word g1;
  Word g2;
  Word mu;

  friend bool operator==(DistinguishedTriple const&, DistinguishedTriple const&) = default;
};

enum class SurgeryCurve { G1, G2 };

struct TorusSurgerySpec {
  std::string torus_name;
  DistinguishedTriple triple;
  SurgeryCurve curve = SurgeryCurve::G1;
  std::int64_t coeff = 0;
  int meridian_sign = 1;

  Word const& curve_word() const noexcept { return curve == SurgeryCurve::G1 ? triple.g1 : triple.g2; }

  // Surgery (T, gamma, m) imposes gamma = mu^{-m}, i.e. the relator
  // gamma mu^{m}, with the meridian orientation flipped when meridian_sign
  // is -1.
  Word relator() const { return curve_word() * triple.mu.pow(meridian_sign * coeff); }

  friend bool operator==(TorusSurgerySpec const&, TorusSurgerySpec const&) = default;
};

struct ManifoldState {
  std::string name;
  std::int64_t euler = 0;
  std::int64_t signature = 0;
  Presentation pi1;
  H2Lattice lattice;
  std::vector<SurfaceClass> surfaces;
  BasicClassSet basics;
  std::vector<TorusSurgerySpec> log;
};

struct Betti {
  std::int64_t b1 = 0;
  std::int64_t b2 = 0;
  std::int64_t b_plus = 0;

  friend bool operator==(Betti const&, Betti const&) = default;
};

inline Betti betti(ManifoldState const& s) {
  Betti b;
  b.b1 = static_cast<std::int64_t>(abelianization(s.pi1).free_rank);
  b.b2 = s.euler - 2 + 2 * b.b1;
  if (b.b2 < 0)
    throw InconsistentState(s.name + ": derived b2 = " + std::to_string(b.b2) + " is negative");
  if ((b.b2 + s.signature) % 2 != 0)
    throw InconsistentState(s.name + ": b2 + sigma = " + std::to_string(b.b2 + s.signature) + " is odd");
  if (s.signature > b.b2 || -s.signature > b.b2)
    throw InconsistentState(s.name + ": |sigma| exceeds b2");
  b.b_plus = (b.b2 + s.signature) / 2;
  return b;
}

namespace detail {

inline std::vector<std::string> numbered(char const* stem, std::int64_t n) {
  std::vector<std::string> out;
  for (std::int64_t i = 1; i <= n; ++i) out.push_back(stem + std::to_string(i));
  return out;
}

}  // namespace detail

// Sym^2 of a closed genus-l surface: pi_1 = H_1(Sigma_l) = Z^{2l}.
inline ManifoldState model_sym2(std::int64_t genus) {
  if (genus < 2) throw InvalidArgument("model_sym2: genus must be at least 2");
  ManifoldState s;
  s.name = "Sym2(Sigma_" + std::to_string(genus) + ")";
  s.euler = 2 * genus * genus - 5 * genus + 3;
  s.signature = 1 - genus;
  auto names = detail::numbered("a", genus);
  auto bs = detail::numbered("b", genus);
  names.insert(names.end(), bs.begin(), bs.end());
  s.pi1 = free_abelian_presentation(std::move(names));
  if (genus == 3) {
    s.lattice = H2Lattice({"b", "T1", "T2", "T3"}, SymmetricForm::diagonal({1, -1, -1, -1}));
    s.surfaces = {{"b", 3, 1, {1, 0, 0, 0}},
                  {"T1", 1, -1, {0, 1, 0, 0}},
                  {"T2", 1, -1, {0, 0, 1, 0}},
                  {"T3", 1, -1, {0, 0, 0, 1}}};
  }
  return s;
}

// Sigma_g x Sigma_h.
inline ManifoldState model_product(std::int64_t g, std::int64_t h) {
  if (g < 1 || h < 1) throw InvalidArgument("model_product: genera must be at least 1");
  ManifoldState s;
  s.name = "Sigma_" + std::to_string(g) + " x Sigma_" + std::to_string(h);
  s.euler = (2 - 2 * g) * (2 - 2 * h);
  s.signature = 0;

  Alphabet alphabet;
  std::vector<GenId> a, b, c, d;
  for (std::int64_t i = 1; i <= g; ++i) {
    a.push_back(alphabet.add("a" + std::to_string(i)));
    b.push_back(alphabet.add("b" + std::to_string(i)));
  }
  for (std::int64_t j = 1; j <= h; ++j) {
    c.push_back(alphabet.add("c" + std::to_string(j)));
    d.push_back(alphabet.add("d" + std::to_string(j)));
  }
  Presentation p{alphabet};
  Word left, right;
  for (std::size_t i = 0; i < a.size(); ++i) left *= commutator(Word::generator(a[i]), Word::generator(b[i]));
  for (std::size_t j = 0; j < c.size(); ++j) right *= commutator(Word::generator(c[j]), Word::generator(d[j]));
  p.add_relator(left);
  p.add_relator(right);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (GenId x : {a[i], b[i]})
      for (std::size_t j = 0; j < c.size(); ++j)
        for (GenId y : {c[j], d[j]}) p.add_relator(commutator(Word::generator(x), Word::generator(y)));
  s.pi1 = std::move(p);

  s.lattice = H2Lattice({"F1", "F2"}, SymmetricForm({{0, 1}, {1, 0}}));
  s.surfaces = {{"F1", g, 0, {1, 0}}, {"F2", h, 0, {0, 1}}};
  return s;
}

inline ManifoldState custom_manifold(std::string name, std::int64_t euler, std::int64_t signature, Presentation pi1) {
  ManifoldState s;
  s.name = std::move(name);
  s.euler = euler;
  s.signature = signature;
  s.pi1 = std::move(pi1);
  return s;
}

inline ManifoldState apply_surgery(ManifoldState const& s, TorusSurgerySpec const& spec) {
  auto const& alphabet = s.pi1.alphabet();
  alphabet.require(spec.triple.g1, "surgery curve g1");
  alphabet.require(spec.triple.g2, "surgery curve g2");
  alphabet.require(spec.triple.mu, "surgery meridian");
  for (auto const& done : s.log)
    if (done.torus_name == spec.torus_name)
      throw InvalidArgument("torus " + spec.torus_name + " has already been surgered");
  if (spec.meridian_sign != 1 && spec.meridian_sign != -1)
    throw InvalidArgument("meridian sign must be +1 or -1");
  if (spec.curve_word().empty()) throw InvalidArgument("surgery curve on " + spec.torus_name + " is trivial");
  if (!abelianizes_to_zero(s.pi1, spec.triple.mu))
    throw InvalidArgument("meridian of " + spec.torus_name + " is not nullhomologous in the ambient group");

  ManifoldState out = s;
  out.pi1.add_relator(spec.relator());
  out.log.push_back(spec);
  return out;
}

// Drops the most recent surgery relator and log entry.
inline ManifoldState undo_last_surgery(ManifoldState const& s) {
  if (s.log.empty()) throw InvalidArgument("no surgery to undo");
  std::vector<Word> relators = s.pi1.relators();
  if (relators.empty() || relators.back() != s.log.back().relator())
    throw InconsistentState("last relator does not match the last logged surgery");
  relators.pop_back();
  ManifoldState out = s;
  out.pi1 = Presentation(s.pi1.alphabet(), std::move(relators));
  out.log.pop_back();
  return out;
}

enum class Certainty { Homeomorphism, HomologyType };

inline char const* to_string(Certainty c) {
  return c == Certainty::Homeomorphism ? "Homeomorphism" : "HomologyType";
}

struct HomeoType {
  std::string description;
  Certainty certainty = Certainty::HomologyType;

  friend bool operator==(HomeoType const&, HomeoType const&) = default;
};

enum class FormParity { Odd, Even, Unknown };

// Parity of the intersection form as far as the declared lattice shows it:
// an odd vector anywhere makes the form odd; evenness needs a lattice of
// full rank.
inline FormParity form_parity(ManifoldState const& s, std::int64_t b2) {
  if (s.lattice.empty()) return FormParity::Unknown;
  if (!s.lattice.pairing.is_even()) return FormParity::Odd;
  if (static_cast<std::int64_t>(s.lattice.rank()) == b2) return FormParity::Even;
  return FormParity::Unknown;
}

namespace detail {

inline std::string multiple(std::int64_t k, std::string const& piece) {
  return k == 1 ? piece : std::to_string(k) + piece;
}

inline std::string odd_model(std::int64_t b_plus, std::int64_t b_minus) {
  std::string out;
  if (b_plus > 0) out = multiple(b_plus, "CP²");
  if (b_minus > 0) out += (out.empty() ? "" : "#") + multiple(b_minus, "CP̄²");
  return out;
}

inline std::string even_model(std::int64_t b2, std::int64_t sigma) {
  std::int64_t e8 = (sigma < 0 ? -sigma : sigma) / 8;
  std::int64_t hyperbolic = (b2 - 8 * e8) / 2;
  std::string out;
  if (e8 > 0) out = multiple(e8, sigma < 0 ? "(-E8)" : "E8");
  if (hyperbolic > 0)
    out += (out.empty() ? "" : "#") + (hyperbolic == 1 ? std::string("S²×S²") : multiple(hyperbolic, "(S²×S²)"));
  return out;
}

}  // namespace detail

// Simply connected model with the given b2, sigma and parity.
inline std::string standard_model(std::int64_t b2, std::int64_t sigma, FormParity parity) {
  if (b2 == 0) return "S⁴";
  std::int64_t const b_plus = (b2 + sigma) / 2;
  std::int64_t const b_minus = (b2 - sigma) / 2;
  switch (parity) {
    case FormParity::Odd:
      return detail::odd_model(b_plus, b_minus);
    case FormParity::Even:
      if (sigma % 8 != 0) throw InconsistentState("even intersection form with signature not divisible by 8");
      return detail::even_model(b2, sigma);
    case FormParity::Unknown:
      break;
  }
  if (sigma % 8 != 0) return detail::odd_model(b_plus, b_minus);
  return detail::odd_model(b_plus, b_minus) + " or " + detail::even_model(b2, sigma);
}

inline HomeoType classify_homeo(ManifoldState const& s, EnumerationOutcome const& cert) {
  Betti const b = betti(s);
  if (b.b1 != 0) throw InvalidArgument("classify_homeo: b1 = " + std::to_string(b.b1) + ", expected 0");
  std::string const model = standard_model(b.b2, s.signature, form_parity(s, b.b2));
  if (cert.completed() && cert.index == 1) return {model, Certainty::Homeomorphism};
  bool const integral = abelianization(s.pi1).trivial();
  return {(integral ? "homology " : "rational homology ") + model, Certainty::HomologyType};
}

}  // namespace reveng
