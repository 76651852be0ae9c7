#pragma once

// End-to-end run of a surgery script: build the model state, apply the
// surgeries in order, certify pi_1 by coset enumeration, classify, and run
// the SW bookkeeping if the script declares any.
//
// The enumeration always runs on the raw final presentation (model relators
// followed by the surgery relators in order), not on the Tietze output, so
// the certificate never depends on the simplifier.

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <future>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "reveng/abelian.hpp"
#include "reveng/coset_enum.hpp"
#include "reveng/error.hpp"
#include "reveng/lattice.hpp"
#include "reveng/manifold.hpp"
#include "reveng/script.hpp"
#include "reveng/sw.hpp"
#include "reveng/tietze.hpp"

namespace reveng {

struct RunOptions {
  std::size_t max_cosets = kDefaultMaxCosets;
  std::optional<IntRange> family;  // overrides the script's family line
  std::int64_t bound = 3;          // coordinate bound for SW candidates
  unsigned threads = 1;
  std::ostream* progress = nullptr;
};

// State after the model (label "initial") or after one surgery.
struct StageTrace {
  std::string label;
  std::optional<std::int64_t> m;
  std::int64_t euler = 0;
  std::int64_t signature = 0;
  Betti betti;
  AbelianInvariants h1;
  std::size_t relators = 0;
};

struct FamilyFiber {
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::int64_t b1 = 0;
  AbelianInvariants h1;
  EnumerationOutcome outcome;
};

struct ScenarioResult {
  std::string label;
  std::vector<SurfaceClass> surfaces;
  std::vector<ClassVector> candidates;
};

struct SwReport {
  std::int64_t dimension_square = 0;
  std::int64_t b_plus = 0;
  bool allow_negative_square = true;
  std::vector<ScenarioResult> scenarios;
  BasicClassSet basics;
  ZSums zsums;
  std::optional<FamilyReport> family;
  std::optional<std::int64_t> min_difference_square;
  std::optional<bool> minimal;
};

struct RunReport {
  std::string manifold;
  std::int64_t euler = 0;
  std::int64_t signature = 0;
  std::optional<std::int64_t> fiber;  // n of the reported state for a family script
  std::vector<StageTrace> trace;
  ManifoldState final_state;
  Betti betti;
  AbelianInvariants h1;
  bool perfect = false;
  TietzeResult simplified;
  EnumerationOutcome enumeration;
  double enumeration_seconds = 0;
  std::optional<HomeoType> classification;
  std::vector<FamilyFiber> family;
  std::optional<SwReport> sw;
  std::vector<std::string> anomalies;
  std::vector<std::string> notes;
};

namespace detail {

// Prefixes errors with the pipeline stage, keeping their type.
template <class F>
auto in_stage(std::string const& stage, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (SyntaxError const&) {
    throw;
  } catch (InconsistentState const& e) {
    throw InconsistentState(stage + ": " + e.what());
  } catch (AlphabetMismatch const& e) {
    throw AlphabetMismatch(stage + ": " + e.what());
  } catch (InvalidArgument const& e) {
    throw InvalidArgument(stage + ": " + e.what());
  }
}

inline TorusSurgerySpec surgery_spec(SurgeryScript const& script, SurgeryDecl const& s, std::int64_t n) {
  auto const* torus = script.find_torus(s.torus);
  if (!torus) throw InvalidArgument("unresolved torus " + s.torus);
  return {s.torus, torus->triple, s.curve, s.m.at(n), s.meridian_sign};
}

inline StageTrace trace_of(std::string label, std::optional<std::int64_t> m, ManifoldState const& s) {
  return {std::move(label), m, s.euler, s.signature, betti(s), abelianization(s.pi1), s.pi1.relators().size()};
}

inline ManifoldState initial_state(SurgeryScript const& script, std::vector<std::string>& notes) {
  ManifoldState s = model_state(script.manifold);
  if (script.explicit_generators) {
    std::int64_t const model_b1 = static_cast<std::int64_t>(abelianization(s.pi1).free_rank);
    s.pi1 = Presentation(script.alphabet, script.relators);
    std::int64_t const b1 = static_cast<std::int64_t>(abelianization(s.pi1).free_rank);
    if (b1 != model_b1)
      notes.push_back("declared presentation has b1 = " + std::to_string(b1) + ", the model has b1 = " +
                      std::to_string(model_b1));
  } else {
    for (auto const& r : script.relators) s.pi1.add_relator(r);
  }
  if (script.lattice) s.lattice = H2Lattice(script.lattice->names, script.lattice->pairing);
  for (auto const& sc : script.surfaces) {
    bool replaced = false;
    for (auto& existing : s.surfaces)
      if (existing.name == sc.name) {
        existing = sc;
        replaced = true;
      }
    if (!replaced) s.surfaces.push_back(sc);
  }
  if (!s.lattice.empty())
    for (auto const& sc : s.surfaces) s.lattice.pairing.require(sc.vector, ("surface " + sc.name).c_str());
  validate_surfaces(s.lattice, s.surfaces);
  return s;
}

inline ManifoldState surgered(SurgeryScript const& script, ManifoldState s, std::int64_t n,
                              std::vector<StageTrace>* trace) {
  for (auto const& decl : script.surgeries) {
    auto spec = surgery_spec(script, decl, n);
    s = in_stage("surgery on " + decl.torus, [&] { return apply_surgery(s, spec); });
    if (trace) trace->push_back(in_stage("surgery on " + decl.torus, [&] { return trace_of(decl.torus, spec.coeff, s); }));
  }
  return s;
}

inline SwReport run_sw(SurgeryScript const& script, ManifoldState& state, Betti const& b, RunOptions const& opts,
                       std::vector<std::string>& anomalies, std::vector<std::string>& notes) {
  SwReport sw;
  sw.dimension_square = dimension_square(state.euler, state.signature);
  sw.b_plus = b.b_plus;
  sw.allow_negative_square = script.sw.allow_negative_square;
  if (b.b_plus == 1)
    notes.push_back("b+ = 1: SW values depend on the chamber; basic classes are taken as declared");

  for (auto const& [k, v] : script.sw.basics) sw.basics.set(k, v);
  for (auto const& [k, v] : script.sw.zsums) sw.zsums[k] = v;
  state.basics = sw.basics;

  auto const& lattice = state.lattice;
  bool const have_lattice = !lattice.empty();
  auto check_dim = [&](ClassVector const& k, char const* what) {
    if (!have_lattice) throw InvalidArgument(std::string(what) + " declared without an H2 lattice");
    lattice.pairing.require(k, what);
  };
  for (auto const& [k, v] : sw.basics) check_dim(k, "basic class");
  for (auto const& [k, v] : sw.zsums) check_dim(k, "z-sum class");

  if (have_lattice) {
    auto const& q = lattice.pairing;
    for (auto const& [k, v] : sw.basics) {
      if (q.square(k) != sw.dimension_square)
        anomalies.push_back("basic class " + to_string(k) + " has square " + std::to_string(q.square(k)) +
                            ", expected " + std::to_string(sw.dimension_square));
      if (!is_characteristic(q, k)) anomalies.push_back("basic class " + to_string(k) + " is not characteristic");
    }
    if (!sw.basics.negation_closed()) anomalies.push_back("basic classes are not closed under negation");

    std::vector<ScenarioDecl> scenarios = script.sw.scenarios;
    if (scenarios.empty()) scenarios.push_back({"declared", {}});
    for (auto const& sc : scenarios) {
      ScenarioResult r{sc.label, state.surfaces, {}};
      for (auto const& [name, genus] : sc.genus_overrides) {
        bool found = false;
        for (auto& s : r.surfaces)
          if (s.name == name) {
            if (genus < 0) throw InvalidArgument("scenario " + sc.label + ": negative genus for " + name);
            s.genus = genus;
            found = true;
          }
        if (!found) throw InvalidArgument("scenario " + sc.label + ": unknown surface " + name);
      }
      r.candidates = enumerate_candidates(q, r.surfaces, state.euler, state.signature, opts.bound,
                                          script.sw.allow_negative_square);
      sw.scenarios.push_back(std::move(r));
    }
    if (!sw.basics.empty()) {
      sw.min_difference_square = min_difference_square(sw.basics, q);
      sw.minimal = check_minimality(sw.basics, q);
      if (!*sw.minimal) notes.push_back("two basic classes differ by a class of square -4");
    }
  }
  if (script.sw.family) {
    if (sw.basics.empty() && sw.zsums.empty()) throw InvalidArgument("sw family needs basic classes or z-sums");
    sw.family = family_report(sw.basics, sw.zsums, *script.sw.family);
  }
  return sw;
}

}  // namespace detail

inline RunReport run_pipeline(SurgeryScript const& script, RunOptions const& opts = {}) {
  using detail::in_stage;
  RunReport report;

  std::optional<IntRange> range = opts.family ? opts.family : script.family;
  bool const hole = script.has_family_hole();
  if (hole && !range) throw InvalidArgument("family: the script has a family hole but no parameter range");
  if (range && range->size() == 0) throw InvalidArgument("family: empty parameter range");
  if (!hole && range) {
    report.notes.push_back("family range ignored: no surgery coefficient depends on n");
    range.reset();
  }
  std::int64_t const n0 = range ? range->first : 0;
  if (hole) report.fiber = n0;

  ManifoldState const initial = in_stage("model", [&] { return detail::initial_state(script, report.notes); });
  report.manifold = initial.name;
  report.euler = initial.euler;
  report.signature = initial.signature;
  report.trace.push_back(in_stage("model", [&] { return detail::trace_of("initial", std::nullopt, initial); }));

  ManifoldState state = detail::surgered(script, initial, n0, &report.trace);
  report.betti = report.trace.back().betti;
  report.h1 = report.trace.back().h1;
  report.perfect = report.h1.trivial();

  report.simplified = tietze_simplify_detailed(state.pi1);

  EnumerationOptions eo;
  eo.max_cosets = opts.max_cosets;
  eo.progress = opts.progress;
  eo.keep_table = false;
  auto const t0 = std::chrono::steady_clock::now();
  report.enumeration = in_stage("enumeration", [&] { return todd_coxeter(state.pi1, {}, eo); });
  report.enumeration_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  if (report.betti.b1 == 0)
    report.classification = in_stage("classification", [&] { return classify_homeo(state, report.enumeration); });
  else
    report.notes.push_back("b1 = " + std::to_string(report.betti.b1) + ": no simply connected model to compare with");

  if (hole) {
    std::vector<ManifoldState> fibers;
    for (std::int64_t n = range->first; n <= range->last; ++n)
      fibers.push_back(in_stage("family n=" + std::to_string(n), [&] { return detail::surgered(script, initial, n, nullptr); }));
    std::vector<FamilyFiber> rows(fibers.size());
    auto work = [&](std::size_t i) {
      std::int64_t const n = range->first + static_cast<std::int64_t>(i);
      std::int64_t m = 0;
      for (auto const& s : script.surgeries)
        if (s.m.hole) m = s.m.at(n);
      auto const h1 = abelianization(fibers[i].pi1);
      rows[i] = {n, m, static_cast<std::int64_t>(h1.free_rank), h1, todd_coxeter(fibers[i].pi1, {}, eo)};
    };
    eo.progress = nullptr;
    in_stage("family", [&] {
      if (opts.threads <= 1) {
        for (std::size_t i = 0; i < rows.size(); ++i) work(i);
        return 0;
      }
      std::size_t next = 0;
      while (next < rows.size()) {
        std::vector<std::future<void>> batch;
        for (unsigned t = 0; t < opts.threads && next < rows.size(); ++t, ++next)
          batch.push_back(std::async(std::launch::async, work, next));
        for (auto& f : batch) f.get();
      }
      return 0;
    });
    report.family = std::move(rows);
  }

  if (script.sw.any())
    report.sw = in_stage("sw", [&] {
      return detail::run_sw(script, state, report.betti, opts, report.anomalies, report.notes);
    });

  if (script.expect_pi1 == Pi1Expectation::Trivial) {
    if (!(report.enumeration.completed() && report.enumeration.index == 1))
      report.anomalies.push_back("pi1 expected trivial, enumeration gave " + to_string(report.enumeration));
    for (auto const& f : report.family)
      if (!(f.outcome.completed() && f.outcome.index == 1))
        report.anomalies.push_back("pi1 expected trivial at n=" + std::to_string(f.n) + ", enumeration gave " +
                                   to_string(f.outcome));
  } else if (script.expect_pi1 == Pi1Expectation::Open) {
    if (report.enumeration.completed())
      report.anomalies.push_back("enumeration completed with index " + std::to_string(report.enumeration.index) +
                                 " on a presentation expected to stay open");
    for (auto const& f : report.family)
      if (f.outcome.completed())
        report.anomalies.push_back("enumeration completed at n=" + std::to_string(f.n) + " with index " +
                                   std::to_string(f.outcome.index) + " on a presentation expected to stay open");
  }

  report.final_state = std::move(state);
  return report;
}

// Plain-text summary.
inline std::string format_report(RunReport const& r) {
  std::ostringstream os;
  os << "manifold " << r.manifold << "  e=" << r.euler << " sigma=" << r.signature << '\n';
  if (r.fiber) os << "family fiber n=" << *r.fiber << '\n';
  os << "trace:\n";
  for (auto const& t : r.trace) {
    os << "  " << t.label;
    if (t.m) os << " (m=" << *t.m << ")";
    os << ": e=" << t.euler << " sigma=" << t.signature << " b1=" << t.betti.b1 << " b2=" << t.betti.b2
       << " b+=" << t.betti.b_plus << " H1=" << to_string(t.h1) << '\n';
  }
  os << "H1 = " << to_string(r.h1) << (r.perfect ? " (perfect)" : "") << '\n';
  auto const& simp = r.simplified.presentation;
  os << "simplified: " << simp.num_generators() << " generators, " << simp.relators().size() << " relators";
  if (r.simplified.budget_exhausted) os << " (budget exhausted)";
  os << '\n';
  for (auto const& w : simp.relators()) os << "  " << to_string(w, simp.alphabet()) << '\n';
  os << "enumeration: " << to_string(r.enumeration) << " defined=" << r.enumeration.cosets_defined
     << " coincidences=" << r.enumeration.coincidences << '\n';
  if (r.classification)
    os << "classification: " << r.classification->description << " [" << to_string(r.classification->certainty)
       << "]\n";
  if (!r.family.empty()) {
    os << "family:\n";
    for (auto const& f : r.family)
      os << "  n=" << f.n << " m=" << f.m << " b1=" << f.b1 << " H1=" << to_string(f.h1) << " "
         << to_string(f.outcome) << '\n';
  }
  if (r.sw) {
    auto const& sw = *r.sw;
    os << "sw: dimension square " << sw.dimension_square << ", b+=" << sw.b_plus << '\n';
    for (auto const& sc : sw.scenarios) {
      os << "  scenario " << sc.label << ": " << sc.candidates.size() << " candidates";
      for (auto const& k : sc.candidates) os << ' ' << to_string(k);
      os << '\n';
    }
    if (!sw.basics.empty()) {
      os << "  basics:";
      for (auto const& [k, v] : sw.basics) os << ' ' << to_string(k) << "=" << v;
      os << '\n';
    }
    if (sw.family) {
      os << "  family (pairwise distinct: " << (sw.family->pairwise_distinct ? "yes" : "no") << "):";
      for (auto const& row : sw.family->rows) os << " S_" << row.n << "=" << row.s_n;
      os << '\n';
    }
    if (sw.minimal) {
      os << "  minimality: " << (*sw.minimal ? "pass" : "fail");
      if (sw.min_difference_square) os << ", min |difference^2| = " << *sw.min_difference_square;
      os << '\n';
    }
  }
  for (auto const& n : r.notes) os << "note: " << n << '\n';
  for (auto const& a : r.anomalies) os << "ANOMALY: " << a << '\n';
  return os.str();
}

}  // namespace reveng
