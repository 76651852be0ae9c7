#pragma once

// JSON form of a run report. Keys are emitted in sorted order, so output is
// byte-for-byte deterministic for a given report.

#include <string>

#include "json.hpp"
#include "reveng/pipeline.hpp"

namespace reveng {

namespace detail {

inline nlohmann::json h1_json(AbelianInvariants const& a) {
  nlohmann::json torsion = nlohmann::json::array();
  for (auto const& t : a.torsion) torsion.push_back(t.str());
  return {{"free_rank", a.free_rank}, {"torsion", torsion}, {"text", to_string(a)}};
}

inline nlohmann::json outcome_json(EnumerationOutcome const& o) {
  nlohmann::json j = {{"status", o.completed() ? "Completed" : "Exceeded"},
                      {"bound", o.bound},
                      {"cosets_defined", o.cosets_defined},
                      {"coincidences", o.coincidences},
                      {"text", to_string(o)}};
  j["index"] = o.completed() ? nlohmann::json(o.index) : nlohmann::json(nullptr);
  return j;
}

inline nlohmann::json presentation_json(Presentation const& p) {
  nlohmann::json gens = nlohmann::json::array(), rels = nlohmann::json::array();
  for (auto const& g : p.alphabet().generators()) gens.push_back(g.name);
  for (auto const& r : p.relators()) rels.push_back(to_string(r, p.alphabet()));
  return {{"generators", gens}, {"relators", rels}};
}

}  // namespace detail

inline nlohmann::json to_json(RunReport const& r) {
  using nlohmann::json;
  using namespace detail;
  json j;
  j["manifold"] = r.manifold;
  j["euler"] = r.euler;
  j["signature"] = r.signature;
  j["fiber"] = r.fiber ? json(*r.fiber) : json(nullptr);

  json trace = json::array();
  for (auto const& t : r.trace)
    trace.push_back({{"label", t.label},
                     {"m", t.m ? json(*t.m) : json(nullptr)},
                     {"euler", t.euler},
                     {"signature", t.signature},
                     {"b1", t.betti.b1},
                     {"b2", t.betti.b2},
                     {"b_plus", t.betti.b_plus},
                     {"h1", h1_json(t.h1)},
                     {"relators", t.relators}});
  j["trace"] = trace;
  j["betti"] = {{"b1", r.betti.b1}, {"b2", r.betti.b2}, {"b_plus", r.betti.b_plus}};
  j["h1"] = h1_json(r.h1);
  j["perfect"] = r.perfect;
  j["presentation"] = presentation_json(r.final_state.pi1);
  j["simplified"] = presentation_json(r.simplified.presentation);
  j["simplified"]["eliminations"] = r.simplified.eliminations;
  j["simplified"]["shortenings"] = r.simplified.shortenings;
  j["simplified"]["budget_exhausted"] = r.simplified.budget_exhausted;
  j["enumeration"] = outcome_json(r.enumeration);
  if (r.classification)
    j["classification"] = {{"description", r.classification->description},
                           {"certainty", to_string(r.classification->certainty)}};
  else
    j["classification"] = nullptr;

  json family = json::array();
  for (auto const& f : r.family)
    family.push_back({{"n", f.n}, {"m", f.m}, {"b1", f.b1}, {"h1", h1_json(f.h1)}, {"enumeration", outcome_json(f.outcome)}});
  j["family"] = family;

  if (r.sw) {
    auto const& sw = *r.sw;
    json s;
    s["dimension_square"] = sw.dimension_square;
    s["b_plus"] = sw.b_plus;
    s["allow_negative_square"] = sw.allow_negative_square;
    json scenarios = json::array();
    for (auto const& sc : sw.scenarios) {
      json surfaces = json::array();
      for (auto const& f : sc.surfaces)
        surfaces.push_back({{"name", f.name}, {"genus", f.genus}, {"square", f.square}, {"vector", f.vector}});
      scenarios.push_back({{"label", sc.label}, {"surfaces", surfaces}, {"candidates", sc.candidates}});
    }
    s["scenarios"] = scenarios;
    json basics = json::array();
    for (auto const& [k, v] : sw.basics) basics.push_back({{"class", k}, {"value", v}});
    s["basics"] = basics;
    json zsums = json::array();
    for (auto const& [k, v] : sw.zsums) zsums.push_back({{"class", k}, {"value", v}});
    s["zsums"] = zsums;
    if (sw.family) {
      json rows = json::array();
      for (auto const& row : sw.family->rows) {
        json rb = json::array();
        for (auto const& [k, v] : row.basics) rb.push_back({{"class", k}, {"value", v}});
        rows.push_back({{"n", row.n}, {"s_n", row.s_n}, {"basics", rb}});
      }
      s["family"] = {{"rows", rows}, {"pairwise_distinct", sw.family->pairwise_distinct}};
    } else {
      s["family"] = nullptr;
    }
    s["min_difference_square"] = sw.min_difference_square ? json(*sw.min_difference_square) : json(nullptr);
    s["minimal"] = sw.minimal ? json(*sw.minimal) : json(nullptr);
    j["sw"] = s;
  } else {
    j["sw"] = nullptr;
  }
  j["anomalies"] = r.anomalies;
  j["notes"] = r.notes;
  return j;
}

}  // namespace reveng
