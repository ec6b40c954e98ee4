// JSON rendering for verdicts and reports; the schema for the verdict
// document lives in docs/verdict.schema.json.

#ifndef GIS_JSON_IO_HPP
#define GIS_JSON_IO_HPP

#include <json.hpp>

#include "gis/cycle_monoid.hpp"
#include "gis/star.hpp"

namespace gis {

inline nlohmann::json star_probe_to_json(const Graph& g,
                                         const StarProbeReport& probe) {
  nlohmann::json j;
  j["a_max_len"] = probe.a_max_len;
  j["k"] = probe.k;
  j["mu_window"] = probe.mu_window;
  j["a_size"] = probe.a_size;
  j["found"] = probe.witness.has_value();
  if (probe.witness) {
    j["mu"] = to_string(g, probe.witness->mu);
    j["subset_size"] = probe.witness->subset.size();
  } else {
    j["mu"] = nullptr;
    j["subset_size"] = 0;
  }
  return j;
}

inline nlohmann::json verdict_to_json(const Graph& g, const Verdict& v) {
  nlohmann::json j;
  j["outcome"] = outcome_tag(v.outcome);
  j["reasons"] = nlohmann::json::array();
  for (const Reason& r : v.reasons) {
    j["reasons"].push_back({{"code", r.code}, {"text", r.text}});
  }
  nlohmann::json evidence;
  evidence["components"] = nlohmann::json::array();
  evidence["strongly_connected"] = nlohmann::json::array();
  evidence["infinite_gis"] = nlohmann::json::array();
  for (const ComponentReport& c : v.components) {
    nlohmann::json comp;
    comp["name"] = c.name();
    comp["vertices"] = c.component.vertex_ids();
    nlohmann::json edge_ids = nlohmann::json::array();
    for (const Graph::Edge& e : c.component.edges()) {
      edge_ids.push_back(e.id);
    }
    comp["edges"] = edge_ids;
    evidence["components"].push_back(comp);
    evidence["strongly_connected"].push_back(c.strongly_connected);
    evidence["infinite_gis"].push_back(c.infinite_gis);
  }
  evidence["witness_components"] = v.witness_components;
  evidence["star_sufficient"] = v.star.sufficient;
  evidence["star_sufficient_vacuous"] = v.star.vacuous;
  evidence["star_probe"] =
      v.probe ? star_probe_to_json(g, *v.probe) : nlohmann::json(nullptr);
  j["evidence"] = evidence;
  return j;
}

inline nlohmann::json iso_report_to_json(const IsoReport& r) {
  nlohmann::json j;
  j["elements"] = r.elements;
  j["pairs_checked"] = r.pairs_checked;
  j["pairs_skipped"] = r.pairs_skipped;
  j["hom_failures"] = r.hom_failures;
  j["inv_failures"] = r.inv_failures;
  j["injectivity_collisions"] = r.injectivity_collisions;
  j["counterexample"] =
      r.counterexample ? nlohmann::json(*r.counterexample) : nullptr;
  return j;
}

}  // namespace gis

#endif  // GIS_JSON_IO_HPP
