#include "palcheck/report.hpp"

#include <string>
#include <utility>

#include "palcheck/rational.hpp"
#include "palcheck/version.hpp"

namespace palcheck {

namespace {

std::string verdict_of(Decision d) {
  switch (d) {
    case Decision::witness: return "witness";
    case Decision::none: return "none";
    case Decision::unknown: return "unknown";
  }
  return "unknown";
}

Json digraph_json(const Digraph& d) {
  Json j;
  j["n"] = d.n;
  Json arcs = Json::array();
  for (const auto& [u, v] : d.arcs) arcs.push_back(Json::array({u, v}));
  j["arcs"] = std::move(arcs);
  return j;
}

Json jgraph_json(const JGraph& g) {
  Json j;
  j["n"] = g.n;
  j["j"] = g.j;
  j["edges"] = g.edges;
  return j;
}

}  // namespace

Json report_envelope(const std::string& command, const Json& config,
                     const Json& result) {
  Json j;
  j["tool"] = kToolName;
  j["version"] = kToolVersion;
  j["command"] = command;
  j["config"] = config;
  j["result"] = result;
  return j;
}

std::string render_report(const Json& report) { return report.dump(2) + "\n"; }

void write_report_file(const std::string& path, const Json& report) {
  save_text_file(path, render_report(report));
}

Json hom_result_json(const Palette& src, const Palette& dst,
                     const HomResult& h) {
  Json j;
  switch (h.status) {
    case HomStatus::witness: j["status"] = "witness"; break;
    case HomStatus::none: j["status"] = "none"; break;
    case HomStatus::unknown: j["status"] = "unknown"; break;
  }
  if (h.status == HomStatus::witness) {
    Json map = Json::object();
    for (size_t c = 0; c < h.map.size(); ++c) {
      map[src.labels[c]] = dst.labels[static_cast<size_t>(h.map[c])];
    }
    j["map"] = std::move(map);
  } else {
    j["map"] = nullptr;
  }
  j["nodes"] = h.nodes;
  j["search_space"] = h.search_space.str();
  return j;
}

Json shadow_coloring_json(const Palette& p, const ShadowColoring& phi) {
  Json rows = Json::array();
  for (size_t i = 0; i < phi.sets.size(); ++i) {
    Json row;
    row["set"] = phi.sets[i];
    row["color"] = p.labels[static_cast<size_t>(phi.colors[i])];
    rows.push_back(std::move(row));
  }
  return rows;
}

Json ordered_color_result_json(const Palette& p,
                               const OrderedColorResult& res) {
  Json j;
  j["decision"] = verdict_of(res.decision);
  j["coloring"] = res.decision == Decision::witness
                      ? shadow_coloring_json(p, res.coloring)
                      : Json();
  j["nodes"] = res.nodes;
  return j;
}

Json color_result_json(const Palette& p, const ColorResult& res) {
  Json j;
  j["decision"] = verdict_of(res.decision);
  if (res.decision == Decision::witness) {
    j["order"] = res.order;
    j["coloring"] = shadow_coloring_json(p, res.coloring);
  } else {
    j["order"] = nullptr;
    j["coloring"] = nullptr;
  }
  j["orders_tried"] = res.orders_tried;
  j["nodes"] = res.nodes;
  return j;
}

Json dense_check_json(const DenseCheck& c) {
  Json j;
  j["dense"] = c.dense;
  if (!c.dense) {
    j["violating_Y"] = c.violating_Y;
    j["worst_density"] = rational_str(c.worst);
  }
  return j;
}

Json reduced_map_json(const ReducedMap& m) {
  Json j;
  j["phi"] = m.phi;
  Json psi = Json::object();
  for (const auto& [set, name] : m.psi) {
    std::string key;
    for (size_t i = 0; i < set.size(); ++i) {
      if (i) key += "-";
      key += std::to_string(set[i]);
    }
    psi[key] = name;
  }
  j["psi"] = std::move(psi);
  return j;
}

Json contract_result_json(const ContractResult& r) {
  Json j;
  j["found"] = r.found;
  j["target_density"] = rational_str(r.target);
  j["achieved_min_density"] = rational_str(r.achieved_min);
  j["evaluations"] = r.evaluations;
  j["restarts"] = r.restarts;
  if (r.found) {
    Json sel;
    sel["s"] = r.selection.s;
    sel["M"] = r.selection.M;
    Json picks = Json::object();
    for (const auto& [subset, names] : r.selection.selections) {
      std::string key;
      for (size_t i = 0; i < subset.size(); ++i) {
        if (i) key += "-";
        key += std::to_string(subset[i]);
      }
      picks[key] = names;
    }
    sel["selections"] = std::move(picks);
    j["selection"] = std::move(sel);
  } else {
    j["selection"] = nullptr;
  }
  return j;
}

Json density_report_json(const DensityReport& r) {
  Json j;
  switch (r.mode) {
    case DensityMode::exhaustive: j["mode"] = "exhaustive"; break;
    case DensityMode::sampled: j["mode"] = "sampled"; break;
    case DensityMode::adversarial: j["mode"] = "adversarial"; break;
  }
  j["d"] = rational_str(r.d);
  j["mu"] = rational_str(r.mu);
  j["ok"] = r.ok;
  j["exhaustive"] = r.exhaustive;
  j["checked"] = r.checked;
  Json viols = Json::array();
  for (const DensityViolation& v : r.violations) {
    Json row;
    row["test_graph"] = jgraph_json(v.test_graph);
    row["clique_count"] = v.clique_count.str();
    row["edge_count"] = v.edge_count.str();
    row["slack"] = rational_str(v.slack);
    viols.push_back(std::move(row));
  }
  j["violations"] = std::move(viols);
  if (!r.confidence_note.empty()) j["confidence_note"] = r.confidence_note;
  return j;
}

Json arc_oracle_json(const ArcOracleResult& r) {
  Json j;
  j["max_arcs"] = r.max_arcs;
  j["bound"] = rational_str(r.bound);
  j["extremal"] = digraph_json(r.extremal);
  j["nodes"] = r.nodes;
  return j;
}

Json check_result_json(const CheckResult& c) {
  Json j;
  j["condition"] = c.condition;
  j["subject"] = c.subject;
  j["verdict"] = verdict_string(c.verdict);
  j["witnesses"] = c.witnesses;
  j["exhaustion"] = c.exhaustion;
  j["counterexamples"] = c.counterexamples;
  j["detail"] = c.detail;
  return j;
}

Json certificate_report_json(const CertificateReport& rep) {
  Json j;
  j["theorem"] = rep.theorem;
  j["k"] = rep.k;
  j["r"] = rep.r;
  j["verdict"] = verdict_string(rep.verdict);
  Json checks = Json::array();
  for (const CheckResult& c : rep.checks) {
    checks.push_back(check_result_json(c));
  }
  j["checks"] = std::move(checks);
  return j;
}

}  // namespace palcheck
