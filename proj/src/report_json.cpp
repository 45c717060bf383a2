#include "elco/report_json.hpp"

#include <sstream>

namespace elco::report {

Json vertex_json(const Vertex& v) {
  Json out = Json::array();
  for (Sym s : v) out.push_back(static_cast<int>(s));
  return out;
}

Json vertex_list_json(const std::vector<Vertex>& vs) {
  Json out = Json::array();
  for (const Vertex& v : vs) out.push_back(vertex_json(v));
  return out;
}

Json automorphism_json(const Automorphism& x) {
  Json out;
  out["sigma"] = x.sigma;
  Json diag = Json::array();
  for (const auto& g : x.diag) {
    Json row = Json::array();
    for (Sym s : g) row.push_back(static_cast<int>(s));
    diag.push_back(row);
  }
  out["diag"] = diag;
  out["script"] = aut_script(x);
  return out;
}

Json stats_json(const std::string& selector, const Code& code, const CodeStats& stats) {
  Json out;
  out["selector"] = selector;
  out["m"] = code.m();
  out["q"] = code.q();
  out["size"] = code.size();
  out["delta"] = stats.delta ? Json(*stats.delta) : Json(nullptr);
  out["rho"] = stats.rho ? Json(*stats.rho) : Json(nullptr);
  out["cell_sizes"] = stats.cell_sizes;
  out["partition_computed"] = stats.partition_computed;
  return out;
}

namespace {

Json mc_census_json(const elusive::Distance3Census& census) {
  Json out;
  Json pairs = Json::array();
  for (const elusive::MCReport& r : census.pairs) {
    Json p;
    p["pi"] = vertex_json(r.pi);
    p["pi2"] = vertex_json(r.pi2);
    p["d"] = r.dist;
    p["mc"] = r.mc;
    pairs.push_back(p);
  }
  out["pairs"] = pairs;
  out["per_associate_d3_counts"] = census.per_associate_d3_counts;
  out["per_associate_mc3_counts"] = census.per_associate_mc3_counts;
  out["d3_counts_equal_2q_minus_4"] = census.d3_counts_equal_2q_minus_4;
  out["bounds_ok"] = census.all_bounds_ok;
  out["mc3_shapes_ok"] = census.mc3_shapes_ok;
  out["d3_pairs"] = census.d3_pair_total;
  out["mc3_pairs"] = census.mc3_pair_total;
  return out;
}

Json triple_json(const elusive::TripleAnalysis& t) {
  Json out;
  out["alpha"] = vertex_json(t.alpha());
  out["x"] = automorphism_json(t.x());
  return out;
}

}  // namespace

Json elusive_json(const elusive::TripleAnalysis& t, const elusive::PartitionCheck& pc,
                  const elusive::Distance3Census& census, const elusive::AssociateGraph& graph,
                  const elusive::GraphDiagnostics& diag,
                  const elusive::TheoremCheck& theorem) {
  const elusive::ElusiveReport& r = t.report();
  Json out;
  out["triple"] = triple_json(t);

  Json verdicts;
  verdicts["elusive"] = r.is_elusive;
  verdicts["alpha_in_code"] = r.alpha_in_code;
  verdicts["neighbours_fixed"] = r.neighbours_fixed;
  verdicts["alpha_escapes"] = r.alpha_escapes;
  verdicts["delta"] = r.delta ? Json(*r.delta) : Json(nullptr);
  verdicts["delta_le_4"] = r.delta_le_4;
  verdicts["delta4_only_binary"] = r.delta4_only_binary;
  verdicts["m_qm1_even"] = r.m_qm1_even;
  verdicts["associate_count"] = r.associate_count;
  verdicts["expected_associates"] = r.expected_associates;
  verdicts["associate_count_matches"] = r.associate_count_matches;
  verdicts["partition_ok"] = pc.alpha_side_ok && pc.dual_side_ok;
  verdicts["partition_alpha_side"] = pc.alpha_side_ok;
  verdicts["partition_dual_side"] = pc.dual_side_ok;
  verdicts["context_verified"] = r.context_verified;
  out["verdicts"] = verdicts;

  out["associates"] = vertex_list_json(t.associates());
  out["mc_census"] = mc_census_json(census);

  Json g;
  Json edges = Json::array();
  for (const elusive::AssociateEdge& e : graph.edges) {
    Json edge;
    edge["i"] = e.i;
    edge["j"] = e.j;
    edge["associate"] = vertex_json(e.associate);
    edges.push_back(edge);
  }
  g["edges"] = edges;
  g["components"] = diag.component_sizes;
  g["disjoint_kq"] = diag.is_disjoint_kq;
  g["is_regular"] = diag.is_regular;
  g["valency"] = diag.valency;
  g["anomalies"] = graph.anomalies;
  out["graph"] = g;

  Json th;
  th["has_distance3_pair"] = theorem.has_distance3_pair;
  th["hypothesis_holds"] = theorem.hypothesis_holds;
  th["counterexample"] = theorem.counterexample
                             ? Json(Json::array({vertex_json(theorem.counterexample->first),
                                                 vertex_json(theorem.counterexample->second)}))
                             : Json(nullptr);
  th["q_divides_m"] = theorem.q_divides_m;
  th["graph_is_disjoint_kq"] = theorem.graph_is_disjoint_kq;
  th["conclusion_ok"] = theorem.conclusion_ok;
  out["theorem"] = th;
  return out;
}

Json census_json(const elusive::TripleAnalysis& t, const elusive::Distance3Census& census) {
  Json out;
  out["triple"] = triple_json(t);
  out["associate_count"] = t.associates().size();
  out["mc_census"] = mc_census_json(census);
  return out;
}

Json transitivity_json(const transitivity::TransitivityReport& r) {
  Json out;
  Json cells = Json::array();
  for (const transitivity::CellVerdict& c : r.cells) {
    Json cell;
    cell["i"] = c.index;
    cell["size"] = c.size;
    cell["single_orbit"] = c.single_orbit;
    cells.push_back(cell);
  }
  out["cells"] = cells;
  out["completely_transitive"] = r.completely_transitive;
  out["orbits_refine_cells"] = r.orbits_refine_cells;
  return out;
}

Json neighbour_transitivity_json(const transitivity::NeighbourTransitivityReport& r) {
  Json out;
  out["code_single_orbit"] = r.code_single_orbit;
  out["neighbours_single_orbit"] = r.neighbours_single_orbit;
  out["neighbour_transitive"] = r.neighbour_transitive;
  return out;
}

Json images_json(const transitivity::ImagesReport& r) {
  Json out;
  out["count"] = r.images.size();
  Json sizes = Json::array();
  for (const Code& c : r.images) sizes.push_back(c.size());
  out["image_sizes"] = sizes;
  out["pairwise_intersections"] = r.pairwise_intersections;
  return out;
}

Json c2_depth_json(const elusive::C2DepthReport& r) {
  Json out;
  out["rho"] = r.rho;
  out["c2_size"] = r.c2_size;
  out["blocked_count"] = r.blocked.size();
  out["blocked"] = vertex_list_json(r.blocked);
  out["all_have_c3_neighbour"] = r.blocked.empty();
  return out;
}

namespace {

void render_value(std::ostringstream& out, const Json& v, int depth) {
  const std::string pad(2 * depth, ' ');
  if (v.is_object()) {
    for (const auto& [key, val] : v.items()) {
      if (val.is_object() || (val.is_array() && !val.empty() && val.front().is_structured())) {
        out << pad << key << ":\n";
        render_value(out, val, depth + 1);
      } else {
        out << pad << key << ": " << val.dump() << '\n';
      }
    }
  } else if (v.is_array()) {
    for (const auto& item : v.items()) {
      out << pad << "- ";
      if (item.value().is_structured()) {
        out << '\n';
        render_value(out, item.value(), depth + 1);
      } else {
        out << item.value().dump() << '\n';
      }
    }
  } else {
    out << pad << v.dump() << '\n';
  }
}

}  // namespace

std::string render_text(const Json& report, int indent) {
  std::ostringstream out;
  render_value(out, report, indent);
  return out.str();
}

}  // namespace elco::report
