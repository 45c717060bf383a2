#pragma once

#include <json.hpp>

#include "elco/elusive.hpp"
#include "elco/hamming.hpp"
#include "elco/transitivity.hpp"

namespace elco::report {

using Json = nlohmann::ordered_json;

Json vertex_json(const Vertex& v);
Json vertex_list_json(const std::vector<Vertex>& vs);
Json automorphism_json(const Automorphism& x);

Json stats_json(const std::string& selector, const Code& code, const CodeStats& stats);
Json elusive_json(const elusive::TripleAnalysis& t, const elusive::PartitionCheck& pc,
                  const elusive::Distance3Census& census, const elusive::AssociateGraph& graph,
                  const elusive::GraphDiagnostics& diag, const elusive::TheoremCheck& theorem);
Json census_json(const elusive::TripleAnalysis& t, const elusive::Distance3Census& census);
Json transitivity_json(const transitivity::TransitivityReport& r);
Json neighbour_transitivity_json(const transitivity::NeighbourTransitivityReport& r);
Json images_json(const transitivity::ImagesReport& r);
Json c2_depth_json(const elusive::C2DepthReport& r);

std::string render_text(const Json& report, int indent = 0);

}  // namespace elco::report
