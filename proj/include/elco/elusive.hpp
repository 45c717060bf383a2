#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "elco/autgrp.hpp"
#include "elco/hamming.hpp"

namespace elco::elusive {

/// Verification record for a candidate triple (C, alpha, x).
struct ElusiveReport {
  bool alpha_in_code = false;
  bool neighbours_fixed = false;  // C_1^x = C_1
  bool alpha_escapes = false;     // alpha^x not in C
  bool is_elusive = false;        // all three of the above

  std::optional<int> delta;
  // Recorded sanity verdicts for a verified triple: delta <= 4, delta = 4
  // only in the binary case, and m(q-1) even.
  bool delta_le_4 = false;
  bool delta4_only_binary = false;
  bool m_qm1_even = false;

  std::uint64_t associate_count = 0;
  std::uint64_t expected_associates = 0;  // m(q-1)/2
  bool associate_count_matches = false;

  bool context_verified = true;  // false when the exploratory override ran
};

/// Computes every diagnostic of a triple once: the neighbour set, the moved
/// code, the verification report and the associate set. The remaining checks
/// are derived on demand. Constructing with allow_unverified = false throws
/// NotVerifiedTriple when the triple fails verification.
class TripleAnalysis {
 public:
  TripleAnalysis(const Code& code, Vertex alpha, Automorphism x,
                 bool allow_unverified = false);

  const Code& code() const { return code_; }
  const Vertex& alpha() const { return alpha_; }
  const Automorphism& x() const { return x_; }
  const std::vector<Vertex>& neighbours() const { return c1_; }
  const Code& moved_code() const { return cx_; }
  const ElusiveReport& report() const { return report_; }
  const std::vector<Vertex>& associates() const { return associates_; }

 private:
  Code code_;
  Vertex alpha_;
  Automorphism x_;
  std::vector<Vertex> c1_;
  Code cx_;
  ElusiveReport report_;
  std::vector<Vertex> associates_;
};

ElusiveReport verify_triple(const Code& code, const Vertex& alpha, const Automorphism& x);

/// Gamma_2(alpha) n C^x. Throws NotVerifiedTriple unless the triple verifies
/// or allow_unverified is set.
std::vector<Vertex> associates(const Code& code, const Vertex& alpha, const Automorphism& x,
                               bool allow_unverified = false);

struct PartitionCheck {
  bool alpha_side_ok = false;  // associates partition Gamma_1(alpha), parts of size 2
  bool dual_side_ok = false;   // for each associate pi, Gamma_2(pi) n C partitions Gamma_1(pi)
  std::uint64_t part_count = 0;
  std::optional<Vertex> violating_neighbour;
  std::string detail;
};

PartitionCheck neighbour_partition_check(const TripleAnalysis& t);

struct MCReport {
  Vertex pi, pi2;
  int dist = 0;
  int mc = 0;
  std::vector<Vertex> witnesses;  // C n Gamma_2(pi) n Gamma_2(pi2), sorted
  bool bounds_ok = true;          // 1 <= mc <= 3, and mc <= 2 at distance 4
};

/// Mutual codewords of a vertex pair with respect to a code. Distances 3 and
/// 4 run through the closed-form sphere intersection; anything else falls
/// back to brute force.
MCReport mc_count(const Code& code, const Vertex& pi, const Vertex& pi2);

/// Does the witness set of an mc = 3 report have the two-codeword shape
/// around alpha required at distance 3?
bool mc3_shape_matches(const MCReport& r, const Vertex& alpha);

struct AssociateEdge {
  int i = 0, j = 0;  // i < j
  Vertex associate;
};

struct AssociateGraph {
  int m = 0;
  int q = 0;
  std::vector<AssociateEdge> edges;     // sorted by (i, j, associate)
  std::vector<std::string> anomalies;   // loops/parallel edges, for exploratory runs
};

AssociateGraph associate_graph(const TripleAnalysis& t);

struct GraphDiagnostics {
  bool is_regular = false;
  int valency = 0;
  std::vector<int> component_sizes;  // descending? no: ascending by component minimum
  bool is_disjoint_kq = false;       // every component a complete graph on q vertices
};

GraphDiagnostics graph_diagnostics(const AssociateGraph& g);

std::string to_dot(const AssociateGraph& g);

struct Distance3Census {
  std::vector<MCReport> pairs;                // d = 3 and d = 4 pairs, deterministic order
  std::vector<int> per_associate_d3_counts;   // indexed like associates()
  std::vector<int> per_associate_mc3_counts;  // mc = 3 partners at distance 3
  bool d3_counts_equal_2q_minus_4 = false;
  bool all_bounds_ok = false;
  bool mc3_shapes_ok = false;
  int d3_pair_total = 0;
  int mc3_pair_total = 0;
};

Distance3Census distance3_census(const TripleAnalysis& t);

struct TheoremCheck {
  bool has_distance3_pair = false;
  bool hypothesis_holds = false;  // every distance-3 associate pair has mc = 3
  std::optional<std::pair<Vertex, Vertex>> counterexample;
  bool q_divides_m = false;
  bool graph_is_disjoint_kq = false;
  bool conclusion_ok = false;  // hypothesis => (q | m and Pi = (m/q) K_q)
};

TheoremCheck theorem_maximum_check(const TripleAnalysis& t);

/// First candidate x with C_1^x = C_1 and C^x != C; nullopt if none.
std::optional<Automorphism> find_witness(
    const Code& code, const std::function<void(const std::function<bool(const Automorphism&)>&)>& stream);
std::optional<Automorphism> find_witness(const Code& code,
                                         std::span<const Automorphism> candidates);

/// All witnesses in the full automorphism group of H(m,q), plus the sizes of
/// the two stabilisers; small ambients only.
struct WitnessSearch {
  std::vector<Automorphism> witnesses;  // X_1 \ X in enumeration order
  std::uint64_t x1_order = 0;
  std::uint64_t x_order = 0;
};

WitnessSearch exhaustive_witness_search(const Code& code,
                                        std::uint64_t limit = kDefaultGroupLimit);

/// Products of the given generators up to the given word length, identity
/// first; a convenient witness candidate stream.
std::vector<Automorphism> candidate_products(std::span<const Automorphism> gens, int m, int q,
                                             int max_len);

struct C2DepthEntry {
  Vertex beta;
  bool has_c3_neighbour = false;
};

struct C2DepthReport {
  bool partition_computed = false;
  int rho = 0;
  std::uint64_t c2_size = 0;
  std::vector<Vertex> blocked;  // C_2 vertices with no C_3 neighbour
};

/// For each beta in C_2, does beta have a neighbour in C_3? Replicates the
/// mechanism that rules out elusive triples for C(S_q,l), and flags the
/// exceptional vertices when it fails.
C2DepthReport c2_depth_check(const Code& code, std::uint64_t bound = kDefaultEnumBound);

}  // namespace elco::elusive
