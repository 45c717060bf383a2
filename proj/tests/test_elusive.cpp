#include <doctest.h>

#include <map>
#include <random>

#include "elco/elusive.hpp"
#include "elco/families.hpp"
#include "oracles.hpp"

using namespace elco;
using elusive::TripleAnalysis;

namespace {

Automorphism a3_mixer() {
  Automorphism x = identity_automorphism(3, 3);
  x.diag[1] = {1, 2, 0};
  x.diag[2] = {2, 0, 1};
  return x;
}

// The binary MC=1 configuration: x = t_beta followed by the entry
// transposition (0, 7) in H(8,2).
Automorphism finalex_x(const gf::FieldSpec& f2) {
  Vertex beta(8, 0);
  beta[1] = 1;
  beta[7] = 1;
  std::vector<int> swap07 = perm_identity<int>(8);
  std::swap(swap07[0], swap07[7]);
  return compose(translation(beta, f2), entry_perm(swap07, 2));
}

Automorphism random_aut(std::mt19937& gen, int m, int q) {
  Automorphism x = identity_automorphism(m, q);
  for (int i = 0; i < m; ++i) std::shuffle(x.diag[i].begin(), x.diag[i].end(), gen);
  std::shuffle(x.sigma.begin(), x.sigma.end(), gen);
  return x;
}

}  // namespace

TEST_CASE("verify_triple on the known instances") {
  const Code a3 = families::perm_code(3, 1, families::PermSel::alternating);
  const elusive::ElusiveReport r = elusive::verify_triple(a3, {0, 1, 2}, a3_mixer());
  CHECK(r.is_elusive);
  CHECK(r.alpha_in_code);
  CHECK(r.neighbours_fixed);
  CHECK(r.alpha_escapes);
  CHECK(r.delta == 3);
  CHECK(r.delta_le_4);
  CHECK(r.m_qm1_even);

  const gf::FieldSpec f2 = gf::field_make(2, 1);
  const families::RMPair rm = families::rm_codes(f2, 3);
  const elusive::ElusiveReport rr =
      elusive::verify_triple(rm.sub, Vertex(8, 0), finalex_x(f2));
  CHECK(rr.is_elusive);
  CHECK(rr.delta == 4);
  CHECK(rr.delta4_only_binary);

  const elusive::ElusiveReport rid =
      elusive::verify_triple(a3, {0, 1, 2}, identity_automorphism(3, 3));
  CHECK(!rid.is_elusive);
  CHECK(!rid.alpha_escapes);
}

TEST_CASE("associates of the C(A_3) triple are the odd coset") {
  const Code a3 = families::perm_code(3, 1, families::PermSel::alternating);
  const TripleAnalysis t(a3, {0, 1, 2}, a3_mixer());
  CHECK(t.associates() == std::vector<Vertex>{{0, 2, 1}, {1, 0, 2}, {2, 1, 0}});
  CHECK(t.report().associate_count == 3);  // m(q-1)/2
  CHECK(t.report().associate_count_matches);

  // independent check: direct intersection of the sphere with the moved code
  std::vector<Vertex> direct;
  for (const Vertex& v : oracle::sphere({0, 1, 2}, 2, 3))
    if (t.moved_code().contains(v)) direct.push_back(v);
  CHECK(direct == t.associates());
}

TEST_CASE("the binary triple has m(q-1)/2 = 4 associates") {
  const gf::FieldSpec f2 = gf::field_make(2, 1);
  const families::RMPair rm = families::rm_codes(f2, 3);
  const TripleAnalysis t(rm.sub, Vertex(8, 0), finalex_x(f2));
  CHECK(t.report().expected_associates == 4);
  CHECK(t.associates().size() == 4);

  std::vector<Vertex> direct;
  for (const Vertex& v : oracle::sphere(Vertex(8, 0), 2, 2))
    if (t.moved_code().contains(v)) direct.push_back(v);
  CHECK(direct == t.associates());
}

TEST_CASE("unverified triples need the override") {
  const Code a3 = families::perm_code(3, 1, families::PermSel::alternating);
  CHECK_THROWS_AS(TripleAnalysis(a3, {0, 1, 2}, identity_automorphism(3, 3)), Error);
  CHECK_THROWS_AS(elusive::associates(a3, {0, 1, 2}, identity_automorphism(3, 3)), Error);
  const TripleAnalysis t(a3, {0, 1, 2}, identity_automorphism(3, 3),
                         /*allow_unverified=*/true);
  CHECK(!t.report().context_verified);
  CHECK(elusive::associates(a3, {0, 1, 2}, a3_mixer()) ==
        TripleAnalysis(a3, {0, 1, 2}, a3_mixer()).associates());
}

TEST_CASE("verified triples have length at least the alphabet size") {
  // the associate graph is (q-1)-regular on m vertices, so m >= q
  const Code a3 = families::perm_code(3, 1, families::PermSel::alternating);
  const Code a4 = families::perm_code(4, 1, families::PermSel::alternating);
  const Code a32 = families::perm_code(3, 2, families::PermSel::alternating);
  for (const Code* c : {&a3, &a4, &a32}) CHECK(c->m() >= c->q());
  const elusive::GraphDiagnostics d = elusive::graph_diagnostics(
      elusive::associate_graph(TripleAnalysis(a4, {0, 1, 2, 3}, families::one_odd_diag(4, 1))));
  CHECK(d.is_regular);
  CHECK(d.valency == a4.q() - 1);
}

TEST_CASE("neighbour partitions") {
  const Code a3 = families::perm_code(3, 1, families::PermSel::alternating);
  const TripleAnalysis t(a3, {0, 1, 2}, a3_mixer());
  const elusive::PartitionCheck pc = elusive::neighbour_partition_check(t);
  CHECK(pc.alpha_side_ok);
  CHECK(pc.dual_side_ok);
  CHECK(pc.part_count == 3);

  const gf::FieldSpec f2 = gf::field_make(2, 1);
  const families::RMPair rm = families::rm_codes(f2, 3);
  const TripleAnalysis tb(rm.sub, Vertex(8, 0), finalex_x(f2));
  const elusive::PartitionCheck pcb = elusive::neighbour_partition_check(tb);
  CHECK(pcb.alpha_side_ok);
  CHECK(pcb.dual_side_ok);
  CHECK(pcb.part_count == 4);

  // negative control: an automorphism that does not fix the neighbour set
  Automorphism bad = identity_automorphism(3, 3);
  bad.diag[0] = {1, 0, 2};
  const TripleAnalysis tbad(a3, {0, 1, 2}, bad, /*allow_unverified=*/true);
  CHECK(!tbad.report().neighbours_fixed);
  const elusive::PartitionCheck pcx = elusive::neighbour_partition_check(tbad);
  CHECK((!pcx.alpha_side_ok || !pcx.dual_side_ok));
  CHECK(pcx.violating_neighbour.has_value());
}

TEST_CASE("mutual codeword counts") {
  const Code a3 = families::perm_code(3, 1, families::PermSel::alternating);
  const elusive::MCReport r = elusive::mc_count(a3, {1, 1, 1}, {2, 2, 2});
  CHECK(r.dist == 3);
  CHECK(r.mc == 3);
  CHECK(r.witnesses == a3.words());

  const gf::FieldSpec f2 = gf::field_make(2, 1);
  const families::RMPair rm = families::rm_codes(f2, 3);
  Vertex pi(8, 0), pi2(8, 0);
  pi[0] = pi[1] = 1;
  pi2[2] = pi2[4] = 1;
  const elusive::MCReport rb = elusive::mc_count(rm.sub, pi, pi2);
  CHECK(rb.dist == 4);
  CHECK(rb.mc == 1);
  CHECK(rb.witnesses == std::vector<Vertex>{Vertex(8, 0)});

  CHECK_THROWS_AS(elusive::mc_count(a3, {1, 1, 1}, {1, 1, 1}), Error);
}

TEST_CASE("mc = 3 witness sets have the stated shape") {
  const Code a4 = families::perm_code(4, 1, families::PermSel::alternating);
  const TripleAnalysis t(a4, {0, 1, 2, 3}, families::one_odd_diag(4, 1));
  const elusive::Distance3Census census = elusive::distance3_census(t);
  CHECK(census.d3_pair_total > 0);
  for (const elusive::MCReport& r : census.pairs)
    if (r.dist == 3 && r.mc == 3) CHECK(elusive::mc3_shape_matches(r, {0, 1, 2, 3}));
  CHECK(census.mc3_shapes_ok);
}

TEST_CASE("associate graph of the C(A_3) triple is a triangle") {
  const Code a3 = families::perm_code(3, 1, families::PermSel::alternating);
  const TripleAnalysis t(a3, {0, 1, 2}, a3_mixer());
  const elusive::AssociateGraph g = elusive::associate_graph(t);
  CHECK(g.edges.size() == 3);
  CHECK(g.anomalies.empty());
  CHECK(g.edges[0].i == 0);
  CHECK(g.edges[0].j == 1);
  CHECK(g.edges[0].associate == Vertex{1, 0, 2});  // diff({0,1,2}, {1,0,2}) = {0,1}
  const elusive::GraphDiagnostics d = elusive::graph_diagnostics(g);
  CHECK(d.is_regular);
  CHECK(d.valency == 2);
  CHECK(d.component_sizes == std::vector<int>{3});
  CHECK(d.is_disjoint_kq);

  const std::string dot = elusive::to_dot(g);
  CHECK(dot.find("0 -- 1 [label=\"102\"]") != std::string::npos);
}

TEST_CASE("associate graph of the two-block triple is two triangles") {
  const Code a32 = families::perm_code(3, 2, families::PermSel::alternating);
  const TripleAnalysis t(a32, {0, 1, 2, 0, 1, 2}, families::one_odd_diag(3, 2));
  const elusive::GraphDiagnostics d =
      elusive::graph_diagnostics(elusive::associate_graph(t));
  CHECK(d.component_sizes == std::vector<int>{3, 3});
  CHECK(d.is_disjoint_kq);
}

TEST_CASE("edgeless graph diagnostics") {
  elusive::AssociateGraph g;
  g.m = 3;
  g.q = 3;
  const elusive::GraphDiagnostics d = elusive::graph_diagnostics(g);
  CHECK(d.is_regular);
  CHECK(d.valency == 0);
  CHECK(d.component_sizes == std::vector<int>{1, 1, 1});
  CHECK(!d.is_disjoint_kq);
}

TEST_CASE("distance-3 censuses on permutation codes") {
  const Code a4 = families::perm_code(4, 1, families::PermSel::alternating);
  const TripleAnalysis t(a4, {0, 1, 2, 3}, families::one_odd_diag(4, 1));
  const elusive::Distance3Census c = elusive::distance3_census(t);
  CHECK(c.d3_counts_equal_2q_minus_4);
  for (int n : c.per_associate_d3_counts) CHECK(n == 4);
  CHECK(c.d3_pair_total == 12);
  CHECK(c.mc3_pair_total == 12);
  CHECK(c.all_bounds_ok);
}

TEST_CASE("theorem check: hypothesis and conclusion") {
  const Code a3 = families::perm_code(3, 1, families::PermSel::alternating);
  const TripleAnalysis t(a3, {0, 1, 2}, a3_mixer());
  const elusive::TheoremCheck th = elusive::theorem_maximum_check(t);
  CHECK(th.has_distance3_pair);
  CHECK(th.hypothesis_holds);
  CHECK(th.q_divides_m);
  CHECK(th.graph_is_disjoint_kq);
  CHECK(th.conclusion_ok);

  // q = 5 Reed-Muller instance: hypothesis fails, q | m regardless
  const gf::FieldSpec f5 = gf::field_make(5, 1);
  const families::RMPair rm = families::rm_codes(f5, 1);
  Vertex beta(5, 0);
  beta[0] = 1;
  beta[1] = 4;
  const TripleAnalysis t5(rm.sub, Vertex(5, 0), translation(beta, f5));
  const elusive::TheoremCheck th5 = elusive::theorem_maximum_check(t5);
  CHECK(th5.has_distance3_pair);
  CHECK(!th5.hypothesis_holds);
  CHECK(th5.counterexample.has_value());
  CHECK(th5.q_divides_m);
  CHECK(th5.conclusion_ok);
}

TEST_CASE("census summaries are invariant under conjugation") {
  const Code a3 = families::perm_code(3, 1, families::PermSel::alternating);
  const Automorphism x = a3_mixer();
  const Vertex alpha{0, 1, 2};
  const TripleAnalysis base(a3, alpha, x);
  const elusive::Distance3Census cb = elusive::distance3_census(base);
  const elusive::GraphDiagnostics gb =
      elusive::graph_diagnostics(elusive::associate_graph(base));

  std::mt19937 gen(71);
  for (int it = 0; it < 10; ++it) {
    const Automorphism y = random_aut(gen, 3, 3);
    const Code cy = image_code(a3, y);
    const Automorphism conj = compose(inverse(y), compose(x, y));
    const TripleAnalysis moved(cy, elco::apply(y, alpha), conj);
    CHECK(moved.report().is_elusive);
    CHECK(moved.associates().size() == base.associates().size());
    const elusive::Distance3Census cm = elusive::distance3_census(moved);
    auto histogram = [](const elusive::Distance3Census& c) {
      std::map<std::pair<int, int>, int> h;
      for (const elusive::MCReport& r : c.pairs) ++h[{r.dist, r.mc}];
      return h;
    };
    CHECK(histogram(cm) == histogram(cb));
    const elusive::GraphDiagnostics gm =
        elusive::graph_diagnostics(elusive::associate_graph(moved));
    CHECK(gm.component_sizes == gb.component_sizes);
  }
}

TEST_CASE("find_witness") {
  const Code a3 = families::perm_code(3, 1, families::PermSel::alternating);
  const auto witness = elusive::find_witness(a3, [&](const auto& fn) {
    enumerate_full_aut(3, 3, fn);
  });
  REQUIRE(witness.has_value());
  const std::vector<Vertex> c1 = neighbour_set(a3);
  CHECK(stabilises(std::span<const Vertex>(c1), *witness));
  CHECK(!stabilises(a3, *witness));

  // the full-space stabiliser orders on H(3,3)
  const elusive::WitnessSearch ws = elusive::exhaustive_witness_search(a3);
  CHECK(ws.x1_order == 108);
  CHECK(ws.x_order == 36);
  CHECK(ws.witnesses.size() == 72);

  // a code whose neighbour set is empty yields no witness
  const Code everything(2, 2, oracle::all_vertices(2, 2));
  CHECK(neighbour_set(everything).empty());
  const auto none = elusive::find_witness(everything, [&](const auto& fn) {
    enumerate_full_aut(2, 2, fn);
  });
  CHECK(!none.has_value());
}

TEST_CASE("candidate products include short words") {
  const gf::FieldSpec f2 = gf::field_make(2, 1);
  const families::RMPair rm = families::rm_codes(f2, 3);
  const families::RMAutGens gens = families::aut_gens_rm(rm);
  const std::vector<Automorphism> cands =
      elusive::candidate_products(gens.x1_gens, 8, 2, 2);
  CHECK(is_identity(cands.front()));
  CHECK(cands.size() > gens.x1_gens.size());
  const auto witness = elusive::find_witness(rm.sub, cands);
  REQUIRE(witness.has_value());
  Vertex beta(8);
  for (int i = 0; i < 8; ++i) beta[i] = witness->diag[i][0];
  CHECK(*witness == translation(beta, f2));
}

TEST_CASE("c2 depth check flags only the double-pair exception") {
  const elusive::C2DepthReport r32 =
      elusive::c2_depth_check(families::perm_code(3, 2, families::PermSel::symmetric));
  CHECK(r32.c2_size > 0);
  CHECK(r32.blocked.empty());

  const elusive::C2DepthReport r4 =
      elusive::c2_depth_check(families::perm_code(4, 1, families::PermSel::symmetric));
  CHECK(r4.blocked.size() == 36);
  for (const Vertex& v : r4.blocked) {
    std::map<Sym, int> hist;
    for (Sym s : v) ++hist[s];
    CHECK(hist.size() == 2);
    for (const auto& [s, n] : hist) CHECK(n == 2);
  }
}
