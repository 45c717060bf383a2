#include "elco/fullcheck.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <set>

#include "elco/elusive.hpp"
#include "elco/families.hpp"
#include "elco/kernels.hpp"
#include "elco/selectors.hpp"
#include "elco/transitivity.hpp"

namespace elco::fullcheck {

namespace {

using elusive::TripleAnalysis;
using report::Json;

struct Checker {
  bool pass = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += "FAILED: " + what;
    }
  }
  void note(const std::string& what) {
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

struct NamedTriple {
  std::string name;
  Code code;
  Vertex alpha;
  Automorphism x;
};

NamedTriple a3_triple() {
  Code c = families::perm_code(3, 1, families::PermSel::alternating);
  Automorphism x = identity_automorphism(3, 3);
  x.diag[1] = {1, 2, 0};  // 0 -> 1 -> 2 -> 0
  x.diag[2] = {2, 0, 1};  // 0 -> 2 -> 1 -> 0
  return {"C(A_3)", std::move(c), Vertex{0, 1, 2}, std::move(x)};
}

NamedTriple odd_diag_triple(int q, int l) {
  Code c = families::perm_code(q, l, families::PermSel::alternating);
  Vertex alpha;
  for (int b = 0; b < l; ++b)
    for (int i = 0; i < q; ++i) alpha.push_back(static_cast<Sym>(i));
  return {"C(A_" + std::to_string(q) + "," + std::to_string(l) + ")", std::move(c),
          std::move(alpha), families::one_odd_diag(q, l)};
}

NamedTriple rm_translation_triple(int q, int d) {
  Selection sel = parse_selector("rm:" + std::to_string(q) + "," + std::to_string(d));
  Vertex beta(sel.code.m(), 0);
  beta[0] = 1;
  beta[1] = static_cast<Sym>(sel.field->neg(1));
  return {"RM q=" + std::to_string(q) + " d=" + std::to_string(d), sel.code,
          Vertex(sel.code.m(), 0), translation(beta, *sel.field)};
}

double seconds_since(const std::chrono::steady_clock::time_point& start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// ---- criterion 1: the three H(3,3) codes sharing one neighbour set ----

CriterionResult criterion1() {
  Checker ck;
  Json rep;
  const Code a3 = families::perm_code(3, 1, families::PermSel::alternating);
  const Code odd = families::perm_code(3, 1, families::PermSel::odd_coset);
  const Code rep3 = families::repetition_code(3, 3);

  const std::vector<Vertex> n1 = neighbour_set(a3);
  ck.expect(n1.size() == 18, "neighbour set size 18");
  ck.expect(neighbour_set(odd) == n1, "odd coset shares the neighbour set");
  ck.expect(neighbour_set(rep3) == n1, "repetition code shares the neighbour set");

  std::vector<Vertex> rest;
  for (std::uint64_t key = 0; key < 27; ++key) {
    Vertex v = unpack_key(key, 3, 3);
    if (!std::binary_search(n1.begin(), n1.end(), v)) rest.push_back(std::move(v));
  }
  ck.expect(rest.size() == 9, "9 non-neighbour vertices");
  std::set<Vertex> union_codes;
  for (const Code* c : {&a3, &odd, &rep3})
    for (const Vertex& w : c->words()) union_codes.insert(w);
  ck.expect(union_codes.size() == 9, "the three codes are pairwise disjoint");
  ck.expect(std::vector<Vertex>(union_codes.begin(), union_codes.end()) == rest,
            "27 = 3+3+3+18 as a disjoint union");

  // Exhaustive 512-subset search over the non-neighbour vertices.
  int matches_delta3 = 0, matches_delta2 = 0;
  std::vector<std::string> found;
  for (unsigned mask = 1; mask < 512; ++mask) {
    std::vector<Vertex> words;
    for (int b = 0; b < 9; ++b)
      if (mask & (1u << b)) words.push_back(rest[b]);
    const Code cand(3, 3, std::move(words));
    if (neighbour_set(cand) != n1) continue;
    const std::optional<int> delta = min_distance(cand);
    if (delta && *delta >= 2) ++matches_delta2;
    if (delta && *delta >= 3) {
      ++matches_delta3;
      const bool known = cand.words() == a3.words() || cand.words() == odd.words() ||
                         cand.words() == rep3.words();
      ck.expect(known, "delta>=3 match is one of the three codes");
    }
  }
  ck.expect(matches_delta3 == 3, "exactly 3 codes with this neighbour set and delta >= 3");
  ck.note("delta>=2 matches: " + std::to_string(matches_delta2));

  rep["neighbour_set_size"] = n1.size();
  rep["delta3_matches"] = matches_delta3;
  rep["delta2_matches"] = matches_delta2;
  return {1, "H(3,3) exceptional neighbour-set census", ck.pass, ck.detail, 0.0, rep};
}

// ---- criteria 2 & 3: permutation-code triples ----

CriterionResult criterion2(const std::vector<NamedTriple>& triples) {
  Checker ck;
  Json rep = Json::array();
  for (const NamedTriple& nt : triples) {
    const TripleAnalysis t(nt.code, nt.alpha, nt.x, /*allow_unverified=*/true);
    const elusive::ElusiveReport& r = t.report();
    ck.expect(r.is_elusive, nt.name + " verifies as elusive");
    ck.expect(r.associate_count_matches, nt.name + " has m(q-1)/2 associates");
    const elusive::PartitionCheck pc = elusive::neighbour_partition_check(t);
    ck.expect(pc.alpha_side_ok, nt.name + " partition of Gamma_1(alpha)");
    ck.expect(pc.dual_side_ok, nt.name + " dual partitions of Gamma_1(pi)");
    Json one;
    one["triple"] = nt.name;
    one["elusive"] = r.is_elusive;
    one["associates"] = r.associate_count;
    one["partition_ok"] = pc.alpha_side_ok && pc.dual_side_ok;
    rep.push_back(one);
  }
  return {2, "elusive permutation-code triples", ck.pass, ck.detail, 0.0, Json{{"triples", rep}}};
}

CriterionResult criterion3(const std::vector<NamedTriple>& triples) {
  Checker ck;
  Json rep = Json::array();
  for (const NamedTriple& nt : triples) {
    const TripleAnalysis t(nt.code, nt.alpha, nt.x, /*allow_unverified=*/true);
    const int q = nt.code.q(), m = nt.code.m();
    const elusive::Distance3Census census = elusive::distance3_census(t);
    ck.expect(census.d3_counts_equal_2q_minus_4,
              nt.name + " per-associate distance-3 count = 2q-4");
    ck.expect(census.d3_pair_total > 0, nt.name + " has a distance-3 pair");
    ck.expect(census.mc3_pair_total == census.d3_pair_total,
              nt.name + " every distance-3 pair has MC = 3");
    ck.expect(census.all_bounds_ok, nt.name + " MC bounds");
    ck.expect(census.mc3_shapes_ok, nt.name + " MC=3 witness shapes");
    const elusive::TheoremCheck th = elusive::theorem_maximum_check(t);
    ck.expect(th.hypothesis_holds, nt.name + " theorem hypothesis");
    ck.expect(th.q_divides_m, nt.name + " q | m");
    ck.expect(th.graph_is_disjoint_kq, nt.name + " Pi = (m/q) K_q");
    const elusive::GraphDiagnostics gd =
        elusive::graph_diagnostics(elusive::associate_graph(t));
    ck.expect(static_cast<int>(gd.component_sizes.size()) == m / q,
              nt.name + " component count m/q");
    Json one;
    one["triple"] = nt.name;
    one["d3_pairs"] = census.d3_pair_total;
    one["mc3_pairs"] = census.mc3_pair_total;
    one["components"] = gd.component_sizes;
    rep.push_back(one);
  }
  return {3, "MC = 3 censuses and the divisibility theorem", ck.pass, ck.detail, 0.0,
          Json{{"triples", rep}}};
}

// ---- criterion 4: the binary Reed-Muller core ----

CriterionResult criterion4() {
  Checker ck;
  Json rep;
  const Selection sel = parse_selector("rm:2,3");
  const families::RMPair& rm = *sel.rm;
  const Code& c = rm.sub;
  ck.expect(c.size() == 16, "|C| = 16");
  const CodeStats stats = code_stats(c);
  ck.expect(stats.delta == 4, "delta = 4");
  ck.expect(stats.rho == 2, "rho = 2");
  const std::vector<Vertex> c1 = neighbour_set(c);
  ck.expect(c1.size() == 128, "|C_1| = 128 = (q-1) q^(q^d - 1)");
  ck.expect(neighbour_set(rm.top) == c1, "C_1 equals the top-code neighbour set");

  const families::RMAutGens gens = families::aut_gens_rm(rm);
  const transitivity::TransitivityReport tr =
      transitivity::is_completely_transitive(c, gens.x_gens);
  ck.expect(tr.completely_transitive, "completely transitive under X gens");
  Json cells = Json::array();
  for (const auto& cell : tr.cells) cells.push_back(cell.size);
  rep["cells"] = cells;

  const std::vector<Automorphism> candidates =
      elusive::candidate_products(gens.x1_gens, c.m(), c.q(), 2);
  const std::optional<Automorphism> witness = elusive::find_witness(c, candidates);
  ck.expect(witness.has_value(), "witness found among X1 products");
  if (witness) {
    Vertex beta(c.m());
    for (int i = 0; i < c.m(); ++i) beta[i] = witness->diag[i][0];
    ck.expect(*witness == translation(beta, rm.field), "witness is a translation");
    rep["witness"] = aut_script(*witness);
  }

  // The MC = 1 configuration: x = t_beta followed by the entry transposition
  // swapping the zero label and the all-ones label.
  const int m = c.m();
  Vertex beta(m, 0);
  beta[1] = 1;
  beta[7] = 1;
  std::vector<int> swap07 = perm_identity<int>(m);
  std::swap(swap07[0], swap07[7]);
  const Automorphism x = compose(translation(beta, rm.field), entry_perm(swap07, c.q()));
  const TripleAnalysis t(c, Vertex(m, 0), x, /*allow_unverified=*/true);
  ck.expect(t.report().is_elusive, "the MC=1 triple verifies as elusive");
  Vertex pi(m, 0);
  pi[0] = 1;
  pi[1] = 1;
  Vertex pi2(m, 0);
  pi2[2] = 1;
  pi2[4] = 1;
  ck.expect(elco::apply(x, Vertex(m, 0)) == pi, "zero maps onto pi");
  const std::vector<Vertex>& assoc = t.associates();
  ck.expect(std::binary_search(assoc.begin(), assoc.end(), pi), "pi is an associate");
  ck.expect(std::binary_search(assoc.begin(), assoc.end(), pi2), "pi2 is an associate");
  ck.expect(t.report().associate_count_matches, "m(q-1)/2 associates");
  const elusive::MCReport mc = elusive::mc_count(c, pi, pi2);
  ck.expect(mc.dist == 4, "d(pi,pi2) = 4");
  ck.expect(mc.mc == 1, "MC(pi,pi2) = 1");
  rep["mc_pi_pi2"] = mc.mc;
  rep["associates"] = t.report().associate_count;
  return {4, "binary Reed-Muller code core", ck.pass, ck.detail, 0.0, rep};
}

// ---- criterion 5: Reed-Muller censuses over q mod 3 ----

CriterionResult criterion5() {
  Checker ck;
  Json rep = Json::array();
  struct Instance {
    int q, d, max_mc3;
    bool exact_zero;
  };
  for (const Instance inst : {Instance{3, 2, 2, false}, Instance{7, 1, 4, false},
                              Instance{5, 1, 0, true}}) {
    const NamedTriple nt = rm_translation_triple(inst.q, inst.d);
    const TripleAnalysis t(nt.code, nt.alpha, nt.x, /*allow_unverified=*/true);
    ck.expect(t.report().is_elusive, nt.name + " verifies as elusive");
    ck.expect(t.report().associate_count_matches, nt.name + " m(q-1)/2 associates");
    const elusive::Distance3Census census = elusive::distance3_census(t);
    ck.expect(census.d3_counts_equal_2q_minus_4, nt.name + " distance-3 counts 2q-4");
    ck.expect(census.all_bounds_ok, nt.name + " MC bounds");
    int worst = 0;
    for (int cnt : census.per_associate_mc3_counts) worst = std::max(worst, cnt);
    if (inst.exact_zero)
      ck.expect(worst == 0, nt.name + " no MC=3 partners (q = 2 mod 3)");
    else
      ck.expect(worst <= inst.max_mc3,
                nt.name + " per-associate MC=3 partners <= " + std::to_string(inst.max_mc3));
    if (inst.q >= 5) {
      bool has_non3 = false;
      for (const elusive::MCReport& r : census.pairs)
        if (r.dist == 3 && r.mc != 3) has_non3 = true;
      ck.expect(has_non3, nt.name + " exhibits a distance-3 pair with MC != 3");
      const elusive::TheoremCheck th = elusive::theorem_maximum_check(t);
      ck.expect(!th.hypothesis_holds, nt.name + " theorem hypothesis fails");
    }
    ck.expect(nt.code.m() % nt.code.q() == 0, nt.name + " q | m");
    Json one;
    one["triple"] = nt.name;
    one["per_associate_mc3_counts"] = census.per_associate_mc3_counts;
    one["d3_pairs"] = census.d3_pair_total;
    one["mc3_pairs"] = census.mc3_pair_total;
    rep.push_back(one);
  }
  return {5, "Reed-Muller MC=3 censuses (q mod 3)", ck.pass, ck.detail, 0.0,
          Json{{"instances", rep}}};
}

// ---- criterion 6: closed forms against brute force ----

CriterionResult criterion6() {
  Checker ck;
  std::mt19937 gen(0x5eed);
  const int kPairs = 500;
  int checked3 = 0, checked4 = 0;
  for (int it = 0; it < kPairs; ++it) {
    const int q = 3 + static_cast<int>(gen() % 3);
    const int m = 4 + static_cast<int>(gen() % 5);
    const int d = 3 + static_cast<int>(gen() % 2);
    Vertex a(m);
    for (int i = 0; i < m; ++i) a[i] = static_cast<Sym>(gen() % q);
    // d distinct positions, each moved to a different symbol
    std::vector<int> pos(m);
    for (int i = 0; i < m; ++i) pos[i] = i;
    std::shuffle(pos.begin(), pos.end(), gen);
    Vertex b = a;
    for (int i = 0; i < d; ++i) {
      const int shift = 1 + static_cast<int>(gen() % (q - 1));
      b[pos[i]] = static_cast<Sym>((a[pos[i]] + shift) % q);
    }
    const Sphere2Intersection closed = sphere2_intersection(a, b, q);
    ck.expect(closed.closed_form, "closed form applies at distance 3/4");
    std::vector<Vertex> brute;
    for (const Vertex& v : sphere(a, 2, q))
      if (distance(v, b) == 2) brute.push_back(v);
    ck.expect(closed.vertices == brute, "closed form equals brute force");
    const size_t expected = d == 4 ? 6 : static_cast<size_t>(6 * (q - 2));
    ck.expect(closed.vertices.size() == expected, "intersection size formula");
    (d == 3 ? checked3 : checked4) += 1;
    if (!ck.pass) break;
  }
  Json rep;
  rep["pairs_checked"] = kPairs;
  rep["distance3_pairs"] = checked3;
  rep["distance4_pairs"] = checked4;
  return {6, "sphere-intersection closed forms vs brute force", ck.pass, ck.detail, 0.0, rep};
}

// ---- criterion 7: the C_2 -> C_3 depth mechanism ----

CriterionResult criterion7(bool include_s5) {
  Checker ck;
  Json rep;
  {
    const elusive::C2DepthReport r = elusive::c2_depth_check(
        families::perm_code(3, 2, families::PermSel::symmetric));
    ck.expect(r.blocked.empty(), "C(S_3,2): every C_2 vertex reaches C_3");
    rep["s3l2_blocked"] = r.blocked.size();
  }
  if (include_s5) {
    const elusive::C2DepthReport r = elusive::c2_depth_check(
        families::perm_code(5, 1, families::PermSel::symmetric));
    ck.expect(r.blocked.empty(), "C(S_5): every C_2 vertex reaches C_3");
    rep["s5_blocked"] = r.blocked.size();
  }
  {
    const elusive::C2DepthReport r = elusive::c2_depth_check(
        families::perm_code(4, 1, families::PermSel::symmetric));
    // The exceptional vertices: symbol multiset {a,a,b,b} with a != b.
    auto is_double_pair = [](const Vertex& v) {
      std::map<Sym, int> hist;
      for (Sym s : v) ++hist[s];
      if (hist.size() != 2) return false;
      for (const auto& [s, n] : hist)
        if (n != 2) return false;
      return true;
    };
    std::vector<Vertex> expected;
    for (std::uint64_t key = 0; key < 256; ++key) {
      Vertex v = unpack_key(key, 4, 4);
      if (is_double_pair(v)) expected.push_back(std::move(v));
    }
    ck.expect(expected.size() == 36, "36 double-pair vertices in H(4,4)");
    ck.expect(r.blocked == expected, "C(S_4) flags exactly the double-pair shape");
    rep["s4_blocked"] = r.blocked.size();
  }
  return {7, "non-elusiveness depth mechanism and its q=4 exception", ck.pass, ck.detail, 0.0,
          rep};
}

// ---- criterion 8: image counts and non-disjoint images ----

CriterionResult criterion8() {
  Checker ck;
  Json rep;
  const Selection sel = parse_selector("rm:2,3");
  const Code& c = sel.code;
  Vertex beta(c.m(), 0);
  beta[0] = 1;
  beta[1] = 1;  // in the top code, not in the sub code
  const Automorphism tbeta = translation(beta, *sel.field);
  {
    const std::vector<Automorphism> gens{tbeta};
    const transitivity::ImagesReport r = transitivity::code_images_under(c, gens);
    ck.expect(r.images.size() == 2, "a single non-code translation yields p = 2 images");
    rep["translate_images"] = r.images.size();
  }
  {
    std::vector<int> swap_last = perm_identity<int>(c.m());
    std::swap(swap_last[0], swap_last[c.m() - 1]);
    const std::vector<Automorphism> gens{tbeta, entry_perm(swap_last, c.q())};
    const transitivity::ImagesReport r = transitivity::code_images_under(c, gens);
    ck.expect(r.images.size() > 2, "the entry transposition adds images");
    size_t self = r.images.size();
    for (size_t i = 0; i < r.images.size(); ++i)
      if (r.images[i].words() == c.words()) self = i;
    ck.expect(self < r.images.size(), "the original code appears in the closure");
    bool overlapping = false;
    const Vertex zero(c.m(), 0);
    for (size_t j = 0; j < r.images.size(); ++j) {
      if (j == self) continue;
      if (r.pairwise_intersections[self][j] > 0 && r.images[j].contains(zero))
        overlapping = true;
    }
    ck.expect(overlapping, "a distinct image shares the zero vertex with the code");
    rep["closure_images"] = r.images.size();
    rep["pairwise_intersections"] = r.pairwise_intersections;
  }
  return {8, "image census of the neighbour-set stabiliser", ck.pass, ck.detail, 0.0, rep};
}

// ---- criterion 9: exhaustive witness search on H(3,3) ----

CriterionResult criterion9() {
  Checker ck;
  Json rep;
  const Code a3 = families::perm_code(3, 1, families::PermSel::alternating);
  const elusive::WitnessSearch ws = elusive::exhaustive_witness_search(a3);
  ck.expect(ws.x1_order == ws.x_order + ws.witnesses.size(), "X_1 splits into X and witnesses");
  ck.expect(ws.x_order > 0 && ws.x1_order % ws.x_order == 0, "X divides X_1");
  ck.expect(ws.x1_order / ws.x_order == 3, "|X_1|/|X| = 3 image classes");

  std::set<std::vector<Vertex>> classes{a3.words()};
  for (const Automorphism& x : ws.witnesses) classes.insert(image(a3.words(), x));
  ck.expect(classes.size() == 3, "witness images fall into 3 classes");
  const Code odd = families::perm_code(3, 1, families::PermSel::odd_coset);
  const Code rep3 = families::repetition_code(3, 3);
  ck.expect(classes.count(odd.words()) == 1 && classes.count(rep3.words()) == 1,
            "the classes are the odd coset and the repetition code");
  rep["x1_order"] = ws.x1_order;
  rep["x_order"] = ws.x_order;
  rep["witnesses"] = ws.witnesses.size();
  rep["image_classes"] = classes.size();
  return {9, "exhaustive witness search over Aut(H(3,3))", ck.pass, ck.detail, 0.0, rep};
}

std::vector<CriterionResult> run_core(Profile profile) {
  const bool full = profile == Profile::full;
  std::vector<NamedTriple> triples;
  triples.push_back(a3_triple());
  if (full) {
    triples.push_back(odd_diag_triple(4, 1));
    triples.push_back(odd_diag_triple(5, 1));
  }
  triples.push_back(odd_diag_triple(3, 2));

  std::vector<CriterionResult> out;
  auto timed = [&](CriterionResult r) {
    out.push_back(std::move(r));
  };
  auto stamp = [&](auto&& fn) {
    const auto start = std::chrono::steady_clock::now();
    CriterionResult r = fn();
    r.seconds = seconds_since(start);
    timed(std::move(r));
  };

  stamp([&] { return criterion1(); });
  stamp([&] { return criterion2(triples); });
  stamp([&] { return criterion3(triples); });
  stamp([&] { return criterion4(); });
  if (full) stamp([&] { return criterion5(); });
  stamp([&] { return criterion6(); });
  stamp([&] { return criterion7(full); });
  stamp([&] { return criterion8(); });
  stamp([&] { return criterion9(); });
  return out;
}

}  // namespace

report::Json core_json(const std::vector<CriterionResult>& criteria) {
  Json out = Json::array();
  for (const CriterionResult& c : criteria) {
    Json one;
    one["id"] = c.id;
    one["name"] = c.name;
    one["pass"] = c.pass;
    one["detail"] = c.detail;
    one["report"] = c.report;
    out.push_back(one);
  }
  return out;
}

Result run(Profile profile) {
  Result result;
  result.profile = profile;

  const int configured = kernels::worker_threads();
  const auto start = std::chrono::steady_clock::now();

  kernels::set_worker_threads(1);
  std::vector<CriterionResult> first = run_core(profile);
  const std::string dump_serial_a = core_json(first).dump(2);
  const std::string dump_serial_b = core_json(run_core(profile)).dump(2);

  const int parallel = std::max(4, kernels::hardware_threads());
  kernels::set_worker_threads(parallel);
  std::vector<CriterionResult> third = run_core(profile);
  const std::string dump_parallel = core_json(third).dump(2);
  kernels::set_worker_threads(configured);

  result.criteria = std::move(third);

  CriterionResult det;
  det.id = 10;
  det.name = "byte-identical reports across runs and thread counts";
  det.pass = dump_serial_a == dump_serial_b && dump_serial_a == dump_parallel;
  det.seconds = seconds_since(start);
  det.report["repeat_run_identical"] = dump_serial_a == dump_serial_b;
  det.report["thread_counts_identical"] = dump_serial_a == dump_parallel;
  det.report["parallel_threads"] = parallel;
  if (!det.pass) det.detail = "FAILED: report bytes differ between runs";
  result.criteria.push_back(std::move(det));

  result.all_pass = true;
  for (const CriterionResult& c : result.criteria) result.all_pass &= c.pass;
  return result;
}

report::Json to_json(const Result& r) {
  Json out;
  out["profile"] = r.profile == Profile::full ? "full" : "quick";
  out["criteria"] = core_json(r.criteria);
  out["all_pass"] = r.all_pass;
  return out;
}

}  // namespace elco::fullcheck
