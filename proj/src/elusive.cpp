#include "elco/elusive.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "elco/kernels.hpp"

namespace elco::elusive {

namespace {

std::vector<Vertex> gamma2_cap_set(const Vertex& alpha, const std::vector<Vertex>& sorted_set,
                                   int q) {
  std::vector<Vertex> out;
  // Scan whichever side is smaller: the sphere or the set.
  const std::uint64_t s2 = sphere_size(static_cast<int>(alpha.size()), q, 2);
  if (s2 <= sorted_set.size()) {
    for (Vertex& v : sphere(alpha, 2, q))
      if (std::binary_search(sorted_set.begin(), sorted_set.end(), v))
        out.push_back(std::move(v));
  } else {
    for (const Vertex& v : sorted_set)
      if (distance(alpha, v) == 2) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

ElusiveReport verify_triple(const Code& code, const Vertex& alpha, const Automorphism& x) {
  TripleAnalysis t(code, alpha, x, /*allow_unverified=*/true);
  return t.report();
}

TripleAnalysis::TripleAnalysis(const Code& code, Vertex alpha, Automorphism x,
                               bool allow_unverified)
    : code_(code), alpha_(std::move(alpha)), x_(std::move(x)) {
  if (static_cast<int>(alpha_.size()) != code_.m())
    raise(Errc::ambient_mismatch, "alpha does not live in the code's Hamming graph");
  if (x_.m() != code_.m() || x_.q() != code_.q())
    raise(Errc::ambient_mismatch, "automorphism ambient differs from the code's");
  check_valid(x_);

  c1_ = neighbour_set(code_);
  cx_ = image_code(code_, x_);

  report_.alpha_in_code = code_.contains(alpha_);
  report_.neighbours_fixed = stabilises(std::span<const Vertex>(c1_), x_);
  report_.alpha_escapes = !code_.contains(elco::apply(x_, alpha_));
  report_.is_elusive =
      report_.alpha_in_code && report_.neighbours_fixed && report_.alpha_escapes;

  report_.delta = min_distance(code_);
  const int m = code_.m(), q = code_.q();
  if (report_.delta) {
    report_.delta_le_4 = *report_.delta <= 4;
    report_.delta4_only_binary = *report_.delta != 4 || q == 2;
  }
  report_.m_qm1_even = (static_cast<std::uint64_t>(m) * (q - 1)) % 2 == 0;

  associates_ = gamma2_cap_set(alpha_, cx_.words(), q);
  report_.associate_count = associates_.size();
  report_.expected_associates = static_cast<std::uint64_t>(m) * (q - 1) / 2;
  report_.associate_count_matches = report_.associate_count == report_.expected_associates;

  report_.context_verified = report_.is_elusive;
  if (!report_.is_elusive && !allow_unverified)
    raise(Errc::not_verified_triple, "triple failed elusive verification");
}

std::vector<Vertex> associates(const Code& code, const Vertex& alpha, const Automorphism& x,
                               bool allow_unverified) {
  return TripleAnalysis(code, alpha, x, allow_unverified).associates();
}

namespace {

// Checks that {Gamma_1(center) n Gamma_1(other) : other in others} is a
// partition of Gamma_1(center) into parts of size 2.
bool pairs_partition(const Vertex& center, const std::vector<Vertex>& others, int q,
                     std::optional<Vertex>& violator, std::string& detail) {
  std::map<Vertex, int> cover;
  for (const Vertex& n : sphere(center, 1, q)) cover[n] = 0;
  for (const Vertex& other : others) {
    int part = 0;
    for (auto& [n, count] : cover)
      if (distance(n, other) == 1) {
        ++count;
        ++part;
      }
    if (part != 2) {
      detail = "part induced by " + vertex_string(other) + " has size " + std::to_string(part);
      violator = other;
      return false;
    }
  }
  for (const auto& [n, count] : cover)
    if (count != 1) {
      violator = n;
      detail = "neighbour " + vertex_string(n) + " covered " + std::to_string(count) + " times";
      return false;
    }
  return true;
}

}  // namespace

PartitionCheck neighbour_partition_check(const TripleAnalysis& t) {
  PartitionCheck out;
  const int q = t.code().q();
  out.part_count = t.associates().size();

  out.alpha_side_ok =
      pairs_partition(t.alpha(), t.associates(), q, out.violating_neighbour, out.detail);

  out.dual_side_ok = true;
  for (const Vertex& pi : t.associates()) {
    const std::vector<Vertex> back = gamma2_cap_set(pi, t.code().words(), q);
    if (!pairs_partition(pi, back, q, out.violating_neighbour, out.detail)) {
      out.dual_side_ok = false;
      break;
    }
  }
  return out;
}

MCReport mc_count(const Code& code, const Vertex& pi, const Vertex& pi2) {
  if (pi == pi2) raise(Errc::ambient_mismatch, "mc_count needs distinct vertices");
  MCReport r;
  r.pi = pi;
  r.pi2 = pi2;
  r.dist = distance(pi, pi2);
  for (const Vertex& v : sphere2_intersection(pi, pi2, code.q()).vertices)
    if (code.contains(v)) r.witnesses.push_back(v);
  r.mc = static_cast<int>(r.witnesses.size());
  r.bounds_ok = r.mc >= 1 && r.mc <= 3 && (r.dist != 4 || r.mc <= 2);
  return r;
}

bool mc3_shape_matches(const MCReport& r, const Vertex& alpha) {
  if (r.mc != 3 || r.dist != 3) return false;
  if (!std::binary_search(r.witnesses.begin(), r.witnesses.end(), alpha)) return false;
  const std::vector<int> dp = diff(alpha, r.pi);
  const std::vector<int> dp2 = diff(alpha, r.pi2);
  if (dp.size() != 2 || dp2.size() != 2) return false;
  std::vector<int> common;
  std::set_intersection(dp.begin(), dp.end(), dp2.begin(), dp2.end(),
                        std::back_inserter(common));
  if (common.size() != 1) return false;
  const int j = common.front();
  const int i = dp[0] == j ? dp[1] : dp[0];
  const int k = dp2[0] == j ? dp2[1] : dp2[0];

  std::vector<Vertex> others;
  for (const Vertex& w : r.witnesses)
    if (w != alpha) others.push_back(w);

  auto is_first_form = [&](const Vertex& w) {
    // gamma(alpha|i,j,k|pi_i, pi2_j, a) with a != alpha_k, pi2_k
    if (w[i] != r.pi[i] || w[j] != r.pi2[j]) return false;
    if (w[k] == alpha[k] || w[k] == r.pi2[k]) return false;
    for (size_t u = 0; u < w.size(); ++u)
      if (static_cast<int>(u) != i && static_cast<int>(u) != j && static_cast<int>(u) != k &&
          w[u] != alpha[u])
        return false;
    return true;
  };
  auto is_second_form = [&](const Vertex& w) {
    // gamma(alpha|i,j,k|c, pi_j, pi2_k) with c != alpha_i, pi_i
    if (w[j] != r.pi[j] || w[k] != r.pi2[k]) return false;
    if (w[i] == alpha[i] || w[i] == r.pi[i]) return false;
    for (size_t u = 0; u < w.size(); ++u)
      if (static_cast<int>(u) != i && static_cast<int>(u) != j && static_cast<int>(u) != k &&
          w[u] != alpha[u])
        return false;
    return true;
  };
  return (is_first_form(others[0]) && is_second_form(others[1])) ||
         (is_first_form(others[1]) && is_second_form(others[0]));
}

AssociateGraph associate_graph(const TripleAnalysis& t) {
  AssociateGraph g;
  g.m = t.code().m();
  g.q = t.code().q();
  std::set<std::pair<int, int>> seen;
  for (const Vertex& pi : t.associates()) {
    const std::vector<int> d = diff(t.alpha(), pi);
    if (d.size() != 2) {
      g.anomalies.push_back("associate " + vertex_string(pi) + " is not at distance 2");
      continue;
    }
    if (!seen.insert({d[0], d[1]}).second)
      g.anomalies.push_back("parallel edge {" + std::to_string(d[0]) + "," +
                            std::to_string(d[1]) + "} from " + vertex_string(pi));
    g.edges.push_back({d[0], d[1], pi});
  }
  std::sort(g.edges.begin(), g.edges.end(), [](const AssociateEdge& a, const AssociateEdge& b) {
    return std::tie(a.i, a.j, a.associate) < std::tie(b.i, b.j, b.associate);
  });
  return g;
}

GraphDiagnostics graph_diagnostics(const AssociateGraph& g) {
  GraphDiagnostics d;
  std::vector<std::vector<int>> adj(g.m);
  for (const AssociateEdge& e : g.edges) {
    adj[e.i].push_back(e.j);
    adj[e.j].push_back(e.i);
  }
  d.is_regular = true;
  d.valency = g.m > 0 ? static_cast<int>(adj[0].size()) : 0;
  for (const auto& a : adj)
    if (static_cast<int>(a.size()) != d.valency) d.is_regular = false;

  std::vector<int> comp(g.m, -1);
  int ncomp = 0;
  for (int v = 0; v < g.m; ++v) {
    if (comp[v] >= 0) continue;
    std::vector<int> stack{v};
    comp[v] = ncomp;
    int size = 0;
    std::vector<int> members;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      ++size;
      members.push_back(u);
      for (int w : adj[u])
        if (comp[w] < 0) {
          comp[w] = ncomp;
          stack.push_back(w);
        }
    }
    d.component_sizes.push_back(size);
    ++ncomp;
  }

  d.is_disjoint_kq = true;
  for (int v = 0; v < g.m; ++v) {
    std::set<int> nbrs(adj[v].begin(), adj[v].end());
    if (static_cast<int>(nbrs.size()) != g.q - 1 || nbrs.count(v)) {
      d.is_disjoint_kq = false;
      break;
    }
    for (int w : nbrs)
      if (comp[w] != comp[v]) d.is_disjoint_kq = false;
  }
  if (d.is_disjoint_kq)
    for (int size : d.component_sizes)
      if (size != g.q) d.is_disjoint_kq = false;
  return d;
}

std::string to_dot(const AssociateGraph& g) {
  std::ostringstream out;
  out << "graph associates {\n";
  for (int v = 0; v < g.m; ++v) out << "  " << v << ";\n";
  for (const AssociateEdge& e : g.edges)
    out << "  " << e.i << " -- " << e.j << " [label=\"" << vertex_label(e.associate, g.q)
        << "\"];\n";
  out << "}\n";
  return out.str();
}

Distance3Census distance3_census(const TripleAnalysis& t) {
  const std::vector<Vertex>& assoc = t.associates();
  const int n = static_cast<int>(assoc.size());
  const int q = t.code().q();

  Distance3Census census;
  census.per_associate_d3_counts.assign(n, 0);
  census.per_associate_mc3_counts.assign(n, 0);

  std::vector<std::pair<int, int>> idx;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) idx.push_back({i, j});

  std::vector<MCReport> reports(idx.size());
  std::vector<char> keep(idx.size(), 0);
  kernels::parallel_for(idx.size(), [&](size_t p) {
    const auto [i, j] = idx[p];
    const int d = distance(assoc[i], assoc[j]);
    if (d != 3 && d != 4) return;
    reports[p] = mc_count(t.code(), assoc[i], assoc[j]);
    keep[p] = 1;
  });

  census.all_bounds_ok = true;
  census.mc3_shapes_ok = true;
  for (size_t p = 0; p < idx.size(); ++p) {
    if (!keep[p]) continue;
    const auto [i, j] = idx[p];
    MCReport& r = reports[p];
    census.all_bounds_ok = census.all_bounds_ok && r.bounds_ok;
    if (r.dist == 3) {
      ++census.d3_pair_total;
      ++census.per_associate_d3_counts[i];
      ++census.per_associate_d3_counts[j];
      if (r.mc == 3) {
        ++census.mc3_pair_total;
        ++census.per_associate_mc3_counts[i];
        ++census.per_associate_mc3_counts[j];
        census.mc3_shapes_ok =
            census.mc3_shapes_ok && mc3_shape_matches(r, t.alpha());
      }
    }
    census.pairs.push_back(std::move(r));
  }

  census.d3_counts_equal_2q_minus_4 = true;
  for (int c : census.per_associate_d3_counts)
    if (c != 2 * q - 4) census.d3_counts_equal_2q_minus_4 = false;
  return census;
}

TheoremCheck theorem_maximum_check(const TripleAnalysis& t) {
  const Distance3Census census = distance3_census(t);
  TheoremCheck check;
  check.has_distance3_pair = census.d3_pair_total > 0;
  check.hypothesis_holds = true;
  for (const MCReport& r : census.pairs) {
    if (r.dist != 3) continue;
    if (r.mc != 3) {
      check.hypothesis_holds = false;
      if (!check.counterexample) check.counterexample = {r.pi, r.pi2};
    }
  }
  check.q_divides_m = t.code().m() % t.code().q() == 0;
  check.graph_is_disjoint_kq = graph_diagnostics(associate_graph(t)).is_disjoint_kq;
  check.conclusion_ok =
      !check.hypothesis_holds || (check.q_divides_m && check.graph_is_disjoint_kq);
  return check;
}

namespace {

bool is_witness(const Code& code, const std::vector<Vertex>& c1, const Automorphism& x) {
  return stabilises(std::span<const Vertex>(c1), x) && !stabilises(code, x);
}

}  // namespace

std::optional<Automorphism> find_witness(
    const Code& code,
    const std::function<void(const std::function<bool(const Automorphism&)>&)>& stream) {
  const std::vector<Vertex> c1 = neighbour_set(code);
  std::optional<Automorphism> found;
  stream([&](const Automorphism& x) {
    if (is_witness(code, c1, x)) {
      found = x;
      return false;
    }
    return true;
  });
  return found;
}

std::optional<Automorphism> find_witness(const Code& code,
                                         std::span<const Automorphism> candidates) {
  const std::vector<Vertex> c1 = neighbour_set(code);
  for (const Automorphism& x : candidates)
    if (is_witness(code, c1, x)) return x;
  return std::nullopt;
}

WitnessSearch exhaustive_witness_search(const Code& code, std::uint64_t limit) {
  const std::vector<Vertex> c1 = neighbour_set(code);
  WitnessSearch out;
  enumerate_full_aut(code.m(), code.q(), [&](const Automorphism& x) {
    if (stabilises(std::span<const Vertex>(c1), x)) {
      ++out.x1_order;
      if (stabilises(code, x))
        ++out.x_order;
      else
        out.witnesses.push_back(x);
    }
    return true;
  }, limit);
  return out;
}

std::vector<Automorphism> candidate_products(std::span<const Automorphism> gens, int m, int q,
                                             int max_len) {
  std::vector<Automorphism> out{identity_automorphism(m, q)};
  size_t level_begin = 0;
  for (int len = 1; len <= max_len; ++len) {
    const size_t level_end = out.size();
    for (size_t i = level_begin; i < level_end; ++i)
      for (const Automorphism& g : gens) {
        Automorphism y = compose(out[i], g);
        if (std::find(out.begin(), out.end(), y) == out.end()) out.push_back(std::move(y));
      }
    level_begin = level_end;
  }
  return out;
}

C2DepthReport c2_depth_check(const Code& code, std::uint64_t bound) {
  const DistancePartition part = distance_partition(code, bound);
  C2DepthReport out;
  out.partition_computed = true;
  out.rho = part.rho();
  if (part.rho() < 2) return out;
  const std::vector<Vertex>& c2 = part.cells[2];
  const std::vector<Vertex>* c3 = part.rho() >= 3 ? &part.cells[3] : nullptr;
  out.c2_size = c2.size();

  std::vector<char> blocked(c2.size(), 0);
  kernels::parallel_for(c2.size(), [&](size_t i) {
    if (!c3) {
      blocked[i] = 1;
      return;
    }
    for (const Vertex& n : sphere(c2[i], 1, code.q()))
      if (std::binary_search(c3->begin(), c3->end(), n)) return;
    blocked[i] = 1;
  });
  for (size_t i = 0; i < c2.size(); ++i)
    if (blocked[i]) out.blocked.push_back(c2[i]);
  return out;
}

}  // namespace elco::elusive
