#include <doctest.h>

#include <set>

#include "elco/families.hpp"
#include "oracles.hpp"

using namespace elco;
using families::PermSel;

TEST_CASE("alpha_of_perm") {
  CHECK(families::alpha_of_perm({0, 1, 2}) == Vertex{0, 1, 2});
  CHECK(families::alpha_of_perm({1, 2, 0}) == Vertex{1, 2, 0});
  const Vertex w = families::alpha_of_perm({1, 0, 2});
  CHECK(families::perm_code(3, 1, PermSel::odd_coset).contains(w));
  CHECK_THROWS_AS(families::alpha_of_perm({0, 0, 1}), Error);
}

TEST_CASE("permutation codes") {
  const Code a3 = families::perm_code(3, 1, PermSel::alternating);
  CHECK(a3.words() == std::vector<Vertex>{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
  const Code odd3 = families::perm_code(3, 1, PermSel::odd_coset);
  CHECK(odd3.words() == std::vector<Vertex>{{0, 2, 1}, {1, 0, 2}, {2, 1, 0}});

  const Code a22 = families::perm_code(2, 2, PermSel::alternating);
  CHECK(a22.words() == std::vector<Vertex>{{0, 1, 0, 1}, {1, 0, 1, 0}});

  const Code s42 = families::perm_code(4, 2, PermSel::symmetric);
  const Code a42 = families::perm_code(4, 2, PermSel::alternating);
  const Code o42 = families::perm_code(4, 2, PermSel::odd_coset);
  CHECK(s42.size() == 576);
  CHECK(s42.size() == 2 * a42.size());
  std::vector<Vertex> merged = a42.words();
  merged.insert(merged.end(), o42.words().begin(), o42.words().end());
  std::sort(merged.begin(), merged.end());
  CHECK(merged == s42.words());

  // explicit subsets support ad-hoc selectors
  const Code just_id = families::perm_code(3, 1, {{0, 1, 2}});
  CHECK(just_id.size() == 1);

  CHECK_THROWS_AS(families::perm_code(8, 3, PermSel::symmetric), Error);
}

TEST_CASE("every permutation-code word concatenates one-line permutations") {
  const Code c = families::perm_code(3, 2, PermSel::alternating);
  CHECK(c.size() == 18);
  for (const Vertex& w : c.words()) {
    std::vector<Sym> b1(w.begin(), w.begin() + 3), b2(w.begin() + 3, w.end());
    CHECK(is_permutation(b1));
    CHECK(is_permutation(b2));
    CHECK(perm_parity(perm_compose(b1, b2)) == 1);
  }
}

TEST_CASE("repetition codes") {
  const Code r33 = families::repetition_code(3, 3);
  CHECK(r33.words() == std::vector<Vertex>{{0, 0, 0}, {1, 1, 1}, {2, 2, 2}});
  const Code r24 = families::repetition_code(2, 4);
  CHECK(r24.words() == std::vector<Vertex>{{0, 0, 0, 0}, {1, 1, 1, 1}});
  for (int q : {2, 3, 5})
    CHECK(families::repetition_code(q, 4).size() == static_cast<std::uint64_t>(q));
  CHECK(min_distance(r24) == 4);
}

TEST_CASE("Reed-Muller pair sizes and containment") {
  const families::RMPair rm23 = families::rm_codes(gf::field_make(2, 1), 3);
  CHECK(rm23.sub.size() == 16);
  CHECK(rm23.top.size() == 128);
  for (const Vertex& w : rm23.sub.words()) CHECK(rm23.top.contains(w));

  const families::RMPair rm32 = families::rm_codes(gf::field_make(3, 1), 2);
  CHECK(rm32.sub.size() == 729);   // q^(q^d - (d+1)) = 3^6
  CHECK(rm32.top.size() == 6561);  // 3^8

  // the top code of the pair: delta 2, rho 1
  const CodeStats top_stats = code_stats(rm23.top);
  CHECK(top_stats.delta == 2);
  CHECK(top_stats.rho == 1);

  // d = 1, q = 3 degenerates to the repetition code
  const families::RMPair rm31 = families::rm_codes(gf::field_make(3, 1), 1);
  CHECK(rm31.sub.words() == families::repetition_code(3, 3).words());

  CHECK_THROWS_AS(families::rm_codes(gf::field_make(2, 1), 1), Error);
}

TEST_CASE("Reed-Muller words satisfy the defining sums") {
  const gf::FieldSpec f = gf::field_make(2, 2);  // GF(4), d = 1
  const families::RMPair rm = families::rm_codes(f, 1);
  CHECK(rm.sub.size() == 16);  // 4^(4-2)
  for (const Vertex& w : rm.sub.words()) {
    int sum = 0;
    std::vector<std::uint8_t> vec_sum(1, 0);
    for (int u = 0; u < rm.sub.m(); ++u) {
      sum = f.add(sum, w[u]);
      const auto v = gf::index_vector(u, 1, 4);
      vec_sum[0] = static_cast<std::uint8_t>(f.add(vec_sum[0], f.mul(w[u], v[0])));
    }
    CHECK(sum == 0);
    CHECK(vec_sum[0] == 0);
  }
}

TEST_CASE("Reed-Muller minimum distances") {
  CHECK(min_distance(families::rm_codes(gf::field_make(2, 1), 3).sub) == 4);
  CHECK(min_distance(families::rm_codes(gf::field_make(3, 1), 2).sub) == 3);
  CHECK(min_distance(families::rm_codes(gf::field_make(5, 1), 1).sub) == 3);
}

TEST_CASE("diagonal and mixed actions") {
  const int q = 4;
  const auto perms = all_perms(q);
  for (const auto& g : perms) {
    const Vertex ag = families::alpha_of_perm(g);
    for (const auto& y : perms) {
      // alpha(g)^(x_y) = alpha(gy)
      CHECK(elco::apply(families::diag_elem(y), ag) ==
            families::alpha_of_perm(perm_compose(g, y)));
      // alpha(g)^(sigma_y) = alpha(y^-1 g)
      std::vector<int> sig(q);
      for (int i = 0; i < q; ++i) sig[i] = y[i];
      CHECK(elco::apply(entry_perm(sig, q), ag) ==
            families::alpha_of_perm(perm_compose(perm_inverse(y), g)));
      // and the mixed element conjugates
      CHECK(elco::apply(families::a_elem(y), ag) ==
            families::alpha_of_perm(perm_compose(perm_inverse(y), perm_compose(g, y))));
    }
  }
  CHECK(is_identity(families::diag_elem({0, 1, 2})));
}

TEST_CASE("permutation-code generators stabilise their codes") {
  for (auto [q, l] : {std::pair{3, 1}, {3, 2}, {4, 1}}) {
    const Code s = families::perm_code(q, l, PermSel::symmetric);
    for (const Automorphism& g : families::aut_gens_perm_code(q, l, PermSel::symmetric))
      CHECK(stabilises(s, g));
    const Code a = families::perm_code(q, l, PermSel::alternating);
    for (const Automorphism& g : families::aut_gens_perm_code(q, l, PermSel::alternating))
      CHECK(stabilises(a, g));
  }
}

TEST_CASE("compensating odd diagonals stabilise the alternating code") {
  const Automorphism paired = compose(families::one_odd_diag(3, 2, 0),
                                      families::one_odd_diag(3, 2, 1));
  const Code a32 = families::perm_code(3, 2, PermSel::alternating);
  CHECK(stabilises(a32, paired));
  CHECK(!stabilises(a32, families::one_odd_diag(3, 2, 0)));
}

TEST_CASE("generated order of the l=1 symmetric-case group") {
  const std::vector<Automorphism> gens =
      families::aut_gens_perm_code(3, 1, PermSel::symmetric);
  const std::vector<Automorphism> closure = group_closure(gens, 3, 3);

  // Reference: brute-force setwise stabiliser of C(S_3) in Aut(H(3,3)).
  const Code s3 = families::perm_code(3, 1, PermSel::symmetric);
  std::uint64_t stab = 0;
  enumerate_full_aut(3, 3, [&](const Automorphism& x) {
    if (stabilises(s3, x)) ++stab;
    return true;
  });
  CHECK(stab == 36);
  CHECK(closure.size() == stab);
}

TEST_CASE("distance to a concatenated code adds blockwise") {
  const Code s3 = families::perm_code(3, 1, PermSel::symmetric);
  const Code s32 = families::perm_code(3, 2, PermSel::symmetric);
  for (const Vertex& beta : oracle::all_vertices(6, 3)) {
    const Vertex b1(beta.begin(), beta.begin() + 3);
    const Vertex b2(beta.begin() + 3, beta.end());
    CHECK(oracle::dist_to_code(beta, s32) ==
          oracle::dist_to_code(b1, s3) + oracle::dist_to_code(b2, s3));
  }
}

TEST_CASE("alternating and symmetric codes share neighbour sets") {
  for (auto [q, l] : {std::pair{3, 1}, {3, 2}, {4, 1}}) {
    const Code a = families::perm_code(q, l, PermSel::alternating);
    const Code s = families::perm_code(q, l, PermSel::symmetric);
    CHECK(neighbour_set(a) == neighbour_set(s));
  }
}

TEST_CASE("Reed-Muller pair shares a neighbour set") {
  for (auto [p, k, d] : {std::tuple{2, 1, 3}, {3, 1, 2}}) {
    const families::RMPair rm = families::rm_codes(gf::field_make(p, k), d);
    CHECK(neighbour_set(rm.sub) == neighbour_set(rm.top));
  }
}

TEST_CASE("H(3,3) splits into the three codes and their common neighbour set") {
  const Code a3 = families::perm_code(3, 1, PermSel::alternating);
  const Code odd = families::perm_code(3, 1, PermSel::odd_coset);
  const Code rep = families::repetition_code(3, 3);
  std::vector<Vertex> all = a3.words();
  for (const Code* c : {&odd, &rep})
    all.insert(all.end(), c->words().begin(), c->words().end());
  const std::vector<Vertex> n = neighbour_set(a3);
  all.insert(all.end(), n.begin(), n.end());
  std::sort(all.begin(), all.end());
  CHECK(all.size() == 27);
  CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
  CHECK(all == oracle::all_vertices(3, 3));
}

TEST_CASE("alternating codes have minimum distance 3") {
  for (int q : {3, 4, 5})
    CHECK(min_distance(families::perm_code(q, 1, PermSel::alternating)) == 3);
}

TEST_CASE("Reed-Muller automorphism generators") {
  const families::RMPair rm = families::rm_codes(gf::field_make(2, 1), 3);
  const families::RMAutGens gens = families::aut_gens_rm(rm);
  for (const Automorphism& g : gens.x_gens) CHECK(stabilises(rm.sub, g));
  for (const Automorphism& g : gens.x1_gens) CHECK(stabilises(rm.top, g));

  // The entry transposition swapping the zero label with the all-ones label
  // fixes the top code but moves the sub code.
  std::vector<int> t = perm_identity<int>(8);
  std::swap(t[0], t[7]);
  const Automorphism swap07 = entry_perm(t, 2);
  CHECK(stabilises(rm.top, swap07));
  CHECK(!stabilises(rm.sub, swap07));

  // Translation by a weight-2 vector: fixes the top code, moves the sub code.
  Vertex beta(8, 0);
  beta[0] = beta[1] = 1;
  const Automorphism tb = translation(beta, rm.field);
  CHECK(stabilises(rm.top, tb));
  CHECK(!stabilises(rm.sub, tb));
}
