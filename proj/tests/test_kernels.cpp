#include <doctest.h>

#include <random>

#include "elco/autgrp.hpp"
#include "elco/elusive.hpp"
#include "elco/families.hpp"
#include "elco/kernels.hpp"
#include "oracles.hpp"

using namespace elco;

namespace {

struct ThreadGuard {
  int saved = kernels::worker_threads();
  ~ThreadGuard() { kernels::set_worker_threads(saved); }
};

}  // namespace

TEST_CASE("min distance: serial, parallel and oracle agree") {
  std::mt19937 gen(41);
  for (int it = 0; it < 25; ++it) {
    const int m = 2 + static_cast<int>(gen() % 11);  // crosses the packed/uint64 boundary
    const int q = 2 + static_cast<int>(gen() % 5);
    std::vector<Vertex> words;
    const int n = 2 + static_cast<int>(gen() % 40);
    for (int i = 0; i < n; ++i) words.push_back(oracle::random_vertex(gen, m, q));
    Code c(m, q, words);
    const int expected = oracle::min_distance(c.words());
    CHECK(kernels::min_distance_serial(c.words()) == expected);
    CHECK(kernels::min_distance_parallel(c.words(), 4) == expected);
  }
}

TEST_CASE("min distance on the code families") {
  const Code rm32 = families::rm_codes(gf::field_make(3, 1), 2).sub;  // m = 9, generic path
  CHECK(kernels::min_distance_serial(rm32.words()) == 3);
  CHECK(kernels::min_distance_parallel(rm32.words(), 4) == 3);
  const Code a5 = families::perm_code(5, 1, families::PermSel::alternating);  // packed path
  CHECK(kernels::min_distance_serial(a5.words()) == 3);
  CHECK(kernels::min_distance_parallel(a5.words(), 4) == 3);
}

TEST_CASE("distance levels: serial, parallel and oracle agree") {
  for (const Code& c : {families::repetition_code(3, 3),
                        families::perm_code(3, 2, families::PermSel::symmetric),
                        families::rm_codes(gf::field_make(2, 1), 3).sub}) {
    const auto serial = kernels::distance_levels_serial(c);
    const auto parallel = kernels::distance_levels_parallel(c, 4);
    CHECK(serial == parallel);
    const auto cells = oracle::partition(c);
    for (std::uint64_t key = 0; key < serial.size(); ++key) {
      const Vertex v = unpack_key(key, c.m(), c.q());
      CHECK(serial[key] == oracle::dist_to_code(v, c));
    }
    CHECK(cells.size() == static_cast<size_t>(*std::max_element(serial.begin(), serial.end())) + 1);
  }
}

TEST_CASE("worker-thread setting does not change results") {
  ThreadGuard guard;
  const Code c = families::rm_codes(gf::field_make(3, 1), 2).sub;
  const Automorphism t = translation(Vertex{1, 2, 0, 0, 0, 0, 0, 0, 0}, gf::field_make(3, 1));

  kernels::set_worker_threads(1);
  const auto part1 = distance_partition(c);
  const auto img1 = image(std::span<const Vertex>(c.words()), t);

  kernels::set_worker_threads(4);
  const auto part4 = distance_partition(c);
  const auto img4 = image(std::span<const Vertex>(c.words()), t);

  CHECK(part1.cells == part4.cells);
  CHECK(img1 == img4);
}

TEST_CASE("census is identical across thread counts") {
  ThreadGuard guard;
  const Code a4 = families::perm_code(4, 1, families::PermSel::alternating);
  Vertex alpha{0, 1, 2, 3};
  const Automorphism x = families::one_odd_diag(4, 1);

  kernels::set_worker_threads(1);
  const elusive::TripleAnalysis t1(a4, alpha, x);
  const auto c1 = elusive::distance3_census(t1);
  kernels::set_worker_threads(4);
  const elusive::TripleAnalysis t4(a4, alpha, x);
  const auto c4 = elusive::distance3_census(t4);

  REQUIRE(c1.pairs.size() == c4.pairs.size());
  for (size_t i = 0; i < c1.pairs.size(); ++i) {
    CHECK(c1.pairs[i].pi == c4.pairs[i].pi);
    CHECK(c1.pairs[i].mc == c4.pairs[i].mc);
    CHECK(c1.pairs[i].witnesses == c4.pairs[i].witnesses);
  }
  CHECK(c1.per_associate_mc3_counts == c4.per_associate_mc3_counts);
}

TEST_CASE("parallel_for writes each index once") {
  ThreadGuard guard;
  kernels::set_worker_threads(4);
  std::vector<int> out(1000, 0);
  kernels::parallel_for(out.size(), [&](size_t i) { out[i] = static_cast<int>(i) * 3; });
  for (size_t i = 0; i < out.size(); ++i) CHECK(out[i] == static_cast<int>(i) * 3);
}
