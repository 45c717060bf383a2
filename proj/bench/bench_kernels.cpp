// Benchmark comparing the serial reference kernels against the OpenMP
// versions on realistic instances. Run with --big to include the H(7,7)
// distance partition.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>

#include "elco/elusive.hpp"
#include "elco/families.hpp"
#include "elco/kernels.hpp"
#include "elco/selectors.hpp"

using namespace elco;

namespace {

double now_seconds() {
  return std::chrono::duration<double>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

template <typename Fn>
double timed(Fn&& fn) {
  const double start = now_seconds();
  fn();
  return now_seconds() - start;
}

void row(const char* name, std::uint64_t size, double serial, double parallel, bool equal) {
  std::printf("%-28s %10llu %10.3fs %10.3fs %8.2fx  %s\n", name,
              static_cast<unsigned long long>(size), serial, parallel,
              parallel > 0 ? serial / parallel : 0.0, equal ? "results equal" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  bool big = false;
  int threads = kernels::hardware_threads();
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--big") == 0) big = true;
    if (std::strcmp(argv[i], "--threads") == 0 && i + 1 < argc) threads = std::atoi(argv[++i]);
  }
  std::printf("worker threads for the parallel runs: %d\n", threads);
  std::printf("%-28s %10s %11s %11s %9s\n", "kernel", "n", "serial", "parallel", "speedup");

  {
    const Code c = parse_selector(big ? "rm:7,1" : "rm:5,1").code;
    std::optional<int> a, b;
    const double ts = timed([&] { a = kernels::min_distance_serial(c.words()); });
    const double tp =
        timed([&] { b = kernels::min_distance_parallel(c.words(), threads); });
    row("min_distance (packed)", c.size(), ts, tp, a == b);
  }
  {
    const Code c = parse_selector("rm:3,2").code;  // m = 9: generic tuple path
    std::optional<int> a, b;
    const double ts = timed([&] { a = kernels::min_distance_serial(c.words()); });
    const double tp =
        timed([&] { b = kernels::min_distance_parallel(c.words(), threads); });
    row("min_distance (generic)", c.size(), ts, tp, a == b);
  }
  {
    const Code c = parse_selector(big ? "rm:7,1" : "rm:3,2").code;
    std::vector<std::uint8_t> a, b;
    const double ts = timed([&] { a = kernels::distance_levels_serial(c); });
    const double tp = timed([&] { b = kernels::distance_levels_parallel(c, threads); });
    row("distance_levels", space_size(c.m(), c.q()), ts, tp, a == b);
  }
  {
    const Selection sel = parse_selector(big ? "rm:7,1" : "rm:3,2");
    const std::vector<Vertex> c1 = neighbour_set(sel.code);
    Vertex beta(sel.code.m(), 0);
    beta[0] = 1;
    beta[1] = static_cast<Sym>(sel.field->neg(1));
    const Automorphism t = translation(beta, *sel.field);
    std::vector<Vertex> a, b;
    kernels::set_worker_threads(1);
    const double ts = timed([&] { a = image(std::span<const Vertex>(c1), t); });
    kernels::set_worker_threads(threads);
    const double tp = timed([&] { b = image(std::span<const Vertex>(c1), t); });
    row("image of C_1", c1.size(), ts, tp, a == b);
  }
  {
    const Selection sel = parse_selector(big ? "rm:7,1" : "rm:5,1");
    Vertex beta(sel.code.m(), 0);
    beta[0] = 1;
    beta[1] = static_cast<Sym>(sel.field->neg(1));
    const Automorphism x = translation(beta, *sel.field);
    kernels::set_worker_threads(1);
    elusive::Distance3Census a, b;
    double ts = 0, tp = 0;
    {
      const elusive::TripleAnalysis t(sel.code, Vertex(sel.code.m(), 0), x);
      ts = timed([&] { a = elusive::distance3_census(t); });
    }
    kernels::set_worker_threads(threads);
    {
      const elusive::TripleAnalysis t(sel.code, Vertex(sel.code.m(), 0), x);
      tp = timed([&] { b = elusive::distance3_census(t); });
    }
    row("distance3_census", a.pairs.size(), ts, tp,
        a.per_associate_mc3_counts == b.per_associate_mc3_counts &&
            a.d3_pair_total == b.d3_pair_total);
  }
  return 0;
}
