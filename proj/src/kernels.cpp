#include "elco/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <bit>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace elco::kernels {

namespace {

std::atomic<int> g_threads{0};  // 0 = not set yet, use hardware default

// One 64-bit lane per word, one byte per symbol; works for m <= 8.
std::vector<std::uint64_t> pack_bytes(std::span<const Vertex> words) {
  std::vector<std::uint64_t> out(words.size());
  for (size_t i = 0; i < words.size(); ++i) {
    std::uint64_t w = 0;
    for (Sym s : words[i]) w = (w << 8) | s;
    out[i] = w;
  }
  return out;
}

inline int byte_diff_count(std::uint64_t x, std::uint64_t y) {
  const std::uint64_t z = x ^ y;
  const std::uint64_t hi =
      (((z & 0x7f7f7f7f7f7f7f7fULL) + 0x7f7f7f7f7f7f7f7fULL) | z) & 0x8080808080808080ULL;
  return std::popcount(hi);
}

inline int tuple_distance_capped(const Vertex& a, const Vertex& b, int cap) {
  int d = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    d += a[i] != b[i];
    if (d >= cap) return d;
  }
  return d;
}

int min_distance_packed(std::span<const std::uint64_t> keys, int m, int threads) {
  int best = m + 1;
  const std::int64_t n = static_cast<std::int64_t>(keys.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64) reduction(min : best) \
    num_threads(threads) if (threads > 1)
#endif
  for (std::int64_t i = 0; i < n; ++i) {
    int local = best;
    for (std::int64_t j = i + 1; j < n; ++j)
      local = std::min(local, byte_diff_count(keys[i], keys[j]));
    best = std::min(best, local);
  }
  return best;
}

int min_distance_tuples(std::span<const Vertex> words, int m, int threads) {
  int best = m + 1;
  const std::int64_t n = static_cast<std::int64_t>(words.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16) reduction(min : best) \
    num_threads(threads) if (threads > 1)
#endif
  for (std::int64_t i = 0; i < n; ++i) {
    int local = best;
    for (std::int64_t j = i + 1; j < n; ++j)
      local = std::min(local, tuple_distance_capped(words[i], words[j], local));
    best = std::min(best, local);
  }
  return best;
}

std::optional<int> min_distance_impl(std::span<const Vertex> words, int threads) {
  if (words.size() < 2) return std::nullopt;
  const int m = static_cast<int>(words.front().size());
  if (m <= 8) {
    const std::vector<std::uint64_t> keys = pack_bytes(words);
    return min_distance_packed(keys, m, threads);
  }
  return min_distance_tuples(words, m, threads);
}

// Neighbour keys of `key` in packed space. place[i] = q^(m-1-i).
template <typename Fn>
inline void for_each_neighbour_key(std::uint64_t key, int m, int q,
                                   const std::vector<std::uint64_t>& place, Fn&& fn) {
  for (int i = 0; i < m; ++i) {
    const int cur = static_cast<int>(key / place[i] % static_cast<std::uint64_t>(q));
    const std::uint64_t base = key - static_cast<std::uint64_t>(cur) * place[i];
    for (int s = 0; s < q; ++s) {
      if (s == cur) continue;
      fn(base + static_cast<std::uint64_t>(s) * place[i]);
    }
  }
}

std::vector<std::uint64_t> places(int m, int q) {
  std::vector<std::uint64_t> place(m);
  std::uint64_t acc = 1;
  for (int i = m - 1; i >= 0; --i) {
    place[i] = acc;
    acc *= static_cast<std::uint64_t>(q);
  }
  return place;
}

std::vector<std::uint8_t> distance_levels_impl(const Code& c, int threads) {
#ifndef _OPENMP
  threads = 1;
#endif
  const int m = c.m(), q = c.q();
  const std::uint64_t space = space_size(m, q);
  const std::vector<std::uint64_t> place = places(m, q);

  std::vector<std::uint8_t> dist(space, 0xFF);
  std::vector<std::uint64_t> frontier;
  frontier.reserve(c.size());
  for (const Vertex& w : c.words()) {
    const std::uint64_t key = packed_key(w, q);
    dist[key] = 0;
    frontier.push_back(key);
  }

  std::uint8_t level = 0;
  std::vector<std::uint64_t> next;
  std::vector<std::vector<std::uint64_t>> chunk_out;
  while (!frontier.empty()) {
    next.clear();
    if (threads > 1) {
#ifdef _OPENMP
      // Parallel phase only reads dist; writes happen in the serial merge,
      // so the array contents are independent of scheduling.
      const int nch = threads;
      chunk_out.assign(nch, {});
#pragma omp parallel num_threads(nch)
      {
        const int t = omp_get_thread_num();
        std::vector<std::uint64_t>& local = chunk_out[t];
#pragma omp for schedule(static)
        for (std::int64_t f = 0; f < static_cast<std::int64_t>(frontier.size()); ++f)
          for_each_neighbour_key(frontier[f], m, q, place, [&](std::uint64_t nk) {
            if (dist[nk] == 0xFF) local.push_back(nk);
          });
      }
      for (auto& local : chunk_out)
        for (std::uint64_t nk : local)
          if (dist[nk] == 0xFF) {
            dist[nk] = static_cast<std::uint8_t>(level + 1);
            next.push_back(nk);
          }
#endif
    } else {
      for (std::uint64_t key : frontier)
        for_each_neighbour_key(key, m, q, place, [&](std::uint64_t nk) {
          if (dist[nk] == 0xFF) {
            dist[nk] = static_cast<std::uint8_t>(level + 1);
            next.push_back(nk);
          }
        });
    }
    frontier.swap(next);
    ++level;
  }
  return dist;
}

}  // namespace

int hardware_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

int worker_threads() {
  const int n = g_threads.load();
  return n > 0 ? n : hardware_threads();
}

void set_worker_threads(int n) { g_threads.store(n > 0 ? n : 0); }

std::optional<int> min_distance_serial(std::span<const Vertex> words) {
  return min_distance_impl(words, 1);
}

std::optional<int> min_distance_parallel(std::span<const Vertex> words, int threads) {
  return min_distance_impl(words, std::max(threads, 2));
}

std::optional<int> min_distance(std::span<const Vertex> words) {
  const int t = worker_threads();
  return t > 1 ? min_distance_parallel(words, t) : min_distance_serial(words);
}

std::vector<std::uint8_t> distance_levels_serial(const Code& c) {
  return distance_levels_impl(c, 1);
}

std::vector<std::uint8_t> distance_levels_parallel(const Code& c, int threads) {
  return distance_levels_impl(c, std::max(threads, 2));
}

std::vector<std::uint8_t> distance_levels(const Code& c) {
  const int t = worker_threads();
  return t > 1 ? distance_levels_parallel(c, t) : distance_levels_serial(c);
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  const int t = worker_threads();
#ifdef _OPENMP
  if (t > 1) {
#pragma omp parallel for schedule(static) num_threads(t)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i)
      body(static_cast<std::size_t>(i));
    return;
  }
#else
  (void)t;
#endif
  for (std::size_t i = 0; i < n; ++i) body(i);
}

}  // namespace elco::kernels
