#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "elco/hamming.hpp"

namespace elco::kernels {

/// Worker-thread count used by the parallel kernels. 1 selects the serial
/// reference implementations. Results are identical either way; the unit
/// suite checks serial and parallel outputs against each other.
int worker_threads();
void set_worker_threads(int n);
int hardware_threads();

/// Minimum pairwise Hamming distance over a word list (nullopt for < 2
/// words). Words of length <= 8 are packed into one 64-bit lane per word and
/// compared with a SWAR byte-difference count.
std::optional<int> min_distance_serial(std::span<const Vertex> words);
std::optional<int> min_distance_parallel(std::span<const Vertex> words, int threads);
std::optional<int> min_distance(std::span<const Vertex> words);

/// dist[key] = graph distance from the packed vertex `key` to the code,
/// 0xFF = unreachable (cannot happen for a nonempty code). Level-synchronous
/// BFS over the full vertex space; requires q^m to fit the caller's bound.
std::vector<std::uint8_t> distance_levels_serial(const Code& c);
std::vector<std::uint8_t> distance_levels_parallel(const Code& c, int threads);
std::vector<std::uint8_t> distance_levels(const Code& c);

/// Index-addressed parallel loop: body(i) must only write state owned by
/// index i, which keeps results independent of scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace elco::kernels
