#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "elco/autgrp.hpp"
#include "elco/hamming.hpp"

namespace elco::transitivity {

struct CellVerdict {
  int index = 0;
  std::uint64_t size = 0;
  bool single_orbit = false;
};

struct TransitivityReport {
  std::vector<CellVerdict> cells;
  bool completely_transitive = false;
  bool orbits_refine_cells = false;  // sanity: every orbit stayed inside its cell
};

/// Is each distance-partition cell C_i a single orbit of <gens>? Every
/// generator must stabilise the code (GeneratorEscapesCode otherwise); orbit
/// seeds are the lexicographic minima of the cells.
TransitivityReport is_completely_transitive(const Code& code,
                                            std::span<const Automorphism> gens,
                                            std::uint64_t enum_bound = kDefaultEnumBound,
                                            std::uint64_t orbit_bound = kDefaultOrbitBound);

struct NeighbourTransitivityReport {
  bool code_single_orbit = false;
  bool neighbours_single_orbit = false;
  bool neighbour_transitive = false;
};

NeighbourTransitivityReport is_neighbour_transitive(
    const Code& code, std::span<const Automorphism> gens,
    std::uint64_t orbit_bound = kDefaultOrbitBound);

struct ImagesReport {
  std::vector<Code> images;  // closure of {C^x}, sorted by word list
  std::vector<std::vector<std::uint64_t>> pairwise_intersections;
};

/// Closure of {code} under right-application of the generators, with the
/// pairwise intersection sizes of the distinct images.
ImagesReport code_images_under(const Code& code, std::span<const Automorphism> gens,
                               std::uint64_t bound = 4096);

}  // namespace elco::transitivity
