#include "elco/transitivity.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace elco::transitivity {

TransitivityReport is_completely_transitive(const Code& code,
                                            std::span<const Automorphism> gens,
                                            std::uint64_t enum_bound,
                                            std::uint64_t orbit_bound) {
  for (const Automorphism& g : gens)
    if (!stabilises(code, g))
      raise(Errc::generator_escapes_code,
            "a generator moves the code; complete transitivity is undefined");

  const DistancePartition part = distance_partition(code, enum_bound);
  TransitivityReport report;
  report.completely_transitive = true;
  report.orbits_refine_cells = true;
  for (int i = 0; i < static_cast<int>(part.cells.size()); ++i) {
    const std::vector<Vertex>& cell = part.cells[i];
    CellVerdict v;
    v.index = i;
    v.size = cell.size();
    const std::vector<Vertex> orb = orbit(cell.front(), gens, orbit_bound);
    const bool inside = std::includes(cell.begin(), cell.end(), orb.begin(), orb.end());
    if (!inside) report.orbits_refine_cells = false;
    v.single_orbit = inside && orb.size() == cell.size();
    report.completely_transitive = report.completely_transitive && v.single_orbit;
    report.cells.push_back(v);
  }
  return report;
}

NeighbourTransitivityReport is_neighbour_transitive(const Code& code,
                                                    std::span<const Automorphism> gens,
                                                    std::uint64_t orbit_bound) {
  for (const Automorphism& g : gens)
    if (!stabilises(code, g))
      raise(Errc::generator_escapes_code,
            "a generator moves the code; neighbour transitivity is undefined");
  NeighbourTransitivityReport report;
  report.code_single_orbit =
      is_single_orbit(std::span<const Vertex>(code.words()), gens, orbit_bound);
  const std::vector<Vertex> c1 = neighbour_set(code);
  report.neighbours_single_orbit = is_single_orbit(std::span<const Vertex>(c1), gens, orbit_bound);
  report.neighbour_transitive = report.code_single_orbit && report.neighbours_single_orbit;
  return report;
}

ImagesReport code_images_under(const Code& code, std::span<const Automorphism> gens,
                               std::uint64_t bound) {
  std::map<std::vector<Vertex>, size_t> seen;
  std::vector<Code> images;
  std::deque<Code> frontier;
  seen[code.words()] = 0;
  images.push_back(code);
  frontier.push_back(code);
  while (!frontier.empty()) {
    const Code current = std::move(frontier.front());
    frontier.pop_front();
    for (const Automorphism& g : gens) {
      Code next = image_code(current, g);
      if (seen.emplace(next.words(), images.size()).second) {
        if (images.size() + 1 > bound)
          raise(Errc::image_bound_exceeded, "image closure exceeds bound");
        images.push_back(next);
        frontier.push_back(std::move(next));
      }
    }
  }
  std::sort(images.begin(), images.end(),
            [](const Code& a, const Code& b) { return a.words() < b.words(); });

  ImagesReport report;
  report.pairwise_intersections.assign(images.size(),
                                       std::vector<std::uint64_t>(images.size(), 0));
  for (size_t i = 0; i < images.size(); ++i)
    for (size_t j = 0; j < images.size(); ++j) {
      std::vector<Vertex> common;
      std::set_intersection(images[i].words().begin(), images[i].words().end(),
                            images[j].words().begin(), images[j].words().end(),
                            std::back_inserter(common));
      report.pairwise_intersections[i][j] = common.size();
    }
  report.images = std::move(images);
  return report;
}

}  // namespace elco::transitivity
