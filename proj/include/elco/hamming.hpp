#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "elco/errors.hpp"

namespace elco {

using Sym = std::uint8_t;

/// A vertex of H(m,q): an m-tuple of symbols 0..q-1, indexed by entry labels
/// 0..m-1. Comparison is lexicographic on entries; all canonical orders in
/// the library (set storage, report iteration, tie-breaking) use it.
using Vertex = std::vector<Sym>;

std::string vertex_string(const Vertex& v);            // "0 1 2"
std::string vertex_label(const Vertex& v, int q);      // "012" when q <= 10
Vertex parse_vertex(const std::string& line, int m, int q);

inline constexpr std::uint64_t kDefaultEnumBound = std::uint64_t(1) << 24;

bool space_fits_u64(int m, int q);
std::uint64_t space_size(int m, int q);  // q^m, requires space_fits_u64

/// Packed set key with entry 0 most significant, so ascending key order is
/// exactly lexicographic entry order.
std::uint64_t packed_key(const Vertex& v, int q);
Vertex unpack_key(std::uint64_t key, int m, int q);

int distance(const Vertex& a, const Vertex& b);
std::vector<int> diff(const Vertex& a, const Vertex& b);

/// gamma(base | ks | as): entry ks[j] becomes as[j], all others copy base.
Vertex gamma_modify(const Vertex& base, std::span<const int> ks, std::span<const Sym> as,
                    int q);
Vertex gamma_modify(const Vertex& base, std::initializer_list<int> ks,
                    std::initializer_list<Sym> as, int q);

/// All vertices at distance exactly r from center; |result| = C(m,r)(q-1)^r.
std::vector<Vertex> sphere(const Vertex& center, int r, int q);
std::uint64_t sphere_size(int m, int q, int r);

/// A code: a deduplicated vertex set of H(m,q), stored sorted.
class Code {
 public:
  Code() = default;
  Code(int m, int q, std::vector<Vertex> words);

  int m() const { return m_; }
  int q() const { return q_; }
  std::uint64_t size() const { return words_.size(); }
  const std::vector<Vertex>& words() const { return words_; }
  bool contains(const Vertex& v) const;
  bool empty() const { return words_.empty(); }

 private:
  int m_ = 0, q_ = 0;
  std::vector<Vertex> words_;
};

/// Code file format: header "m q", one vertex per line as space-separated
/// symbols, '#' starts a comment.
Code read_code(std::istream& in);
void write_code(std::ostream& out, const Code& c);

/// C_1: the vertices at distance exactly 1 from the code. Valid for any
/// minimum distance; when delta >= 3 the size is m(q-1)|C|.
std::vector<Vertex> neighbour_set(const Code& c);

struct DistancePartition {
  std::vector<std::vector<Vertex>> cells;  // cells[i] = C_i, sorted
  int rho() const { return static_cast<int>(cells.size()) - 1; }
};

/// Distance partition [C_0..C_rho] by breadth-first expansion over the
/// Hamming adjacency. Requires q^m <= bound (EnumerationBoundExceeded).
DistancePartition distance_partition(const Code& c, std::uint64_t bound = kDefaultEnumBound);

/// Minimum distance; nullopt (the "undefined" sentinel) for |C| < 2.
std::optional<int> min_distance(const Code& c);

struct CodeStats {
  std::optional<int> delta;
  std::optional<int> rho;
  std::vector<std::uint64_t> cell_sizes;
  bool partition_computed = false;  // false => enumeration bound exceeded
};

/// delta is always computed; rho and the partition only when q^m <= bound.
CodeStats code_stats(const Code& c, std::uint64_t bound = kDefaultEnumBound);

/// The unique 4-cycle through two vertices at distance 2, as
/// (a, gamma(a|i|b_i), b, gamma(a|j|b_j)) with diff(a,b) = {i,j}, i < j.
std::array<Vertex, 4> unique_4cycle(const Vertex& a, const Vertex& b, int q);

struct Sphere2Intersection {
  std::vector<Vertex> vertices;  // sorted
  bool closed_form = false;      // false when the brute-force fallback ran
};

/// Gamma_2(a) n Gamma_2(b). Closed forms for d(a,b) in {3,4}: six vertices
/// gamma(a|i,j|b_i,b_j) at distance 4, and the 6(q-2) vertices
/// gamma(a|i,j|x,b_j) with x != a_i,b_i at distance 3. Other distances fall
/// back to a brute-force scan and set closed_form = false.
Sphere2Intersection sphere2_intersection(const Vertex& a, const Vertex& b, int q);

}  // namespace elco
