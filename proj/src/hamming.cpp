#include "elco/hamming.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "elco/kernels.hpp"

namespace elco {

std::string vertex_string(const Vertex& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(static_cast<int>(v[i]));
  }
  return out;
}

std::string vertex_label(const Vertex& v, int q) {
  if (q > 10) return vertex_string(v);
  std::string out;
  for (Sym s : v) out += static_cast<char>('0' + s);
  return out;
}

Vertex parse_vertex(const std::string& line, int m, int q) {
  std::istringstream ls(line);
  Vertex v;
  int s;
  while (ls >> s) {
    if (s < 0 || s >= q) raise(Errc::symbol_out_of_range, "symbol out of range: " + line);
    v.push_back(static_cast<Sym>(s));
  }
  if (static_cast<int>(v.size()) != m)
    raise(Errc::ambient_mismatch, "expected " + std::to_string(m) + " symbols: " + line);
  return v;
}

bool space_fits_u64(int m, int q) {
  std::uint64_t acc = 1;
  for (int i = 0; i < m; ++i) {
    if (acc > (std::uint64_t(1) << 62) / static_cast<std::uint64_t>(q)) return false;
    acc *= static_cast<std::uint64_t>(q);
  }
  return true;
}

std::uint64_t space_size(int m, int q) {
  std::uint64_t acc = 1;
  for (int i = 0; i < m; ++i) acc *= static_cast<std::uint64_t>(q);
  return acc;
}

std::uint64_t packed_key(const Vertex& v, int q) {
  std::uint64_t key = 0;
  for (Sym s : v) key = key * static_cast<std::uint64_t>(q) + s;
  return key;
}

Vertex unpack_key(std::uint64_t key, int m, int q) {
  Vertex v(m);
  for (int i = m - 1; i >= 0; --i) {
    v[i] = static_cast<Sym>(key % q);
    key /= q;
  }
  return v;
}

namespace {

void check_same_ambient(const Vertex& a, const Vertex& b) {
  if (a.size() != b.size())
    raise(Errc::ambient_mismatch, "vertices live in different Hamming graphs");
}

}  // namespace

int distance(const Vertex& a, const Vertex& b) {
  check_same_ambient(a, b);
  int d = 0;
  for (size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

std::vector<int> diff(const Vertex& a, const Vertex& b) {
  check_same_ambient(a, b);
  std::vector<int> out;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) out.push_back(static_cast<int>(i));
  return out;
}

Vertex gamma_modify(const Vertex& base, std::span<const int> ks, std::span<const Sym> as,
                    int q) {
  if (ks.size() != as.size())
    raise(Errc::ambient_mismatch, "gamma: entry and symbol lists differ in length");
  Vertex out = base;
  for (size_t j = 0; j < ks.size(); ++j) {
    const int k = ks[j];
    if (k < 0 || k >= static_cast<int>(base.size()))
      raise(Errc::index_out_of_range, "gamma: entry label out of range");
    if (as[j] >= q) raise(Errc::symbol_out_of_range, "gamma: symbol out of range");
    for (size_t j2 = j + 1; j2 < ks.size(); ++j2)
      if (ks[j2] == k) raise(Errc::duplicate_entry_label, "gamma: duplicate entry label");
    out[k] = as[j];
  }
  return out;
}

Vertex gamma_modify(const Vertex& base, std::initializer_list<int> ks,
                    std::initializer_list<Sym> as, int q) {
  return gamma_modify(base, std::span<const int>(ks.begin(), ks.size()),
                      std::span<const Sym>(as.begin(), as.size()), q);
}

std::vector<Vertex> sphere(const Vertex& center, int r, int q) {
  const int m = static_cast<int>(center.size());
  if (r < 0 || r > m) raise(Errc::radius_out_of_range, "sphere radius out of range");
  std::vector<Vertex> out;
  // Choose r positions, then non-matching symbols at each.
  std::vector<int> pos(r);
  std::vector<Vertex> stack;
  auto emit = [&](auto&& self, int depth, Vertex& cur) -> void {
    if (depth == r) {
      out.push_back(cur);
      return;
    }
    const int start = depth == 0 ? 0 : pos[depth - 1] + 1;
    for (int i = start; i <= m - (r - depth); ++i) {
      pos[depth] = i;
      const Sym keep = cur[i];
      for (int s = 0; s < q; ++s) {
        if (s == keep) continue;
        cur[i] = static_cast<Sym>(s);
        self(self, depth + 1, cur);
      }
      cur[i] = keep;
    }
  };
  Vertex cur = center;
  emit(emit, 0, cur);
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t sphere_size(int m, int q, int r) {
  std::uint64_t binom = 1;
  for (int i = 0; i < r; ++i) binom = binom * (m - i) / (i + 1);
  std::uint64_t out = binom;
  for (int i = 0; i < r; ++i) out *= static_cast<std::uint64_t>(q - 1);
  return out;
}

Code::Code(int m, int q, std::vector<Vertex> words) : m_(m), q_(q), words_(std::move(words)) {
  if (m < 1 || q < 2) raise(Errc::ambient_mismatch, "code ambient needs m >= 1, q >= 2");
  for (const Vertex& w : words_) {
    if (static_cast<int>(w.size()) != m)
      raise(Errc::ambient_mismatch, "codeword length differs from ambient m");
    for (Sym s : w)
      if (s >= q) raise(Errc::symbol_out_of_range, "codeword symbol out of range");
  }
  std::sort(words_.begin(), words_.end());
  words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
}

bool Code::contains(const Vertex& v) const {
  return std::binary_search(words_.begin(), words_.end(), v);
}

Code read_code(std::istream& in) {
  std::string line;
  int m = 0, q = 0;
  bool have_header = false;
  std::vector<Vertex> words;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (!have_header) {
      std::istringstream hs(line);
      if (!(hs >> m >> q)) raise(Errc::parse_error, "code file: bad header line");
      have_header = true;
      continue;
    }
    words.push_back(parse_vertex(line, m, q));
  }
  if (!have_header) raise(Errc::parse_error, "code file: missing header");
  return Code(m, q, std::move(words));
}

void write_code(std::ostream& out, const Code& c) {
  out << c.m() << ' ' << c.q() << '\n';
  for (const Vertex& w : c.words()) out << vertex_string(w) << '\n';
}

std::vector<Vertex> neighbour_set(const Code& c) {
  std::vector<Vertex> out;
  out.reserve(c.size() * c.m() * (c.q() - 1));
  for (const Vertex& w : c.words()) {
    Vertex n = w;
    for (int i = 0; i < c.m(); ++i) {
      const Sym keep = n[i];
      for (int s = 0; s < c.q(); ++s) {
        if (s == keep) continue;
        n[i] = static_cast<Sym>(s);
        out.push_back(n);
      }
      n[i] = keep;
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  std::vector<Vertex> res;
  res.reserve(out.size());
  std::set_difference(out.begin(), out.end(), c.words().begin(), c.words().end(),
                      std::back_inserter(res));
  return res;
}

DistancePartition distance_partition(const Code& c, std::uint64_t bound) {
  if (c.empty()) raise(Errc::ambient_mismatch, "distance partition of an empty code");
  if (!space_fits_u64(c.m(), c.q()) || space_size(c.m(), c.q()) > bound)
    raise(Errc::enumeration_bound_exceeded,
          "q^m exceeds the enumeration bound for the distance partition");
  const std::vector<std::uint8_t> dist = kernels::distance_levels(c);
  int rho = 0;
  for (std::uint8_t d : dist) rho = std::max(rho, static_cast<int>(d));
  DistancePartition part;
  part.cells.resize(rho + 1);
  for (std::uint64_t key = 0; key < dist.size(); ++key)
    part.cells[dist[key]].push_back(unpack_key(key, c.m(), c.q()));
  return part;
}

std::optional<int> min_distance(const Code& c) { return kernels::min_distance(c.words()); }

CodeStats code_stats(const Code& c, std::uint64_t bound) {
  CodeStats stats;
  stats.delta = min_distance(c);
  if (space_fits_u64(c.m(), c.q()) && space_size(c.m(), c.q()) <= bound) {
    const DistancePartition part = distance_partition(c, bound);
    stats.rho = part.rho();
    for (const auto& cell : part.cells) stats.cell_sizes.push_back(cell.size());
    stats.partition_computed = true;
  }
  return stats;
}

std::array<Vertex, 4> unique_4cycle(const Vertex& a, const Vertex& b, int q) {
  const std::vector<int> d = diff(a, b);
  if (d.size() != 2) raise(Errc::not_distance_two, "unique_4cycle needs distance 2");
  const int i = d[0], j = d[1];
  return {a, gamma_modify(a, {i}, {b[i]}, q), b, gamma_modify(a, {j}, {b[j]}, q)};
}

Sphere2Intersection sphere2_intersection(const Vertex& a, const Vertex& b, int q) {
  const std::vector<int> d = diff(a, b);
  Sphere2Intersection out;
  if (d.size() == 4) {
    for (size_t u = 0; u < 4; ++u)
      for (size_t v = u + 1; v < 4; ++v)
        out.vertices.push_back(gamma_modify(a, {d[u], d[v]}, {b[d[u]], b[d[v]]}, q));
    out.closed_form = true;
  } else if (d.size() == 3) {
    for (int u = 0; u < 3; ++u)
      for (int v = 0; v < 3; ++v) {
        if (u == v) continue;
        const int i = d[u], j = d[v];
        for (int x = 0; x < q; ++x) {
          if (x == a[i] || x == b[i]) continue;
          out.vertices.push_back(gamma_modify(a, {i, j}, {static_cast<Sym>(x), b[j]}, q));
        }
      }
    out.closed_form = true;
  } else {
    for (Vertex& v : sphere(a, 2, q))
      if (distance(v, b) == 2) out.vertices.push_back(std::move(v));
    out.closed_form = false;
  }
  std::sort(out.vertices.begin(), out.vertices.end());
  return out;
}

const char* errc_name(Errc kind) {
  switch (kind) {
    case Errc::non_prime: return "NonPrime";
    case Errc::unsupported_order: return "UnsupportedOrder";
    case Errc::division_by_zero: return "DivisionByZero";
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::ambient_mismatch: return "AmbientMismatch";
    case Errc::duplicate_entry_label: return "DuplicateEntryLabel";
    case Errc::symbol_out_of_range: return "SymbolOutOfRange";
    case Errc::radius_out_of_range: return "RadiusOutOfRange";
    case Errc::enumeration_bound_exceeded: return "EnumerationBoundExceeded";
    case Errc::not_distance_two: return "NotDistanceTwo";
    case Errc::unsupported_distance: return "UnsupportedDistance";
    case Errc::alphabet_not_field: return "AlphabetNotField";
    case Errc::singular_matrix: return "SingularMatrix";
    case Errc::orbit_bound_exceeded: return "OrbitBoundExceeded";
    case Errc::group_too_large: return "GroupTooLarge";
    case Errc::not_bijection: return "NotBijection";
    case Errc::not_verified_triple: return "NotVerifiedTriple";
    case Errc::generator_escapes_code: return "GeneratorEscapesCode";
    case Errc::image_bound_exceeded: return "ImageBoundExceeded";
    case Errc::simplicity_violation: return "SimplicityViolation";
    case Errc::parse_error: return "ParseError";
    case Errc::io_error: return "IoError";
  }
  return "Unknown";
}

}  // namespace elco
