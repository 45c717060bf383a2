#include "elco/autgrp.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <deque>
#include <set>
#include <sstream>

#include "elco/kernels.hpp"

namespace elco {

std::vector<std::vector<Sym>> all_perms(int n) {
  std::vector<Sym> p = perm_identity<Sym>(n);
  std::vector<std::vector<Sym>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

template <typename T>
std::vector<T> parse_cycles(const std::string& text, int n) {
  std::vector<T> p = perm_identity<T>(n);
  std::string t;
  for (char ch : text) t += (ch == ',') ? ' ' : ch;
  size_t pos = t.find_first_not_of(" \t");
  if (pos != std::string::npos && t.compare(pos, 2, "id") == 0) return p;
  std::istringstream in(t);
  char ch;
  std::vector<int> cycle;
  bool in_cycle = false;
  while (in >> ch) {
    if (ch == '(') {
      if (in_cycle) raise(Errc::parse_error, "nested '(' in cycle notation");
      in_cycle = true;
      cycle.clear();
    } else if (ch == ')') {
      if (!in_cycle) raise(Errc::parse_error, "unmatched ')' in cycle notation");
      in_cycle = false;
      for (size_t i = 0; i + 1 < cycle.size(); ++i) p[cycle[i]] = static_cast<T>(cycle[i + 1]);
      if (cycle.size() > 1) p[cycle.back()] = static_cast<T>(cycle.front());
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      in.putback(ch);
      int v;
      in >> v;
      if (!in_cycle) raise(Errc::parse_error, "point outside cycle: " + text);
      if (v < 0 || v >= n) raise(Errc::parse_error, "cycle point out of range: " + text);
      for (int c : cycle)
        if (c == v) raise(Errc::parse_error, "repeated point in cycle: " + text);
      cycle.push_back(v);
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      raise(Errc::parse_error, std::string("bad character in cycles: ") + ch);
    }
  }
  if (in_cycle) raise(Errc::parse_error, "unterminated cycle: " + text);
  if (!is_permutation(p)) raise(Errc::not_bijection, "cycles do not describe a permutation");
  return p;
}

template std::vector<int> parse_cycles<int>(const std::string&, int);
template std::vector<Sym> parse_cycles<Sym>(const std::string&, int);

namespace {

template <typename T>
std::string cycles_string_impl(const std::vector<T>& p) {
  std::string out;
  std::vector<char> seen(p.size(), 0);
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || static_cast<size_t>(p[i]) == i) {
      seen[i] = 1;
      continue;
    }
    out += '(';
    size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = 1;
      if (!first) out += ' ';
      out += std::to_string(j);
      first = false;
      j = static_cast<size_t>(p[j]);
    }
    out += ')';
  }
  return out.empty() ? "id" : out;
}

}  // namespace

std::string cycles_string(const std::vector<int>& p) { return cycles_string_impl(p); }
std::string cycles_string(const std::vector<Sym>& p) { return cycles_string_impl(p); }

Automorphism identity_automorphism(int m, int q) {
  Automorphism x;
  x.diag.assign(m, perm_identity<Sym>(q));
  x.sigma = perm_identity<int>(m);
  return x;
}

bool is_identity(const Automorphism& x) {
  for (int i = 0; i < x.m(); ++i)
    if (x.sigma[i] != i) return false;
  for (const auto& g : x.diag)
    for (size_t a = 0; a < g.size(); ++a)
      if (g[a] != a) return false;
  return true;
}

void check_valid(const Automorphism& x) {
  if (x.diag.size() != x.sigma.size())
    raise(Errc::ambient_mismatch, "automorphism: diag/sigma sizes differ");
  if (!is_permutation(x.sigma)) raise(Errc::not_bijection, "sigma is not a permutation");
  for (const auto& g : x.diag) {
    if (g.size() != x.diag.front().size())
      raise(Errc::ambient_mismatch, "automorphism: alphabet sizes differ");
    if (!is_permutation(g)) raise(Errc::not_bijection, "g_i is not a permutation");
  }
}

Vertex apply(const Automorphism& x, const Vertex& v) {
  if (static_cast<int>(v.size()) != x.m())
    raise(Errc::ambient_mismatch, "automorphism/vertex ambient mismatch");
  Vertex out(v.size());
  for (size_t u = 0; u < v.size(); ++u) out[x.sigma[u]] = x.diag[u][v[u]];
  return out;
}

Automorphism compose(const Automorphism& x, const Automorphism& y) {
  if (x.m() != y.m() || x.q() != y.q())
    raise(Errc::ambient_mismatch, "composing automorphisms of different graphs");
  Automorphism z;
  z.sigma.resize(x.m());
  z.diag.resize(x.m());
  for (int u = 0; u < x.m(); ++u) {
    z.sigma[u] = y.sigma[x.sigma[u]];
    z.diag[u] = perm_compose(x.diag[u], y.diag[x.sigma[u]]);
  }
  return z;
}

Automorphism inverse(const Automorphism& x) {
  Automorphism z;
  z.sigma = perm_inverse(x.sigma);
  z.diag.resize(x.m());
  for (int i = 0; i < x.m(); ++i) z.diag[i] = perm_inverse(x.diag[z.sigma[i]]);
  return z;
}

std::vector<Vertex> image(std::span<const Vertex> set, const Automorphism& x) {
  std::vector<Vertex> out(set.size());
  kernels::parallel_for(set.size(), [&](size_t i) { out[i] = elco::apply(x, set[i]); });
  std::sort(out.begin(), out.end());
  return out;
}

Code image_code(const Code& c, const Automorphism& x) {
  return Code(c.m(), c.q(), image(c.words(), x));
}

bool stabilises(std::span<const Vertex> sorted_set, const Automorphism& x) {
  for (const Vertex& v : sorted_set) {
    const Vertex w = elco::apply(x, v);
    if (!std::binary_search(sorted_set.begin(), sorted_set.end(), w)) return false;
  }
  return true;
}

bool stabilises(const Code& c, const Automorphism& x) {
  return stabilises(std::span<const Vertex>(c.words()), x);
}

Automorphism translation(const Vertex& beta, const gf::FieldSpec& field) {
  const int q = field.q();
  for (Sym s : beta)
    if (s >= q) raise(Errc::alphabet_not_field, "translation vertex outside the field alphabet");
  Automorphism x;
  x.sigma = perm_identity<int>(static_cast<int>(beta.size()));
  x.diag.resize(beta.size());
  for (size_t i = 0; i < beta.size(); ++i) {
    std::vector<Sym> g(q);
    for (int a = 0; a < q; ++a) g[a] = static_cast<Sym>(field.add(a, beta[i]));
    x.diag[i] = std::move(g);
  }
  return x;
}

namespace {

// w = A v + b over the field; A row-major d x d.
std::vector<std::uint8_t> affine_apply(const std::vector<std::uint8_t>& a_mat,
                                       const std::vector<std::uint8_t>& b,
                                       const std::vector<std::uint8_t>& v,
                                       const gf::FieldSpec& f, int d) {
  std::vector<std::uint8_t> w(d);
  for (int r = 0; r < d; ++r) {
    int acc = b.empty() ? 0 : b[r];
    for (int c = 0; c < d; ++c) acc = f.add(acc, f.mul(a_mat[r * d + c], v[c]));
    w[r] = static_cast<std::uint8_t>(acc);
  }
  return w;
}

bool invertible(const std::vector<std::uint8_t>& a_mat, const gf::FieldSpec& f, int d) {
  std::vector<int> m(a_mat.begin(), a_mat.end());
  int rank = 0;
  for (int col = 0; col < d; ++col) {
    int pivot = -1;
    for (int r = rank; r < d; ++r)
      if (m[r * d + col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return false;
    for (int c = 0; c < d; ++c) std::swap(m[pivot * d + c], m[rank * d + c]);
    const int inv = f.inv(m[rank * d + col]);
    for (int c = 0; c < d; ++c) m[rank * d + c] = f.mul(m[rank * d + c], inv);
    for (int r = 0; r < d; ++r) {
      if (r == rank || m[r * d + col] == 0) continue;
      const int factor = m[r * d + col];
      for (int c = 0; c < d; ++c)
        m[r * d + c] = f.sub(m[r * d + c], f.mul(factor, m[rank * d + c]));
    }
    ++rank;
  }
  return rank == d;
}

}  // namespace

Automorphism entry_perm_from_affine(const std::vector<std::uint8_t>& a_mat,
                                    const std::vector<std::uint8_t>& b,
                                    const gf::FieldSpec& field, int d) {
  if (static_cast<int>(a_mat.size()) != d * d)
    raise(Errc::ambient_mismatch, "affine map: matrix must be d x d");
  if (!invertible(a_mat, field, d))
    raise(Errc::singular_matrix, "affine map: matrix is singular");
  const int q = field.q();
  const std::uint64_t m64 = gf::pow_u64(static_cast<std::uint64_t>(q), d);
  const int m = static_cast<int>(m64);
  std::vector<int> sigma(m);
  for (int u = 0; u < m; ++u) {
    const auto v = gf::index_vector(static_cast<std::uint64_t>(u), d, q);
    sigma[u] = static_cast<int>(gf::vector_index(affine_apply(a_mat, b, v, field, d), q));
  }
  return entry_perm(sigma, q);
}

Automorphism entry_perm(const std::vector<int>& sigma, int q) {
  if (!is_permutation(sigma)) raise(Errc::not_bijection, "entry map is not a permutation");
  Automorphism x;
  x.sigma = sigma;
  x.diag.assign(sigma.size(), perm_identity<Sym>(q));
  return x;
}

std::vector<Vertex> orbit(const Vertex& seed, std::span<const Automorphism> gens,
                          std::uint64_t bound) {
  std::set<Vertex> seen{seed};
  std::deque<Vertex> frontier{seed};
  while (!frontier.empty()) {
    const Vertex v = std::move(frontier.front());
    frontier.pop_front();
    for (const Automorphism& g : gens) {
      Vertex w = elco::apply(g, v);
      if (seen.insert(w).second) {
        if (seen.size() > bound) raise(Errc::orbit_bound_exceeded, "orbit exceeds bound");
        frontier.push_back(std::move(w));
      }
    }
  }
  return std::vector<Vertex>(seen.begin(), seen.end());
}

bool is_single_orbit(std::span<const Vertex> sorted_set, std::span<const Automorphism> gens,
                     std::uint64_t bound) {
  if (sorted_set.empty()) return true;
  for (const Automorphism& g : gens)
    if (!stabilises(sorted_set, g)) return false;
  const std::vector<Vertex> orb = orbit(sorted_set.front(), gens, bound);
  return orb.size() == sorted_set.size() &&
         std::equal(orb.begin(), orb.end(), sorted_set.begin());
}

std::uint64_t full_aut_order(int m, int q) {
  std::uint64_t fact = 1;
  for (int i = 2; i <= q; ++i) fact *= static_cast<std::uint64_t>(i);
  long double est = powl(static_cast<long double>(fact), m);
  for (int i = 2; i <= m; ++i) est *= i;
  if (est > 1e18L) raise(Errc::group_too_large, "automorphism group order overflows");
  std::uint64_t out = 1;
  for (int i = 0; i < m; ++i) out *= fact;
  for (int i = 2; i <= m; ++i) out *= static_cast<std::uint64_t>(i);
  return out;
}

void enumerate_full_aut(int m, int q, const std::function<bool(const Automorphism&)>& fn,
                        std::uint64_t limit) {
  const std::uint64_t order = full_aut_order(m, q);
  if (order > limit)
    raise(Errc::group_too_large,
          "full automorphism group has " + std::to_string(order) + " elements");
  const std::vector<std::vector<Sym>> sq = all_perms(q);
  std::vector<int> sigma = perm_identity<int>(m);
  Automorphism x;
  x.sigma = sigma;
  do {
    x.sigma = sigma;
    std::vector<size_t> odo(m, 0);
    for (;;) {
      x.diag.clear();
      for (int i = 0; i < m; ++i) x.diag.push_back(sq[odo[i]]);
      if (!fn(x)) return;
      int pos = m - 1;
      while (pos >= 0 && odo[pos] + 1 == sq.size()) odo[pos--] = 0;
      if (pos < 0) break;
      ++odo[pos];
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
}

std::vector<Automorphism> group_closure(std::span<const Automorphism> gens, int m, int q,
                                        std::uint64_t limit) {
  auto key = [](const Automorphism& a) {
    std::vector<int> k = a.sigma;
    for (const auto& g : a.diag) k.insert(k.end(), g.begin(), g.end());
    return k;
  };
  std::set<std::vector<int>> seen;
  std::vector<Automorphism> elems;
  std::deque<Automorphism> frontier;
  const Automorphism id = identity_automorphism(m, q);
  seen.insert(key(id));
  elems.push_back(id);
  frontier.push_back(id);
  while (!frontier.empty()) {
    const Automorphism x = std::move(frontier.front());
    frontier.pop_front();
    for (const Automorphism& g : gens) {
      Automorphism y = compose(x, g);
      if (seen.insert(key(y)).second) {
        if (seen.size() > limit) raise(Errc::group_too_large, "closure exceeds limit");
        elems.push_back(y);
        frontier.push_back(std::move(y));
      }
    }
  }
  return elems;
}

namespace {

std::string trim_copy(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

}  // namespace

Automorphism parse_aut_script(const std::string& text, int m, int q,
                              const gf::FieldSpec* field) {
  Automorphism acc = identity_automorphism(m, q);
  std::string part;
  std::vector<std::string> parts;
  for (char ch : text) {
    if (ch == '\n' || ch == ';') {
      parts.push_back(part);
      part.clear();
    } else {
      part += ch;
    }
  }
  parts.push_back(part);

  for (const std::string& raw : parts) {
    const std::string line = trim_copy(raw);
    if (line.empty()) continue;
    Automorphism factor = identity_automorphism(m, q);
    if (line.rfind("PERM", 0) == 0) {
      std::string rest = line.substr(4);
      if (!rest.empty() && trim_copy(rest).rfind(':', 0) == 0)
        rest = trim_copy(rest).substr(1);
      factor.sigma = parse_cycles<int>(trim_copy(rest), m);
    } else if (line.rfind("DIAG", 0) == 0) {
      std::istringstream ls(line.substr(4));
      int entry = -1;
      ls >> entry;
      if (entry < 0 || entry >= m) raise(Errc::parse_error, "DIAG entry out of range: " + line);
      std::string rest;
      std::getline(ls, rest);
      rest = trim_copy(rest);
      if (!rest.empty() && rest.front() == ':') rest = trim_copy(rest.substr(1));
      factor.diag[entry] = parse_cycles<Sym>(rest, q);
    } else if (line.rfind("TRANSLATE", 0) == 0) {
      if (!field)
        raise(Errc::alphabet_not_field, "TRANSLATE needs a field structure on the alphabet");
      std::string rest = trim_copy(line.substr(9));
      if (!rest.empty() && rest.front() == ':') rest = trim_copy(rest.substr(1));
      factor = translation(parse_vertex(rest, m, q), *field);
    } else {
      raise(Errc::parse_error, "unknown automorphism script part: " + line);
    }
    acc = compose(acc, factor);
  }
  return acc;
}

std::string aut_script(const Automorphism& x) {
  std::string out;
  for (int i = 0; i < x.m(); ++i) {
    const std::string c = cycles_string(x.diag[i]);
    if (c != "id") {
      if (!out.empty()) out += "; ";
      out += "DIAG " + std::to_string(i) + ": " + c;
    }
  }
  const std::string s = cycles_string(x.sigma);
  if (s != "id") {
    if (!out.empty()) out += "; ";
    out += "PERM: " + s;
  }
  return out.empty() ? "id" : out;
}

}  // namespace elco
