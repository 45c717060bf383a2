#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "elco/gf.hpp"
#include "elco/hamming.hpp"

namespace elco {

/// Permutations in one-line form (index -> image). Alphabet permutations use
/// Sym entries, entry permutations use int. Composition is left-to-right
/// throughout: (a*b)[i] = b[a[i]], matching the right-action convention
/// apply(compose(x,y), v) == apply(y, apply(x, v)).
template <typename T>
bool is_permutation(const std::vector<T>& p) {
  std::vector<char> seen(p.size(), 0);
  for (T v : p) {
    if (static_cast<size_t>(v) >= p.size() || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

template <typename T>
std::vector<T> perm_identity(int n) {
  std::vector<T> p(n);
  for (int i = 0; i < n; ++i) p[i] = static_cast<T>(i);
  return p;
}

template <typename T>
std::vector<T> perm_compose(const std::vector<T>& a, const std::vector<T>& b) {
  std::vector<T> out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = b[a[i]];
  return out;
}

template <typename T>
std::vector<T> perm_inverse(const std::vector<T>& a) {
  std::vector<T> out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[a[i]] = static_cast<T>(i);
  return out;
}

/// +1 for even, -1 for odd.
template <typename T>
int perm_parity(const std::vector<T>& a) {
  std::vector<char> seen(a.size(), 0);
  int parity = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    if (seen[i]) continue;
    size_t j = i, len = 0;
    while (!seen[j]) {
      seen[j] = 1;
      j = a[j];
      ++len;
    }
    parity ^= (len + 1) & 1;
  }
  return parity ? -1 : 1;
}

/// All permutations of {0..n-1} in lexicographic one-line order.
std::vector<std::vector<Sym>> all_perms(int n);

/// Cycle notation, e.g. "(0 1 2)(3 4)"; "id" or "()" is the identity.
/// Points may be separated by whitespace or commas.
template <typename T>
std::vector<T> parse_cycles(const std::string& text, int n);
std::string cycles_string(const std::vector<int>& p);
std::string cycles_string(const std::vector<Sym>& p);

/// An automorphism (g, sigma) of H(m,q) in N x| K with N = S_q^m acting
/// entrywise first and sigma in K = S_m permuting entries second:
///   apply((g,sigma), v)[sigma[u]] = g_u[v[u]].
struct Automorphism {
  std::vector<std::vector<Sym>> diag;  // m alphabet permutations, one-line
  std::vector<int> sigma;              // entry permutation, one-line

  int m() const { return static_cast<int>(sigma.size()); }
  int q() const { return diag.empty() ? 0 : static_cast<int>(diag.front().size()); }
  bool operator==(const Automorphism&) const = default;
};

Automorphism identity_automorphism(int m, int q);
bool is_identity(const Automorphism& x);
void check_valid(const Automorphism& x);

Vertex apply(const Automorphism& x, const Vertex& v);

/// compose(x, y) is "x then y":
///   result.diag[u] = x.diag[u] followed by y.diag[x.sigma[u]],
///   result.sigma   = x.sigma followed by y.sigma.
Automorphism compose(const Automorphism& x, const Automorphism& y);
Automorphism inverse(const Automorphism& x);

/// Elementwise image, returned sorted.
std::vector<Vertex> image(std::span<const Vertex> set, const Automorphism& x);
Code image_code(const Code& c, const Automorphism& x);

/// Setwise stabiliser test; short-circuits on the first escaping element.
/// The empty set is stabilised by everything.
bool stabilises(std::span<const Vertex> sorted_set, const Automorphism& x);
bool stabilises(const Code& c, const Automorphism& x);

/// t_beta: adds beta entrywise over GF(q). The ambient alphabet must carry
/// the field structure (field.q() symbols).
Automorphism translation(const Vertex& beta, const gf::FieldSpec& field);

/// Pure entry permutation v -> Av + b on M = F_q^d under the little-endian
/// entry labelling. A is d x d row-major over the field; throws
/// SingularMatrix if A is not invertible.
Automorphism entry_perm_from_affine(const std::vector<std::uint8_t>& a_mat,
                                    const std::vector<std::uint8_t>& b,
                                    const gf::FieldSpec& field, int d);

/// Entry permutation lifted from an arbitrary permutation of entry labels.
Automorphism entry_perm(const std::vector<int>& sigma, int q);

inline constexpr std::uint64_t kDefaultOrbitBound = std::uint64_t(1) << 22;

std::vector<Vertex> orbit(const Vertex& seed, std::span<const Automorphism> gens,
                          std::uint64_t bound = kDefaultOrbitBound);
bool is_single_orbit(std::span<const Vertex> sorted_set, std::span<const Automorphism> gens,
                     std::uint64_t bound = kDefaultOrbitBound);

inline constexpr std::uint64_t kDefaultGroupLimit = 10'000'000;

std::uint64_t full_aut_order(int m, int q);  // (q!)^m * m!, throws GroupTooLarge on overflow

/// Streams every element of S_q^m x| S_m exactly once, in a fixed order
/// (sigma lexicographic outermost, then the diagonal odometer). The callback
/// may return false to stop early.
void enumerate_full_aut(int m, int q, const std::function<bool(const Automorphism&)>& fn,
                        std::uint64_t limit = kDefaultGroupLimit);

/// Closure of a generator list under composition (tiny groups only).
std::vector<Automorphism> group_closure(std::span<const Automorphism> gens, int m, int q,
                                        std::uint64_t limit = 1'000'000);

/// Automorphism script format, one part per line (';' also separates):
///   PERM: (0 1 2)(3 4)        entry permutation, cycle notation
///   DIAG i: (0 1)             alphabet permutation on entry i
///   TRANSLATE: 1 0 2          t_beta, needs a field on the alphabet
/// Parts compose left-to-right.
Automorphism parse_aut_script(const std::string& text, int m, int q,
                              const gf::FieldSpec* field = nullptr);
std::string aut_script(const Automorphism& x);

}  // namespace elco
