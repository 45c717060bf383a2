#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <vector>

#include "elco/errors.hpp"

namespace elco::gf {

inline constexpr int kDefaultFieldBound = 32;

/// Moduli keyed by (p, k); each value is the coefficient list of a monic
/// irreducible polynomial over GF(p), little-endian, length k+1.
using ModulusTable = std::map<std::pair<int, int>, std::vector<std::uint8_t>>;

/// The built-in moduli: GF(4) x^2+x+1, GF(8) x^3+x+1, GF(9) x^2+1,
/// GF(16) x^4+x+1, GF(25) x^2+x+2. Any fixed irreducible would do; these are
/// pinned so element numbering is reproducible across runs.
const ModulusTable& builtin_modulus_table();

/// Parses override lines of the form "p k c0 c1 ... ck". Blank lines and
/// '#' comments are skipped. Entries are validated when a field is made.
ModulusTable parse_modulus_table(std::istream& in);

/// Arithmetic for GF(p^k). Elements are indices 0..q-1 whose base-p digit
/// vectors (little-endian) are polynomial coefficients over GF(p); index 0
/// and index 1 are the additive and multiplicative identities. All tables
/// are precomputed at construction, so every operation is a lookup and the
/// object is safe for unrestricted concurrent reads.
class FieldSpec {
 public:
  int p() const { return p_; }
  int k() const { return k_; }
  int q() const { return q_; }
  const std::vector<std::uint8_t>& modulus() const { return modulus_; }

  int add(int a, int b) const { return add_[idx(a, b)]; }
  int sub(int a, int b) const { return add_[idx(a, neg_[check(b)])]; }
  int mul(int a, int b) const { return mul_[idx(a, b)]; }
  int neg(int a) const { return neg_[check(a)]; }
  int inv(int a) const;
  int pow(int a, long long e) const;

  /// A generator of the multiplicative group.
  int primitive_element() const { return primitive_; }

 private:
  friend FieldSpec field_make(int p, int k, const ModulusTable* table, int bound);

  int check(int a) const {
    if (a < 0 || a >= q_) raise(Errc::index_out_of_range, "field element out of range");
    return a;
  }
  int idx(int a, int b) const { return check(a) * q_ + check(b); }

  int p_ = 0, k_ = 0, q_ = 0, primitive_ = 0;
  std::vector<std::uint8_t> modulus_;
  std::vector<std::uint8_t> add_, mul_, neg_, inv_;
};

/// Builds GF(p^k). Throws NonPrime for composite p and UnsupportedOrder when
/// p^k exceeds the bound or no modulus is known for (p, k). The modulus is
/// re-checked for irreducibility at construction.
FieldSpec field_make(int p, int k, const ModulusTable* table = nullptr,
                     int bound = kDefaultFieldBound);

/// Entry labels for M = F_q^d: index <-> coordinate vector, little-endian
/// base q. index 0 is the zero vector and index(e1) = 1.
std::uint64_t vector_index(const std::vector<std::uint8_t>& coords, int q);
std::vector<std::uint8_t> index_vector(std::uint64_t i, int d, int q);

std::uint64_t pow_u64(std::uint64_t base, int exp);

}  // namespace elco::gf
