#include "elco/gf.hpp"

#include <istream>
#include <sstream>
#include <string>

namespace elco::gf {

namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

using Poly = std::vector<std::uint8_t>;  // little-endian coefficients over GF(p)

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

// Remainder of a mod b over GF(p); b must be nonzero.
Poly poly_mod(Poly a, const Poly& b, int p) {
  trim(a);
  const int db = degree(b);
  const int lead_inv = [&] {
    for (int x = 1; x < p; ++x)
      if (x * b[db] % p == 1) return x;
    return 1;
  }();
  while (degree(a) >= db) {
    const int shift = degree(a) - db;
    const int factor = static_cast<int>(a.back()) * lead_inv % p;
    for (int i = 0; i <= db; ++i) {
      int v = a[i + shift] - factor * b[i] % p;
      a[i + shift] = static_cast<std::uint8_t>(((v % p) + p) % p);
    }
    trim(a);
  }
  return a;
}

bool is_irreducible(const Poly& modulus, int p, int k) {
  // Trial division by all monic polynomials of degree 1..k/2.
  for (int d = 1; 2 * d <= k; ++d) {
    const std::uint64_t count = pow_u64(static_cast<std::uint64_t>(p), d);
    for (std::uint64_t low = 0; low < count; ++low) {
      Poly div(d + 1, 0);
      std::uint64_t t = low;
      for (int i = 0; i < d; ++i) {
        div[i] = static_cast<std::uint8_t>(t % p);
        t /= p;
      }
      div[d] = 1;
      if (poly_mod(modulus, div, p).empty()) return false;
    }
  }
  return true;
}

Poly element_poly(int a, int p, int k) {
  Poly out(k, 0);
  for (int i = 0; i < k; ++i) {
    out[i] = static_cast<std::uint8_t>(a % p);
    a /= p;
  }
  return out;
}

int poly_element(const Poly& a, int p, int k) {
  int out = 0;
  for (int i = k - 1; i >= 0; --i) {
    int c = i < static_cast<int>(a.size()) ? a[i] : 0;
    out = out * p + c;
  }
  return out;
}

}  // namespace

const ModulusTable& builtin_modulus_table() {
  static const ModulusTable table = {
      {{2, 2}, {1, 1, 1}},        // x^2 + x + 1
      {{2, 3}, {1, 1, 0, 1}},     // x^3 + x + 1
      {{3, 2}, {1, 0, 1}},        // x^2 + 1
      {{2, 4}, {1, 1, 0, 0, 1}},  // x^4 + x + 1
      {{5, 2}, {2, 1, 1}},        // x^2 + x + 2
  };
  return table;
}

ModulusTable parse_modulus_table(std::istream& in) {
  ModulusTable table;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    int p = 0, k = 0;
    if (!(ls >> p >> k)) continue;
    std::vector<std::uint8_t> coeffs;
    int c;
    while (ls >> c) {
      if (c < 0 || c >= p) raise(Errc::parse_error, "modulus coefficient out of range");
      coeffs.push_back(static_cast<std::uint8_t>(c));
    }
    if (static_cast<int>(coeffs.size()) != k + 1)
      raise(Errc::parse_error, "modulus line needs k+1 coefficients");
    table[{p, k}] = coeffs;
  }
  return table;
}

int FieldSpec::inv(int a) const {
  check(a);
  if (a == 0) raise(Errc::division_by_zero, "inverse of 0 in GF(" + std::to_string(q_) + ")");
  return inv_[a];
}

int FieldSpec::pow(int a, long long e) const {
  check(a);
  if (e < 0) return pow(inv(a), -e);
  int acc = 1;
  for (long long i = 0; i < e; ++i) acc = mul(acc, a);
  return acc;
}

FieldSpec field_make(int p, int k, const ModulusTable* table, int bound) {
  if (!is_prime(p)) raise(Errc::non_prime, "p = " + std::to_string(p) + " is not prime");
  if (k < 1) raise(Errc::unsupported_order, "extension degree must be >= 1");
  long long q = 1;
  for (int i = 0; i < k; ++i) {
    q *= p;
    if (q > bound)
      raise(Errc::unsupported_order, "order " + std::to_string(q) + " exceeds bound");
  }

  FieldSpec f;
  f.p_ = p;
  f.k_ = k;
  f.q_ = static_cast<int>(q);

  if (k == 1) {
    f.modulus_ = {0, 1};  // the polynomial x; unused for prime fields
  } else {
    const ModulusTable& tab = table ? *table : builtin_modulus_table();
    auto it = tab.find({p, k});
    if (it == tab.end())
      raise(Errc::unsupported_order,
            "no modulus known for GF(" + std::to_string(q) + ")");
    f.modulus_ = it->second;
    if (f.modulus_.size() != static_cast<size_t>(k) + 1 || f.modulus_.back() != 1)
      raise(Errc::unsupported_order, "modulus must be monic of degree k");
    if (!is_irreducible(f.modulus_, p, k))
      raise(Errc::unsupported_order, "modulus is reducible over GF(p)");
  }

  const int n = f.q_;
  f.add_.resize(static_cast<size_t>(n) * n);
  f.mul_.resize(static_cast<size_t>(n) * n);
  f.neg_.resize(n);
  f.inv_.assign(n, 0);

  for (int a = 0; a < n; ++a) {
    const Poly pa = element_poly(a, p, k);
    {
      Poly na(k);
      for (int i = 0; i < k; ++i) na[i] = static_cast<std::uint8_t>((p - pa[i]) % p);
      f.neg_[a] = static_cast<std::uint8_t>(poly_element(na, p, k));
    }
    for (int b = 0; b < n; ++b) {
      const Poly pb = element_poly(b, p, k);
      Poly sum(k);
      for (int i = 0; i < k; ++i) sum[i] = static_cast<std::uint8_t>((pa[i] + pb[i]) % p);
      f.add_[static_cast<size_t>(a) * n + b] =
          static_cast<std::uint8_t>(poly_element(sum, p, k));

      Poly prod(2 * k - 1, 0);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
          prod[i + j] = static_cast<std::uint8_t>((prod[i + j] + pa[i] * pb[j]) % p);
      const Poly red = k == 1 ? prod : poly_mod(prod, f.modulus_, p);
      f.mul_[static_cast<size_t>(a) * n + b] =
          static_cast<std::uint8_t>(poly_element(red, p, k));
    }
  }

  for (int a = 1; a < n; ++a)
    for (int b = 1; b < n; ++b)
      if (f.mul_[static_cast<size_t>(a) * n + b] == 1) {
        f.inv_[a] = static_cast<std::uint8_t>(b);
        break;
      }

  for (int g = 1; g < n; ++g) {
    int x = g, order = 1;
    while (x != 1) {
      x = f.mul_[static_cast<size_t>(x) * n + g];
      ++order;
    }
    if (order == n - 1) {
      f.primitive_ = g;
      break;
    }
  }
  if (n == 2) f.primitive_ = 1;

  return f;
}

std::uint64_t vector_index(const std::vector<std::uint8_t>& coords, int q) {
  std::uint64_t out = 0;
  for (size_t i = coords.size(); i-- > 0;) {
    if (coords[i] >= q) raise(Errc::index_out_of_range, "coordinate out of range");
    out = out * static_cast<std::uint64_t>(q) + coords[i];
  }
  return out;
}

std::vector<std::uint8_t> index_vector(std::uint64_t i, int d, int q) {
  if (i >= pow_u64(static_cast<std::uint64_t>(q), d))
    raise(Errc::index_out_of_range, "entry index out of range");
  std::vector<std::uint8_t> coords(d);
  for (int r = 0; r < d; ++r) {
    coords[r] = static_cast<std::uint8_t>(i % q);
    i /= q;
  }
  return coords;
}

std::uint64_t pow_u64(std::uint64_t base, int exp) {
  std::uint64_t out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

}  // namespace elco::gf
