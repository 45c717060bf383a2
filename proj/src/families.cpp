#include "elco/families.hpp"

#include <algorithm>
#include <string>

namespace elco::families {

Vertex alpha_of_perm(const std::vector<Sym>& g) {
  if (!is_permutation(g)) raise(Errc::not_bijection, "alpha_of_perm needs a bijection");
  return g;
}

namespace {

std::vector<std::vector<Sym>> selected_perms(int q, PermSel sel) {
  std::vector<std::vector<Sym>> out;
  for (auto& p : all_perms(q)) {
    const int parity = perm_parity(p);
    if (sel == PermSel::symmetric || (sel == PermSel::alternating && parity == 1) ||
        (sel == PermSel::odd_coset && parity == -1))
      out.push_back(std::move(p));
  }
  return out;
}

Code perm_code_of_set(int q, int l, const std::vector<std::vector<Sym>>& target,
                      std::uint64_t bound) {
  if (q < 2 || l < 1) raise(Errc::ambient_mismatch, "perm code needs q >= 2, l >= 1");
  std::uint64_t fact = 1;
  for (int i = 2; i <= q; ++i) fact *= static_cast<std::uint64_t>(i);
  std::uint64_t total = target.size();
  for (int i = 1; i < l; ++i) {
    if (total > bound / fact)
      raise(Errc::enumeration_bound_exceeded, "permutation code exceeds enumeration bound");
    total *= fact;
  }
  if (total > bound)
    raise(Errc::enumeration_bound_exceeded, "permutation code exceeds enumeration bound");

  for (const auto& t : target)
    if (static_cast<int>(t.size()) != q || !is_permutation(t))
      raise(Errc::not_bijection, "subset element is not a permutation of the alphabet");

  const std::vector<std::vector<Sym>> sq = all_perms(q);
  std::vector<Vertex> words;
  words.reserve(total);
  // Free choice of the first l-1 blocks; the last block is forced so the
  // product lands in the target set.
  std::vector<size_t> odo(l > 1 ? l - 1 : 0, 0);
  for (;;) {
    std::vector<Sym> prefix = perm_identity<Sym>(q);
    for (size_t i = 0; i < odo.size(); ++i) prefix = perm_compose(prefix, sq[odo[i]]);
    for (const auto& t : target) {
      const std::vector<Sym> last = perm_compose(perm_inverse(prefix), t);
      Vertex w;
      w.reserve(static_cast<size_t>(l) * q);
      for (size_t i = 0; i < odo.size(); ++i)
        w.insert(w.end(), sq[odo[i]].begin(), sq[odo[i]].end());
      w.insert(w.end(), last.begin(), last.end());
      words.push_back(std::move(w));
    }
    size_t pos = odo.size();
    while (pos > 0 && odo[pos - 1] + 1 == sq.size()) odo[--pos] = 0;
    if (pos == 0) break;
    ++odo[pos - 1];
  }
  return Code(l * q, q, std::move(words));
}

}  // namespace

Code perm_code(int q, int l, PermSel sel, std::uint64_t bound) {
  return perm_code_of_set(q, l, selected_perms(q, sel), bound);
}

Code perm_code(int q, int l, const std::vector<std::vector<Sym>>& subset,
               std::uint64_t bound) {
  return perm_code_of_set(q, l, subset, bound);
}

Code repetition_code(int q, int m) {
  if (q < 2 || m < 1) raise(Errc::ambient_mismatch, "repetition code needs q >= 2, m >= 1");
  std::vector<Vertex> words;
  for (int s = 0; s < q; ++s) words.emplace_back(m, static_cast<Sym>(s));
  return Code(m, q, std::move(words));
}

namespace {

// Kernel basis of the (rows x m) check system over the field, by RREF and a
// free-coordinate sweep.
std::vector<Vertex> kernel_basis(std::vector<std::vector<Sym>> rows, int m,
                                 const gf::FieldSpec& f) {
  const int nrows = static_cast<int>(rows.size());
  std::vector<int> pivot_col;
  int rank = 0;
  for (int col = 0; col < m && rank < nrows; ++col) {
    int pivot = -1;
    for (int r = rank; r < nrows; ++r)
      if (rows[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[pivot], rows[rank]);
    const int inv = f.inv(rows[rank][col]);
    for (int c = 0; c < m; ++c)
      rows[rank][c] = static_cast<Sym>(f.mul(rows[rank][c], inv));
    for (int r = 0; r < nrows; ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const int factor = rows[r][col];
      for (int c = 0; c < m; ++c)
        rows[r][c] = static_cast<Sym>(f.sub(rows[r][c], f.mul(factor, rows[rank][c])));
    }
    pivot_col.push_back(col);
    ++rank;
  }

  std::vector<char> is_pivot(m, 0);
  for (int c : pivot_col) is_pivot[c] = 1;
  std::vector<Vertex> basis;
  for (int free = 0; free < m; ++free) {
    if (is_pivot[free]) continue;
    Vertex v(m, 0);
    v[free] = 1;
    for (int r = 0; r < rank; ++r)
      v[pivot_col[r]] = static_cast<Sym>(f.neg(rows[r][free]));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Vertex> span_of(const std::vector<Vertex>& basis, int m, const gf::FieldSpec& f,
                            std::uint64_t bound) {
  const int q = f.q();
  std::uint64_t total = 1;
  for (size_t i = 0; i < basis.size(); ++i) {
    if (total > bound / q)
      raise(Errc::enumeration_bound_exceeded, "code dimension exceeds enumeration bound");
    total *= static_cast<std::uint64_t>(q);
  }
  std::vector<Vertex> words;
  words.reserve(total);
  std::vector<int> coeff(basis.size(), 0);
  for (;;) {
    Vertex w(m, 0);
    for (size_t i = 0; i < basis.size(); ++i) {
      if (coeff[i] == 0) continue;
      for (int c = 0; c < m; ++c)
        w[c] = static_cast<Sym>(f.add(w[c], f.mul(coeff[i], basis[i][c])));
    }
    words.push_back(std::move(w));
    size_t pos = coeff.size();
    while (pos > 0 && coeff[pos - 1] + 1 == q) coeff[--pos] = 0;
    if (pos == 0) break;
    ++coeff[pos - 1];
  }
  return words;
}

}  // namespace

RMPair rm_codes(const gf::FieldSpec& field, int d, std::uint64_t bound) {
  const int q = field.q();
  if (d < 1 || (d == 1 && q == 2))
    raise(Errc::ambient_mismatch, "rm_codes needs d >= 1 and (d,q) != (1,2)");
  if (!space_fits_u64(d, q))
    raise(Errc::enumeration_bound_exceeded, "entry space q^d does not fit");
  const std::uint64_t m64 = gf::pow_u64(static_cast<std::uint64_t>(q), d);
  if (m64 > 4096) raise(Errc::enumeration_bound_exceeded, "entry space q^d too large");
  const int m = static_cast<int>(m64);

  // Check rows: all-ones, then one row per coordinate of the entry label.
  std::vector<std::vector<Sym>> top_rows{std::vector<Sym>(m, 1)};
  std::vector<std::vector<Sym>> sub_rows = top_rows;
  for (int r = 0; r < d; ++r) {
    std::vector<Sym> row(m);
    for (int u = 0; u < m; ++u)
      row[u] = gf::index_vector(static_cast<std::uint64_t>(u), d, q)[r];
    sub_rows.push_back(std::move(row));
  }

  RMPair rm{field, d, (q - 1) * d - 1, Code(), Code(), {}, {}};
  rm.sub_basis = kernel_basis(sub_rows, m, field);
  rm.top_basis = kernel_basis(top_rows, m, field);
  rm.sub = Code(m, q, span_of(rm.sub_basis, m, field, bound));
  rm.top = Code(m, q, span_of(rm.top_basis, m, field, bound));
  return rm;
}

Automorphism block_diag_elem(const std::vector<Sym>& y, int l, int block) {
  const int q = static_cast<int>(y.size());
  if (!is_permutation(y)) raise(Errc::not_bijection, "diag element needs a permutation");
  Automorphism x = identity_automorphism(l * q, q);
  for (int i = 0; i < q; ++i) x.diag[block * q + i] = y;
  return x;
}

Automorphism block_a_elem(const std::vector<Sym>& y, int l, int block) {
  const int q = static_cast<int>(y.size());
  Automorphism x = block_diag_elem(y, l, block);
  for (int i = 0; i < q; ++i) x.sigma[block * q + i] = block * q + y[i];
  return x;
}

Automorphism block_swap(int q, int l, int b1, int b2) {
  Automorphism x = identity_automorphism(l * q, q);
  for (int i = 0; i < q; ++i) {
    x.sigma[b1 * q + i] = b2 * q + i;
    x.sigma[b2 * q + i] = b1 * q + i;
  }
  return x;
}

Automorphism one_odd_diag(int q, int l, int block) {
  std::vector<Sym> t = perm_identity<Sym>(q);
  std::swap(t[0], t[1]);
  return block_diag_elem(t, l, block);
}

std::vector<Automorphism> aut_gens_perm_code(int q, int l, PermSel which) {
  if (which == PermSel::odd_coset)
    raise(Errc::ambient_mismatch, "generator presets exist for the A and S cases only");
  std::vector<Sym> transposition = perm_identity<Sym>(q);
  std::swap(transposition[0], transposition[1]);
  std::vector<Sym> cycle(q);
  for (int i = 0; i < q; ++i) cycle[i] = static_cast<Sym>((i + 1) % q);
  std::vector<Sym> three_cycle = perm_identity<Sym>(q);
  if (q >= 3) {
    three_cycle[0] = 1;
    three_cycle[1] = 2;
    three_cycle[2] = 0;
  }

  std::vector<Automorphism> gens;
  for (int b = 0; b < l; ++b) {
    if (which == PermSel::symmetric) {
      gens.push_back(block_diag_elem(transposition, l, b));
      gens.push_back(block_diag_elem(cycle, l, b));
    } else {
      // Even diagonals freely; odd ones only in compensating pairs.
      if (q >= 3) gens.push_back(block_diag_elem(three_cycle, l, b));
      if (perm_parity(cycle) == 1) gens.push_back(block_diag_elem(cycle, l, b));
      if (b + 1 < l)
        gens.push_back(compose(block_diag_elem(transposition, l, b),
                               block_diag_elem(transposition, l, b + 1)));
    }
    gens.push_back(block_a_elem(transposition, l, b));
    gens.push_back(block_a_elem(cycle, l, b));
  }
  for (int b = 0; b + 1 < l; ++b) gens.push_back(block_swap(q, l, b, b + 1));

  const Code code = perm_code(q, l, which);
  for (const Automorphism& g : gens)
    if (!stabilises(code, g))
      raise(Errc::generator_escapes_code, "perm-code generator does not stabilise the code");
  return gens;
}

RMAutGens aut_gens_rm(const RMPair& rm) {
  const gf::FieldSpec& f = rm.field;
  const int q = f.q(), d = rm.d, m = rm.sub.m();
  RMAutGens out;

  for (const Vertex& b : rm.sub_basis) out.x_gens.push_back(translation(b, f));

  // AGL(d,q) on entry labels: basis translations, elementary transvections
  // with coefficients 1 and a primitive element, and a primitive diagonal.
  std::vector<std::uint8_t> identity_mat(d * d, 0);
  for (int i = 0; i < d; ++i) identity_mat[i * d + i] = 1;
  for (int i = 0; i < d; ++i) {
    std::vector<std::uint8_t> e(d, 0);
    e[i] = 1;
    out.x_gens.push_back(entry_perm_from_affine(identity_mat, e, f, d));
  }
  const int zeta = f.primitive_element();
  std::vector<int> lambdas{1};
  if (zeta != 1) lambdas.push_back(zeta);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      if (i == j) continue;
      for (int lambda : lambdas) {
        std::vector<std::uint8_t> mat = identity_mat;
        mat[i * d + j] = static_cast<std::uint8_t>(lambda);
        out.x_gens.push_back(entry_perm_from_affine(mat, {}, f, d));
      }
    }
  if (zeta != 1) {
    std::vector<std::uint8_t> diag_mat = identity_mat;
    diag_mat[0] = static_cast<std::uint8_t>(zeta);
    out.x_gens.push_back(entry_perm_from_affine(diag_mat, {}, f, d));
  }

  // Nonzero scalar maps a -> c a applied to every entry.
  auto scalar_map = [&](int c) {
    Automorphism x = identity_automorphism(m, q);
    std::vector<Sym> g(q);
    for (int a = 0; a < q; ++a) g[a] = static_cast<Sym>(f.mul(c, a));
    x.diag.assign(m, g);
    return x;
  };
  if (zeta != 1) out.x_gens.push_back(scalar_map(zeta));

  for (const Vertex& b : rm.top_basis) out.x1_gens.push_back(translation(b, f));
  {
    std::vector<int> t = perm_identity<int>(m);
    std::swap(t[0], t[m - 1]);
    out.x1_gens.push_back(entry_perm(t, q));
    std::vector<int> c(m);
    for (int i = 0; i < m; ++i) c[i] = (i + 1) % m;
    out.x1_gens.push_back(entry_perm(c, q));
  }
  if (zeta != 1) out.x1_gens.push_back(scalar_map(zeta));

  for (const Automorphism& g : out.x_gens)
    if (!stabilises(rm.sub, g))
      raise(Errc::generator_escapes_code, "X generator does not stabilise the sub code");
  for (const Automorphism& g : out.x1_gens)
    if (!stabilises(rm.top, g))
      raise(Errc::generator_escapes_code, "X1 generator does not stabilise the top code");
  return out;
}

}  // namespace elco::families
