#pragma once

#include <cstdint>
#include <vector>

#include "elco/autgrp.hpp"
#include "elco/gf.hpp"
#include "elco/hamming.hpp"

namespace elco::families {

/// alpha(g) = (0^g, ..., (q-1)^g): the one-line form of g as a vertex of
/// H(q,q). Symbols are 0-based throughout.
Vertex alpha_of_perm(const std::vector<Sym>& g);

enum class PermSel { alternating, symmetric, odd_coset };

inline constexpr std::uint64_t kDefaultCodeBound = 10'000'000;

/// C(T,l): concatenations (alpha(g_1),...,alpha(g_l)) in H(lq,q) with
/// g_1...g_l in T. Entries are block-major: block j occupies [j*q, (j+1)*q).
Code perm_code(int q, int l, PermSel sel, std::uint64_t bound = kDefaultCodeBound);
Code perm_code(int q, int l, const std::vector<std::vector<Sym>>& subset,
               std::uint64_t bound = kDefaultCodeBound);

Code repetition_code(int q, int m);

struct RMPair {
  gf::FieldSpec field;
  int d = 0;
  int s = 0;                      // s = (q-1)d - 1
  Code sub;                       // RM_q(s-1,d): sum and weighted-sum conditions
  Code top;                       // RM_q(s,d): sum condition only
  std::vector<Vertex> sub_basis;  // kernel bases used by the constructors
  std::vector<Vertex> top_basis;
};

/// Builds the dual Reed-Muller pair in H(q^d, q) by enumerating the solution
/// space of the check system (free-coordinate sweep), never by filtering
/// q^m vertices. Requires (d,q) != (1,2).
RMPair rm_codes(const gf::FieldSpec& field, int d,
                std::uint64_t bound = kDefaultCodeBound);

/// Diagonal and mixed actions on one block of H(lq,q):
///   diag: g_u = y on the block, id elsewhere, sigma = id
///   a:    additionally permutes the block's entries as y
Automorphism block_diag_elem(const std::vector<Sym>& y, int l, int block);
Automorphism block_a_elem(const std::vector<Sym>& y, int l, int block);
Automorphism block_swap(int q, int l, int b1, int b2);

inline Automorphism diag_elem(const std::vector<Sym>& y) { return block_diag_elem(y, 1, 0); }
inline Automorphism a_elem(const std::vector<Sym>& y) { return block_a_elem(y, 1, 0); }

/// The x with a single odd diagonal in one block; maps C(A_q,l) onto the odd
/// coset while fixing the common neighbour set.
Automorphism one_odd_diag(int q, int l, int block = 0);

/// Generators of the named automorphism groups of C(S_q,l) (symmetric case)
/// and of the index-2 subgroup fixing C(A_q,l) (alternating case, with the
/// block-diagonal product kept even). Every element is checked to stabilise
/// the respective code.
std::vector<Automorphism> aut_gens_perm_code(int q, int l, PermSel which);

struct RMAutGens {
  std::vector<Automorphism> x_gens;   // stabilise RM_q(s-1,d)
  std::vector<Automorphism> x1_gens;  // stabilise RM_q(s,d)
};

/// x_gens: translations by a basis of the sub code, AGL(d,q) entry
/// permutations (all elementary transvections, a primitive diagonal, basis
/// translations), and nonzero scalar diagonal maps. x1_gens: translations by
/// a basis of the top code, Sym(M) generators (a transposition and an
/// m-cycle), and scalar diagonals. Stabilisation is checked at construction.
RMAutGens aut_gens_rm(const RMPair& rm);

}  // namespace elco::families
