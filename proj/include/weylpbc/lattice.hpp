#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <vector>

#include "weylpbc/f2.hpp"

namespace wpbc {

using Int = boost::multiprecision::cpp_int;

// Element of Z^n. Coordinates are exact; words in the Weyl group can grow
// them without bound.
using GVector = std::vector<Int>;

// Element of the wedge square of Z^n. Coordinates are indexed by pairs
// (i,j), i < j, in lexicographic order; see pair_index.
using WedgeVector = std::vector<Int>;

inline std::size_t wedge_dim(std::size_t n) { return n * (n - 1) / 2; }
inline std::size_t sym_dim(std::size_t n) { return n * (n + 1) / 2; }
inline std::size_t pair_index(std::size_t i, std::size_t j, std::size_t n) {
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

GVector zero_gvector(std::size_t n);
GVector add(const GVector& a, const GVector& b);
GVector sub(const GVector& a, const GVector& b);
GVector negated(const GVector& a);
GVector scaled(const Int& k, const GVector& a);

// Coordinate (i,j) = g_i h_j - g_j h_i. Bilinear and alternating.
WedgeVector wedge(const GVector& g, const GVector& h);

// Coordinate-wise reduction mod 2; works for G and wedge coordinates alike.
F2Vector mod2(const std::vector<Int>& v);

// Element of the symmetric tensor square of F2^n in diagonal-first
// coordinates: diag_i = coefficient of e_i x e_i, off_(i,j) = the common
// coefficient of e_i x e_j and e_j x e_i (same pair order as WedgeVector).
struct SymTensor {
  F2Vector diag;  // length n
  F2Vector off;   // length wedge_dim(n)

  std::size_t rank_n() const { return diag.size(); }
  bool is_zero() const { return diag.is_zero() && off.is_zero(); }
  SymTensor& operator^=(const SymTensor& rhs) {
    diag ^= rhs.diag;
    off ^= rhs.off;
    return *this;
  }
  friend SymTensor operator^(SymTensor lhs, const SymTensor& rhs) {
    lhs ^= rhs;
    return lhs;
  }
  friend bool operator==(const SymTensor&, const SymTensor&) = default;
};

SymTensor zero_sym(std::size_t n);

// Flat coordinates: n diagonal entries first, then the off-diagonal pairs.
F2Vector flatten(const SymTensor& s);

// g x g for a class g in F2^n: diag_i = g_i, off_(i,j) = g_i g_j.
SymTensor sym_square(const F2Vector& cls);

// The embedding of the wedge square into symmetric tensors,
// u ^ v -> u x v + v x u: diagonal zero, off-diagonal identical to the input.
SymTensor sym_of_wedge(const F2Vector& w, std::size_t n);

// The square-root homomorphism: sym_sqrt(sym_square(g)) = g and
// sym_sqrt(sym_of_wedge(w)) = 0. Realized as diagonal extraction.
F2Vector sym_sqrt(const SymTensor& s);

// (w, g) -> sym_of_wedge(w) + sym_square(g); an isomorphism from the
// F2 Heisenberg group onto the symmetric tensor square.
SymTensor sym_of_pair(const F2Vector& w, const F2Vector& cls);

// Wedge over F2: coordinate (i,j) = a_i b_j xor a_j b_i. Equals the mod-2
// reduction of the integer wedge of any lifts.
F2Vector wedge2(const F2Vector& a, const F2Vector& b);

}  // namespace wpbc
