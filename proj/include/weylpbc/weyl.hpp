#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "weylpbc/lattice.hpp"
#include "weylpbc/symmetric_space.hpp"

namespace wpbc {

// Element of the ambient group of the Weyl group: the central extension of
// Z^n x {+1,-1} by the wedge square, with product
//   (l,g,v)(l',g',v') = (l + l' + g^(v g'), g + v g', v v').
// The Weyl group is the subgroup generated by the reflections (0,t,-1);
// membership in that subgroup is never decided here, words only ever
// construct elements of it.
struct WeylElement {
  WedgeVector twist;  // wedge part, length wedge_dim(n)
  GVector trans;      // translation part, length n
  int sign = +1;      // in {+1,-1}

  friend bool operator==(const WeylElement&, const WeylElement&) = default;
};

// Element of A = Z^n x| {+1,-1}, acting on roots by (g,v).t = 2g + vt.
struct AffineElement {
  GVector trans;
  int sign = +1;

  friend bool operator==(const AffineElement&, const AffineElement&) = default;
};

// Element of the abelianized Weyl group in symmetric-tensor form; the
// reflection at class t is (t x t, -1).
struct WabElement {
  SymTensor sym;
  int sign = +1;

  friend bool operator==(const WabElement&, const WabElement&) = default;
};

// Element of the initial reflection group of T^ab: free F2 vector space on
// the nonzero classes, times {+1,-1}. `support` holds the classes with
// coefficient 1, sorted in bitstring order.
struct UabElement {
  std::vector<F2Vector> support;
  int sign = +1;

  bool is_identity() const { return support.empty() && sign == +1; }
  friend bool operator==(const UabElement&, const UabElement&) = default;
};

WeylElement identity_weyl(std::size_t n);
bool is_identity(const WeylElement& a);
WabElement identity_wab(std::size_t n);

WeylElement mul(const WeylElement& a, const WeylElement& b);
WeylElement inverse(const WeylElement& a);
AffineElement mul(const AffineElement& a, const AffineElement& b);
WabElement mul(const WabElement& a, const WabElement& b);
UabElement mul(const UabElement& a, const UabElement& b);

// Projection W -> A dropping the wedge part; a group homomorphism.
AffineElement affine_part(const WeylElement& a);

// The abelianization square: (l,g,v) -> (sym_of_pair(l mod 2, g mod 2), v).
WabElement project_ab(const WeylElement& a);

// The reflection t -> (0,t,-1). Throws NotARoot unless contains(d,t).
WeylElement reflection(const RootDatum& d, const GVector& t);

// The root action 2g + vt of an element's affine part. Throws NotARoot.
GVector act(const RootDatum& d, const WeylElement& a, const GVector& t);
GVector act(const RootDatum& d, const AffineElement& a, const GVector& t);

// Left-to-right product of reflections over the word; the empty word gives
// the identity. Throws NotARoot with the offending index.
WeylElement eval_word(const RootDatum& d, std::span<const GVector> word);

// Same word evaluation in the abelianized group: the letter t contributes
// (t x t, -1). Letters are classes and must lie in tab.
WabElement eval_word_ab(const RootDatum& d, std::span<const F2Vector> classes);

// Word evaluation in the initial reflection group: nonzero letters toggle
// their class in the support, every letter flips the sign.
UabElement eval_word_initial(const RootDatum& d, std::span<const F2Vector> classes);

}  // namespace wpbc
