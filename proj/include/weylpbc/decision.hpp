#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "weylpbc/symmetric_space.hpp"
#include "weylpbc/weyl.hpp"

namespace wpbc {

// Outcome of the 2-independence test. The natural map from the initial
// reflection group onto the Weyl group is an isomorphism exactly when the
// nonzero classes of tab are 2-independent, i.e. their sym-squares are
// linearly independent in the n(n+1)/2-dimensional symmetric tensor square.
struct Verdict {
  bool independent = false;
  std::size_t rank_sym = 0;     // rank of the sym-square matrix
  std::size_t cardinality = 0;  // |tab \ {0}|
  bool iso = false;             // == independent
};

// Certificate that the map is not injective: a dependency subset S of
// tab\{0} whose sym-squares xor to zero. The corresponding kernel element
// of the initial group is (sum of iota over S, +1); when |S| is odd the
// realizing word uses one zero-class reflection to restore sign +1.
struct Witness {
  std::vector<F2Vector> dependency;  // subset of tab\{0}, sorted
  bool pad_zero = false;             // |dependency| is odd
  UabElement kernel_element;         // support = dependency, sign = +1
  std::optional<std::vector<GVector>> word_in_w;
};

Verdict decide(const RootDatum& d);

// Requires decide(d).independent == false, else throws IsIndependent.
// Deterministic: the dependency is the first certificate in elimination
// order over tab\{0} sorted in bitstring order. word_in_w is left empty;
// see find_identity_word.
Witness extract_witness(const RootDatum& d);

// Best-effort search for a word over T that evaluates to the identity in
// the exact Weyl group while its per-class letter multiplicities mod 2
// realize the witness, so the same word is a nontrivial kernel element of
// the initial group. The returned word is verified by exact evaluation.
//
// budget caps the number of elementary search steps; std::nullopt means
// the budget ran out (the abelianized certificate stays valid regardless).
// Completeness is not claimed. Throws InvalidWitness on a witness that does
// not belong to the datum.
std::optional<std::vector<GVector>> find_identity_word(const RootDatum& d,
                                                       const Witness& w,
                                                       std::uint64_t budget);

struct EnumerateOptions {
  bool up_to_gl = false;   // one representative per GL(n,F2) orbit
  bool allow_large = false;  // admits rank 5 for the plain enumeration
};

// Every valid datum of the given rank (subsets of F2^rank containing zero
// and spanning) with its verdict, sorted by tab in list-lexicographic
// order. With up_to_gl, one representative per orbit: the minimal tab in
// that order. Throws RankTooLarge beyond the guard (4; 5 with allow_large
// for the plain mode).
std::vector<std::pair<RootDatum, Verdict>> enumerate_data(
    std::size_t rank, EnumerateOptions opts = {});

}  // namespace wpbc
