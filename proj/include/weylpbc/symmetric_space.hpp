#pragma once

#include <cstddef>
#include <vector>

#include "weylpbc/f2.hpp"
#include "weylpbc/lattice.hpp"

namespace wpbc {

// Finite description of the root datum: the set T of roots is the full
// mod-2 preimage of `tab`, so T = union of the cosets 2Z^n + t over t in
// tab. Closure of T under s.t = 2s - t and under the G-action holds for any
// union of cosets, which is why tab determines everything.
//
// Invariants (established by validate): tab is sorted in bitstring order,
// duplicate-free, contains the zero class, and spans F2^n.
struct RootDatum {
  std::size_t rank = 0;
  std::vector<F2Vector> tab;
};

// Checks lengths, zero membership and spanning; canonicalizes tab
// (sort + dedupe). Throws BadLength, MissingZero or NotGenerating.
RootDatum validate(std::size_t rank, std::vector<F2Vector> raw_tab);

// The symmetric-space multiplication s.t = 2s - t, exact.
GVector smul(const GVector& s, const GVector& t);

// True iff the mod-2 class of t lies in tab, i.e. t is a root.
bool contains(const RootDatum& d, const GVector& t);
bool contains_class(const RootDatum& d, const F2Vector& cls);

}  // namespace wpbc
