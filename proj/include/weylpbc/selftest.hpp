#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace wpbc {

struct SuiteResult {
  std::string name;
  std::uint64_t checks = 0;
  std::vector<std::string> failures;  // first few mismatches, for diagnosis

  bool passed() const { return failures.empty(); }
};

// Randomized axiom and property suites over the whole library: the
// symmetric-space axioms, the reflection-group axioms in the exact and the
// abelianized Weyl group, group laws and cocycle consistency, the sym-map
// identities, the abelianization square and the gadget identity. Each suite
// runs `iters` random instances drawn from a generator seeded by `seed`.
std::vector<SuiteResult> run_property_suites(std::uint64_t seed, std::uint64_t iters);

}  // namespace wpbc
