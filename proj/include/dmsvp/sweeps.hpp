#pragma once

// Seeded randomized sweeps over the exact identities, shared by the CLI
// `check` commands and the test suites.

#include <cstdint>
#include <string>

#include "dmsvp/instance_gen.hpp"
#include "dmsvp/scalar.hpp"

namespace dmsvp {

struct SweepReport {
  std::uint64_t trials = 0;
  std::uint64_t failures = 0;
  std::string first_failure;  // empty when failures == 0

  bool passed() const { return failures == 0; }
};

/// Random (A, S, I, J) with n <= 4, m <= 6, entries in [-9, 9], A of full
/// column rank, A_S invertible, |I| = |J|. Checks the determinant-ratio identity.
SweepReport lemma1_sweep(std::uint64_t trials, GeneratorSeed seed);

/// Random full-row-rank A with m <= 3, n <= 6, m <= n, entries in [-6, 6].
/// Checks the kernel-lattice minor identity for every column subset.
SweepReport lemma2_sweep(std::uint64_t trials, GeneratorSeed seed);

/// Random distinct sorted k-subset of {0, ..., n-1}.
IndexList random_subset(Index n, Index k, SeededStream& stream);

}  // namespace dmsvp
