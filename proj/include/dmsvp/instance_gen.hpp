#pragma once

#include <cstdint>
#include <random>
#include <utility>

#include "dmsvp/scalar.hpp"

namespace dmsvp {

/// Seed of the deterministic generator. split() derives independent child
/// seeds with SplitMix64, so sub-streams never depend on draw order.
struct GeneratorSeed {
  std::uint64_t seed = 0;

  GeneratorSeed split(std::uint64_t stream) const;
};

/// Portable stream: std::mt19937_64 (fully specified by the standard) seeded
/// through a SplitMix64 expansion, with rejection-sampled bounded draws.
class SeededStream {
 public:
  explicit SeededStream(GeneratorSeed seed);

  std::uint64_t next() { return engine_(); }
  /// Uniform on [lo, hi]; lo <= hi.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  /// Fisher-Yates permutation of {0, ..., n-1}.
  IndexList permutation(Index n);

 private:
  std::mt19937_64 engine_;
};

/// Uniform entries in [-bound, bound].
IntMatrix random_int_matrix(Index rows, Index cols, std::int64_t bound, SeededStream& stream);

/// Arc-node incidence matrix of the complete digraph on k nodes: +1 at the
/// source, -1 at the target. Unordered: arcs (i, j) with i < j. Ordered: all
/// i != j. Arcs in lexicographic order. Throws DomainError for k < 1.
IntMatrix complete_digraph_incidence(Index k, bool ordered);

/// T * B with T the unordered incidence matrix on delta nodes minus its last
/// column and B the identity whose last row is (delta-1, ..., delta-1, delta).
/// A delta-modular C(delta, 2) x (delta - 1) matrix whose lattice has no
/// vector of infinity norm 1.
IntMatrix lower_bound_instance(const Integer& delta);

struct SparsityInstance {
  IntMatrix a;
  IntVector b;
};

/// Standard-form system whose only nonnegative integer solution is the
/// all-ones vector, with m = (delta-1)^2 + 1 rows and m + delta - 1 columns:
///
///   [ I  I  0  0     ]        [ 2 ]
///   [ T  0  I  0     ] z  =   [ 1 ]
///   [ -1 0  0  delta ]        [ 1 ]
///
/// where T is the ordered incidence matrix on delta - 1 nodes.
SparsityInstance sparsity_instance(const Integer& delta);

/// Random delta-modular rows x cols matrix (version 1 of the generator):
///   1. T = [I_cols; R] with R random network rows, each holding one +1,
///      one -1, or one of each in distinct columns.
///   2. B = identity with last row (delta-1, ..., delta-1, delta), then
///      3*cols random elementary row operations row_i += c * row_j with
///      c in [-2, 2], i != j.
///   3. A = T * B with its rows shuffled.
/// Every full-rank minor is a minor of T (0 or +-1) times +-delta.
IntMatrix random_delta_modular(const Integer& delta, Index rows, Index cols, GeneratorSeed seed);

}  // namespace dmsvp
