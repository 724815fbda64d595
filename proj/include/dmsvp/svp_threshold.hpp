#pragma once

// Threshold solver for the infinity-norm shortest vector problem on lattices
// A Z^n spanned by (claimed) Delta-modular matrices.
//
// When n >= g(Delta) + 1, with g(Delta) = ceil((Delta-1)/2) * (Delta-1), a
// Delta-modular lattice always contains a vector of infinity norm 1. The
// solver walks a sequence of invertible row submatrices B_0, B_1, ... of A
// whose |det| grows by at least one per step. Each step either finds such a
// vector from residue classes of the columns of B^{-1}, or swaps rows of A
// into B. Once |det B| exceeds Delta the current B is returned as a
// certificate that A was not Delta-modular.
//
// Every scan order is fixed (rows ascending, then columns ascending; members
// of a residue class ascending), so outcomes are reproducible bit for bit.

#include <variant>
#include <vector>

#include "dmsvp/combinations.hpp"
#include "dmsvp/exact_linalg.hpp"
#include "dmsvp/scalar.hpp"
#include "dmsvp/svp_oracle.hpp"

namespace dmsvp {

/// ceil((delta - 1) / 2) * (delta - 1). Throws DomainError for delta < 1.
Integer g_threshold(const Integer& delta);

/// Residue of a signed column of B^{-1} in B^{-1} Z^n / Z^n, stored as the
/// adjugate numerators reduced into [0, modulus).
struct ResidueKey {
  std::vector<Integer> key;
  Integer modulus;

  bool is_zero() const;
  /// Order of the class in the quotient group: modulus / gcd(modulus, key).
  Integer order() const;
  bool operator==(const ResidueKey&) const = default;
  /// Lexicographic on key, then modulus.
  bool operator<(const ResidueKey& other) const;
};

ResidueKey residue_key(const ScaledInverse& inv, Index column, int sign);

struct SignedMember {
  Index column;
  int sign;  // +1 or -1
  bool operator==(const SignedMember&) const = default;
};

/// Signed columns h_k = sign_k * r_{column_k} of B^{-1} sharing one residue
/// class, with pairwise distinct columns, ascending by column.
struct SignedSelection {
  std::vector<SignedMember> members;
  ResidueKey target;
};

/// Groups columns by the pair class {k, -k} (lexicographically smaller key),
/// takes the lexicographically smallest class holding at least `delta`
/// columns and returns its first `delta` columns signed into that class.
/// Throws PreconditionError if some column is integral or |det B| < 2 and
/// InvariantError if no class is large enough.
SignedSelection select_same_class(const ScaledInverse& inv, const Integer& delta);

/// The selection the solver actually uses. Prefers select_same_class's choice
/// restricted to classes C with delta * C = 0, so that the sum of the members
/// is integral. If no such class has delta columns (possible when |det B| <
/// delta, or when the quotient group is not cyclic) it falls back to the
/// smallest class C with at least order(C) columns and takes order(C) of them.
/// Counting shows one of the two always exists once n >= g(delta) + 1.
SignedSelection select_closing_class(const ScaledInverse& inv, const Integer& delta);

struct TestVectors {
  /// Every ordered difference h_a - h_b (a != b, lexicographic in member
  /// positions) followed by the sum s.
  std::vector<IntVector> all;
  /// chain[k] = h_k - h_{k+1}.
  std::vector<IntVector> chain;
  IntVector sum;
  std::size_t member_count = 0;

  /// Position in `all` of h_a - h_b, by member positions.
  std::size_t difference_index(std::size_t a, std::size_t b) const;
  std::size_t sum_index() const { return all.size() - 1; }
};

/// Throws InvariantError when a candidate is non-integral or zero.
TestVectors build_test_vectors(const ScaledInverse& inv, const SignedSelection& sel);

struct ShortVector {
  IntVector z;
  IntVector y;  // A z, infinity norm 1
  Integer norm;
};

struct Certificate {
  IndexList rows;     // rows of A forming the submatrix
  Integer det_value;  // signed determinant, |det_value| > delta
};

using SvpOutcome = std::variant<ShortVector, Certificate>;

struct ThresholdState {
  IndexList base_rows;  // base_rows[k] is row k of the current B
  Index iteration = 0;
  Integer det_abs;
};

/// Which branch produced a transition or a final outcome.
enum class StepKind {
  kCertificate,       // |det B| > delta
  kScalarUpdate,      // some |a_k^T r_j| > 1, row j of B replaced
  kIntegralColumn,    // some r_j integral, returned A r_j
  kTestVector,        // a test vector has infinity norm 1
  kDifferenceUpdate,  // a chain row violates the cut-off property
  kSumUpdate,         // replace all selected rows by chain rows plus the sum row
};

const char* to_string(StepKind kind);

struct Continue {
  ThresholdState state;
  StepKind via;
};

struct Done {
  SvpOutcome outcome;
  StepKind via;
};

using StepResult = std::variant<Continue, Done>;

/// The starting state: find_invertible_rows(A), iteration 0.
ThresholdState initial_state(const IntMatrix& a);

/// One pass of the solver from `state`. Every Continue satisfies
/// new |det| >= old |det| + 1; a violation raises InvariantError.
StepResult threshold_step(const IntMatrix& a, const Integer& delta, const ThresholdState& state);

struct ThresholdRun {
  SvpOutcome outcome;
  std::vector<ThresholdState> states;  // states[0] is the initial state
  std::vector<StepKind> transitions;   // one per Continue, then the final step
};

ThresholdRun solve_threshold_traced(const IntMatrix& a, const Integer& delta);
SvpOutcome solve_threshold(const IntMatrix& a, const Integer& delta);

/// Outcome of the dispatcher. ShortVector and OracleResult report z in the
/// coordinates of the input matrix.
using DispatchOutcome = std::variant<ShortVector, Certificate, OracleResult>;

struct DispatchOptions {
  EnumerationBudget box_budget = EnumerationBudget::box();
};

/// HNF-reduces A to a full-column-rank basis of the same lattice, then runs
/// the threshold solver when n >= g(delta) + 1 and the exact box oracle
/// otherwise.
DispatchOutcome solve_svp(const IntMatrix& a, const Integer& delta, DispatchOptions options = {});

}  // namespace dmsvp
