#pragma once

// Complete, deliberately naive reference procedures for the infinity-norm
// shortest vector problem. They validate the threshold solver and probe the
// "shortest vector has norm >= 2" property of small lattices.

#include <optional>

#include "dmsvp/combinations.hpp"
#include "dmsvp/scalar.hpp"

namespace dmsvp {

struct OracleResult {
  IntVector z;   // canonical minimizer
  IntVector y;   // A z
  Integer norm;  // ||A z||_inf
};

/// Canonical witness order: smaller 1-norm first, then lexicographic with
/// larger magnitudes first and positive before negative at each position.
/// Under it e_1 precedes every other unit vector and (1,-1) precedes (-1,1).
bool canonical_less(const IntVector& lhs, const IntVector& rhs);

/// K such that some nonzero minimizer of ||Az||_inf lies in [-K, K]^n.
Integer enum_bound(const IntMatrix& a);

/// Exact minimum of ||Az||_inf over z in [-K, K]^n \ {0} with the canonical
/// minimizer. Global optimum whenever K >= enum_bound(A).
OracleResult brute_force_svp(const IntMatrix& a, const Integer& k,
                             EnumerationBudget budget = EnumerationBudget::box());

struct AtLeastTwoResult {
  bool at_least_two = false;
  std::optional<IntVector> witness;  // canonical z with ||Az||_inf = 1 when !at_least_two
};

/// Decides whether every nonzero lattice vector has infinity norm >= 2 by
/// enumerating the 3^n preimages B^{-1} v, v in {-1,0,1}^n, of an invertible
/// row submatrix B.
AtLeastTwoResult shortest_is_at_least_2(const IntMatrix& a,
                                        EnumerationBudget budget = EnumerationBudget::preimages());

/// True iff A is exactly delta-modular and its lattice has no vector of
/// infinity norm 1, i.e. A certifies f(delta) >= cols(A).
bool probe_f_lower(const IntMatrix& a, const Integer& delta,
                   EnumerationBudget minor_budget = EnumerationBudget::minors(),
                   EnumerationBudget preimage_budget = EnumerationBudget::preimages());

}  // namespace dmsvp
