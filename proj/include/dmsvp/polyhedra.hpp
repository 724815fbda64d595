#pragma once

// Exact, desk-scale verifiers for polyhedral consequences of bounded
// subdeterminants: face dimensions of integer-hull vertices, support of
// optimal standard-form solutions, and the kernel-lattice minor identity.
// Everything runs in Integer / Rational arithmetic; no floating point.

#include <optional>
#include <string>
#include <vector>

#include "dmsvp/combinations.hpp"
#include "dmsvp/scalar.hpp"

namespace dmsvp {

/// {x in R^n : A x <= b}.
struct PolyhedronH {
  IntMatrix a;
  IntVector b;

  Index dim() const { return a.cols(); }
  /// Throws DimensionError when rows(a) != size(b).
  void validate() const;
  bool contains(const IntVector& x) const;
  bool contains(const RatVector& x) const;
};

/// max { c^T x : A x = b, x >= 0, x integer } with A of full row rank.
struct StandardFormILP {
  IntMatrix a;
  IntVector b;
  IntVector c;

  /// Throws DimensionError / RankDeficientError.
  void validate() const;
};

/// Exact vertex coordinates; boost rationals are always reduced with a
/// positive denominator.
using RationalPoint = RatVector;

/// Some lambda >= 0 with M lambda = rhs, or nullopt when none exists.
/// Phase-1 simplex over the rationals with Bland's rule.
std::optional<RatVector> find_nonnegative_solution(const RatMatrix& m, const RatVector& rhs);

/// True iff P has a point (exact LP feasibility).
bool is_nonempty(const PolyhedronH& p);

/// True iff rank(A) = n and no extreme ray d != 0 has A d <= 0. Requires
/// C(m, n-1) within budget.
bool is_bounded(const PolyhedronH& p, EnumerationBudget budget = EnumerationBudget::minors());

/// All vertices of a nonempty polytope, sorted lexicographically.
/// Throws EmptyPolyhedronError, UnboundedError, DomainError (n > 5) or
/// EnumerationLimitError.
std::vector<RationalPoint> vertices_of_polyhedron(const PolyhedronH& p,
                                                  EnumerationBudget budget = EnumerationBudget::minors());

/// Lattice points of a polytope by scanning the integer bounding box of its
/// vertices; lexicographic order.
std::vector<IntVector> integer_points(const PolyhedronH& p, EnumerationBudget box_budget = EnumerationBudget::box());

/// Points that are not convex combinations of the others (duplicates
/// collapsed), in input order.
std::vector<IntVector> extreme_points(const std::vector<IntVector>& points);

/// Vertices of conv(P cap Z^n).
std::vector<IntVector> integer_hull_vertices(const PolyhedronH& p,
                                             EnumerationBudget box_budget = EnumerationBudget::box());

/// True iff `x` is a convex combination of `points`.
bool in_convex_hull(const std::vector<IntVector>& points, const IntVector& x);

/// n - rank of the rows tight at v. Throws ContainmentError when v is not in P.
Index min_face_dimension(const PolyhedronH& p, const IntVector& v);

struct FaceDimensionEntry {
  IntVector vertex;
  Index face_dimension = 0;
  bool passed = false;
};

struct Theorem3Report {
  Integer delta;
  Integer bound;           // g_threshold(delta)
  Integer max_subdet;      // max |full-rank minor| of A, recomputed
  std::vector<FaceDimensionEntry> entries;
  bool passed = false;
};

/// Face dimension of every integer-hull vertex against g_threshold(delta).
/// Throws PreconditionError when A is not of full column rank or has a
/// full-rank minor exceeding delta.
Theorem3Report verify_theorem3(const PolyhedronH& p, const Integer& delta,
                               EnumerationBudget minor_budget = EnumerationBudget::minors(),
                               EnumerationBudget box_budget = EnumerationBudget::box());

/// Basis of {x in Z^n : A x = 0} from the unimodular HNF transform, each
/// column with its first nonzero entry positive. n x (n - m).
IntMatrix kernel_lattice_basis(const IntMatrix& a);

struct Lemma2Entry {
  IndexList columns;  // I, |I| = m
  Rational lhs;       // |det A_{., I}| / gcd(A)
  Rational rhs;       // |det W_{complement(I), .}| / gcd(W)
};

struct Lemma2Report {
  IntMatrix kernel;
  Integer gcd_a;
  Integer gcd_w;
  std::vector<Lemma2Entry> entries;
  bool passed = false;
};

Lemma2Report lemma2_report(const IntMatrix& a, EnumerationBudget budget = EnumerationBudget::minors());
bool verify_lemma2(const IntMatrix& a, EnumerationBudget budget = EnumerationBudget::minors());

struct IlpSolutions {
  std::optional<Integer> optimum;
  std::vector<IntVector> optimizers;  // lexicographic order
  Integer visited;                    // box points enumerated
};

/// Complete enumeration of 0 <= x <= box with A x = b.
IlpSolutions solve_standard_form_ilp(const StandardFormILP& ilp, const IntVector& box,
                                     EnumerationBudget budget = EnumerationBudget::box());

struct BoxDerivation {
  IntVector box;
  /// Per variable: the row whose propagation produced the final bound.
  IndexList source_rows;
  std::vector<std::string> log;
};

/// Upper bounds on nonnegative solutions of A x = b by bound propagation:
/// for a_ij > 0, a_ij x_j <= b_i - sum over a_ik < 0 of a_ik * u_k.
/// Iterated to a fixpoint. Throws UnboundedError if a variable stays free.
BoxDerivation derive_box(const IntMatrix& a, const IntVector& b);

inline Index support_size(const IntVector& x) {
  Index s = 0;
  for (Index i = 0; i < x.size(); ++i)
    if (x(i) != 0) ++s;
  return s;
}

struct Theorem4Report {
  Integer delta;
  Integer bound;  // m + g_threshold(delta)
  Index optimizer_count = 0;
  std::optional<Index> min_support;
  std::optional<IntVector> sparsest;
  bool passed = false;  // vacuous when no feasible point lies in the box
};

Theorem4Report verify_theorem4(const StandardFormILP& ilp, const Integer& delta, const IntVector& box,
                               EnumerationBudget budget = EnumerationBudget::box());

struct Prop1Report {
  Integer delta;
  IntMatrix a;
  IntVector b;
  BoxDerivation box;
  std::vector<IntVector> feasible;
  bool unique_all_ones = false;
  Index support = 0;
  Index expected_support = 0;  // m + delta - 1
  bool totally_delta_modular = false;
  bool passed = false;
};

/// Supported for delta in {2, 3}; DomainError otherwise.
Prop1Report verify_prop1(const Integer& delta, EnumerationBudget minor_budget = EnumerationBudget::minors(),
                         EnumerationBudget box_budget = EnumerationBudget::box());

}  // namespace dmsvp
