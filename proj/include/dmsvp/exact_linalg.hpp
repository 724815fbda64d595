#pragma once

// Exact integer and rational linear algebra over Eigen dense matrices with
// GMP-backed scalars. Nothing here touches floating point.

#include <utility>

#include "dmsvp/combinations.hpp"
#include "dmsvp/errors.hpp"
#include "dmsvp/scalar.hpp"

namespace dmsvp {

/// Fraction-free (single-step Bareiss) determinant. Pivots on the first
/// nonzero entry of each column. Works for any exact ring scalar where the
/// Bareiss divisions are exact (Integer, Rational).
template <typename Derived>
typename Derived::Scalar det(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw DimensionError("det: matrix is not square");
  const Index n = m.rows();
  if (n == 0) return Scalar(1);
  MatrixX<Scalar> w = m;
  Scalar prev(1);
  bool negate = false;
  for (Index k = 0; k + 1 < n; ++k) {
    Index p = k;
    while (p < n && w(p, k) == 0) ++p;
    if (p == n) return Scalar(0);
    if (p != k) {
      w.row(p).swap(w.row(k));
      negate = !negate;
    }
    for (Index i = k + 1; i < n; ++i) {
      for (Index j = k + 1; j < n; ++j) w(i, j) = (w(i, j) * w(k, k) - w(i, k) * w(k, j)) / prev;
      w(i, k) = 0;
    }
    prev = w(k, k);
  }
  return negate ? Scalar(-w(n - 1, n - 1)) : w(n - 1, n - 1);
}

/// Rank over the rationals via fraction-free row echelon reduction.
template <typename Derived>
Index rank(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  MatrixX<Scalar> w = m;
  const Index rows = w.rows(), cols = w.cols();
  Index r = 0;
  Scalar prev(1);
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index p = r;
    while (p < rows && w(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r) w.row(p).swap(w.row(r));
    for (Index i = r + 1; i < rows; ++i) {
      for (Index j = c + 1; j < cols; ++j) w(i, j) = (w(i, j) * w(r, c) - w(i, c) * w(r, j)) / prev;
      w(i, c) = 0;
    }
    prev = w(r, c);
    ++r;
  }
  return r;
}

inline RatMatrix to_rational(const IntMatrix& m) { return m.cast<Rational>(); }

/// Exact inverse over the rationals (Gauss-Jordan). Throws on singular input.
RatMatrix inverse(const RatMatrix& m);

/// Classical adjoint: M * adj(M) = det(M) * I, singular M included.
IntMatrix adjugate(const IntMatrix& m);

/// B^{-1} kept as (adj(B), det(B)) with the denominator left unreduced.
struct ScaledInverse {
  IntMatrix numerator;
  Integer denominator;

  Index size() const { return numerator.rows(); }
  /// True iff column j of B^{-1} is an integer vector.
  bool column_is_integral(Index j) const;
  /// Column j of B^{-1}; requires column_is_integral(j).
  IntVector integral_column(Index j) const;
  RatMatrix to_rational() const;
};

/// Throws SingularMatrixError when det(B) = 0.
ScaledInverse scaled_inverse(const IntMatrix& b);

/// Greedy ascending scan: keep row k iff it raises the rank of the rows kept
/// so far. Throws RankDeficientError when rank(A) < cols(A).
IndexList find_invertible_rows(const IntMatrix& a);

/// Column-style Hermite normal form: A * U = H with U unimodular.
struct HermiteForm {
  IntMatrix h;
  IntMatrix u;
  Index rank = 0;  // number of nonzero (leading) columns of h
};

HermiteForm hnf(const IntMatrix& a);

/// True iff `h` has column-style Hermite normal form shape: strictly
/// descending pivot rows, positive pivots, zeros above each pivot, entries
/// left of a pivot reduced into [0, pivot), zero columns trailing.
bool is_hermite_normal_form(const IntMatrix& h);

struct SubdeterminantWitness {
  Integer value;     // max |det| over full-rank n x n row subsets
  IndexList rows;    // lexicographically first maximizer
};

SubdeterminantWitness max_abs_full_rank_subdet(const IntMatrix& a,
                                               EnumerationBudget budget = EnumerationBudget::minors());

/// True iff every square minor of every size has |det| <= delta.
bool is_totally_delta_modular(const IntMatrix& a, const Integer& delta,
                              EnumerationBudget budget = EnumerationBudget::minors());

/// gcd of |det| over all maximal square submatrices (taken along the longer
/// dimension), zeros ignored. Throws RankDeficientError when all vanish.
Integer gcd_full_rank_subdets(const IntMatrix& a, EnumerationBudget budget = EnumerationBudget::minors());

/// Both sides of the determinant-ratio identity for B = A_S:
///   |det (A B^{-1})_{I,J}|   and   |det(a_I ; b_{not J})| / |det B|.
struct RatioSides {
  Rational lhs;
  Rational rhs;
};

RatioSides subdet_ratio_sides(const IntMatrix& a, const IndexList& s, const IndexList& i_rows,
                              const IndexList& j_cols);

bool subdet_ratio_check(const IntMatrix& a, const IndexList& s, const IndexList& i_rows,
                        const IndexList& j_cols);

}  // namespace dmsvp
