#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <Eigen/Dense>

namespace dmsvp {

// Expression templates are disabled: they interact badly with Eigen's own
// expression machinery and buy nothing at the matrix sizes we handle.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = MatrixX<Integer>;
using IntVector = VectorX<Integer>;
using RatMatrix = MatrixX<Rational>;
using RatVector = VectorX<Rational>;

using Index = Eigen::Index;

/// Ordered list of 0-based row (or column) indices.
using IndexList = std::vector<Index>;

inline Integer abs(const Integer& x) { return x < 0 ? Integer(-x) : x; }

/// Floor division for arbitrary-precision integers (rounds toward -inf).
inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

/// Canonical representative of a mod m in [0, |m|).
inline Integer mod_floor(const Integer& a, const Integer& m) {
  const Integer am = abs(m);
  Integer r = a % am;
  if (r < 0) r += am;
  return r;
}

inline Integer infinity_norm(const IntVector& v) {
  Integer best = 0;
  for (Index i = 0; i < v.size(); ++i) {
    const Integer a = abs(v(i));
    if (a > best) best = a;
  }
  return best;
}

inline std::string to_string(const Integer& x) { return x.str(); }

/// Rows of `a` selected by `rows`, in list order.
inline IntMatrix select_rows(const IntMatrix& a, const IndexList& rows) {
  IntMatrix out(static_cast<Index>(rows.size()), a.cols());
  for (std::size_t k = 0; k < rows.size(); ++k) out.row(static_cast<Index>(k)) = a.row(rows[k]);
  return out;
}

inline IntMatrix select_cols(const IntMatrix& a, const IndexList& cols) {
  IntMatrix out(a.rows(), static_cast<Index>(cols.size()));
  for (std::size_t k = 0; k < cols.size(); ++k) out.col(static_cast<Index>(k)) = a.col(cols[k]);
  return out;
}

inline IntMatrix select(const IntMatrix& a, const IndexList& rows, const IndexList& cols) {
  IntMatrix out(static_cast<Index>(rows.size()), static_cast<Index>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      out(static_cast<Index>(i), static_cast<Index>(j)) = a(rows[i], cols[j]);
  return out;
}

}  // namespace dmsvp
