#include "dmsvp/exact_linalg.hpp"

#include <algorithm>
#include <tuple>

namespace dmsvp {

namespace {

void require_square(const IntMatrix& m, const char* what) {
  if (m.rows() != m.cols()) throw DimensionError(std::string(what) + ": matrix is not square");
}

// Returns (g, x, y) with x*a + y*b = g = gcd(a, b) >= 0.
std::tuple<Integer, Integer, Integer> extended_gcd(const Integer& a, const Integer& b) {
  Integer old_r = a, r = b, old_x = 1, x = 0, old_y = 0, y = 1;
  while (r != 0) {
    const Integer q = old_r / r;
    std::tie(old_r, r) = std::make_tuple(r, Integer(old_r - q * r));
    std::tie(old_x, x) = std::make_tuple(x, Integer(old_x - q * x));
    std::tie(old_y, y) = std::make_tuple(y, Integer(old_y - q * y));
  }
  if (old_r < 0) return {Integer(-old_r), Integer(-old_x), Integer(-old_y)};
  return {old_r, old_x, old_y};
}

IntMatrix cofactor_adjugate(const IntMatrix& m) {
  const Index n = m.rows();
  IntMatrix adj(n, n);
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  IntMatrix minor(n - 1, n - 1);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      for (Index r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (Index c = 0, cc = 0; c < n; ++c) {
          if (c == j) continue;
          minor(rr, cc++) = m(r, c);
        }
        ++rr;
      }
      const Integer cof = det(minor);
      adj(j, i) = ((i + j) % 2 == 0) ? cof : Integer(-cof);
    }
  }
  return adj;
}

}  // namespace

RatMatrix inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("inverse: matrix is not square");
  const Index n = m.rows();
  RatMatrix w = m;
  RatMatrix inv = RatMatrix::Identity(n, n);
  for (Index c = 0; c < n; ++c) {
    Index p = c;
    while (p < n && w(p, c) == 0) ++p;
    if (p == n) throw SingularMatrixError("inverse: matrix is singular");
    if (p != c) {
      w.row(p).swap(w.row(c));
      inv.row(p).swap(inv.row(c));
    }
    const Rational pivot = w(c, c);
    w.row(c) /= pivot;
    inv.row(c) /= pivot;
    for (Index i = 0; i < n; ++i) {
      if (i == c || w(i, c) == 0) continue;
      const Rational f = w(i, c);
      w.row(i) -= f * w.row(c);
      inv.row(i) -= f * inv.row(c);
    }
  }
  return inv;
}

IntMatrix adjugate(const IntMatrix& m) {
  require_square(m, "adjugate");
  const Index n = m.rows();
  if (n == 0) return IntMatrix(0, 0);
  const Integer d = det(m);
  if (d == 0) return cofactor_adjugate(m);
  const RatMatrix inv = inverse(to_rational(m));
  IntMatrix adj(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      const Rational v = inv(i, j) * Rational(d);
      if (boost::multiprecision::denominator(v) != 1)
        throw InvariantError("adjugate: det * inverse is not integral");
      adj(i, j) = boost::multiprecision::numerator(v);
    }
  }
  return adj;
}

bool ScaledInverse::column_is_integral(Index j) const {
  for (Index i = 0; i < numerator.rows(); ++i)
    if (numerator(i, j) % denominator != 0) return false;
  return true;
}

IntVector ScaledInverse::integral_column(Index j) const {
  IntVector v(numerator.rows());
  for (Index i = 0; i < numerator.rows(); ++i) {
    if (numerator(i, j) % denominator != 0)
      throw InvariantError("ScaledInverse: column " + std::to_string(j) + " is not integral");
    v(i) = numerator(i, j) / denominator;
  }
  return v;
}

RatMatrix ScaledInverse::to_rational() const {
  RatMatrix r = dmsvp::to_rational(numerator);
  const Rational d(denominator);
  for (Index i = 0; i < r.rows(); ++i)
    for (Index j = 0; j < r.cols(); ++j) r(i, j) /= d;
  return r;
}

ScaledInverse scaled_inverse(const IntMatrix& b) {
  require_square(b, "scaled_inverse");
  ScaledInverse s{adjugate(b), det(b)};
  if (s.denominator == 0) throw SingularMatrixError("scaled_inverse: matrix is singular");
  return s;
}

IndexList find_invertible_rows(const IntMatrix& a) {
  const Index n = a.cols();
  IndexList kept;
  // Kept rows in reduced echelon form over Q; pivot_col[k] is the pivot of basis row k.
  std::vector<RatVector> basis;
  std::vector<Index> pivot_col;
  for (Index k = 0; k < a.rows() && static_cast<Index>(kept.size()) < n; ++k) {
    RatVector v = a.row(k).transpose().cast<Rational>();
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const Rational f = v(pivot_col[b]);
      if (f != 0) v -= f * basis[b];
    }
    Index p = 0;
    while (p < n && v(p) == 0) ++p;
    if (p == n) continue;
    v /= Rational(v(p));
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const Rational f = basis[b](p);
      if (f != 0) basis[b] -= f * v;
    }
    basis.push_back(v);
    pivot_col.push_back(p);
    kept.push_back(k);
  }
  if (static_cast<Index>(kept.size()) < n)
    throw RankDeficientError("matrix does not have full column rank (rank " + std::to_string(kept.size()) +
                             " < " + std::to_string(n) + ")");
  return kept;
}

HermiteForm hnf(const IntMatrix& a) {
  const Index m = a.rows(), n = a.cols();
  IntMatrix h = a;
  IntMatrix u = IntMatrix::Identity(n, n);
  Index c = 0;
  for (Index i = 0; i < m && c < n; ++i) {
    for (Index j = c + 1; j < n; ++j) {
      if (h(i, j) == 0) continue;
      if (h(i, c) == 0) {
        h.col(c).swap(h.col(j));
        u.col(c).swap(u.col(j));
        continue;
      }
      const Integer x_c = h(i, c), x_j = h(i, j);
      if (x_j % x_c == 0) {
        const Integer q = x_j / x_c;
        h.col(j) -= q * h.col(c);
        u.col(j) -= q * u.col(c);
        continue;
      }
      const auto [g, s, t] = extended_gcd(x_c, x_j);
      const Integer p = -x_j / g, q = x_c / g;
      const IntVector hc = h.col(c), uc = u.col(c);
      h.col(c) = s * hc + t * h.col(j);
      u.col(c) = s * uc + t * u.col(j);
      h.col(j) = p * hc + q * h.col(j);
      u.col(j) = p * uc + q * u.col(j);
    }
    if (h(i, c) == 0) continue;
    if (h(i, c) < 0) {
      h.col(c) = -h.col(c);
      u.col(c) = -u.col(c);
    }
    for (Index j = 0; j < c; ++j) {
      const Integer q = floor_div(h(i, j), h(i, c));
      if (q == 0) continue;
      h.col(j) -= q * h.col(c);
      u.col(j) -= q * u.col(c);
    }
    ++c;
  }
  return {std::move(h), std::move(u), c};
}

bool is_hermite_normal_form(const IntMatrix& h) {
  const Index m = h.rows(), n = h.cols();
  Index prev_pivot = -1;
  bool seen_zero = false;
  for (Index c = 0; c < n; ++c) {
    Index p = 0;
    while (p < m && h(p, c) == 0) ++p;
    if (p == m) {
      seen_zero = true;
      continue;
    }
    if (seen_zero || p <= prev_pivot || h(p, c) <= 0) return false;
    for (Index j = 0; j < c; ++j)
      if (h(p, j) < 0 || h(p, j) >= h(p, c)) return false;
    prev_pivot = p;
  }
  return true;
}

SubdeterminantWitness max_abs_full_rank_subdet(const IntMatrix& a, EnumerationBudget budget) {
  const Index m = a.rows(), n = a.cols();
  if (rank(a) < n) throw RankDeficientError("max_abs_full_rank_subdet: matrix lacks full column rank");
  budget.require(binomial(static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(n)),
                 "max_abs_full_rank_subdet");
  SubdeterminantWitness best{0, {}};
  for_each_subset(m, n, [&](const IndexList& rows) {
    const Integer d = abs(det(select_rows(a, rows)));
    if (d > best.value) best = {d, rows};
    return true;
  });
  return best;
}

bool is_totally_delta_modular(const IntMatrix& a, const Integer& delta, EnumerationBudget budget) {
  const Index m = a.rows(), n = a.cols();
  const Index kmax = std::min(m, n);
  Integer total = 0;
  for (Index k = 1; k <= kmax; ++k)
    total += binomial(static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(k)) *
             binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k));
  budget.require(total, "is_totally_delta_modular");
  for (Index k = 1; k <= kmax; ++k) {
    const bool ok = for_each_subset(m, k, [&](const IndexList& rows) {
      return for_each_subset(n, k, [&](const IndexList& cols) {
        return abs(det(select(a, rows, cols))) <= delta;
      });
    });
    if (!ok) return false;
  }
  return true;
}

Integer gcd_full_rank_subdets(const IntMatrix& a, EnumerationBudget budget) {
  const bool wide = a.rows() <= a.cols();
  const Index k = wide ? a.rows() : a.cols();
  const Index pool = wide ? a.cols() : a.rows();
  budget.require(binomial(static_cast<std::uint64_t>(pool), static_cast<std::uint64_t>(k)),
                 "gcd_full_rank_subdets");
  Integer g = 0;
  for_each_subset(pool, k, [&](const IndexList& subset) {
    const Integer d = abs(wide ? det(select_cols(a, subset)) : det(select_rows(a, subset)));
    if (d != 0) g = boost::multiprecision::gcd(g, d);
    return g != 1;
  });
  if (g == 0) throw RankDeficientError("gcd_full_rank_subdets: every maximal minor vanishes");
  return g;
}

RatioSides subdet_ratio_sides(const IntMatrix& a, const IndexList& s, const IndexList& i_rows,
                              const IndexList& j_cols) {
  const Index n = a.cols();
  if (static_cast<Index>(s.size()) != n) throw DimensionError("subdet_ratio: |S| must equal cols(A)");
  if (i_rows.size() != j_cols.size()) throw DimensionError("subdet_ratio: |I| must equal |J|");
  if (static_cast<Index>(j_cols.size()) > n) throw DimensionError("subdet_ratio: |J| exceeds cols(A)");
  for (Index r : s)
    if (r < 0 || r >= a.rows()) throw DimensionError("subdet_ratio: S index out of range");
  for (Index r : i_rows)
    if (r < 0 || r >= a.rows()) throw DimensionError("subdet_ratio: I index out of range");
  std::vector<bool> in_j(static_cast<std::size_t>(n), false);
  for (Index c : j_cols) {
    if (c < 0 || c >= n) throw DimensionError("subdet_ratio: J index out of range");
    in_j[static_cast<std::size_t>(c)] = true;
  }

  const IntMatrix b = select_rows(a, s);
  const ScaledInverse inv = scaled_inverse(b);
  const Rational d(abs(inv.denominator));

  // (A B^{-1})_{I,J} = (A_I adj(B))_{., J} / det(B)
  const IntMatrix numer = select_rows(a, i_rows) * inv.numerator;
  RatMatrix sub = to_rational(select_cols(numer, j_cols));
  sub /= Rational(inv.denominator);
  Rational lhs = det(sub);
  if (lhs < 0) lhs = -lhs;

  IntMatrix mixed(n, n);
  Index r = 0;
  for (Index i : i_rows) mixed.row(r++) = a.row(i);
  for (Index j = 0; j < n; ++j)
    if (!in_j[static_cast<std::size_t>(j)]) mixed.row(r++) = b.row(j);
  const Rational rhs = Rational(abs(det(mixed))) / d;
  return {lhs, rhs};
}

bool subdet_ratio_check(const IntMatrix& a, const IndexList& s, const IndexList& i_rows,
                        const IndexList& j_cols) {
  const RatioSides sides = subdet_ratio_sides(a, s, i_rows, j_cols);
  return sides.lhs == sides.rhs;
}

}  // namespace dmsvp
