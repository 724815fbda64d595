#include "dmsvp/svp_oracle.hpp"

#include <cstdint>
#include <vector>

#include "dmsvp/errors.hpp"
#include "dmsvp/exact_linalg.hpp"

namespace dmsvp {

namespace {

using Small = std::int64_t;

template <typename T>
T abs_of(const T& x) {
  return x < 0 ? T(-x) : x;
}

template <typename T>
T to_scalar(const Integer& x) {
  if constexpr (std::is_same_v<T, Integer>) {
    return x;
  } else {
    return x.convert_to<T>();
  }
}

template <typename T>
MatrixX<T> convert(const IntMatrix& a) {
  MatrixX<T> out(a.rows(), a.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) out(i, j) = to_scalar<T>(a(i, j));
  return out;
}

// Entries of a canonical-order key: 1-norm first, then per position larger
// magnitude first, positive before negative.
template <typename Vec>
bool canonical_less_impl(const Vec& lhs, const Vec& rhs, std::size_t n) {
  Integer l1 = 0, r1 = 0;
  for (std::size_t i = 0; i < n; ++i) {
    l1 += abs(Integer(lhs[i]));
    r1 += abs(Integer(rhs[i]));
  }
  if (l1 != r1) return l1 < r1;
  for (std::size_t i = 0; i < n; ++i) {
    const Integer a(lhs[i]), b(rhs[i]);
    if (a == b) continue;
    const Integer aa = abs(a), ab = abs(b);
    if (aa != ab) return aa > ab;
    return a > 0;
  }
  return false;
}

bool fits_small(const Integer& bound) { return bound < (Integer(1) << 62); }

Integer max_row_abs_sum(const IntMatrix& a) {
  Integer best = 0;
  for (Index i = 0; i < a.rows(); ++i) {
    Integer s = 0;
    for (Index j = 0; j < a.cols(); ++j) s += abs(a(i, j));
    if (s > best) best = s;
  }
  return best;
}

template <typename T>
OracleResult box_search(const IntMatrix& a_in, Small k) {
  const MatrixX<T> a = convert<T>(a_in);
  const Index m = a.rows(), n = a.cols();
  std::vector<Small> z(static_cast<std::size_t>(n), -k);
  VectorX<T> y = VectorX<T>::Zero(m);
  for (Index j = 0; j < n; ++j) y -= T(k) * a.col(j);
  Index zeros = (k == 0) ? n : 0;

  bool have = false;
  T best_norm = T(0);
  std::vector<Small> best_z;
  while (true) {
    if (zeros != n) {
      T norm = T(0);
      for (Index i = 0; i < m; ++i) {
        const T v = abs_of(y(i));
        if (v > norm) norm = v;
      }
      if (!have || norm < best_norm || (norm == best_norm && canonical_less_impl(z, best_z, z.size()))) {
        have = true;
        best_norm = norm;
        best_z = z;
      }
    }
    Index i = 0;
    for (; i < n; ++i) {
      auto& digit = z[static_cast<std::size_t>(i)];
      if (digit < k) {
        if (digit == 0) --zeros;
        ++digit;
        if (digit == 0) ++zeros;
        y += a.col(i);
        break;
      }
      digit = -k;
      y -= T(2 * k) * a.col(i);
    }
    if (i == n) break;
  }

  OracleResult out;
  out.z.resize(n);
  for (Index j = 0; j < n; ++j) out.z(j) = Integer(best_z[static_cast<std::size_t>(j)]);
  out.y = a_in * out.z;
  out.norm = infinity_norm(out.y);
  return out;
}

template <typename T>
std::optional<IntVector> preimage_search(const IntMatrix& a_in, const IntMatrix& adj_in, const Integer& d_in) {
  const MatrixX<T> a = convert<T>(a_in);
  const MatrixX<T> adj = convert<T>(adj_in);
  const T d = to_scalar<T>(d_in);
  const Index m = a.rows(), n = a.cols();

  std::vector<Small> v(static_cast<std::size_t>(n), -1);
  VectorX<T> w = VectorX<T>::Zero(n);
  for (Index j = 0; j < n; ++j) w -= adj.col(j);
  Index zeros = 0;

  std::optional<IntVector> best;
  VectorX<T> z(n);
  while (true) {
    if (zeros != n) {
      bool integral = true;
      for (Index i = 0; i < n && integral; ++i) integral = (w(i) % d == 0);
      if (integral) {
        for (Index i = 0; i < n; ++i) z(i) = w(i) / d;
        bool short_vector = true;
        for (Index r = 0; r < m && short_vector; ++r) {
          T s = T(0);
          for (Index j = 0; j < n; ++j) s += a(r, j) * z(j);
          short_vector = abs_of(s) <= T(1);
        }
        if (short_vector) {
          IntVector cand(n);
          for (Index i = 0; i < n; ++i) cand(i) = Integer(z(i));
          if (!best || canonical_less(cand, *best)) best = cand;
        }
      }
    }
    Index i = 0;
    for (; i < n; ++i) {
      auto& digit = v[static_cast<std::size_t>(i)];
      if (digit < 1) {
        if (digit == 0) --zeros;
        ++digit;
        if (digit == 0) ++zeros;
        w += adj.col(i);
        break;
      }
      digit = -1;
      w -= T(2) * adj.col(i);
    }
    if (i == n) break;
  }
  return best;
}

}  // namespace

bool canonical_less(const IntVector& lhs, const IntVector& rhs) {
  if (lhs.size() != rhs.size()) throw DimensionError("canonical_less: size mismatch");
  return canonical_less_impl(lhs, rhs, static_cast<std::size_t>(lhs.size()));
}

Integer enum_bound(const IntMatrix& a) {
  const IndexList s = find_invertible_rows(a);
  const Index n = a.cols();
  Integer u = -1;
  for (Index j = 0; j < n; ++j) {
    const Integer c = infinity_norm(a.col(j));
    if (u < 0 || c < u) u = c;
  }
  const ScaledInverse inv = scaled_inverse(select_rows(a, s));
  const Integer d = abs(inv.denominator);
  Integer k = 1;
  for (Index i = 0; i < n; ++i) {
    Integer row_norm = 0;
    for (Index j = 0; j < n; ++j) row_norm += abs(inv.numerator(i, j));
    const Integer bound = row_norm * u / d;
    if (bound > k) k = bound;
  }
  return k;
}

OracleResult brute_force_svp(const IntMatrix& a, const Integer& k, EnumerationBudget budget) {
  if (k < 1) throw DomainError("brute_force_svp: bound K must be >= 1");
  find_invertible_rows(a);  // full column rank check
  budget.require(power(2 * k + 1, static_cast<std::uint64_t>(a.cols())), "brute_force_svp");
  const Small ks = k.convert_to<Small>();
  if (fits_small(max_row_abs_sum(a) * k * 2)) return box_search<Small>(a, ks);
  return box_search<Integer>(a, ks);
}

AtLeastTwoResult shortest_is_at_least_2(const IntMatrix& a, EnumerationBudget budget) {
  const IndexList s = find_invertible_rows(a);
  budget.require(power(3, static_cast<std::uint64_t>(a.cols())), "shortest_is_at_least_2");
  const ScaledInverse inv = scaled_inverse(select_rows(a, s));
  const Integer w_bound = max_row_abs_sum(inv.numerator);
  std::optional<IntVector> witness;
  if (fits_small(w_bound * (max_row_abs_sum(a) + 1) * 2))
    witness = preimage_search<Small>(a, inv.numerator, inv.denominator);
  else
    witness = preimage_search<Integer>(a, inv.numerator, inv.denominator);
  return {!witness.has_value(), witness};
}

bool probe_f_lower(const IntMatrix& a, const Integer& delta, EnumerationBudget minor_budget,
                   EnumerationBudget preimage_budget) {
  if (max_abs_full_rank_subdet(a, minor_budget).value != delta) return false;
  return shortest_is_at_least_2(a, preimage_budget).at_least_two;
}

}  // namespace dmsvp
