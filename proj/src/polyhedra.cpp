#include "dmsvp/polyhedra.hpp"

#include <algorithm>

#include "dmsvp/errors.hpp"
#include "dmsvp/exact_linalg.hpp"
#include "dmsvp/instance_gen.hpp"
#include "dmsvp/svp_threshold.hpp"

namespace dmsvp {

namespace {

Integer floor_of(const Rational& q) {
  return floor_div(boost::multiprecision::numerator(q), boost::multiprecision::denominator(q));
}

Integer ceil_of(const Rational& q) { return -floor_of(-q); }

template <typename Vec>
bool lex_less(const Vec& x, const Vec& y) {
  for (Index i = 0; i < x.size(); ++i) {
    if (x(i) < y(i)) return true;
    if (y(i) < x(i)) return false;
  }
  return false;
}

template <typename Vec>
bool same(const Vec& x, const Vec& y) {
  if (x.size() != y.size()) return false;
  for (Index i = 0; i < x.size(); ++i)
    if (x(i) != y(i)) return false;
  return true;
}

// Generalized cross product of the n-1 rows of `rows`: a nonzero kernel
// vector when they are independent.
IntVector kernel_direction(const IntMatrix& rows) {
  const Index n = rows.cols();
  IntVector d(n);
  for (Index j = 0; j < n; ++j) {
    IndexList keep;
    for (Index k = 0; k < n; ++k)
      if (k != j) keep.push_back(k);
    const Integer minor = det(select_cols(rows, keep));
    d(j) = (j % 2 == 0) ? minor : Integer(-minor);
  }
  return d;
}

bool all_nonpositive(const IntVector& v) {
  for (Index i = 0; i < v.size(); ++i)
    if (v(i) > 0) return false;
  return true;
}

}  // namespace

void PolyhedronH::validate() const {
  if (a.rows() != b.size()) throw DimensionError("polyhedron: A has " + std::to_string(a.rows()) +
                                                 " rows but b has " + std::to_string(b.size()) + " entries");
  if (a.cols() < 1) throw DimensionError("polyhedron: need at least one variable");
}

bool PolyhedronH::contains(const IntVector& x) const {
  if (x.size() != a.cols()) throw DimensionError("polyhedron: point has wrong dimension");
  const IntVector ax = a * x;
  for (Index i = 0; i < ax.size(); ++i)
    if (ax(i) > b(i)) return false;
  return true;
}

bool PolyhedronH::contains(const RatVector& x) const {
  if (x.size() != a.cols()) throw DimensionError("polyhedron: point has wrong dimension");
  const RatVector ax = to_rational(a) * x;
  for (Index i = 0; i < ax.size(); ++i)
    if (ax(i) > Rational(b(i))) return false;
  return true;
}

void StandardFormILP::validate() const {
  if (a.rows() != b.size() || a.cols() != c.size())
    throw DimensionError("standard-form ILP: inconsistent A, b, c dimensions");
  if (rank(a) != a.rows()) throw RankDeficientError("standard-form ILP: A must have full row rank");
}

std::optional<RatVector> find_nonnegative_solution(const RatMatrix& m, const RatVector& rhs) {
  const Index p = m.rows(), q = m.cols();
  if (rhs.size() != p) throw DimensionError("find_nonnegative_solution: size mismatch");

  // Columns 0..q-1 original, q..q+p-1 artificial, last column the right-hand side.
  const Index width = q + p + 1, rhs_col = q + p;
  RatMatrix tab = RatMatrix::Zero(p, width);
  for (Index i = 0; i < p; ++i) {
    const Rational s = rhs(i) < 0 ? Rational(-1) : Rational(1);
    for (Index j = 0; j < q; ++j) tab(i, j) = s * m(i, j);
    tab(i, q + i) = 1;
    tab(i, rhs_col) = s * rhs(i);
  }
  std::vector<Index> basis(static_cast<std::size_t>(p));
  for (Index i = 0; i < p; ++i) basis[static_cast<std::size_t>(i)] = q + i;

  // Reduced costs of the phase-1 objective (sum of artificials).
  RatVector cost = RatVector::Zero(width);
  for (Index j = 0; j < q; ++j)
    for (Index i = 0; i < p; ++i) cost(j) -= tab(i, j);
  for (Index i = 0; i < p; ++i) cost(rhs_col) -= tab(i, rhs_col);

  while (true) {
    Index enter = -1;
    for (Index j = 0; j < q + p; ++j) {
      if (cost(j) < 0) {
        enter = j;
        break;
      }
    }
    if (enter < 0) break;

    Index leave = -1;
    Rational best_ratio;
    for (Index i = 0; i < p; ++i) {
      if (tab(i, enter) <= 0) continue;
      const Rational ratio = tab(i, rhs_col) / tab(i, enter);
      if (leave < 0 || ratio < best_ratio ||
          (ratio == best_ratio && basis[static_cast<std::size_t>(i)] < basis[static_cast<std::size_t>(leave)])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave < 0) throw InvariantError("phase-1 simplex: objective unbounded below zero");

    const Rational piv = tab(leave, enter);
    tab.row(leave) /= piv;
    for (Index i = 0; i < p; ++i) {
      if (i == leave || tab(i, enter) == 0) continue;
      const Rational f = tab(i, enter);
      tab.row(i) -= f * tab.row(leave);
    }
    if (cost(enter) != 0) {
      const Rational f = cost(enter);
      cost -= f * tab.row(leave).transpose();
    }
    basis[static_cast<std::size_t>(leave)] = enter;
  }

  if (cost(rhs_col) != 0) return std::nullopt;
  RatVector x = RatVector::Zero(q);
  for (Index i = 0; i < p; ++i) {
    const Index j = basis[static_cast<std::size_t>(i)];
    if (j < q) x(j) = tab(i, rhs_col);
  }
  return x;
}

bool is_nonempty(const PolyhedronH& p) {
  p.validate();
  const Index m = p.a.rows(), n = p.a.cols();
  RatMatrix lifted(m, 2 * n + m);
  lifted << to_rational(p.a), -to_rational(p.a), RatMatrix::Identity(m, m);
  return find_nonnegative_solution(lifted, p.b.cast<Rational>()).has_value();
}

bool is_bounded(const PolyhedronH& p, EnumerationBudget budget) {
  p.validate();
  const Index m = p.a.rows(), n = p.a.cols();
  if (rank(p.a) < n) return false;
  budget.require(binomial(static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(n - 1)), "is_bounded");
  return for_each_subset(m, n - 1, [&](const IndexList& rows) {
    const IntMatrix sub = select_rows(p.a, rows);
    if (rank(sub) != n - 1) return true;
    const IntVector ad = p.a * kernel_direction(sub);
    return !(all_nonpositive(ad) || all_nonpositive(-ad));
  });
}

std::vector<RationalPoint> vertices_of_polyhedron(const PolyhedronH& p, EnumerationBudget budget) {
  p.validate();
  const Index m = p.a.rows(), n = p.a.cols();
  if (n > 5) throw DomainError("vertices_of_polyhedron: supported for n <= 5, got n = " + std::to_string(n));
  if (!is_nonempty(p)) throw EmptyPolyhedronError("polyhedron is empty");
  if (!is_bounded(p, budget)) throw UnboundedError("polyhedron is unbounded");
  budget.require(binomial(static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(n)), "vertices_of_polyhedron");

  std::vector<RationalPoint> out;
  for_each_subset(m, n, [&](const IndexList& rows) {
    const IntMatrix sub = select_rows(p.a, rows);
    const Integer d = det(sub);
    if (d == 0) return true;
    IntVector rhs(n);
    for (Index k = 0; k < n; ++k) rhs(k) = p.b(rows[static_cast<std::size_t>(k)]);
    const IntVector num = adjugate(sub) * rhs;
    RatVector x(n);
    for (Index k = 0; k < n; ++k) x(k) = Rational(num(k), d);
    if (p.contains(x)) out.push_back(std::move(x));
    return true;
  });
  std::sort(out.begin(), out.end(), lex_less<RatVector>);
  out.erase(std::unique(out.begin(), out.end(), same<RatVector>), out.end());
  return out;
}

std::vector<IntVector> integer_points(const PolyhedronH& p, EnumerationBudget box_budget) {
  const std::vector<RationalPoint> verts = vertices_of_polyhedron(p);
  const Index n = p.dim();
  IntVector lo(n), hi(n);
  for (Index j = 0; j < n; ++j) {
    Rational mn = verts.front()(j), mx = verts.front()(j);
    for (const RationalPoint& v : verts) {
      mn = std::min(mn, v(j));
      mx = std::max(mx, v(j));
    }
    lo(j) = ceil_of(mn);
    hi(j) = floor_of(mx);
  }
  Integer count = 1;
  for (Index j = 0; j < n; ++j) count *= (hi(j) >= lo(j)) ? Integer(hi(j) - lo(j) + 1) : Integer(0);
  box_budget.require(count, "integer_points");

  std::vector<IntVector> out;
  if (count == 0) return out;
  IntVector x = lo;
  while (true) {
    if (p.contains(x)) out.push_back(x);
    Index j = n - 1;
    for (; j >= 0; --j) {
      if (x(j) < hi(j)) {
        ++x(j);
        break;
      }
      x(j) = lo(j);
    }
    if (j < 0) break;
  }
  return out;
}

bool in_convex_hull(const std::vector<IntVector>& points, const IntVector& x) {
  if (points.empty()) return false;
  const Index n = x.size(), k = static_cast<Index>(points.size());
  RatMatrix m(n + 1, k);
  for (Index i = 0; i < k; ++i) {
    if (points[static_cast<std::size_t>(i)].size() != n) throw DimensionError("in_convex_hull: dimension mismatch");
    m.col(i).head(n) = points[static_cast<std::size_t>(i)].cast<Rational>();
    m(n, i) = 1;
  }
  RatVector rhs(n + 1);
  rhs.head(n) = x.cast<Rational>();
  rhs(n) = 1;
  return find_nonnegative_solution(m, rhs).has_value();
}

std::vector<IntVector> extreme_points(const std::vector<IntVector>& points) {
  std::vector<IntVector> distinct;
  for (const IntVector& p : points)
    if (std::none_of(distinct.begin(), distinct.end(), [&](const IntVector& q) { return same(p, q); }))
      distinct.push_back(p);

  std::vector<IntVector> out;
  for (std::size_t i = 0; i < distinct.size(); ++i) {
    std::vector<IntVector> others;
    for (std::size_t j = 0; j < distinct.size(); ++j)
      if (j != i) others.push_back(distinct[j]);
    if (!in_convex_hull(others, distinct[i])) out.push_back(distinct[i]);
  }
  return out;
}

std::vector<IntVector> integer_hull_vertices(const PolyhedronH& p, EnumerationBudget box_budget) {
  return extreme_points(integer_points(p, box_budget));
}

Index min_face_dimension(const PolyhedronH& p, const IntVector& v) {
  p.validate();
  if (!p.contains(v)) throw ContainmentError("min_face_dimension: point is not in P");
  const IntVector av = p.a * v;
  IndexList tight;
  for (Index i = 0; i < av.size(); ++i)
    if (av(i) == p.b(i)) tight.push_back(i);
  if (tight.empty()) return p.dim();
  return p.dim() - rank(select_rows(p.a, tight));
}

Theorem3Report verify_theorem3(const PolyhedronH& p, const Integer& delta, EnumerationBudget minor_budget,
                               EnumerationBudget box_budget) {
  p.validate();
  Theorem3Report report;
  report.delta = delta;
  report.bound = g_threshold(delta);
  if (rank(p.a) < p.dim()) throw RankDeficientError("verify_theorem3: A must have full column rank");
  report.max_subdet = max_abs_full_rank_subdet(p.a, minor_budget).value;
  if (report.max_subdet > delta)
    throw PreconditionError("verify_theorem3: A has a full-rank minor of absolute value " + report.max_subdet.str() +
                            " > delta = " + delta.str());

  report.passed = true;
  for (const IntVector& v : integer_hull_vertices(p, box_budget)) {
    FaceDimensionEntry e;
    e.vertex = v;
    e.face_dimension = min_face_dimension(p, v);
    e.passed = Integer(e.face_dimension) <= report.bound;
    report.passed = report.passed && e.passed;
    report.entries.push_back(std::move(e));
  }
  return report;
}

IntMatrix kernel_lattice_basis(const IntMatrix& a) {
  if (rank(a) != a.rows()) throw RankDeficientError("kernel_lattice_basis: A must have full row rank");
  const HermiteForm hf = hnf(a);
  IntMatrix w = hf.u.rightCols(a.cols() - hf.rank);
  for (Index j = 0; j < w.cols(); ++j) {
    Index i = 0;
    while (i < w.rows() && w(i, j) == 0) ++i;
    if (i < w.rows() && w(i, j) < 0) w.col(j) = -w.col(j);
  }
  return w;
}

Lemma2Report lemma2_report(const IntMatrix& a, EnumerationBudget budget) {
  Lemma2Report report;
  report.kernel = kernel_lattice_basis(a);
  const Index m = a.rows(), n = a.cols();
  budget.require(binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(m)), "verify_lemma2");
  report.gcd_a = gcd_full_rank_subdets(a, budget);
  report.gcd_w = (report.kernel.cols() == 0) ? Integer(1) : gcd_full_rank_subdets(report.kernel, budget);

  report.passed = true;
  for_each_subset(n, m, [&](const IndexList& cols) {
    IndexList rest;
    for (Index j = 0, k = 0; j < n; ++j) {
      if (k < m && cols[static_cast<std::size_t>(k)] == j)
        ++k;
      else
        rest.push_back(j);
    }
    Lemma2Entry e;
    e.columns = cols;
    e.lhs = Rational(abs(det(select_cols(a, cols))), report.gcd_a);
    e.rhs = Rational(abs(det(select_rows(report.kernel, rest))), report.gcd_w);
    report.passed = report.passed && (e.lhs == e.rhs);
    report.entries.push_back(std::move(e));
    return true;
  });
  return report;
}

bool verify_lemma2(const IntMatrix& a, EnumerationBudget budget) { return lemma2_report(a, budget).passed; }

IlpSolutions solve_standard_form_ilp(const StandardFormILP& ilp, const IntVector& box, EnumerationBudget budget) {
  ilp.validate();
  const IntMatrix& a = ilp.a;
  const Index n = a.cols();
  if (box.size() != n) throw DimensionError("solve_standard_form_ilp: box has wrong dimension");
  Integer count = 1;
  for (Index j = 0; j < n; ++j) {
    if (box(j) < 0) throw DomainError("solve_standard_form_ilp: box entries must be nonnegative");
    count *= box(j) + 1;
  }
  budget.require(count, "solve_standard_form_ilp");

  IlpSolutions out;
  out.visited = count;
  IntVector x = IntVector::Zero(n);
  IntVector residual = ilp.b;  // b - A x
  Integer value = 0;
  while (true) {
    bool feasible = true;
    for (Index i = 0; i < residual.size() && feasible; ++i) feasible = residual(i) == 0;
    if (feasible) {
      if (!out.optimum || value > *out.optimum) {
        out.optimum = value;
        out.optimizers.clear();
      }
      if (value == *out.optimum) out.optimizers.push_back(x);
    }
    Index j = n - 1;
    for (; j >= 0; --j) {
      if (x(j) < box(j)) {
        ++x(j);
        residual -= a.col(j);
        value += ilp.c(j);
        break;
      }
      residual += x(j) * a.col(j);
      value -= x(j) * ilp.c(j);
      x(j) = 0;
    }
    if (j < 0) break;
  }
  return out;
}

BoxDerivation derive_box(const IntMatrix& a, const IntVector& b) {
  if (a.rows() != b.size()) throw DimensionError("derive_box: A and b disagree");
  const Index m = a.rows(), n = a.cols();
  std::vector<std::optional<Integer>> upper(static_cast<std::size_t>(n));
  BoxDerivation out;
  out.source_rows.assign(static_cast<std::size_t>(n), -1);

  bool changed = true;
  while (changed) {
    changed = false;
    for (Index i = 0; i < m; ++i) {
      for (Index j = 0; j < n; ++j) {
        if (a(i, j) <= 0) continue;
        Integer rhs = b(i);
        bool known = true;
        for (Index k = 0; k < n && known; ++k) {
          if (k == j || a(i, k) >= 0) continue;
          const auto& uk = upper[static_cast<std::size_t>(k)];
          if (!uk) known = false;
          else rhs -= a(i, k) * *uk;
        }
        if (!known) continue;
        Integer bound = floor_div(rhs, a(i, j));
        if (bound < 0) bound = 0;
        auto& uj = upper[static_cast<std::size_t>(j)];
        if (!uj || bound < *uj) {
          uj = bound;
          out.source_rows[static_cast<std::size_t>(j)] = i;
          out.log.push_back("x" + std::to_string(j) + " <= " + bound.str() + " from row " + std::to_string(i));
          changed = true;
        }
      }
    }
  }

  out.box.resize(n);
  for (Index j = 0; j < n; ++j) {
    const auto& uj = upper[static_cast<std::size_t>(j)];
    if (!uj) throw UnboundedError("derive_box: no row bounds x" + std::to_string(j));
    out.box(j) = *uj;
  }
  return out;
}

Theorem4Report verify_theorem4(const StandardFormILP& ilp, const Integer& delta, const IntVector& box,
                               EnumerationBudget budget) {
  Theorem4Report report;
  report.delta = delta;
  report.bound = Integer(ilp.a.rows()) + g_threshold(delta);
  const IlpSolutions sol = solve_standard_form_ilp(ilp, box, budget);
  report.optimizer_count = static_cast<Index>(sol.optimizers.size());
  for (const IntVector& x : sol.optimizers) {
    const Index s = support_size(x);
    if (!report.min_support || s < *report.min_support) {
      report.min_support = s;
      report.sparsest = x;
    }
  }
  report.passed = !report.min_support || Integer(*report.min_support) <= report.bound;
  return report;
}

Prop1Report verify_prop1(const Integer& delta, EnumerationBudget minor_budget, EnumerationBudget box_budget) {
  if (delta != 2 && delta != 3) throw DomainError("verify_prop1: supported for delta in {2, 3}, got " + delta.str());
  const SparsityInstance inst = sparsity_instance(delta);
  Prop1Report report;
  report.delta = delta;
  report.a = inst.a;
  report.b = inst.b;
  report.box = derive_box(inst.a, inst.b);

  // c = 0 makes every feasible point optimal, so the optimizers are the feasible set.
  const StandardFormILP ilp{inst.a, inst.b, IntVector::Zero(inst.a.cols())};
  report.feasible = solve_standard_form_ilp(ilp, report.box.box, box_budget).optimizers;
  report.unique_all_ones =
      report.feasible.size() == 1 && same(report.feasible.front(), IntVector(IntVector::Ones(inst.a.cols())));
  report.support = report.feasible.empty() ? 0 : support_size(report.feasible.front());
  report.expected_support = inst.a.rows() + delta.convert_to<Index>() - 1;
  report.totally_delta_modular = is_totally_delta_modular(inst.a, delta, minor_budget);
  report.passed = report.unique_all_ones && report.support == report.expected_support && report.totally_delta_modular;
  return report;
}

}  // namespace dmsvp
