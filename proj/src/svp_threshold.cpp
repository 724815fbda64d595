#include "dmsvp/svp_threshold.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "dmsvp/errors.hpp"

namespace dmsvp {

namespace {

bool is_zero_vector(const IntVector& v) {
  for (Index i = 0; i < v.size(); ++i)
    if (v(i) != 0) return false;
  return true;
}

int sign_of(const Integer& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

struct ColumnClass {
  Index column;
  int sign;  // sign that moves r_column into the pair class representative
};

// Pair classes {k, -k} keyed by the lexicographically smaller residue key.
std::map<ResidueKey, std::vector<ColumnClass>> group_by_pair_class(const ScaledInverse& inv) {
  if (abs(inv.denominator) < 2)
    throw PreconditionError("residue selection needs |det B| >= 2 (every column of B^{-1} is integral)");
  std::map<ResidueKey, std::vector<ColumnClass>> groups;
  for (Index j = 0; j < inv.size(); ++j) {
    ResidueKey plus = residue_key(inv, j, +1);
    if (plus.is_zero())
      throw PreconditionError("residue selection: column " + std::to_string(j) + " of B^{-1} is integral");
    ResidueKey minus = residue_key(inv, j, -1);
    if (minus < plus)
      groups[std::move(minus)].push_back({j, -1});
    else
      groups[std::move(plus)].push_back({j, +1});
  }
  return groups;
}

SignedSelection take_members(const ResidueKey& key, const std::vector<ColumnClass>& group, std::size_t count) {
  SignedSelection sel;
  sel.target = key;
  for (std::size_t i = 0; i < count; ++i) sel.members.push_back({group[i].column, group[i].sign});
  return sel;
}

bool annihilated_by(const ResidueKey& key, const Integer& multiplier) {
  for (const Integer& k : key.key)
    if ((k * multiplier) % key.modulus != 0) return false;
  return true;
}

IntVector exact_quotient(const IntVector& numer, const Integer& denom, const char* what) {
  IntVector v(numer.size());
  for (Index i = 0; i < numer.size(); ++i) {
    if (numer(i) % denom != 0) throw InvariantError(std::string("test vector ") + what + " is not integral");
    v(i) = numer(i) / denom;
  }
  if (is_zero_vector(v)) throw InvariantError(std::string("test vector ") + what + " is zero");
  return v;
}

// Builds the successor state and checks the progress guarantee twice: the
// determinant-ratio identity on the swapped block of A B^{-1}, and the direct
// determinant of the new basis.
Continue advance(const IntMatrix& a, const Integer& delta, const ThresholdState& state, IndexList new_rows,
                 const IndexList& incoming, const IndexList& replaced, StepKind via) {
  const RatioSides sides = subdet_ratio_sides(a, state.base_rows, incoming, replaced);
  if (sides.lhs != sides.rhs)
    throw InvariantError(std::string(to_string(via)) + ": determinant-ratio identity failed");
  if (sides.lhs <= 1)
    throw InvariantError(std::string(to_string(via)) + ": swapped block has |det| <= 1, no progress");

  ThresholdState next;
  next.det_abs = abs(det(select_rows(a, new_rows)));
  next.base_rows = std::move(new_rows);
  next.iteration = state.iteration + 1;
  if (Rational(next.det_abs) != sides.rhs * Rational(state.det_abs))
    throw InvariantError(std::string(to_string(via)) + ": new |det B| disagrees with the ratio identity");
  if (next.det_abs < state.det_abs + 1)
    throw InvariantError(std::string(to_string(via)) + ": |det B| did not increase");
  if (Integer(next.iteration) > delta)
    throw InvariantError("iteration counter exceeded delta");
  return {std::move(next), via};
}

ShortVector make_short_vector(const IntMatrix& a, IntVector z) {
  ShortVector sv;
  sv.y = a * z;
  sv.z = std::move(z);
  sv.norm = infinity_norm(sv.y);
  if (sv.norm != 1) throw InvariantError("short vector does not have infinity norm 1");
  return sv;
}

}  // namespace

Integer g_threshold(const Integer& delta) {
  if (delta < 1) throw DomainError("delta must be >= 1, got " + delta.str());
  const Integer dm1 = delta - 1;
  return ((dm1 + 1) / 2) * dm1;
}

bool ResidueKey::is_zero() const {
  for (const Integer& k : key)
    if (k != 0) return false;
  return true;
}

Integer ResidueKey::order() const {
  Integer g = modulus;
  for (const Integer& k : key) g = boost::multiprecision::gcd(g, k);
  return modulus / g;
}

bool ResidueKey::operator<(const ResidueKey& other) const {
  if (key != other.key) return std::lexicographical_compare(key.begin(), key.end(), other.key.begin(), other.key.end());
  return modulus < other.modulus;
}

ResidueKey residue_key(const ScaledInverse& inv, Index column, int sign) {
  if (column < 0 || column >= inv.size()) throw DimensionError("residue_key: column out of range");
  if (sign != 1 && sign != -1) throw DomainError("residue_key: sign must be +1 or -1");
  ResidueKey rk;
  rk.modulus = abs(inv.denominator);
  // r_j = numerator_j / det = (sgn(det) numerator_j) / |det|
  const int s = sign * sign_of(inv.denominator);
  rk.key.reserve(static_cast<std::size_t>(inv.size()));
  for (Index i = 0; i < inv.size(); ++i) rk.key.push_back(mod_floor(Integer(s) * inv.numerator(i, column), rk.modulus));
  return rk;
}

SignedSelection select_same_class(const ScaledInverse& inv, const Integer& delta) {
  if (delta < 1) throw DomainError("select_same_class: delta must be >= 1");
  for (const auto& [key, group] : group_by_pair_class(inv)) {
    if (Integer(group.size()) >= delta) return take_members(key, group, delta.convert_to<std::size_t>());
  }
  throw InvariantError("select_same_class: no residue pair class holds " + delta.str() + " columns");
}

SignedSelection select_closing_class(const ScaledInverse& inv, const Integer& delta) {
  if (delta < 1) throw DomainError("select_closing_class: delta must be >= 1");
  const auto groups = group_by_pair_class(inv);
  for (const auto& [key, group] : groups) {
    if (Integer(group.size()) >= delta && annihilated_by(key, delta))
      return take_members(key, group, delta.convert_to<std::size_t>());
  }
  for (const auto& [key, group] : groups) {
    const Integer order = key.order();
    if (Integer(group.size()) >= order) return take_members(key, group, order.convert_to<std::size_t>());
  }
  throw InvariantError("select_closing_class: no residue class holds as many columns as its order");
}

std::size_t TestVectors::difference_index(std::size_t a, std::size_t b) const {
  if (a == b || a >= member_count || b >= member_count)
    throw DimensionError("difference_index: invalid member pair");
  return a * (member_count - 1) + (b < a ? b : b - 1);
}

TestVectors build_test_vectors(const ScaledInverse& inv, const SignedSelection& sel) {
  const std::size_t count = sel.members.size();
  if (count == 0) throw DimensionError("build_test_vectors: empty selection");
  std::vector<IntVector> numer;
  numer.reserve(count);
  for (const SignedMember& mem : sel.members) numer.push_back(Integer(mem.sign) * inv.numerator.col(mem.column));

  TestVectors tv;
  tv.member_count = count;
  for (std::size_t a = 0; a < count; ++a)
    for (std::size_t b = 0; b < count; ++b)
      if (a != b) tv.all.push_back(exact_quotient(numer[a] - numer[b], inv.denominator, "difference"));
  IntVector total = IntVector::Zero(inv.size());
  for (const IntVector& v : numer) total += v;
  tv.sum = exact_quotient(total, inv.denominator, "sum");
  tv.all.push_back(tv.sum);
  for (std::size_t k = 0; k + 1 < count; ++k) tv.chain.push_back(tv.all[tv.difference_index(k, k + 1)]);
  return tv;
}

const char* to_string(StepKind kind) {
  switch (kind) {
    case StepKind::kCertificate: return "certificate";
    case StepKind::kScalarUpdate: return "scalar_update";
    case StepKind::kIntegralColumn: return "integral_column";
    case StepKind::kTestVector: return "test_vector";
    case StepKind::kDifferenceUpdate: return "difference_update";
    case StepKind::kSumUpdate: return "sum_update";
  }
  return "unknown";
}

ThresholdState initial_state(const IntMatrix& a) {
  ThresholdState s;
  s.base_rows = find_invertible_rows(a);
  s.det_abs = abs(det(select_rows(a, s.base_rows)));
  s.iteration = 0;
  return s;
}

StepResult threshold_step(const IntMatrix& a, const Integer& delta, const ThresholdState& state) {
  const Index m = a.rows(), n = a.cols();
  if (Integer(n) < g_threshold(delta) + 1)
    throw ThresholdError("threshold solver needs n >= g(delta) + 1 = " + (g_threshold(delta) + 1).str() +
                         ", got n = " + std::to_string(n));
  if (static_cast<Index>(state.base_rows.size()) != n) throw DimensionError("threshold_step: state has wrong size");

  // base too large: the base itself is the certificate
  if (state.det_abs > delta)
    return Done{Certificate{state.base_rows, det(select_rows(a, state.base_rows))}, StepKind::kCertificate};

  // a_k^T r_j = prod(k, j) / det B
  const ScaledInverse inv = scaled_inverse(select_rows(a, state.base_rows));
  const Integer d = abs(inv.denominator);
  const IntMatrix prod = a * inv.numerator;

  // an entry of A B^{-1} above 1 in absolute value: swap that row in
  for (Index k = 0; k < m; ++k) {
    for (Index j = 0; j < n; ++j) {
      if (abs(prod(k, j)) > d) {
        IndexList rows = state.base_rows;
        rows[static_cast<std::size_t>(j)] = k;
        return advance(a, delta, state, std::move(rows), {k}, {j}, StepKind::kScalarUpdate);
      }
    }
  }

  // integral column of B^{-1}
  for (Index j = 0; j < n; ++j)
    if (inv.column_is_integral(j))
      return Done{make_short_vector(a, inv.integral_column(j)), StepKind::kIntegralColumn};

  const SignedSelection sel = select_closing_class(inv, delta);
  const TestVectors tv = build_test_vectors(inv, sel);
  const std::size_t count = sel.members.size();

  // cut[t] is the first row with |a^T t| >= 2
  std::vector<Index> cut(tv.all.size(), -1);
  for (std::size_t t = 0; t < tv.all.size(); ++t) {
    const IntVector y = a * tv.all[t];
    if (infinity_norm(y) <= 1) return Done{make_short_vector(a, tv.all[t]), StepKind::kTestVector};
    for (Index r = 0; r < m; ++r) {
      if (abs(y(r)) >= 2) {
        cut[t] = r;
        break;
      }
    }
  }

  // sign of a_row^T h_x, which lies in {-1, 0, 1} once the scan above has passed
  const int det_sign = sign_of(inv.denominator);
  auto signed_value = [&](Index row, std::size_t x) {
    const Integer& p = prod(row, sel.members[x].column);
    if (p != 0 && abs(p) != d) throw InvariantError("a^T h is not in {-1, 0, 1} on a selected column");
    return sel.members[x].sign * det_sign * sign_of(p);
  };

  // chain vector whose cut row also meets a third selected column
  for (std::size_t k = 0; k + 1 < count; ++k) {
    const Index row = cut[tv.difference_index(k, k + 1)];
    const int first = signed_value(row, k), second = signed_value(row, k + 1);
    if (first == 0 || first != -second) throw InvariantError("cut row of a chain vector is not +-1 on its pair");
    for (std::size_t x = 0; x < count; ++x) {
      if (x == k || x == k + 1) continue;
      const int vx = signed_value(row, x);
      if (vx == 0) continue;
      const std::size_t i = (first == vx) ? k : k + 1;
      const Index col_i = sel.members[i].column, col_x = sel.members[x].column;
      const Index partner = cut[tv.difference_index(i, x)];
      IndexList rows = state.base_rows;
      rows[static_cast<std::size_t>(col_i)] = row;
      rows[static_cast<std::size_t>(col_x)] = partner;
      return advance(a, delta, state, std::move(rows), {row, partner}, {col_i, col_x},
                     StepKind::kDifferenceUpdate);
    }
  }

  // otherwise the cut rows replace every selected column at once
  IndexList rows = state.base_rows;
  IndexList incoming, replaced;
  for (std::size_t k = 0; k < count; ++k) {
    const Index source = (k + 1 < count) ? cut[tv.difference_index(k, k + 1)] : cut[tv.sum_index()];
    const Index col = sel.members[k].column;
    rows[static_cast<std::size_t>(col)] = source;
    incoming.push_back(source);
    replaced.push_back(col);
  }
  return advance(a, delta, state, std::move(rows), incoming, replaced, StepKind::kSumUpdate);
}

ThresholdRun solve_threshold_traced(const IntMatrix& a, const Integer& delta) {
  if (Integer(a.cols()) < g_threshold(delta) + 1)
    throw ThresholdError("threshold solver needs n >= g(delta) + 1 = " + (g_threshold(delta) + 1).str() +
                         ", got n = " + std::to_string(a.cols()));
  ThresholdRun run;
  run.states.push_back(initial_state(a));
  while (true) {
    StepResult step = threshold_step(a, delta, run.states.back());
    if (auto* next = std::get_if<Continue>(&step)) {
      run.transitions.push_back(next->via);
      run.states.push_back(std::move(next->state));
      continue;
    }
    auto& done = std::get<Done>(step);
    run.transitions.push_back(done.via);
    run.outcome = std::move(done.outcome);
    return run;
  }
}

SvpOutcome solve_threshold(const IntMatrix& a, const Integer& delta) {
  return solve_threshold_traced(a, delta).outcome;
}

DispatchOutcome solve_svp(const IntMatrix& a, const Integer& delta, DispatchOptions options) {
  const Integer threshold = g_threshold(delta) + 1;
  const HermiteForm hf = hnf(a);
  if (hf.rank == 0) throw PreconditionError("solve_svp: the lattice is {0}; no nonzero vector exists");

  IntMatrix basis, to_input;
  if (hf.rank == a.cols()) {
    basis = a;
    to_input = IntMatrix::Identity(a.cols(), a.cols());
  } else {
    basis = hf.h.leftCols(hf.rank);
    to_input = hf.u.leftCols(hf.rank);
  }

  if (Integer(basis.cols()) >= threshold) {
    SvpOutcome out = solve_threshold(basis, delta);
    if (auto* sv = std::get_if<ShortVector>(&out)) {
      sv->z = to_input * sv->z;
      sv->y = a * sv->z;
      return *sv;
    }
    return std::get<Certificate>(out);
  }
  OracleResult r = brute_force_svp(basis, enum_bound(basis), options.box_budget);
  r.z = to_input * r.z;
  r.y = a * r.z;
  return r;
}

}  // namespace dmsvp
