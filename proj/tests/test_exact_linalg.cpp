#include <gtest/gtest.h>

#include "dmsvp/errors.hpp"
#include "dmsvp/exact_linalg.hpp"
#include "support/reference.hpp"

using namespace dmsvp;
using ref::mat;

TEST(Det, Identity) { EXPECT_EQ(det(IntMatrix(IntMatrix::Identity(3, 3))), 1); }

TEST(Det, TwoByTwoSigned) { EXPECT_EQ(det(mat({{1, 1}, {1, -1}})), -2); }

TEST(Det, FrozenFourByFour) {
  EXPECT_EQ(det(mat({{1, -1, -5, 2}, {2, 1, -9, -2}, {0, -6, -8, 4}, {2, 0, -7, -4}})), 128);
  EXPECT_EQ(det(mat({{-6, -9, -3, 1}, {-9, -2, 0, 0}, {4, 3, -3, 5}, {2, 4, -2, -8}})), -3224);
  EXPECT_EQ(det(mat({{9, -1, 2, -1}, {3, -2, -3, 8}, {-5, 4, -8, 3}, {-9, 1, 7, 3}})), 3089);
  EXPECT_EQ(det(mat({{2, -6, 4, 5, 1}, {-8, -6, 9, -4, -8}, {0, 1, -3, 7, -9}, {1, 8, -9, -2, -2}, {2, 2, 7, 4, -8}})),
            15048);
}

TEST(Det, NeedsPivotSwap) { EXPECT_EQ(det(mat({{0, 1}, {1, 0}})), -1); }

TEST(Det, Singular) { EXPECT_EQ(det(mat({{1, 2}, {2, 4}})), 0); }

TEST(Det, LargeEntriesDoNotOverflow) {
  IntMatrix m = mat({{1, 0}, {0, 1}});
  m(0, 0) = Integer("123456789012345678901234567890");
  m(1, 1) = Integer("987654321098765432109876543210");
  EXPECT_EQ(det(m), Integer("121932631137021795226185032733622923332237463801111263526900"));
}

TEST(Det, NonSquareThrows) { EXPECT_THROW(det(mat({{1, 2, 3}})), DimensionError); }

TEST(Adjugate, Identity) {
  EXPECT_TRUE(ref::equal(adjugate(IntMatrix::Identity(3, 3)), IntMatrix::Identity(3, 3)));
}

TEST(Adjugate, TwoByTwo) { EXPECT_TRUE(ref::equal(adjugate(mat({{1, 0}, {2, 3}})), mat({{3, 0}, {-2, 1}}))); }

TEST(Adjugate, SingularProductVanishes) {
  const IntMatrix m = mat({{1, 2}, {2, 4}});
  EXPECT_TRUE(ref::equal(m * adjugate(m), IntMatrix::Zero(2, 2)));
}

TEST(Adjugate, SingularThreeByThree) {
  const IntMatrix m = mat({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  const IntMatrix adj = adjugate(m);
  EXPECT_TRUE(ref::equal(m * adj, IntMatrix::Zero(3, 3)));
  EXPECT_FALSE(ref::equal(adj, IntMatrix::Zero(3, 3)));
}

TEST(Adjugate, NonSquareThrows) { EXPECT_THROW(adjugate(mat({{1, 2}})), DimensionError); }

TEST(FindInvertibleRows, FirstRowsSuffice) {
  EXPECT_EQ(find_invertible_rows(mat({{1, 0}, {0, 1}, {1, 1}, {1, -1}})), (IndexList{0, 1}));
}

TEST(FindInvertibleRows, SkipsZeroRow) {
  EXPECT_EQ(find_invertible_rows(mat({{0, 0}, {1, 0}, {0, 1}})), (IndexList{1, 2}));
}

TEST(FindInvertibleRows, SkipsDependentRow) {
  EXPECT_EQ(find_invertible_rows(mat({{1, 2}, {2, 4}, {0, 1}})), (IndexList{0, 2}));
}

TEST(FindInvertibleRows, LowerBoundShape) {
  const IntMatrix a = mat({{-1, -3}, {1, 0}, {2, 3}});
  const IndexList s = find_invertible_rows(a);
  EXPECT_EQ(s, (IndexList{0, 1}));
  EXPECT_EQ(det(select_rows(a, s)), 3);
}

TEST(FindInvertibleRows, RankDeficientThrows) {
  EXPECT_THROW(find_invertible_rows(mat({{1, 2}, {2, 4}})), RankDeficientError);
}

TEST(ScaledInverse, Identity) {
  const ScaledInverse inv = scaled_inverse(IntMatrix::Identity(2, 2));
  EXPECT_EQ(inv.denominator, 1);
  EXPECT_TRUE(ref::equal(inv.numerator, IntMatrix::Identity(2, 2)));
}

TEST(ScaledInverse, KeepsDenominatorUnreduced) {
  const IntMatrix b = mat({{1, 0}, {1, 2}});
  const ScaledInverse inv = scaled_inverse(b);
  EXPECT_EQ(inv.denominator, 2);
  EXPECT_TRUE(ref::equal(inv.numerator, mat({{2, 0}, {-1, 1}})));
  EXPECT_TRUE(ref::equal(b * inv.numerator, IntMatrix(2 * IntMatrix::Identity(2, 2))));
  EXPECT_FALSE(inv.column_is_integral(0));
  EXPECT_FALSE(inv.column_is_integral(1));
}

TEST(ScaledInverse, ThreeDenominator) {
  const ScaledInverse inv = scaled_inverse(mat({{1, 0}, {2, 3}}));
  EXPECT_EQ(inv.denominator, 3);
  EXPECT_TRUE(ref::equal(inv.numerator, mat({{3, 0}, {-2, 1}})));
}

TEST(ScaledInverse, IntegralColumn) {
  const ScaledInverse inv = scaled_inverse(mat({{1, 0}, {0, 2}}));
  ASSERT_TRUE(inv.column_is_integral(0));
  EXPECT_TRUE(ref::equal(inv.integral_column(0), ref::vec({1, 0})));
  EXPECT_FALSE(inv.column_is_integral(1));
}

TEST(ScaledInverse, SingularThrows) { EXPECT_THROW(scaled_inverse(mat({{1, 2}, {2, 4}})), SingularMatrixError); }

TEST(Hnf, Identity) {
  const HermiteForm hf = hnf(IntMatrix::Identity(3, 3));
  EXPECT_TRUE(ref::equal(hf.h, IntMatrix::Identity(3, 3)));
  EXPECT_TRUE(ref::equal(hf.u, IntMatrix::Identity(3, 3)));
  EXPECT_EQ(hf.rank, 3);
}

TEST(Hnf, RowVector) {
  const IntMatrix a = mat({{2, 1}});
  const HermiteForm hf = hnf(a);
  EXPECT_TRUE(ref::equal(hf.h, mat({{1, 0}})));
  EXPECT_TRUE(ref::equal(a * hf.u, hf.h));
  EXPECT_EQ(abs(det(hf.u)), 1);
  EXPECT_EQ(hf.rank, 1);
}

TEST(Hnf, AlreadyNormal) {
  const HermiteForm hf = hnf(mat({{2, 0}, {0, 2}}));
  EXPECT_TRUE(ref::equal(hf.h, mat({{2, 0}, {0, 2}})));
  EXPECT_TRUE(ref::equal(hf.u, IntMatrix::Identity(2, 2)));
}

TEST(Hnf, RankDeficientGivesTrailingZeroColumn) {
  const IntMatrix a = mat({{2, 4}, {1, 2}});
  const HermiteForm hf = hnf(a);
  EXPECT_EQ(hf.rank, 1);
  EXPECT_TRUE(is_hermite_normal_form(hf.h));
  EXPECT_TRUE(ref::equal(a * hf.u, hf.h));
  EXPECT_EQ(hf.h(0, 1), 0);
  EXPECT_EQ(hf.h(1, 1), 0);
}

TEST(Hnf, ZeroMatrix) {
  const HermiteForm hf = hnf(IntMatrix::Zero(2, 3));
  EXPECT_EQ(hf.rank, 0);
  EXPECT_TRUE(ref::equal(hf.h, IntMatrix::Zero(2, 3)));
}

TEST(Hnf, ShapeChecker) {
  EXPECT_TRUE(is_hermite_normal_form(mat({{3, 0}, {1, 2}})));
  EXPECT_FALSE(is_hermite_normal_form(mat({{3, 0}, {2, 2}})));   // left entry not reduced
  EXPECT_FALSE(is_hermite_normal_form(mat({{-3, 0}, {1, 2}})));  // negative pivot
  EXPECT_FALSE(is_hermite_normal_form(mat({{0, 3}, {0, 1}})));   // zero column first
}

TEST(Rank, Basics) {
  EXPECT_EQ(rank(IntMatrix(IntMatrix::Zero(3, 2))), 0);
  EXPECT_EQ(rank(IntMatrix(IntMatrix::Identity(4, 4))), 4);
  EXPECT_EQ(rank(mat({{1, 2}, {2, 4}, {0, 1}})), 2);
  EXPECT_EQ(rank(mat({{1, 2, 3}, {2, 4, 6}})), 1);
}

TEST(MaxSubdet, Identity) {
  const SubdeterminantWitness w = max_abs_full_rank_subdet(IntMatrix::Identity(3, 3));
  EXPECT_EQ(w.value, 1);
  EXPECT_EQ(w.rows, (IndexList{0, 1, 2}));
}

TEST(MaxSubdet, LowerBoundShape) {
  const SubdeterminantWitness w = max_abs_full_rank_subdet(mat({{-1, -3}, {1, 0}, {2, 3}}));
  EXPECT_EQ(w.value, 3);
  EXPECT_EQ(w.rows, (IndexList{0, 1}));
}

TEST(MaxSubdet, LexicographicFirstMaximizer) {
  const SubdeterminantWitness w = max_abs_full_rank_subdet(mat({{1, 0}, {0, 1}, {1, 1}, {1, -1}}));
  EXPECT_EQ(w.value, 2);
  EXPECT_EQ(w.rows, (IndexList{2, 3}));
}

TEST(MaxSubdet, BudgetExceeded) {
  const IntMatrix a = IntMatrix::Identity(20, 10).eval();
  EXPECT_THROW(max_abs_full_rank_subdet(a, EnumerationBudget{100}), EnumerationLimitError);
}

TEST(MaxSubdet, RankDeficientThrows) {
  EXPECT_THROW(max_abs_full_rank_subdet(mat({{1, 2}, {2, 4}, {3, 6}})), RankDeficientError);
}

TEST(TotallyDeltaModular, IncidenceMatrixIsUnimodular) {
  EXPECT_TRUE(is_totally_delta_modular(mat({{1, -1, 0}, {1, 0, -1}, {0, 1, -1}}), 1));
}

TEST(TotallyDeltaModular, SmallSparsitySystem) {
  EXPECT_TRUE(is_totally_delta_modular(mat({{1, 1, 0}, {-1, 0, 2}}), 2));
  EXPECT_FALSE(is_totally_delta_modular(mat({{1, 1, 0}, {-1, 0, 2}}), 1));
}

TEST(TotallyDeltaModular, TwoByTwoViolation) {
  EXPECT_FALSE(is_totally_delta_modular(mat({{1, 1}, {1, -1}}), 1));
}

TEST(TotallyDeltaModular, EntryViolation) { EXPECT_FALSE(is_totally_delta_modular(mat({{3, 0}, {0, 1}}), 2)); }

TEST(GcdSubdets, Cases) {
  EXPECT_EQ(gcd_full_rank_subdets(IntMatrix::Identity(3, 3)), 1);
  EXPECT_EQ(gcd_full_rank_subdets(mat({{2, 0}, {0, 2}})), 4);
  EXPECT_EQ(gcd_full_rank_subdets(mat({{2, 4, 0}, {0, 0, 2}})), 4);
  EXPECT_EQ(gcd_full_rank_subdets(mat({{2}, {4}})), 2);
}

TEST(GcdSubdets, AllZeroThrows) { EXPECT_THROW(gcd_full_rank_subdets(mat({{1, 2}, {2, 4}})), RankDeficientError); }

TEST(RatioIdentity, FullSets) {
  const IntMatrix a = mat({{1, 0}, {1, 2}, {2, 2}});
  const RatioSides sides = subdet_ratio_sides(a, {0, 1}, {1, 2}, {0, 1});
  EXPECT_EQ(sides.lhs, sides.rhs);
  EXPECT_EQ(sides.lhs, Rational(abs(det(select_rows(a, {1, 2}))), 2));
}

TEST(RatioIdentity, SingleEntry) {
  const IntMatrix a = mat({{1, 0}, {1, 2}, {2, 2}});
  const RatioSides sides = subdet_ratio_sides(a, {0, 1}, {2}, {1});
  EXPECT_EQ(sides.lhs, 1);
  EXPECT_EQ(sides.rhs, 1);
  EXPECT_TRUE(subdet_ratio_check(a, {0, 1}, {2}, {1}));
}

TEST(RatioIdentity, PermutedBase) {
  const IntMatrix a = mat({{3, 1, 0}, {1, 2, 1}, {0, 1, 4}, {2, 2, 2}});
  EXPECT_TRUE(subdet_ratio_check(a, {2, 0, 1}, {3}, {0}));
  EXPECT_TRUE(subdet_ratio_check(a, {2, 0, 1}, {3, 1}, {2, 0}));
}

TEST(RatioIdentity, Errors) {
  const IntMatrix a = mat({{1, 0}, {1, 2}, {2, 2}});
  EXPECT_THROW(subdet_ratio_sides(a, {0, 1}, {2}, {0, 1}), DimensionError);
  EXPECT_THROW(subdet_ratio_sides(mat({{1, 2}, {2, 4}, {0, 1}}), {0, 1}, {2}, {0}), SingularMatrixError);
}
