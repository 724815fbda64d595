#include <gtest/gtest.h>

#include "dmsvp/errors.hpp"
#include "dmsvp/instance_gen.hpp"
#include "dmsvp/svp_oracle.hpp"
#include "support/reference.hpp"

using namespace dmsvp;
using ref::mat;
using ref::vec;

namespace {
const IntMatrix kWorked = mat({{1, 0}, {1, 2}, {2, 2}});
const IntMatrix kLowerBound3 = mat({{-1, -3}, {1, 0}, {2, 3}});
}  // namespace

TEST(CanonicalOrder, UnitVectorsFirstCoordinateWins) {
  EXPECT_TRUE(canonical_less(vec({1, 0}), vec({0, 1})));
  EXPECT_TRUE(canonical_less(vec({1, 0}), vec({-1, 0})));
  EXPECT_TRUE(canonical_less(vec({1, -1}), vec({-1, 1})));
  EXPECT_TRUE(canonical_less(vec({0, 1}), vec({1, 1})));
  EXPECT_FALSE(canonical_less(vec({1, 0}), vec({1, 0})));
  EXPECT_THROW(canonical_less(vec({1}), vec({1, 0})), DimensionError);
}

TEST(EnumBound, LowerBoundShape) { EXPECT_EQ(enum_bound(kLowerBound3), 2); }

TEST(EnumBound, UnitColumnGivesSmallBox) {
  EXPECT_EQ(enum_bound(IntMatrix::Identity(3, 3)), 1);
  EXPECT_GE(enum_bound(mat({{1, 5}, {0, 7}})), 1);
}

TEST(EnumBound, RankDeficientThrows) { EXPECT_THROW(enum_bound(mat({{1, 2}, {2, 4}})), RankDeficientError); }

TEST(BruteForce, Identity) {
  const OracleResult r = brute_force_svp(IntMatrix::Identity(3, 3), 1);
  EXPECT_EQ(r.norm, 1);
  EXPECT_TRUE(ref::equal(r.z, vec({1, 0, 0})));
}

TEST(BruteForce, LowerBoundShape) {
  const OracleResult r = brute_force_svp(kLowerBound3, 2);
  EXPECT_EQ(r.norm, 2);
  EXPECT_TRUE(ref::equal(r.z, vec({1, 0})));
  EXPECT_TRUE(ref::equal(r.y, vec({-1, 1, 2})));
}

TEST(BruteForce, FourNodeLowerBound) {
  const OracleResult r = brute_force_svp(lower_bound_instance(4), 2);
  EXPECT_EQ(r.norm, 2);
  EXPECT_TRUE(ref::equal(r.z, vec({1, -1, 0})));
}

TEST(BruteForce, WorkedExample) {
  const OracleResult r = brute_force_svp(kWorked, 2);
  EXPECT_EQ(r.norm, 1);
  EXPECT_TRUE(ref::equal(r.z, vec({1, -1})));
  EXPECT_TRUE(ref::equal(r.y, vec({1, -1, 0})));
}

TEST(BruteForce, BigEntriesUseExactPath) {
  IntMatrix a = mat({{1, 0}, {0, 1}});
  a(0, 0) = Integer("100000000000000000000000");
  a(1, 1) = Integer("3");
  const OracleResult r = brute_force_svp(a, 1);
  EXPECT_EQ(r.norm, 3);
  EXPECT_TRUE(ref::equal(r.z, vec({0, 1})));
}

TEST(BruteForce, Errors) {
  EXPECT_THROW(brute_force_svp(kWorked, 0), DomainError);
  EXPECT_THROW(brute_force_svp(mat({{1, 2}, {2, 4}}), 1), RankDeficientError);
  EXPECT_THROW(brute_force_svp(IntMatrix::Identity(10, 10), 5, EnumerationBudget{1000}), EnumerationLimitError);
}

TEST(AtLeastTwo, Identity) {
  const AtLeastTwoResult r = shortest_is_at_least_2(IntMatrix::Identity(2, 2));
  EXPECT_FALSE(r.at_least_two);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_TRUE(ref::equal(*r.witness, vec({1, 0})));
}

TEST(AtLeastTwo, WorkedExample) {
  const AtLeastTwoResult r = shortest_is_at_least_2(kWorked);
  EXPECT_FALSE(r.at_least_two);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_TRUE(ref::equal(*r.witness, vec({1, -1})));
}

TEST(AtLeastTwo, LowerBoundInstances) {
  for (int d = 2; d <= 5; ++d) {
    const AtLeastTwoResult r = shortest_is_at_least_2(lower_bound_instance(d));
    EXPECT_TRUE(r.at_least_two) << "delta " << d;
    EXPECT_FALSE(r.witness.has_value());
  }
}

TEST(AtLeastTwo, Errors) {
  EXPECT_THROW(shortest_is_at_least_2(mat({{1, 2}, {2, 4}})), RankDeficientError);
  EXPECT_THROW(shortest_is_at_least_2(IntMatrix::Identity(14, 14)), EnumerationLimitError);
}

TEST(ProbeLower, Cases) {
  for (int d = 2; d <= 5; ++d) EXPECT_TRUE(probe_f_lower(lower_bound_instance(d), d)) << "delta " << d;
  EXPECT_FALSE(probe_f_lower(IntMatrix::Identity(2, 2), 1));
  EXPECT_FALSE(probe_f_lower(kWorked, 2));
  EXPECT_FALSE(probe_f_lower(kLowerBound3, 4));  // wrong delta
}
