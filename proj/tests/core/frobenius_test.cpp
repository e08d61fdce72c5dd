#include <gtest/gtest.h>

#include "fglocus/error.hpp"
#include "fglocus/frobenius.hpp"
#include "test_support.hpp"

using namespace fglocus;
using namespace fglocus::testing;

namespace {

class FrobeniusTest : public ::testing::Test {
protected:
  RingPtr r3 = RingContext::indexed(3);
  RingPtr r4 = RingContext::indexed(4);
  MonomialIdeal path = sq_ideal(r3, {{1, 2}, {2, 3}});
  MonomialIdeal ci = sq_ideal(r4, {{1, 2}, {3, 4}});
};

TEST_F(FrobeniusTest, CriterionOnPath) {
  EXPECT_FALSE(fg_criterion(path));
  auto w = fg_criterion_witness(path);
  ASSERT_TRUE(w.has_value());
  EXPECT_FALSE(sum(bracket_power(path, 2), generator_lcm_ideal(path)).contains(*w));
  EXPECT_TRUE(colon(bracket_power(path, 2), path).contains(*w));
}

TEST_F(FrobeniusTest, CriterionOnCompleteIntersections) {
  EXPECT_TRUE(fg_criterion(ci));
  EXPECT_TRUE(fg_criterion(sq_ideal(r3, {{1}, {2}, {3}})));
  EXPECT_TRUE(fg_criterion(sq_ideal(r3, {{1, 2, 3}})));
  EXPECT_TRUE(fg_criterion(MonomialIdeal::zero(r3)));
}

TEST_F(FrobeniusTest, CriterionRejectsBadInput) {
  EXPECT_THROW(fg_criterion(MonomialIdeal::unit(r3)), InvalidArgument);
  EXPECT_THROW(fg_criterion(ideal(r3, {{2, 1, 0}})), InvalidArgument);
}

TEST_F(FrobeniusTest, FrobeniusColon) {
  EXPECT_EQ(frobenius_colon(sq_ideal(r3, {{1}}), 3, 2), ideal(r3, {{8, 0, 0}}));
  EXPECT_EQ(frobenius_colon(path, 2, 1), ideal(r3, {{2, 1, 0}, {1, 1, 1}, {0, 1, 2}}));
  EXPECT_THROW(frobenius_colon(MonomialIdeal::zero(r3), 2, 1), InvalidArgument);
  EXPECT_THROW(frobenius_colon(MonomialIdeal::unit(r3), 2, 1), InvalidArgument);
}

TEST_F(FrobeniusTest, GenerationIdealSmallDegrees) {
  const unsigned p = 2;
  auto k1 = frobenius_colon(path, p, 1);
  auto k2 = frobenius_colon(path, p, 2);
  EXPECT_EQ(generation_ideal(path, p, 2), product(k1, bracket_power(k1, p)));
  auto l3 = sum(sum(product(k1, bracket_power(k2, p)), product(k2, bracket_power(k1, p * p))),
                product(product(k1, bracket_power(k1, p)), bracket_power(k1, p * p)));
  EXPECT_EQ(generation_ideal(path, p, 3), l3);
  EXPECT_THROW(generation_ideal(path, p, 1), InvalidArgument);
}

TEST_F(FrobeniusTest, CompleteIntersectionIsGeneratedInDegreeOne) {
  auto k2 = frobenius_colon(ci, 2, 2);
  auto l2 = generation_ideal(ci, 2, 2);
  EXPECT_TRUE(k2.contains(l2));
  // Degree 2 is generated once I^[4] (zero in that degree) is added.
  EXPECT_EQ(sum(l2, bracket_power(ci, 4)), k2);
  EXPECT_TRUE(ce_vanishes(ci, 2, 2));
  EXPECT_TRUE(ce_vanishes(ci, 3, 3));
}

TEST_F(FrobeniusTest, CeVanishing) {
  EXPECT_FALSE(ce_vanishes(path, 2, 2));
  EXPECT_TRUE(ce_vanishes(sq_ideal(r3, {{1}}), 2, 2));
  EXPECT_TRUE(ce_vanishes(sq_ideal(r3, {{1}, {2}}), 2, 2));
}

TEST_F(FrobeniusTest, KGeneration) {
  EXPECT_TRUE(is_k_generated_up_to(ci, {}));
  auto report = check_k_generation(path, {});
  EXPECT_FALSE(report.generated);
  ASSERT_EQ(report.degrees.size(), 2U);
  EXPECT_EQ(report.degrees[0].e, 2U);
  EXPECT_FALSE(report.degrees[0].vanishes);
  // k = e_max leaves nothing to check.
  auto vacuous = check_k_generation(path, OracleParams{2, 3, 3});
  EXPECT_TRUE(vacuous.generated);
  EXPECT_TRUE(vacuous.degrees.empty());
}

TEST_F(FrobeniusTest, OracleParamsValidation) {
  EXPECT_THROW((OracleParams{4, 3, 1}.validate()), InvalidArgument);
  EXPECT_THROW((OracleParams{7, 3, 1}.validate()), InvalidArgument);
  EXPECT_THROW((OracleParams{2, 1, 1}.validate()), InvalidArgument);
  EXPECT_THROW((OracleParams{2, 5, 1}.validate()), InvalidArgument);
  EXPECT_THROW((OracleParams{2, 3, 0}.validate()), InvalidArgument);
  EXPECT_NO_THROW((OracleParams{5, 4, 1}.validate()));
}

TEST_F(FrobeniusTest, LargestOracleSettingStaysUnderCeiling) {
  EXPECT_EQ(frobenius_power(5, 4), 625U);
  EXPECT_TRUE(is_k_generated_up_to(sq_ideal(r3, {{1, 2}}), OracleParams{5, 4, 1}));
  EXPECT_THROW(frobenius_power(2, 17), ExponentOverflow);
}

} // namespace
