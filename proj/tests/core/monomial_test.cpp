#include <gtest/gtest.h>

#include "fglocus/error.hpp"
#include "fglocus/monomial.hpp"
#include "test_support.hpp"

using namespace fglocus;
using fglocus::testing::mono;

namespace {

class MonomialTest : public ::testing::Test {
protected:
  RingPtr ring = RingContext::indexed(3);
};

TEST(RingContextTest, RejectsBadNames) {
  EXPECT_THROW(RingContext::make({}), InvalidArgument);
  EXPECT_THROW(RingContext::make({"x", "x"}), InvalidArgument);
  EXPECT_THROW(RingContext::make({"1x"}), InvalidArgument);
  EXPECT_THROW(RingContext::make({""}), InvalidArgument);
  EXPECT_THROW(RingContext::indexed(31), InvalidArgument);
  EXPECT_NO_THROW(RingContext::make({"x_1", "y2", "ab_c"}));
}

TEST(RingContextTest, IndexLookup) {
  auto r = RingContext::make({"x", "y", "z"});
  EXPECT_EQ(r->index_of("y"), 1U);
  EXPECT_FALSE(r->index_of("w").has_value());
}

TEST_F(MonomialTest, Divides) {
  EXPECT_TRUE(divides(mono(ring, {1, 0, 0}), mono(ring, {1, 1, 0})));
  EXPECT_TRUE(divides(Monomial::one(ring), mono(ring, {3, 0, 2})));
  EXPECT_FALSE(divides(mono(ring, {2, 0, 0}), mono(ring, {1, 1, 0})));
}

TEST_F(MonomialTest, LcmGcdQuotient) {
  auto a = mono(ring, {1, 1, 0});
  auto b = mono(ring, {0, 1, 1});
  EXPECT_EQ(lcm(a, b), mono(ring, {1, 1, 1}));
  EXPECT_EQ(gcd(a, b), mono(ring, {0, 1, 0}));
  EXPECT_EQ(quotient_exact(mono(ring, {1, 1, 1}), mono(ring, {0, 1, 0})), mono(ring, {1, 0, 1}));
  EXPECT_THROW(quotient_exact(a, b), InvalidArgument);
}

TEST_F(MonomialTest, SquarefreeAndSupport) {
  EXPECT_TRUE(Monomial::one(ring).is_squarefree());
  EXPECT_TRUE(Monomial::one(ring).is_one());
  EXPECT_TRUE(mono(ring, {1, 0, 1}).is_squarefree());
  EXPECT_FALSE(mono(ring, {2, 0, 1}).is_squarefree());
  EXPECT_EQ(mono(ring, {2, 0, 1}).support(), Face({0, 2}));
  EXPECT_EQ(mono(ring, {2, 0, 1}).degree(), 3U);
}

TEST_F(MonomialTest, ExponentCeiling) {
  EXPECT_NO_THROW(mono(ring, {Monomial::kMaxExponent, 0, 0}));
  EXPECT_THROW(mono(ring, {Monomial::kMaxExponent + 1, 0, 0}), ExponentOverflow);
  auto big = mono(ring, {Monomial::kMaxExponent / 2 + 1, 0, 0});
  EXPECT_THROW(big * big, ExponentOverflow);
  EXPECT_THROW(pow(mono(ring, {2, 0, 0}), Monomial::kMaxExponent), ExponentOverflow);
  EXPECT_EQ(pow(mono(ring, {1, 1, 0}), 8), mono(ring, {8, 8, 0}));
}

TEST_F(MonomialTest, LengthMustMatchRing) {
  EXPECT_THROW(mono(ring, {1, 0}), InvalidArgument);
}

TEST_F(MonomialTest, CrossContextIsAnError) {
  auto other = RingContext::make({"a", "b", "c"});
  EXPECT_THROW(divides(mono(ring, {1, 0, 0}), mono(other, {1, 0, 0})), ContextMismatch);
  EXPECT_THROW(lcm(mono(ring, {1, 0, 0}), mono(other, {1, 0, 0})), ContextMismatch);
  // Structurally identical contexts are compatible.
  auto twin = RingContext::indexed(3);
  EXPECT_NO_THROW(divides(mono(ring, {1, 0, 0}), mono(twin, {1, 0, 0})));
}

TEST_F(MonomialTest, Display) {
  auto r = RingContext::make({"x", "y", "z", "w", "a", "b"});
  EXPECT_EQ(mono(r, {1, 0, 0, 1, 0, 0}).to_string(), "x*w");
  EXPECT_EQ(mono(r, {2, 0, 0, 0, 0, 3}).to_string(), "x^2*b^3");
  EXPECT_EQ(Monomial::one(r).to_string(), "1");
}

TEST(FaceTest, CanonicalOrder) {
  // Size first, then lexicographic on sorted vertex lists.
  EXPECT_LT(Face{}, Face({2}));
  EXPECT_LT(Face({0}), Face({1}));
  EXPECT_LT(Face({2}), Face({0, 1}));
  EXPECT_LT(Face({0, 1}), Face({0, 2}));
  EXPECT_LT(Face({0, 2}), Face({1, 2}));
  EXPECT_LT(Face({0, 3}), Face({1, 2}));
  EXPECT_EQ(Face({1, 3}).to_string(), "{2,4}");
  EXPECT_EQ(Face{}.to_string(), "{}");
}

} // namespace
