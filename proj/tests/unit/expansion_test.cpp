#include <gtest/gtest.h>

#include "realsets/expansion.hpp"

using namespace realsets;

TEST(Expansion, TerminatingForm) {
  BinaryExpansion x = binary_expand(DyadicExt::parse("11/4"));
  EXPECT_EQ(x.integer, ExtNat(2));
  EXPECT_EQ(x.positions, (std::vector<std::size_t>{1, 2}));
  EXPECT_TRUE(x.terminating());
  EXPECT_EQ(x.evaluate(), DyadicExt::parse("11/4"));
}

TEST(Expansion, NonterminatingForm) {
  BinaryExpansion x = binary_expand(DyadicExt::parse("3/4"), true);
  EXPECT_EQ(x.integer, ExtNat(0));
  EXPECT_EQ(x.positions, (std::vector<std::size_t>{1}));
  ASSERT_TRUE(x.ones_from);
  EXPECT_EQ(*x.ones_from, 3u);
  EXPECT_EQ(x.evaluate(), DyadicExt::parse("3/4"));

  BinaryExpansion two = binary_expand(DyadicExt(2), true);
  EXPECT_EQ(two.integer, ExtNat(1));
  EXPECT_EQ(*two.ones_from, 1u);
  EXPECT_EQ(two.evaluate(), DyadicExt(2));
}

TEST(Expansion, LowerEvaluationConverges) {
  LowerReal v = binary_expand(DyadicExt(1), true).evaluate_lower();
  EXPECT_TRUE(v.has_modulus());
  EXPECT_LE(v.bound(10), v.bound(11));
  mpq_class gap = 1 - v.bound(30).to_rational();
  EXPECT_GE(gap, 0);
  EXPECT_LE(gap, mpq_class(1, mpz_class(1) << 30));
}

TEST(Expansion, ZeroAndInfinity) {
  BinaryExpansion z = binary_expand(DyadicExt(0));
  EXPECT_TRUE(z.positions.empty());
  EXPECT_EQ(z.evaluate(), DyadicExt(0));
  EXPECT_THROW(binary_expand(DyadicExt::infinity()), std::domain_error);
}

TEST(Expansion, TextForm) {
  EXPECT_EQ(binary_expand(DyadicExt::parse("5/8")).str(), "0 + 0.101 pos:[1,3]");
  EXPECT_EQ(binary_expand(DyadicExt(1), true).str(), "0 + 0.111… pos:[1,2,3,…]");
}

TEST(Expansion, PiPrefix) {
  BinaryExpansion pi = BinaryExpansion::from_bits(ExtNat(3), pi_fraction_bits());
  ASSERT_TRUE(pi.known_until);
  EXPECT_EQ(pi_fraction_bits().size(), 128u);
  // 3.14159265358979 < value < 3.1415926535898
  mpq_class v = pi.evaluate().to_rational();
  EXPECT_GT(v, mpq_class(314159265358979, 100000000000000));
  EXPECT_LT(v, mpq_class(31415926535898, 10000000000000));
  EXPECT_EQ(pi.positions.front(), 3u);
}
