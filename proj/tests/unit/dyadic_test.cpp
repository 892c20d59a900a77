#include <gtest/gtest.h>

#include "realsets/dyadic.hpp"

using realsets::DyadicExt;

TEST(Dyadic, CanonicalForm) {
  DyadicExt a(mpz_class(6), 3);
  EXPECT_EQ(a.mantissa(), 3);
  EXPECT_EQ(a.exponent(), 2u);
  EXPECT_EQ(a, DyadicExt(mpz_class(3), 2));
  EXPECT_EQ(DyadicExt(mpz_class(0), 9).exponent(), 0u);
}

TEST(Dyadic, ParseAndPrint) {
  EXPECT_EQ(DyadicExt::parse("3/8").str(), "3/8");
  EXPECT_EQ(DyadicExt::parse("5/2^3"), DyadicExt::parse("5/8"));
  EXPECT_EQ(DyadicExt::parse("4/2^1").str(), "2");
  EXPECT_TRUE(DyadicExt::parse("inf").is_infinite());
  EXPECT_THROW(DyadicExt::parse("1/3"), std::invalid_argument);
  EXPECT_THROW(DyadicExt::parse("x"), std::invalid_argument);
}

TEST(Dyadic, ArithmeticMatchesRationals) {
  for (long m1 = 0; m1 < 20; ++m1) {
    for (long m2 = 0; m2 < 20; m2 += 3) {
      DyadicExt a(mpz_class(m1), m1 % 5), b(mpz_class(m2), m2 % 4);
      EXPECT_EQ((a + b).to_rational(), a.to_rational() + b.to_rational());
      EXPECT_EQ((a * b).to_rational(), a.to_rational() * b.to_rational());
      EXPECT_EQ(a < b, a.to_rational() < b.to_rational());
    }
  }
}

TEST(Dyadic, InfinityAbsorbs) {
  DyadicExt inf = DyadicExt::infinity();
  EXPECT_TRUE((inf + DyadicExt(1)).is_infinite());
  EXPECT_TRUE((inf * DyadicExt(mpz_class(1), 4)).is_infinite());
  EXPECT_GT(inf, DyadicExt(mpz_class(1) << 200, 0));
  EXPECT_THROW((void)inf.to_rational(), std::domain_error);
}

TEST(Dyadic, FloorAndCeil) {
  mpq_class third(1, 3);
  DyadicExt lo = DyadicExt::floor_of(third, 10), hi = DyadicExt::ceil_of(third, 10);
  EXPECT_LE(lo.to_rational(), third);
  EXPECT_GE(hi.to_rational(), third);
  EXPECT_EQ(hi.to_rational() - lo.to_rational(), mpq_class(1, 1024));
  EXPECT_EQ(DyadicExt(mpz_class(7), 3).truncated(1), DyadicExt(mpz_class(1), 1));
}

TEST(Dyadic, SubtractFrom) {
  DyadicExt a(1), b(mpz_class(5), 2);
  ASSERT_TRUE(a.subtract_from(b));
  EXPECT_EQ(*a.subtract_from(b), DyadicExt(mpz_class(1), 2));
  EXPECT_FALSE(b.subtract_from(a));
}

TEST(Dyadic, CeilLog2) {
  EXPECT_EQ(realsets::ceil_log2(std::uint64_t{1}), 0u);
  EXPECT_EQ(realsets::ceil_log2(std::uint64_t{5}), 3u);
  EXPECT_EQ(realsets::ceil_log2(std::uint64_t{8}), 3u);
}
