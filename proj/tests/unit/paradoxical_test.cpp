#include <gtest/gtest.h>

#include "realsets/paradoxical.hpp"

using namespace realsets;

TEST(Paradoxical, LiteralsRoundTrip) {
  for (const char* text : {"0", "t:1.01", "t:10.0", "r:0.(1)", "r:0.(10)", "r:1.(1)", "r:0.(01)"}) {
    EXPECT_EQ(ZPElem::parse(text).str(), text);
  }
  EXPECT_EQ(ZPElem::parse("r:0.1(01)").value(), mpq_class(2, 3));
  EXPECT_EQ(ZPElem::parse("r:0.1(01)").str(), "r:0.(10)");
  EXPECT_THROW(ZPElem::parse("r:0.(0)"), std::invalid_argument);
  EXPECT_THROW(ZPElem::parse("t:2"), std::invalid_argument);
  EXPECT_THROW(ZPElem::terminating(mpq_class(1, 3)), std::invalid_argument);
}

TEST(Paradoxical, DyadicValueHasTwoElements) {
  ZPElem s = ZPElem::terminating(1), x = ZPElem::nonterminating(1);
  EXPECT_FALSE(s == x);
  EXPECT_EQ(s.value(), x.value());
  EXPECT_EQ(zp_k(s), x);
  EXPECT_THROW(zp_k(x), std::invalid_argument);
}

TEST(Paradoxical, Addition) {
  ZPElem ones = ZPElem::parse("r:0.(1)"), one = ZPElem::parse("t:1");
  EXPECT_EQ(zp_add(ones, ones).str(), "r:1.(1)");
  EXPECT_EQ(zp_add(ones, one).str(), "r:1.(1)");
  EXPECT_EQ(zp_add(one, one).str(), "t:10.0");
  EXPECT_EQ(zp_add(ZPElem(), one), one);
}

TEST(Paradoxical, GeometricSeriesIsNotOne) {
  // Partial sums of 1/2 + 1/4 + ... stay in S below 1; 1 in S is never reached.
  ZPElem acc;
  for (int n = 1; n <= 20; ++n) acc = zp_add(acc, ZPElem::terminating(mpq_class(1, mpz_class(1) << n)));
  EXPECT_EQ(acc.kind(), ZPElem::Kind::S);
  EXPECT_LT(acc.value(), 1);
}

TEST(Paradoxical, Order) {
  ZPElem half = ZPElem::parse("t:0.1"), one_s = ZPElem::parse("t:1"), one_x = ZPElem::parse("r:0.(1)");
  EXPECT_TRUE(zp_leq(ZPElem(), half));
  EXPECT_TRUE(zp_leq(half, one_s));
  EXPECT_TRUE(zp_leq(half, one_x));
  EXPECT_FALSE(zp_leq(one_x, one_s));
  EXPECT_FALSE(zp_leq(one_s, one_x));
  EXPECT_FALSE(zp_leq(half, ZPElem()));
  EXPECT_TRUE(zp_leq(one_x, one_x));
}
