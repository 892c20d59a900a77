#include <gtest/gtest.h>

#include "realsets/formal.hpp"

using namespace realsets;

TEST(Formal, ParseAndPrint) {
  FormalMagnitude x = FormalMagnitude::parse("{0:1, 3:2}");
  EXPECT_EQ(x.str(), "{0:1, 3:2}");
  EXPECT_EQ(FormalMagnitude::parse("{}").str(), "{}");
  EXPECT_EQ(FormalMagnitude::parse(x.str()), x);
  EXPECT_THROW(FormalMagnitude::parse("{0:}"), std::invalid_argument);
  EXPECT_EQ(FormalMagnitude::ones_from(2).str(), "{} tail 2:1");
}

TEST(Formal, Values) {
  EXPECT_EQ(formal_value(FormalMagnitude::parse("{0:1}")), DyadicExt(1));
  EXPECT_EQ(formal_value(FormalMagnitude::parse("{1:1, 2:3}")), DyadicExt::parse("5/4"));
  EXPECT_EQ(formal_value(FormalMagnitude::ones_from(1)), DyadicExt(1));
  EXPECT_EQ(formal_value(FormalMagnitude::ones_from(0, 3)), DyadicExt(6));
  EXPECT_TRUE(formal_value(FormalMagnitude::parse("{4:inf}")).is_infinite());
}

TEST(Formal, DoublingRelation) {
  EXPECT_EQ(formal_normalize(FormalMagnitude::parse("{1:2}")), FormalMagnitude::parse("{0:1}"));
  EXPECT_EQ(formal_normalize(FormalMagnitude::parse("{3:8}")), FormalMagnitude::parse("{0:1}"));
  EXPECT_EQ(formal_normalize(FormalMagnitude::parse("{2:3}")), FormalMagnitude::parse("{1:1, 2:1}"));
}

TEST(Formal, TailRelation) {
  EXPECT_EQ(formal_normalize(FormalMagnitude::ones_from(1)), FormalMagnitude::generator(0));
  EXPECT_EQ(formal_normalize(FormalMagnitude::ones_from(3, 2)), FormalMagnitude::generator(1));
}

TEST(Formal, InfinityAbsorbs) {
  EXPECT_EQ(formal_normalize(FormalMagnitude::parse("{0:1, 5:inf}")), FormalMagnitude::infinity());
  EXPECT_TRUE(FormalMagnitude::infinity().is_infinite_form());
}

TEST(Formal, NormalFormShape) {
  FormalMagnitude n = formal_normalize(FormalMagnitude::parse("{0:3, 1:5, 4:7}"));
  EXPECT_FALSE(n.tail);
  for (const auto& [k, c] : n.coeffs) {
    if (k > 0) {
      EXPECT_EQ(c, ExtNat(1));
    }
  }
  EXPECT_EQ(formal_value(n), formal_value(FormalMagnitude::parse("{0:3, 1:5, 4:7}")));
}

TEST(Formal, HalvingShiftsGenerators) {
  EXPECT_EQ(formal_halve(FormalMagnitude::parse("{0:1, 2:3}")), FormalMagnitude::parse("{1:1, 3:3}"));
  EXPECT_EQ(formal_value(formal_halve(FormalMagnitude::ones_from(0))), DyadicExt(1));
}

TEST(Formal, Congruence) {
  EXPECT_TRUE(formal_congruent(FormalMagnitude::parse("{0:1}"), FormalMagnitude::parse("{1:1, 2:2}")));
  EXPECT_FALSE(formal_congruent(FormalMagnitude::parse("{0:1}"), FormalMagnitude::parse("{1:1}")));
}

TEST(Formal, IntegerPartOverflow) {
  FormalMagnitude huge;
  huge.coeffs[0] = ExtNat(std::numeric_limits<std::uint64_t>::max());
  huge.coeffs[1] = ExtNat(4);
  EXPECT_THROW(formal_normalize(huge), std::overflow_error);
}
