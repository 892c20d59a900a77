#include <gtest/gtest.h>

#include "realsets/extnat.hpp"
#include "realsets/extnat_series.hpp"

using namespace realsets;

TEST(ExtNat, Arithmetic) {
  EXPECT_EQ(ExtNat(2) + ExtNat(3), ExtNat(5));
  EXPECT_EQ(ExtNat(4) * ExtNat(3), ExtNat(12));
  EXPECT_TRUE((ExtNat(1) + ExtNat::infinity()).is_infinite());
  EXPECT_EQ(ExtNat(0) * ExtNat::infinity(), ExtNat(0));
  EXPECT_TRUE((ExtNat(2) * ExtNat::infinity()).is_infinite());
}

TEST(ExtNat, OverflowIsReported) {
  ExtNat big(std::numeric_limits<std::uint64_t>::max());
  EXPECT_THROW(big + ExtNat(1), std::overflow_error);
}

TEST(ExtNat, ParseAndPrint) {
  EXPECT_EQ(ExtNat::parse("17"), ExtNat(17));
  EXPECT_EQ(ExtNat::parse("inf").str(), "inf");
  EXPECT_THROW(ExtNat::parse("-1"), std::invalid_argument);
}

TEST(ExtNatSeries, FiniteSupport) {
  auto inst = extnat_instance();
  auto fam = inst.finite({{0, ExtNat(1)}, {5, ExtNat(2)}, {9, ExtNat(4)}});
  EXPECT_EQ(inst.sum(fam).value, ExtNat(7));
}

TEST(ExtNatSeries, InfinitelyManyNonZeroIsInfinite) {
  auto inst = extnat_instance();
  EXPECT_TRUE(inst.sum(inst.constant(ExtNat(1))).value.is_infinite());
  EXPECT_EQ(inst.sum(inst.constant(ExtNat(0))).value, ExtNat(0));
}

TEST(ExtNatSeries, ScanBudgetMarksPartial) {
  auto inst = extnat_instance(16);
  auto fam = inst.lazy([](std::size_t n) { return ExtNat(n == 100 ? 1 : 0); });
  Partial<ExtNat> s = inst.sum(fam);
  EXPECT_TRUE(s.partial);
}

TEST(NatMax, SupremumOfFamily) {
  auto inst = natmax_instance();
  EXPECT_EQ(inst.sum(inst.list({ExtNat(3), ExtNat(9), ExtNat(2)})).value, ExtNat(9));
  LazyTraits t;
  t.unbounded = true;
  auto unbounded = inst.lazy([](std::size_t n) { return ExtNat(n); }, t);
  EXPECT_TRUE(inst.sum(unbounded).value.is_infinite());
}
