#include <gtest/gtest.h>

#include <memory>

#include "realsets/lattice.hpp"

using namespace realsets;

TEST(Lattice, ChainJoinIsMax) {
  FiniteLattice c = FiniteLattice::chain(3);
  EXPECT_EQ(c.name(), "chain3");
  EXPECT_EQ(c.size(), 3u);
  EXPECT_EQ(c.join({0}, {2}), LatticePoint{2});
  EXPECT_TRUE(c.leq(c.bottom(), c.top()));
  EXPECT_FALSE(c.leq(c.top(), c.bottom()));
}

TEST(Lattice, BooleanLabels) {
  FiniteLattice b = FiniteLattice::boolean();
  EXPECT_EQ(b.label(b.top()), "top");
  EXPECT_EQ(b.parse("bot"), b.bottom());
  EXPECT_THROW(b.parse("middle"), std::invalid_argument);
}

TEST(Lattice, RejectsNonLattice) {
  // Two incomparable maximal elements above a bottom: no join for them.
  std::vector<std::vector<bool>> leq{{true, true, true}, {false, true, false}, {false, false, true}};
  EXPECT_THROW(FiniteLattice("vee", leq, {"0", "a", "b"}), std::invalid_argument);
}

TEST(Lattice, SupOfFamilies) {
  auto lat = std::make_shared<const FiniteLattice>(FiniteLattice::chain(3));
  auto inst = sup_lattice_instance(lat);
  EXPECT_TRUE(inst.idempotent);
  EXPECT_EQ(inst.sum(inst.list({LatticePoint{1}, LatticePoint{0}})).value, LatticePoint{1});
  EXPECT_EQ(inst.sum(inst.constant(LatticePoint{1})).value, LatticePoint{1});
  auto reaches_top = inst.lazy([](std::size_t n) { return LatticePoint{n == 50 ? 2u : 0u}; });
  Partial<LatticePoint> s = inst.sum(reaches_top);
  EXPECT_FALSE(s.partial);
  EXPECT_EQ(s.value, LatticePoint{2});
  auto never_top = inst.lazy([](std::size_t) { return LatticePoint{1}; });
  EXPECT_TRUE(inst.sum(never_top).partial);
}
