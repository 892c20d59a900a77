#include <gtest/gtest.h>

#include "realsets/extnat_series.hpp"
#include "realsets/omega.hpp"

using namespace realsets;

TEST(OrderPreservingMap, Fibres) {
  OrderPreservingMap xi({ExtNat(2), ExtNat(0), ExtNat(3)});
  EXPECT_EQ(xi(0), 0u);
  EXPECT_EQ(xi(1), 0u);
  EXPECT_EQ(xi(2), 2u);
  EXPECT_EQ(xi(4), 2u);
  EXPECT_EQ(xi(5), 3u);
  EXPECT_EQ(xi.fibre(1).second, ExtNat(0));
  EXPECT_EQ(xi.fibre(3).first, 5u);
}

TEST(OrderPreservingMap, OnlyTheLastFibreMayBeInfinite) {
  EXPECT_NO_THROW(OrderPreservingMap({ExtNat(1), ExtNat::infinity()}));
  EXPECT_THROW(OrderPreservingMap({ExtNat::infinity(), ExtNat(1)}), std::invalid_argument);
  OrderPreservingMap tail({ExtNat(1), ExtNat::infinity()});
  EXPECT_TRUE(tail.final_infinite());
  EXPECT_EQ(tail(1000), 1u);
}

TEST(Omega, SumGroupings) {
  auto inst = extnat_instance();
  auto om = OmegaMonoid<ExtNat>::from_series(inst);
  auto fam = inst.list({ExtNat(1), ExtNat(2), ExtNat(3), ExtNat(4)});
  EXPECT_TRUE(omega_assoc_check(om, fam, OrderPreservingMap({ExtNat(2), ExtNat(2)}), ApproxLevel{32}).passed());
  EXPECT_TRUE(omega_assoc_check(om, fam, OrderPreservingMap({ExtNat(1), ExtNat::infinity()}), ApproxLevel{32}).passed());
}

TEST(Omega, PGroupings) {
  auto om = OmegaMonoid<ExtNat>::from_rig(nat_rig());
  auto fam = om.carrier.list({ExtNat(1), ExtNat(2), ExtNat(0), ExtNat(3)});
  for (auto fibres : std::vector<std::vector<ExtNat>>{{ExtNat(3), ExtNat(1)}, {ExtNat(0), ExtNat(4)}, {ExtNat(1), ExtNat(1), ExtNat(2)}}) {
    EXPECT_TRUE(omega_assoc_check(om, fam, OrderPreservingMap(fibres), ApproxLevel{32}).passed());
  }
}

TEST(Omega, DetectsANonAssociativeProduct) {
  auto inst = extnat_instance();
  OmegaMonoid<ExtNat> bad{"first-plus-rest", inst, [inst](const Family<ExtNat>& f) {
                            return Partial<ExtNat>{inst.sum(f).value + f.at(0)};
                          }};
  auto fam = inst.list({ExtNat(1), ExtNat(2), ExtNat(3)});
  EXPECT_EQ(omega_assoc_check(bad, fam, OrderPreservingMap({ExtNat(2), ExtNat(1)}), ApproxLevel{32}).outcome,
            Outcome::fail);
}
