#include <gtest/gtest.h>

#include "realsets/magnitude.hpp"
#include "realsets/rig.hpp"

using namespace realsets;

TEST(Rig, PByRecurrence) {
  Rig<ExtNat> nat = nat_rig();
  EXPECT_EQ(p_of_list(nat, {ExtNat(1), ExtNat(2), ExtNat(3)}), ExtNat(23));
  EXPECT_EQ(p_of_list(nat, {}), ExtNat(0));
  EXPECT_EQ(p_of_list(nat, {ExtNat(5)}), ExtNat(5));
}

TEST(Rig, PIsProductMinusOne) {
  Rig<DyadicExt> dy = dyadic_rig();
  std::vector<DyadicExt> xs{DyadicExt::parse("1/2"), DyadicExt::parse("3/4"), DyadicExt(2)};
  DyadicExt prod(1);
  for (const auto& x : xs) prod = prod * (DyadicExt(1) + x);
  EXPECT_EQ(p_of_list(dy, xs) + DyadicExt(1), prod);
}

TEST(Rig, ZerosDoNotContribute) {
  Rig<ExtNat> nat = nat_rig();
  auto fam = nat.base.finite({{0, ExtNat(2)}, {7, ExtNat(3)}});
  EXPECT_EQ(p_sum(nat, fam).value, ExtNat(11));
}

TEST(Rig, LazyFamilyNeedsSupportBoundOverNat) {
  Rig<ExtNat> nat = nat_rig();
  auto fam = nat.base.lazy([](std::size_t n) { return ExtNat(n < 3 ? 1 : 0); });
  EXPECT_THROW(p_sum(nat, fam), std::invalid_argument);
  LazyTraits t;
  t.support_bound = 3;
  EXPECT_EQ(p_sum(nat, nat.base.lazy([](std::size_t n) { return ExtNat(n < 3 ? 1 : 0); }, t)).value, ExtNat(7));
}

TEST(Rig, ExtrealLazyP) {
  Rig<LowerReal> rig = extreal_rig();
  auto fam = rig.base.lazy([](std::size_t n) { return LowerReal(DyadicExt::pow2(-static_cast<std::int64_t>(n) - 1)); });
  LowerReal p = p_sum(rig, fam).value;
  // Π(1 + 2^-(n+1)) - 1 = 1.38423...
  mpq_class b = p.bound(40).to_rational();
  EXPECT_GT(b, mpq_class(138, 100));
  EXPECT_LT(b, mpq_class(13843, 10000));
  EXPECT_LE(p.bound(20), p.bound(40));
}

TEST(Rig, PInstanceIsASeriesMonoid) {
  auto inst = p_instance(nat_rig());
  EXPECT_EQ(inst.name, "P(extnat)");
  EXPECT_TRUE(check_sum_swap(inst, inst.matrix({{ExtNat(1), ExtNat(2)}, {ExtNat(0), ExtNat(1)}}), ApproxLevel{32})
                  .passed());
  EXPECT_TRUE(check_zero_diagonal(inst, ExtNat(4), 3, ApproxLevel{32}).passed());
}

TEST(Rig, GeometricInverse) {
  for (const char* a : {"1", "1/2", "3/4", "1/256"}) {
    DyadicExt d = DyadicExt::parse(a);
    LowerReal v = geometric_inverse(d);
    EXPECT_TRUE(v.has_modulus());
    mpq_class prod = d.to_rational() * v.bound(50).to_rational();
    EXPECT_LE(prod, 1) << a;
    EXPECT_GE(prod, 1 - mpq_class(1, mpz_class(1) << 40)) << a;
    for (std::size_t k = 0; k < 30; ++k) EXPECT_LE(v.bound(k), v.bound(k + 1));
  }
  EXPECT_THROW(geometric_inverse(DyadicExt(0)), std::domain_error);
  EXPECT_THROW(geometric_inverse(DyadicExt(2)), std::domain_error);
}

TEST(LogMonoid, AdditionIsMultiplication) {
  Rig<ExtNat> nat = nat_rig();
  EXPECT_EQ(log_add(nat, LogElem<ExtNat>{ExtNat(2)}, LogElem<ExtNat>{ExtNat(4)}).base, ExtNat(8));
  EXPECT_EQ(log_zero(nat).base, ExtNat(1));
}

TEST(LogMonoid, SeriesSumThroughP) {
  Rig<ExtNat> nat = nat_rig();
  std::vector<ExtNat> us{ExtNat(1), ExtNat(2), ExtNat(3)};
  std::vector<LogElem<ExtNat>> terms{{ExtNat(2)}, {ExtNat(3)}, {ExtNat(4)}};
  EXPECT_EQ(log_series_sum(nat, terms, us).base, ExtNat(24));
  terms[1].base = ExtNat(5);
  EXPECT_THROW(log_series_sum(nat, terms, us), std::invalid_argument);
}
