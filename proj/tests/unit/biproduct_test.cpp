#include <gtest/gtest.h>

#include "realsets/biproduct.hpp"
#include "realsets/lower_real.hpp"

using namespace realsets;

namespace {
constexpr ApproxLevel kLevel{32};
}

TEST(Biproduct, ProjectionsOfInjections) {
  Biproduct<ExtNat> bp({extnat_instance(), extnat_instance()});
  EXPECT_EQ(bp.pr(0, bp.in(0, ExtNat(4))), ExtNat(4));
  EXPECT_EQ(bp.pr(1, bp.in(0, ExtNat(4))), ExtNat(0));
  EXPECT_THROW(bp.in(2, ExtNat(1)), std::out_of_range);
}

TEST(Biproduct, SumIsComponentwise) {
  Biproduct<ExtNat> bp({extnat_instance(), extnat_instance()});
  auto inst = bp.instance("pair");
  auto fam = inst.list({bp.make({{0, ExtNat(1)}, {1, ExtNat(2)}}), bp.make({{1, ExtNat::infinity()}})});
  auto s = inst.sum(fam).value;
  EXPECT_EQ(bp.pr(0, s), ExtNat(1));
  EXPECT_TRUE(bp.pr(1, s).is_infinite());
  EXPECT_EQ(inst.show(s), "(1, inf)");
}

TEST(Biproduct, MixedFactors) {
  Biproduct<ExtNat> bp({extnat_instance(), natmax_instance()});
  auto inst = bp.instance("mixed");
  auto x = bp.make({{0, ExtNat(3)}, {1, ExtNat(3)}});
  auto s = inst.sum(inst.list({x, x})).value;
  EXPECT_EQ(bp.pr(0, s), ExtNat(6));
  EXPECT_EQ(bp.pr(1, s), ExtNat(3));
}

TEST(Biproduct, ConstantFamilyOfElements) {
  Biproduct<ExtNat> bp({extnat_instance(), extnat_instance()});
  auto inst = bp.instance("pair");
  auto s = inst.sum(inst.constant(bp.in(1, ExtNat(1)))).value;
  EXPECT_EQ(bp.pr(0, s), ExtNat(0));
  EXPECT_TRUE(bp.pr(1, s).is_infinite());
}

TEST(Biproduct, CopairSumsTheMaps) {
  Biproduct<ExtNat> bp({extnat_instance(), extnat_instance()});
  auto f = bp.copair<ExtNat>(extnat_instance(), [](std::size_t k) {
    return std::function<ExtNat(const ExtNat&)>([k](const ExtNat& a) { return a * ExtNat(k + 1); });
  });
  EXPECT_EQ(f(bp.make({{0, ExtNat(5)}, {1, ExtNat(7)}})).value, ExtNat(19));
}

TEST(FreeSeriesMonoid, MultiplesAndExtension) {
  auto reals = extreal_instance();
  EXPECT_EQ(*multiple(reals, ExtNat(3), LowerReal(DyadicExt::parse("1/4"))).value.exact(), DyadicExt::parse("3/4"));
  EXPECT_TRUE(multiple(reals, ExtNat::infinity(), LowerReal(DyadicExt::parse("1/4"))).value.exact()->is_infinite());
  EXPECT_TRUE(multiple(reals, ExtNat::infinity(), LowerReal()).value.is_exact_zero());

  Biproduct<ExtNat> free2 = free_series_monoid(2);
  auto f = free_extend<LowerReal>(reals, [](std::size_t g) -> std::optional<LowerReal> {
    return LowerReal(DyadicExt(mpz_class(1), g + 1));
  });
  LowerReal v = f(free2.make({{0, ExtNat(2)}, {1, ExtNat(2)}})).value;
  EXPECT_EQ(*v.exact(), DyadicExt::parse("3/2"));
}

TEST(FreeSeriesMonoid, Ev1IsABijection) {
  auto nat = extnat_instance();
  std::function<ExtNat(ExtNat)> triple = [](ExtNat n) { return n * ExtNat(3); };
  std::vector<ExtNat> inputs{ExtNat(0), ExtNat(1), ExtNat(5), ExtNat::infinity()};
  EXPECT_TRUE(ev1_bijection_check(nat, {ExtNat(3), ExtNat::infinity()}, {triple}, inputs, kLevel).passed());
  std::function<ExtNat(ExtNat)> not_linear = [](ExtNat n) { return n * n; };
  EXPECT_EQ(ev1_bijection_check(nat, {}, {not_linear}, inputs, kLevel).outcome, Outcome::fail);
}
