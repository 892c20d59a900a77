#include <gtest/gtest.h>

#include "realsets/extnat_series.hpp"
#include "realsets/magnitude.hpp"

using namespace realsets;

namespace {
constexpr ApproxLevel kLevel{40};
}

TEST(Zeno, HalvingOnExtendedReals) {
  auto inst = extreal_instance();
  std::vector<LowerReal> samples{LowerReal(DyadicExt(1)), LowerReal(DyadicExt::parse("37/16")),
                                 LowerReal::from_rational(mpq_class(2, 3)), LowerReal()};
  EXPECT_TRUE(zeno_verify(inst, halving(), samples, kLevel).passed());
  EXPECT_TRUE(check_tilde_equation(inst, halving(), LowerReal(DyadicExt(5)), kLevel).passed());
}

TEST(Zeno, HalvingAtInfinity) {
  auto inst = extreal_instance();
  EXPECT_TRUE(tilde(inst, halving(), LowerReal::infinity()).value.exact()->is_infinite());
}

TEST(Zeno, IdentityOnLattices) {
  auto lat = std::make_shared<const FiniteLattice>(FiniteLattice::chain(3));
  auto inst = sup_lattice_instance(lat);
  EXPECT_TRUE(zeno_verify(inst, identity_endo<LatticePoint>(), {{0}, {1}, {2}}, kLevel).passed());
  EXPECT_EQ(zeno_verify(inst, zero_endo(inst.zero), {{1}}, kLevel).outcome, Outcome::fail);
}

TEST(Zeno, NoCandidateOnExtNat) {
  auto inst = extnat_instance();
  auto candidates = extnat_endomorphisms(8);
  EXPECT_EQ(candidates.size(), 10u);
  for (const auto& h : candidates) {
    EXPECT_EQ(zeno_verify(inst, h, {ExtNat(1)}, kLevel).outcome, Outcome::fail) << h.name;
  }
}

TEST(Zeno, ZeroMapTilde) {
  auto inst = extreal_instance();
  EXPECT_TRUE(tilde(inst, zero_endo(inst.zero), LowerReal(DyadicExt(3))).value.is_exact_zero());
}

TEST(MagnitudeModule, ActionOfDyadics) {
  auto inst = extreal_instance();
  auto module = make_magnitude_module(inst, halving(), {LowerReal(DyadicExt(1))}, kLevel);
  ASSERT_TRUE(module);
  LowerReal r = scalar_action(module, DyadicExt::parse("11/4"), LowerReal(DyadicExt(4))).value;
  EXPECT_EQ(lower_real_eq(r, LowerReal(DyadicExt(11)), kLevel), Verdict::equal);
  LowerReal nt = scalar_action(module, binary_expand(DyadicExt::parse("3/4"), true), LowerReal(DyadicExt(4))).value;
  EXPECT_EQ(lower_real_eq(nt, LowerReal(DyadicExt(3)), kLevel), Verdict::equal);
  EXPECT_TRUE(scalar_action(module, DyadicExt::infinity(), LowerReal(DyadicExt(1))).value.exact()->is_infinite());
}

TEST(MagnitudeModule, RefusesUnverifiedStructure) {
  auto inst = extnat_instance();
  Check report;
  auto module = make_magnitude_module(inst, extnat_endomorphisms(1)[1], {ExtNat(1)}, kLevel, &report);
  EXPECT_FALSE(module);
  EXPECT_EQ(report.outcome, Outcome::fail);
  EXPECT_THROW(scalar_action(module, DyadicExt(1), ExtNat(1)), std::logic_error);
}

TEST(MagnitudeModule, LatticeActionIsIdempotent) {
  auto lat = std::make_shared<const FiniteLattice>(FiniteLattice::boolean());
  auto inst = sup_lattice_instance(lat);
  auto module = make_magnitude_module(inst, identity_endo<LatticePoint>(), {lat->bottom(), lat->top()}, kLevel);
  ASSERT_TRUE(module);
  EXPECT_EQ(scalar_action(module, DyadicExt::parse("3/8"), lat->top()).value, lat->top());
  EXPECT_EQ(scalar_action(module, DyadicExt(0), lat->top()).value, lat->bottom());
}

TEST(Multiplication, Exact) {
  EXPECT_EQ(extreal_mul(DyadicExt::parse("1/2"), DyadicExt::parse("3/4")), DyadicExt::parse("3/8"));
  EXPECT_EQ(extreal_mul(DyadicExt(0), DyadicExt::infinity()), DyadicExt(0));
  EXPECT_TRUE(extreal_mul(DyadicExt(2), DyadicExt::infinity()).is_infinite());
}

TEST(Multiplication, TwoSidedProducts) {
  LowerReal third = LowerReal::from_rational(mpq_class(1, 3));
  LowerReal p = extreal_mul(third, LowerReal(DyadicExt(3)));
  EXPECT_TRUE(p.has_modulus());
  EXPECT_EQ(lower_real_eq(p, LowerReal(DyadicExt(1)), kLevel), Verdict::equal);
  LowerReal q = extreal_mul(third, third);
  EXPECT_EQ(lower_real_eq(q, LowerReal::from_rational(mpq_class(1, 9)), kLevel), Verdict::equal);
}
