#include <gtest/gtest.h>

#include "realsets/lower_real.hpp"

using namespace realsets;

namespace {

/// Σ_{n>=0} c·2^-(n+1) with its tail certificate.
Family<LowerReal> geometric(const SeriesMonoid<LowerReal>& inst, DyadicExt c, bool certified) {
  LazyTraits t;
  t.infinite_support = true;
  if (certified) t.tail_bound = [](std::size_t k) { return k + 8; };
  return inst.lazy([c](std::size_t n) { return LowerReal(c.scaled(-static_cast<std::int64_t>(n) - 1)); },
                   std::move(t));
}

}  // namespace

TEST(LowerReal, ExactValuesPrintExactly) {
  EXPECT_EQ(format(LowerReal(DyadicExt::parse("3/8")), ApproxLevel{10}), "3/8");
  EXPECT_EQ(format(LowerReal::infinity(), ApproxLevel{10}), "inf");
}

TEST(LowerReal, UncertifiedGeometricSumIsOneSided) {
  auto inst = extreal_instance();
  LowerReal s = inst.sum(geometric(inst, DyadicExt(1), false)).value;
  EXPECT_FALSE(s.has_modulus());
  EXPECT_EQ(format(s, ApproxLevel{40}), "≥ 1 - 2^-41 (40 bits)");
}

TEST(LowerReal, CertifiedSumCarriesModulus) {
  auto inst = extreal_instance();
  LowerReal s = inst.sum(geometric(inst, DyadicExt(1), true)).value;
  EXPECT_TRUE(s.has_modulus());
  EXPECT_EQ(lower_real_eq(s, LowerReal(DyadicExt(1)), ApproxLevel{40}), Verdict::equal);
}

TEST(LowerReal, BoundsAreMonotone) {
  LowerReal x = LowerReal::from_rational(mpq_class(2, 3));
  for (std::size_t k = 0; k < 60; ++k) {
    EXPECT_LE(x.bound(k), x.bound(k + 1));
    EXPECT_LE(x.bound(k).to_rational(), mpq_class(2, 3));
    EXPECT_LE(mpq_class(2, 3) - x.bound(k).to_rational(), mpq_class(1, mpz_class(1) << k));
  }
}

TEST(LowerReal, HalvingKeepsModulus) {
  LowerReal x = halve(LowerReal::from_rational(mpq_class(1, 3)));
  EXPECT_TRUE(x.has_modulus());
  EXPECT_EQ(lower_real_eq(x, LowerReal::from_rational(mpq_class(1, 6)), ApproxLevel{40}), Verdict::equal);
}

TEST(LowerReal, SeparatedValuesAreNeverEqual) {
  LowerReal a = LowerReal::from_rational(mpq_class(1, 3));
  LowerReal b = LowerReal::from_rational(mpq_class(1, 2));
  for (std::size_t k : {4, 20, 60}) EXPECT_NE(lower_real_eq(a, b, ApproxLevel{k}), Verdict::equal);
  EXPECT_EQ(lower_real_eq(LowerReal::infinity(), a, ApproxLevel{20}), Verdict::unequal);
  EXPECT_EQ(lower_real_eq(LowerReal(DyadicExt(1)), LowerReal(DyadicExt(2)), ApproxLevel{20}),
            Verdict::unequal);
}

TEST(LowerReal, OneSidedComparisonIsUnknownNotEqual) {
  auto inst = extreal_instance();
  LowerReal s = inst.sum(geometric(inst, DyadicExt(1), false)).value;
  EXPECT_NE(lower_real_eq(s, LowerReal(DyadicExt(2)), ApproxLevel{20}), Verdict::equal);
}

TEST(LowerReal, ConstantTailIsInfinite) {
  auto inst = extreal_instance();
  EXPECT_TRUE(inst.sum(inst.constant(LowerReal(DyadicExt(mpz_class(1), 20)))).value.exact()->is_infinite());
  EXPECT_TRUE(inst.sum(inst.constant(LowerReal())).value.is_exact_zero());
}

TEST(LowerReal, EmbedExtNat) {
  EXPECT_EQ(*embed(ExtNat(5)).exact(), DyadicExt(5));
  EXPECT_TRUE(embed(ExtNat::infinity()).exact()->is_infinite());
}

TEST(LowerReal, FormatBound) {
  EXPECT_EQ(format_bound(DyadicExt(1) + DyadicExt(mpz_class(1), 5)), "33/32");
  EXPECT_EQ(format_bound(DyadicExt(mpz_class(7), 3)), "7/8");
  EXPECT_EQ(format_bound(DyadicExt(mpz_class(1023), 10)), "1 - 2^-10");
}
