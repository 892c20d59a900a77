#include <gtest/gtest.h>

#include "realsets/extnat_series.hpp"
#include "realsets/lower_real.hpp"
#include "realsets/series.hpp"

using namespace realsets;

namespace {

constexpr ApproxLevel kLevel{32};

/// ℕ∪{∞} with Σ replaced by a rule that breaks the laws.
SeriesMonoid<ExtNat> broken(std::function<ExtNat(const Family<ExtNat>&)> rule) {
  SeriesMonoid<ExtNat> inst = extnat_instance();
  inst.name = "broken";
  inst.sum = [rule](const Family<ExtNat>& f) { return Partial<ExtNat>{rule(f)}; };
  return inst;
}

ExtNat plain_sum(const Family<ExtNat>& f) { return extnat_sum(f).value; }

}  // namespace

TEST(SeriesLaws, ZeroDiagonalHoldsForExtNat) {
  auto inst = extnat_instance();
  for (std::size_t n = 0; n < 10; ++n) EXPECT_TRUE(check_zero_diagonal(inst, ExtNat(7), n, kLevel).passed());
}

TEST(SeriesLaws, ZeroDiagonalCatchesDoubling) {
  auto inst = broken([](const Family<ExtNat>& f) { return plain_sum(f) + f.at(0); });
  EXPECT_EQ(check_zero_diagonal(inst, ExtNat(3), 0, kLevel).outcome, Outcome::fail);
}

TEST(SeriesLaws, SumSwapHoldsForExtNat) {
  auto inst = extnat_instance();
  auto m = inst.matrix({{ExtNat(1), ExtNat(2)}, {ExtNat(3), ExtNat::infinity()}, {ExtNat(0), ExtNat(5)}});
  EXPECT_TRUE(check_sum_swap(inst, m, kLevel).passed());
}

TEST(SeriesLaws, SumSwapCatchesCrossTerm) {
  // Σ a + a₀·a₁²: every single-entry sum is right but rows and columns disagree.
  auto inst = broken([](const Family<ExtNat>& f) {
    return plain_sum(f) + f.at(0) * f.at(1) * f.at(1);
  });
  auto m = inst.matrix({{ExtNat(1), ExtNat(2)}, {ExtNat(3), ExtNat(0)}});
  EXPECT_EQ(check_sum_swap(inst, m, kLevel).outcome, Outcome::fail);
}

TEST(SeriesLaws, InjectiveReindex) {
  auto inst = extnat_instance();
  auto fam = inst.finite({{0, ExtNat(4)}, {3, ExtNat(1)}});
  Reindex xi{{3, 0, 9}, Reindex::Tail::shift, 10};
  EXPECT_TRUE(check_injective_reindex(inst, fam, xi, kLevel).passed());
  Reindex clash{{1, 1}, Reindex::Tail::undefined, 0};
  EXPECT_EQ(check_injective_reindex(inst, fam, clash, kLevel).outcome, Outcome::invalid);
  auto positional = broken([](const Family<ExtNat>& f) { return plain_sum(f) + f.at(0) * f.at(1); });
  auto pair = positional.finite({{5, ExtNat(2)}, {7, ExtNat(2)}});
  Reindex onto{{5, 7}, Reindex::Tail::shift, 10};
  EXPECT_EQ(check_injective_reindex(positional, pair, onto, kLevel).outcome, Outcome::fail);
}

TEST(SeriesLaws, SubsetSums) {
  auto inst = extnat_instance();
  auto fam = inst.list({ExtNat(1), ExtNat(2), ExtNat(4), ExtNat(8)});
  EXPECT_EQ(sum_over_subset(inst, fam, IndexSet::evens()).value, ExtNat(5));
  EXPECT_EQ(sum_over_subset(inst, fam, IndexSet::of({1, 3})).value, ExtNat(10));
  EXPECT_EQ(sum_over_subset(inst, fam, IndexSet::empty()).value, ExtNat(0));
  auto ones = inst.constant(ExtNat(1));
  EXPECT_TRUE(sum_over_subset(inst, ones, IndexSet::evens()).value.is_infinite());
}

TEST(SeriesLaws, Preorder) {
  auto inst = extnat_instance();
  using Status = Witness<ExtNat>::Status;
  auto w = leq_witness(inst, ExtNat(3), ExtNat(5), 64);
  ASSERT_EQ(w.status, Status::found);
  EXPECT_EQ(*w.u, ExtNat(2));
  EXPECT_EQ(leq_witness(inst, ExtNat(5), ExtNat(3), 64).status, Status::disproved);
  EXPECT_EQ(leq_witness(inst, ExtNat(5), ExtNat::infinity(), 64).status, Status::found);
}

TEST(SeriesLaws, IdempotenceSeparatesSumFromMax) {
  EXPECT_TRUE(check_idempotent_sup(natmax_instance(), {ExtNat(0), ExtNat(2), ExtNat(9)}, kLevel).passed());
  auto flagged = extnat_instance();
  EXPECT_EQ(check_idempotent_sup(flagged, {ExtNat(2)}, kLevel).outcome, Outcome::invalid);
  flagged.idempotent = true;
  EXPECT_EQ(check_idempotent_sup(flagged, {ExtNat(2)}, kLevel).outcome, Outcome::fail);
}

TEST(SeriesLaws, EckmannHilton) {
  auto plus = extnat_instance();
  auto max = natmax_instance();
  std::vector<Family<Family<ExtNat>>> ms{plus.matrix({{ExtNat(1), ExtNat(5)}, {ExtNat(3), ExtNat(4)}})};
  std::vector<Family<ExtNat>> fams{plus.list({ExtNat(2), ExtNat(5)})};
  auto same = check_eckmann_hilton(plus, plus, ms, fams, kLevel);
  EXPECT_TRUE(same.morphism_condition_holds);
  EXPECT_TRUE(same.agreement.passed());
  auto mixed = check_eckmann_hilton(plus, max, ms, fams, kLevel);
  EXPECT_FALSE(mixed.morphism_condition_holds);
}

TEST(SeriesLaws, MorphismEmbedding) {
  auto nat = extnat_instance();
  std::vector<Family<ExtNat>> samples{nat.list({ExtNat(1), ExtNat(2)}), nat.constant(ExtNat(1))};
  EXPECT_TRUE((check_morphism<ExtNat, LowerReal>(nat, extreal_instance(), embed, samples, kLevel).passed()));
  std::function<LowerReal(const ExtNat&)> off_by_one = [](const ExtNat& n) { return embed(n + ExtNat(1)); };
  EXPECT_EQ((check_morphism<ExtNat, LowerReal>(nat, extreal_instance(), off_by_one, samples, kLevel).outcome),
            Outcome::fail);
}

TEST(SeriesLaws, BothPrefersWorstOutcome) {
  EXPECT_EQ(both(Check::pass(), Check::inconclusive("x")).outcome, Outcome::inconclusive);
  EXPECT_EQ(both(Check::inconclusive("x"), Check::fail("y")).outcome, Outcome::fail);
  EXPECT_EQ(both(Check::invalid("x"), Check::pass()).outcome, Outcome::invalid);
}
