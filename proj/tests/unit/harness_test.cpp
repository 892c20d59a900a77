#include <gtest/gtest.h>

#include "realsets/harness/samples.hpp"
#include "realsets/harness/suites.hpp"

using namespace realsets;
using namespace realsets::harness;

TEST(CaseRng, DependsOnlyOnSeedAndIndex) {
  CaseRng a(42, 7), b(42, 7), c(42, 8);
  std::uint64_t x = a.next();
  EXPECT_EQ(x, b.next());
  EXPECT_NE(x, c.next());
  for (int i = 0; i < 100; ++i) {
    std::uint64_t v = a.between(3, 5);
    EXPECT_GE(v, 3u);
    EXPECT_LE(v, 5u);
  }
}

TEST(Samples, RespectBounds) {
  for (std::uint64_t i = 0; i < 200; ++i) {
    CaseRng rng(1, i);
    DyadicExt d = sample_dyadic(rng, 10, 10);
    EXPECT_LT(d.mantissa(), 1024);
    EXPECT_LE(d.exponent(), 10u);
    DyadicExt u = sample_unit_dyadic(rng);
    EXPECT_GT(u, DyadicExt(0));
    EXPECT_LE(u, DyadicExt(1));
    ExtNat n = sample_extnat(rng, 20, 0);
    EXPECT_TRUE(n.is_finite());
    EXPECT_LE(n.value(), 20u);
    IntObject a = sample_int_object(rng, 4);
    IntObject b = sample_target(rng, a, 4, IntMode::FB);
    EXPECT_NO_THROW(sample_int_morphism(rng, a, b, IntMode::FB));
  }
}

TEST(Suites, Registry) {
  auto names = instance_names();
  for (const char* n : {"extnat", "extreal", "bool", "chain3", "biproduct", "intfb", "intfi", "paradox", "formal"}) {
    EXPECT_NE(std::find(names.begin(), names.end(), n), names.end()) << n;
  }
  EXPECT_THROW(suite_names("nosuch"), UnknownName);
  EXPECT_THROW(run_suite("extnat", "nosuch", {}), UnknownName);
}

TEST(Suites, DeterministicReports) {
  SuiteConfig cfg{42, 200, ApproxLevel{32}};
  std::string a = render(run_suite("extnat", "sumswap", cfg), cfg);
  std::string b = render(run_suite("extnat", "sumswap", cfg), cfg);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, "check extnat sumswap seed=42 cases=200 bits=32\npass 200  fail 0  inconclusive 0  invalid 0\n");
}

TEST(Suites, ExpectedNegativeReportsTheRefutation) {
  SuiteConfig cfg{0, 20, ApproxLevel{32}};
  SuiteReport r = run_suite("extnat", "zeno", cfg);
  EXPECT_TRUE(r.expected_negative);
  EXPECT_EQ(r.pass, 20u);
  ASSERT_FALSE(r.notes.empty());
  EXPECT_NE(r.notes.front().find("refuted"), std::string::npos);
  EXPECT_NE(r.notes.front().find("(1)"), std::string::npos);
}

TEST(Suites, ExtrealZenoAt40Bits) {
  SuiteConfig cfg{7, 100, ApproxLevel{40}};
  SuiteReport r = run_suite("extreal", "zeno", cfg);
  EXPECT_TRUE(r.clean());
  EXPECT_EQ(r.pass, 100u);
}

TEST(Suites, EverySuiteRunsClean) {
  SuiteConfig cfg{3, 40, ApproxLevel{32}};
  for (const auto& inst : instance_names()) {
    for (const auto& suite : suite_names(inst)) {
      SuiteReport r = run_suite(inst, suite, cfg);
      EXPECT_TRUE(r.clean()) << render(r, cfg);
    }
  }
}
