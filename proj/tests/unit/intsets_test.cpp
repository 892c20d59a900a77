#include <gtest/gtest.h>

#include "realsets/intsets.hpp"

using namespace realsets;

TEST(Injection, Validation) {
  EXPECT_NO_THROW(Injection::make(2, 3, {2, 0}));
  EXPECT_THROW(Injection::make(2, 3, {1, 1}), std::invalid_argument);
  EXPECT_THROW(Injection::make(2, 3, {0, 3}), std::invalid_argument);
  EXPECT_THROW(Injection::make(2, 3, {0}), std::invalid_argument);
}

TEST(Injection, Compose) {
  Injection f = Injection::make(2, 3, {2, 0}), g = Injection::make(3, 3, {1, 2, 0});
  EXPECT_EQ(compose(g, f).table, (std::vector<std::size_t>{0, 1}));
}

TEST(Trace, FeedbackThroughU) {
  // X = {0}, U = {0,1}, Y = {0}: x → u0 → u1 → y.
  Injection f = Injection::make(3, 3, {1, 2, 0});
  Injection t = trace_injection(f, 1, 2, 1);
  EXPECT_EQ(t.dom, 1u);
  EXPECT_EQ(t.table, (std::vector<std::size_t>{0}));
}

TEST(Trace, EmptyUIsIdentityOnMaps) {
  Injection f = Injection::make(2, 3, {2, 1});
  EXPECT_EQ(trace_injection(f, 2, 0, 3), f);
}

TEST(IntCategory, IdentityAndCompose) {
  IntObject a{2, 1}, b{1, 0};
  IntMorphism f = IntMorphism::make(a, b, {1, 0}, IntMode::FI);
  EXPECT_EQ(int_compose(f, int_identity(a, IntMode::FI)), f);
  EXPECT_EQ(int_compose(int_identity(b, IntMode::FI), f), f);
}

TEST(IntCategory, ModeChecks) {
  EXPECT_THROW(IntMorphism::make({1, 0}, {2, 0}, {0}, IntMode::FB), std::invalid_argument);
  EXPECT_NO_THROW(IntMorphism::make({1, 0}, {2, 0}, {1}, IntMode::FI));
}

TEST(IntCategory, CardinalityAndDuals) {
  EXPECT_EQ(cardinality(IntObject{3, 5}), -2);
  EXPECT_EQ(int_dual(IntObject{3, 5}), (IntObject{5, 3}));
  EXPECT_EQ(cardinality(int_tensor(IntObject{3, 5}, IntObject{4, 1})), 1);
}

TEST(IntCategory, Snake) {
  for (std::size_t x = 0; x <= 3; ++x) {
    for (std::size_t u = 0; u <= 3; ++u) {
      IntObject a{x, u};
      IntMorphism one = int_identity(a);
      EXPECT_EQ(int_compose(int_tensor(one, int_counit(a)), int_tensor(int_unit(a), one)), one);
    }
  }
}

TEST(IntCategory, EmbedFB) {
  Injection p = Injection::make(3, 3, {2, 0, 1});
  IntMorphism f = embed_fb(p);
  EXPECT_EQ(f.mode, IntMode::FB);
  EXPECT_EQ(int_compose(embed_fb(p), embed_fb(p)).map, compose(p, p));
}

TEST(IntJson, RoundTrip) {
  IntMorphism f = IntMorphism::make({1, 1}, {1, 1}, {1, 0}, IntMode::FB);
  std::string text = to_json_text(f);
  EXPECT_EQ(text, "{\"dom\":{\"x\":1,\"u\":1},\"cod\":{\"y\":1,\"v\":1},\"map\":[1,0],\"mode\":\"FB\"}\n");
  EXPECT_EQ(morphism_from_json_text(text), f);
  EXPECT_THROW(morphism_from_json_text("{\"dom\":{}}"), std::invalid_argument);
}
