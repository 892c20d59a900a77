#include "realsets/intsets.hpp"

#include <stdexcept>

#include <nlohmann/json.hpp>

namespace realsets {

Injection Injection::make(std::size_t dom, std::size_t cod, std::vector<std::size_t> table) {
  if (table.size() != dom) {
    throw std::invalid_argument("injection table has " + std::to_string(table.size()) +
                                " entries, expected " + std::to_string(dom));
  }
  std::vector<bool> hit(cod, false);
  for (std::size_t v : table) {
    if (v >= cod) throw std::invalid_argument("injection value " + std::to_string(v) + " out of range");
    if (hit[v]) throw std::invalid_argument("table is not injective: " + std::to_string(v) + " repeats");
    hit[v] = true;
  }
  return {dom, cod, std::move(table)};
}

Injection Injection::identity(std::size_t n) {
  std::vector<std::size_t> t(n);
  for (std::size_t i = 0; i < n; ++i) t[i] = i;
  return {n, n, std::move(t)};
}

Injection compose(const Injection& g, const Injection& f) {
  if (f.cod != g.dom) throw std::invalid_argument("compose: size mismatch");
  std::vector<std::size_t> t(f.dom);
  for (std::size_t i = 0; i < f.dom; ++i) t[i] = g(f(i));
  return {f.dom, g.cod, std::move(t)};
}

Injection trace_injection(const Injection& f, std::size_t x, std::size_t u, std::size_t y) {
  if (f.dom != x + u || f.cod != y + u) throw std::invalid_argument("trace: block sizes do not match");
  std::vector<std::size_t> t(x);
  for (std::size_t p = 0; p < x; ++p) {
    std::size_t q = f(p);
    std::size_t steps = 1;
    while (q >= y) {
      if (++steps > u + 1) throw std::logic_error("trace: orbit does not leave the traced block");
      q = f(x + (q - y));
    }
    t[p] = q;
  }
  return {x, y, std::move(t)};
}

IntMorphism IntMorphism::make(IntObject dom, IntObject cod, std::vector<std::size_t> table,
                              IntMode mode) {
  Injection map = Injection::make(dom.x + cod.u, cod.x + dom.u, std::move(table));
  if (mode == IntMode::FB && !map.bijective()) {
    throw std::invalid_argument("FB morphism must be a bijection");
  }
  return {dom, cod, std::move(map), mode};
}

namespace {

IntMode meet(IntMode a, IntMode b) {
  return a == IntMode::FB && b == IntMode::FB ? IntMode::FB : IntMode::FI;
}

}  // namespace

Injection sharp(const IntMorphism& g, const IntMorphism& f) {
  if (!(f.cod == g.dom)) throw std::invalid_argument("sharp: codomain of f is not the domain of g");
  const std::size_t X = f.dom.x, U = f.dom.u, Y = f.cod.x, V = f.cod.u, Z = g.cod.x, W = g.cod.u;
  // g's values live in Z+V; send V to the last block of Z+U+V.
  auto from_g = [&](std::size_t q) { return q < Z ? q : Z + U + (q - Z); };
  auto through_f = [&](std::size_t fp) { return fp < Y ? from_g(g.map(fp)) : Z + (fp - Y); };
  std::vector<std::size_t> t(X + W + V);
  for (std::size_t p = 0; p < X; ++p) t[p] = through_f(f.map(p));
  for (std::size_t w = 0; w < W; ++w) t[X + w] = from_g(g.map(Y + w));
  for (std::size_t v = 0; v < V; ++v) t[X + W + v] = through_f(f.map(X + v));
  return Injection::make(X + W + V, Z + U + V, std::move(t));
}

IntMorphism int_compose(const IntMorphism& g, const IntMorphism& f) {
  Injection s = sharp(g, f);
  Injection traced = trace_injection(s, f.dom.x + g.cod.u, f.cod.u, g.cod.x + f.dom.u);
  return {f.dom, g.cod, std::move(traced), meet(f.mode, g.mode)};
}

IntMorphism int_identity(const IntObject& obj, IntMode mode) {
  return {obj, obj, Injection::identity(obj.x + obj.u), mode};
}

IntObject int_tensor(const IntObject& a, const IntObject& b) { return {a.x + b.x, a.u + b.u}; }

IntMorphism int_tensor(const IntMorphism& f, const IntMorphism& g) {
  const std::size_t X = f.dom.x, Y = g.dom.x, U = f.dom.u;
  const std::size_t Xc = f.cod.x, Yc = g.cod.x, Uc = f.cod.u, Vc = g.cod.u;
  // Domain blocks X, Y, U', V'; codomain blocks X', Y', U, V.
  auto place_f = [&](std::size_t q) { return q < Xc ? q : Xc + Yc + (q - Xc); };
  auto place_g = [&](std::size_t q) { return q < Yc ? Xc + q : Xc + Yc + U + (q - Yc); };
  std::vector<std::size_t> t(X + Y + Uc + Vc);
  for (std::size_t i = 0; i < X; ++i) t[i] = place_f(f.map(i));
  for (std::size_t i = 0; i < Y; ++i) t[X + i] = place_g(g.map(i));
  for (std::size_t j = 0; j < Uc; ++j) t[X + Y + j] = place_f(f.map(X + j));
  for (std::size_t j = 0; j < Vc; ++j) t[X + Y + Uc + j] = place_g(g.map(Y + j));
  IntObject dom = int_tensor(f.dom, g.dom);
  IntObject cod = int_tensor(f.cod, g.cod);
  return {dom, cod, Injection::make(dom.x + cod.u, cod.x + dom.u, std::move(t)), meet(f.mode, g.mode)};
}

IntObject int_dual(const IntObject& obj) { return {obj.u, obj.x}; }

namespace {

/// The swap A+B → B+A.
std::vector<std::size_t> swap_table(std::size_t a, std::size_t b) {
  std::vector<std::size_t> t(a + b);
  for (std::size_t i = 0; i < a; ++i) t[i] = b + i;
  for (std::size_t j = 0; j < b; ++j) t[a + j] = j;
  return t;
}

}  // namespace

IntMorphism int_unit(const IntObject& obj) {
  // (∅,∅) → (X+U, U+X): a map U+X → X+U.
  return IntMorphism::make({0, 0}, int_tensor(obj, int_dual(obj)), swap_table(obj.u, obj.x),
                           IntMode::FB);
}

IntMorphism int_counit(const IntObject& obj) {
  // (U+X, X+U) → (∅,∅): a map U+X → X+U.
  return IntMorphism::make(int_tensor(int_dual(obj), obj), {0, 0}, swap_table(obj.u, obj.x),
                           IntMode::FB);
}

std::int64_t cardinality(const IntObject& obj) {
  return static_cast<std::int64_t>(obj.x) - static_cast<std::int64_t>(obj.u);
}

IntMorphism embed_fb(const Injection& f) {
  return {{f.dom, 0}, {f.cod, 0}, f, f.bijective() ? IntMode::FB : IntMode::FI};
}

std::string mode_name(IntMode mode) { return mode == IntMode::FB ? "FB" : "FI"; }

std::string to_json_text(const IntMorphism& f) {
  nlohmann::ordered_json j;
  j["dom"] = {{"x", f.dom.x}, {"u", f.dom.u}};
  j["cod"] = {{"y", f.cod.x}, {"v", f.cod.u}};
  j["map"] = f.map.table;
  j["mode"] = mode_name(f.mode);
  return j.dump() + "\n";
}

IntMorphism morphism_from_json_text(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
    IntObject dom{j.at("dom").at("x").get<std::size_t>(), j.at("dom").at("u").get<std::size_t>()};
    IntObject cod{j.at("cod").at("y").get<std::size_t>(), j.at("cod").at("v").get<std::size_t>()};
    auto table = j.at("map").get<std::vector<std::size_t>>();
    std::string mode = j.at("mode").get<std::string>();
    if (mode != "FB" && mode != "FI") throw std::invalid_argument("mode must be FB or FI");
    return IntMorphism::make(dom, cod, std::move(table), mode == "FB" ? IntMode::FB : IntMode::FI);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("morphism file: ") + e.what());
  }
}

}  // namespace realsets
