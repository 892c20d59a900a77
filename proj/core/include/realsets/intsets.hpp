#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace realsets {

/// An injective map {0..dom-1} → {0..cod-1}.
struct Injection {
  std::size_t dom = 0;
  std::size_t cod = 0;
  std::vector<std::size_t> table;

  /// Throws std::invalid_argument unless the table is an injection of the stated sizes.
  static Injection make(std::size_t dom, std::size_t cod, std::vector<std::size_t> table);
  static Injection identity(std::size_t n);

  bool bijective() const { return dom == cod; }
  std::size_t operator()(std::size_t i) const { return table.at(i); }
  friend bool operator==(const Injection&, const Injection&) = default;
};

/// g ∘ f
Injection compose(const Injection& g, const Injection& f);

/// Tr^U(f) for f: X+U → Y+U: follow each x through U until it lands in Y.
/// Throws std::logic_error if an orbit stays in U for more than |U|+1 steps,
/// which injectivity rules out.
Injection trace_injection(const Injection& f, std::size_t x, std::size_t u, std::size_t y);

/// An integer set (X, U), of cardinality |X| - |U|.
struct IntObject {
  std::size_t x = 0;
  std::size_t u = 0;
  friend bool operator==(const IntObject&, const IntObject&) = default;
};

enum class IntMode { FB, FI };

/// A morphism (X,U) → (Y,V): an injection X+V → Y+U (bijection in FB mode).
/// Blocks are ordered X before V and Y before U.
struct IntMorphism {
  IntObject dom;
  IntObject cod;
  Injection map;
  IntMode mode = IntMode::FI;

  /// Validates sizes and, in FB mode, bijectivity.
  static IntMorphism make(IntObject dom, IntObject cod, std::vector<std::size_t> table,
                          IntMode mode);
  friend bool operator==(const IntMorphism&, const IntMorphism&) = default;
};

/// g#f: X+W+V → Z+U+V for f: (X,U) → (Y,V) and g: (Y,V) → (Z,W).
Injection sharp(const IntMorphism& g, const IntMorphism& f);
/// g ∘ f = Tr^V(g#f), as a morphism (X,U) → (Z,W). FB only when both are FB.
IntMorphism int_compose(const IntMorphism& g, const IntMorphism& f);
IntMorphism int_identity(const IntObject& obj, IntMode mode = IntMode::FB);

IntObject int_tensor(const IntObject& a, const IntObject& b);
IntMorphism int_tensor(const IntMorphism& f, const IntMorphism& g);

/// (X,U)* = (U,X)
IntObject int_dual(const IntObject& obj);
/// η: (∅,∅) → A ⊗ A*
IntMorphism int_unit(const IntObject& obj);
/// ε: A* ⊗ A → (∅,∅)
IntMorphism int_counit(const IntObject& obj);

std::int64_t cardinality(const IntObject& obj);

/// (X,∅) → (Y,∅) with the same table.
IntMorphism embed_fb(const Injection& f);

/// One-line JSON: {"dom":{"x":..,"u":..},"cod":{"y":..,"v":..},"map":[..],"mode":"FB"}
std::string to_json_text(const IntMorphism& f);
IntMorphism morphism_from_json_text(std::string_view text);
std::string mode_name(IntMode mode);

}  // namespace realsets
