#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "realsets/dyadic.hpp"
#include "realsets/extnat.hpp"

namespace realsets {

/// A code Σ cₙ·χₙ in the free series monoid on generators χ₀, χ₁, ...
///
/// Coefficients are finite-support, optionally followed by a constant tail
/// c·(χ_N + χ_{N+1} + ...), which is how relations like χₙ ∼ χₙ₊₁ + χₙ₊₂ + ...
/// are written down.
struct FormalMagnitude {
  struct Tail {
    std::size_t from = 0;
    ExtNat coeff;
  };

  /// Stored coefficients are non-zero.
  std::map<std::size_t, ExtNat> coeffs;
  std::optional<Tail> tail;

  static FormalMagnitude generator(std::size_t n, ExtNat c = 1);
  /// χ_from + χ_{from+1} + ... scaled by c.
  static FormalMagnitude ones_from(std::size_t from, ExtNat c = 1);
  /// The ∞-marked form {χ₀: ∞}.
  static FormalMagnitude infinity();

  bool is_infinite_form() const;

  friend bool operator==(const FormalMagnitude& a, const FormalMagnitude& b);

  /// "{0:1, 3:2}" with "tail N:c" appended when present.
  std::string str() const;
  /// Accepts "{}" or "{n:c, ...}", c a natural or inf.
  static FormalMagnitude parse(std::string_view text);
};

/// χₙ ↦ 1/2ⁿ, extended by Σ; ∞ absorbs.
DyadicExt formal_value(const FormalMagnitude& x);

/// Canonical representative of the congruence class: χ₀ holds the integer
/// part, every later coefficient is 0 or 1, no tail. Anything of value ∞ is
/// the ∞-marked form. Throws std::overflow_error if the integer part does not
/// fit in 64 bits.
FormalMagnitude formal_normalize(const FormalMagnitude& x);

/// h on codes: χₙ ↦ χₙ₊₁.
FormalMagnitude formal_halve(const FormalMagnitude& x);

/// The congruence decided through normal forms.
bool formal_congruent(const FormalMagnitude& a, const FormalMagnitude& b);

}  // namespace realsets
