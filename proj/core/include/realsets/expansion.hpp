#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "realsets/dyadic.hpp"
#include "realsets/extnat.hpp"
#include "realsets/lower_real.hpp"

namespace realsets {

/// integer + Σ 2^-m over the 1-bit positions m₁ < m₂ < ..., optionally
/// followed by 1-bits at every position >= ones_from.
struct BinaryExpansion {
  ExtNat integer;
  std::vector<std::size_t> positions;
  std::optional<std::size_t> ones_from;
  /// Set when `positions` is a known prefix of a longer, unknown expansion:
  /// bits beyond this position were not supplied.
  std::optional<std::size_t> known_until;

  bool terminating() const { return !ones_from && !known_until; }

  /// Exact value; a ones tail from q contributes 2^(1-q). For a known prefix
  /// this is the value of the prefix.
  DyadicExt evaluate() const;
  /// The same value as a stream that adds the ones tail bit by bit.
  LowerReal evaluate_lower() const;

  /// "3 + 0.001001… pos:[3,6,…]"
  std::string str() const;

  /// integer + 0.b₁b₂... from a supplied bit table; the result is a known
  /// prefix, not a terminating expansion.
  static BinaryExpansion from_bits(ExtNat integer, const std::vector<bool>& bits);

  friend bool operator==(const BinaryExpansion&, const BinaryExpansion&) = default;
};

/// Binary expansion of a finite dyadic. With `nonterminating`, a value whose
/// expansion ends in a 1-bit is rewritten through 1.000… = 0.111… (zero has
/// only the terminating form). Throws std::domain_error on ∞.
BinaryExpansion binary_expand(const DyadicExt& x, bool nonterminating = false);

/// The leading fractional bits of π - 3, for demonstrations.
const std::vector<bool>& pi_fraction_bits();

}  // namespace realsets
