#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace realsets {

/// ℕ∪{∞}: a natural number or the point ∞, with saturating addition.
class ExtNat {
 public:
  constexpr ExtNat() = default;
  constexpr ExtNat(std::uint64_t n) : value_(n) {}  // NOLINT: naturals embed

  static constexpr ExtNat infinity() {
    ExtNat x;
    x.infinite_ = true;
    return x;
  }

  constexpr bool is_infinite() const { return infinite_; }
  constexpr bool is_finite() const { return !infinite_; }
  constexpr bool is_zero() const { return !infinite_ && value_ == 0; }
  /// Throws std::domain_error on ∞.
  std::uint64_t value() const;

  /// Saturates at ∞; throws std::overflow_error past 2^64 - 1.
  friend ExtNat operator+(ExtNat a, ExtNat b);
  /// 0·∞ = 0.
  friend ExtNat operator*(ExtNat a, ExtNat b);
  ExtNat& operator+=(ExtNat b) { return *this = *this + b; }

  friend constexpr bool operator==(ExtNat a, ExtNat b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(ExtNat a, ExtNat b) {
    if (a.infinite_ || b.infinite_) {
      if (a.infinite_ == b.infinite_) return std::strong_ordering::equal;
      return a.infinite_ ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return a.value_ <=> b.value_;
  }

  std::string str() const;
  /// Accepts a natural or "inf".
  static ExtNat parse(std::string_view text);

 private:
  std::uint64_t value_ = 0;
  bool infinite_ = false;
};

}  // namespace realsets
