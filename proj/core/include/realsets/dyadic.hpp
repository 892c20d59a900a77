#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace realsets {

/// Exact element of [0,∞]: either m/2^e with m, e natural, or ∞.
///
/// Values are kept canonical: e > 0 implies m odd, and zero is 0/2^0. Two
/// canonical values are equal iff their fields are equal.
class DyadicExt {
 public:
  DyadicExt() = default;
  DyadicExt(std::uint64_t n) : mantissa_(static_cast<unsigned long>(n)) {}  // NOLINT: naturals embed
  DyadicExt(mpz_class mantissa, std::uint64_t exponent);

  static DyadicExt infinity();
  /// 2^k for any integer k.
  static DyadicExt pow2(std::int64_t k);
  /// Largest multiple of 2^-bits that is <= q (q >= 0).
  static DyadicExt floor_of(const mpq_class& q, std::uint64_t bits);
  /// Smallest multiple of 2^-bits that is >= q (q >= 0).
  static DyadicExt ceil_of(const mpq_class& q, std::uint64_t bits);
  /// Exact conversion; throws if q is negative or not dyadic.
  static DyadicExt from_rational(const mpq_class& q);

  /// Parses "m/2^e", "m/d" with d a power of two, a plain natural, or "inf".
  static DyadicExt parse(std::string_view text);

  bool is_infinite() const { return infinite_; }
  bool is_finite() const { return !infinite_; }
  bool is_zero() const { return !infinite_ && mantissa_ == 0; }
  bool is_integer() const { return !infinite_ && exponent_ == 0; }

  const mpz_class& mantissa() const { return mantissa_; }
  std::uint64_t exponent() const { return exponent_; }

  mpq_class to_rational() const;
  /// floor of the value; throws on ∞.
  mpz_class integer_part() const;

  DyadicExt half() const { return scaled(-1); }
  /// Multiplies by 2^k.
  DyadicExt scaled(std::int64_t k) const;
  /// Largest multiple of 2^-bits not above this value.
  DyadicExt truncated(std::uint64_t bits) const;
  /// The u with *this + u == b when *this <= b (∞ - ∞ yields 0).
  std::optional<DyadicExt> subtract_from(const DyadicExt& b) const;

  friend DyadicExt operator+(const DyadicExt& a, const DyadicExt& b);
  /// 0 absorbs, including 0·∞ = 0.
  friend DyadicExt operator*(const DyadicExt& a, const DyadicExt& b);
  DyadicExt& operator+=(const DyadicExt& b) { return *this = *this + b; }
  DyadicExt& operator*=(const DyadicExt& b) { return *this = *this * b; }

  friend bool operator==(const DyadicExt& a, const DyadicExt& b);
  friend std::strong_ordering operator<=>(const DyadicExt& a, const DyadicExt& b);

  /// "inf", "5", "3/8" for small exponents, "m/2^e" otherwise.
  std::string str() const;

 private:
  void normalize();

  mpz_class mantissa_{0};
  std::uint64_t exponent_ = 0;
  bool infinite_ = false;
};

std::ostream& operator<<(std::ostream& os, const DyadicExt& x);

/// Smallest c with 2^c >= n (n >= 1); 0 for n <= 1.
std::uint64_t ceil_log2(const mpz_class& n);
std::uint64_t ceil_log2(std::uint64_t n);

}  // namespace realsets
