#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace realsets {

/// An element of {0} + X + S.
///
/// S holds the positive dyadics written with terminating binary expansions;
/// X holds positive rationals written with their nonterminating expansion.
/// A dyadic value occurs once in each, as two different elements.
class ZPElem {
 public:
  enum class Kind { zero, S, X };

  ZPElem() = default;
  static ZPElem terminating(const mpq_class& value);
  static ZPElem nonterminating(const mpq_class& value);

  Kind kind() const { return kind_; }
  bool is_zero() const { return kind_ == Kind::zero; }
  const mpq_class& value() const { return value_; }

  friend bool operator==(const ZPElem& a, const ZPElem& b) {
    return a.kind_ == b.kind_ && a.value_ == b.value_;
  }

  /// "0", "t:10.01" or "r:1.(1)" with minimal pre-period and period.
  std::string str() const;
  /// Inverse of str; binary digits, with "t:" for S and "r:pre(period)" for X.
  static ZPElem parse(std::string_view text);

 private:
  ZPElem(Kind kind, mpq_class value) : kind_(kind), value_(std::move(value)) {}
  Kind kind_ = Kind::zero;
  mpq_class value_ = 0;
};

/// k: S → X, same value, nonterminating form. Throws std::invalid_argument off S.
ZPElem zp_k(const ZPElem& s);
/// 0 is the unit; S + S lands in S; anything involving X lands in X.
ZPElem zp_add(const ZPElem& a, const ZPElem& b);
/// Whether some u has a + u = b.
bool zp_leq(const ZPElem& a, const ZPElem& b);

}  // namespace realsets
