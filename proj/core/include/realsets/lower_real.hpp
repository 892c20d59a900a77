#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "realsets/dyadic.hpp"
#include "realsets/extnat.hpp"
#include "realsets/family.hpp"
#include "realsets/series.hpp"

namespace realsets {

/// An element of [0,∞] known through a non-decreasing stream of dyadic lower
/// bounds; the represented value is their supremum.
///
/// A LowerReal may additionally carry a modulus, meaning bound(k) is within
/// 2^-k of the value, or be exact, meaning every bound equals the value.
/// Values are immutable and the bound function must be pure, so a LowerReal
/// can be shared between threads freely.
class LowerReal {
 public:
  using Bound = std::function<DyadicExt(std::size_t)>;

  /// Exact zero.
  LowerReal();
  LowerReal(DyadicExt exact);  // NOLINT: DyadicExt embeds into [0,∞]

  static LowerReal infinity() { return LowerReal(DyadicExt::infinity()); }
  /// One-sided unless `modulus` is set, in which case |value - bound(k)| <= 2^-k.
  static LowerReal from_bounds(Bound bound, bool modulus = false);
  /// Two-sided approximation of a non-negative rational; exact when dyadic.
  static LowerReal from_rational(const mpq_class& q);

  DyadicExt bound(std::size_t stage) const;
  DyadicExt approx(ApproxLevel level) const { return bound(level.bits); }

  bool has_modulus() const { return modulus_; }
  const std::optional<DyadicExt>& exact() const { return exact_; }
  bool is_exact_zero() const { return exact_ && exact_->is_zero(); }

 private:
  std::shared_ptr<const Bound> bound_;
  std::optional<DyadicExt> exact_;
  bool modulus_ = true;
};

/// h(x) = x/2, h(∞) = ∞; halves every bound and keeps the modulus.
LowerReal halve(const LowerReal& x);
inline DyadicExt halve(const DyadicExt& x) { return x.half(); }

/// Binary sum.
LowerReal operator+(const LowerReal& a, const LowerReal& b);

/// Σ of a family of lower reals.
///
/// Finite support sums every entry at each stage. Lazy families use the
/// diagonal schedule bound(k) = Σ_{i<=k} fam_i.bound(k); a tail certificate
/// upgrades this to a two-sided result. Constant non-zero tails and
/// `unbounded` families are ∞ exactly.
LowerReal lower_real_sum(const Family<LowerReal>& fam);

/// bound(level.bits).
inline DyadicExt lower_real_approx(const LowerReal& x, ApproxLevel level) { return x.approx(level); }

/// Equality at a level: exact values compare exactly; otherwise `equal` means
/// the stage-k bounds agree within 2^-k, and only provable separations that
/// can never look equal are reported `unequal`.
Verdict lower_real_eq(const LowerReal& x, const LowerReal& y, ApproxLevel level);

/// "3/8" when exact, "= d ± 2^-k" with a modulus, "≥ d (k bits)" otherwise.
std::string format(const LowerReal& x, ApproxLevel level);
/// Renders a lower bound, writing n - 2^-e for values just below an integer.
std::string format_bound(const DyadicExt& d);

/// [0,∞] as a series monoid on LowerReal.
SeriesMonoid<LowerReal> extreal_instance();

/// The exact dyadic core of [0,∞]: sums are exact on finite support, constant
/// tails and unbounded families; other lazy families give partial results.
SeriesMonoid<DyadicExt> dyadic_instance(std::size_t scan_budget = 4096);

/// Embeds ℕ∪{∞} into [0,∞].
LowerReal embed(const ExtNat& n);

}  // namespace realsets
