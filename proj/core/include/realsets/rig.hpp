#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "realsets/dyadic.hpp"
#include "realsets/extnat.hpp"
#include "realsets/lower_real.hpp"
#include "realsets/series.hpp"

namespace realsets {

/// A rig: a series monoid with a multiplication that distributes over it.
template <class T>
struct Rig {
  SeriesMonoid<T> base;
  std::function<T(const T&, const T&)> mul;
  std::optional<T> one;
  bool commutative = true;
  /// Optional P on lazy families; without it lazy input must carry a support bound.
  std::function<Partial<T>(const Family<T>&)> lazy_p;
};

/// P over a finite list via P(x :: rest) = x + P(rest) + x·P(rest), P(empty) = 0.
/// Products keep index order, so this is also the noncommutative P.
template <class T>
T p_of_list(const Rig<T>& rig, const std::vector<T>& xs) {
  T acc = rig.base.zero;
  for (auto it = xs.rbegin(); it != xs.rend(); ++it) {
    T with = rig.mul(*it, acc);
    acc = rig.base.sum(rig.base.list({*it, acc, with})).value;
  }
  return acc;
}

/// P(a) = Σ over non-empty finite S of Π_{m∈S} a_m.
template <class T>
Partial<T> p_sum(const Rig<T>& rig, const Family<T>& fam) {
  if (auto end = fam.support_end()) {
    std::vector<T> xs;
    if (fam.is_finite_support()) {
      for (const auto& e : fam.entries()) xs.push_back(e.value);
    } else {
      for (std::size_t i = 0; i < *end; ++i) xs.push_back(fam.at(i));
    }
    return {p_of_list(rig, xs)};
  }
  if (rig.lazy_p) return rig.lazy_p(fam);
  throw std::invalid_argument("p_sum: lazy family without a support bound over " + rig.base.name);
}

/// (A, 0, P) as a series monoid.
template <class T>
SeriesMonoid<T> p_instance(const Rig<T>& rig) {
  SeriesMonoid<T> inst = rig.base;
  inst.name = "P(" + rig.base.name + ")";
  inst.sum = [rig](const Family<T>& fam) { return p_sum(rig, fam); };
  inst.subtract = nullptr;
  inst.enumerate = nullptr;
  inst.idempotent = false;
  return inst;
}

/// ℕ∪{∞} with multiplication.
Rig<ExtNat> nat_rig();
/// Exact dyadics with multiplication.
Rig<DyadicExt> dyadic_rig();
/// [0,∞] with multiplication; P on lazy families is the limit of prefix P's.
Rig<LowerReal> extreal_rig();

/// v = Σₙ uⁿ with u = 1 - a, for a dyadic 0 < a <= 1. The result carries a
/// modulus. Throws std::domain_error for a = 0, a > 1 or a = ∞.
LowerReal geometric_inverse(const DyadicExt& a);

// ---------------------------------------------------------------------------
// The logarithm monoid ℓA

/// ℓa for a in a rig; ℓ0 plays the role of -∞.
template <class T>
struct LogElem {
  T base;
};

/// ℓa + ℓb = ℓ(ab).
template <class T>
LogElem<T> log_add(const Rig<T>& rig, const LogElem<T>& x, const LogElem<T>& y) {
  return {rig.mul(x.base, y.base)};
}

/// The unit ℓ1.
template <class T>
LogElem<T> log_zero(const Rig<T>& rig) {
  if (!rig.one) throw std::invalid_argument("log monoid needs a rig with a unit");
  return {*rig.one};
}

/// Σₙ ℓ(1 + uₙ) = ℓ(1 + P(u)). Each term must be supplied with its uₙ and
/// its base must equal 1 + uₙ.
template <class T>
LogElem<T> log_series_sum(const Rig<T>& rig, const std::vector<LogElem<T>>& terms,
                          const std::vector<T>& us, ApproxLevel level = {}) {
  if (!rig.one) throw std::invalid_argument("log_series_sum: rig has no unit");
  if (terms.size() != us.size()) throw std::invalid_argument("log_series_sum: one u per term");
  for (std::size_t i = 0; i < terms.size(); ++i) {
    T expected = binary_add(rig.base, *rig.one, us[i]);
    if (!is_equal(rig.base.eq_at(terms[i].base, expected, level))) {
      throw std::invalid_argument("log_series_sum: term " + std::to_string(i) + " is not 1 + " +
                                  rig.base.show(us[i]));
    }
  }
  Partial<T> p = p_sum(rig, rig.base.list(us));
  return {binary_add(rig.base, *rig.one, p.value)};
}

}  // namespace realsets
