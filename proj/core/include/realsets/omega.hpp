#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "realsets/extnat.hpp"
#include "realsets/rig.hpp"
#include "realsets/series.hpp"

namespace realsets {

/// An ω-indexed product ⊗ₙ aₙ with a unit.
template <class T>
struct OmegaMonoid {
  std::string name;
  SeriesMonoid<T> carrier;  // zero, zero test, equality and printing
  std::function<Partial<T>(const Family<T>&)> product;

  /// Every series monoid is an ω-monoid under Σ.
  static OmegaMonoid from_series(const SeriesMonoid<T>& inst) {
    return {inst.name, inst, inst.sum};
  }
  /// A rig is an ω-monoid under P, commutative or not.
  static OmegaMonoid from_rig(const Rig<T>& rig) {
    SeriesMonoid<T> p = p_instance(rig);
    return {p.name, p, p.sum};
  }
};

/// An order-preserving ξ: ω → ω given by its fibre sizes |ξ⁻¹(0)|, |ξ⁻¹(1)|, ...
/// Fibres past the list are singletons. Only the last listed fibre may be
/// infinite, in which case the image of ξ is finite.
class OrderPreservingMap {
 public:
  explicit OrderPreservingMap(std::vector<ExtNat> fibres) : fibres_(std::move(fibres)) {
    for (std::size_t i = 0; i + 1 < fibres_.size(); ++i) {
      if (fibres_[i].is_infinite()) {
        throw std::invalid_argument("order-preserving map: fibre " + std::to_string(i) +
                                    " is infinite but not final");
      }
    }
  }

  const std::vector<ExtNat>& fibres() const { return fibres_; }
  bool final_infinite() const { return !fibres_.empty() && fibres_.back().is_infinite(); }

  /// First index of fibre n, and its size.
  std::pair<std::size_t, ExtNat> fibre(std::size_t n) const {
    std::size_t start = 0;
    for (std::size_t i = 0; i < n && i < fibres_.size(); ++i) start += fibres_[i].value();
    if (n < fibres_.size()) return {start, fibres_[n]};
    if (final_infinite()) return {start, ExtNat(0)};
    return {start + (n - fibres_.size()), ExtNat(1)};
  }

  /// ξ(m)
  std::size_t operator()(std::size_t m) const {
    std::size_t start = 0;
    for (std::size_t i = 0; i < fibres_.size(); ++i) {
      if (fibres_[i].is_infinite() || m < start + fibres_[i].value()) return i;
      start += fibres_[i].value();
    }
    return fibres_.size() + (m - start);
  }

  std::string str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < fibres_.size(); ++i) out += (i ? "," : "") + fibres_[i].str();
    return out + ")";
  }

 private:
  std::vector<ExtNat> fibres_;
};

/// ⊗ₙ ⊗_{m∈ξ⁻¹(n)} a_m = ⊗ₙ aₙ.
template <class T>
Check omega_assoc_check(const OmegaMonoid<T>& om, const Family<T>& fam,
                        const OrderPreservingMap& xi, ApproxLevel level) {
  if (!fam.is_finite_support() && !xi.final_infinite()) {
    if (!fam.support_end()) return Check::invalid("general associativity needs finite support");
  }
  const SeriesMonoid<T>& c = om.carrier;
  auto block = [&](std::size_t start, ExtNat size) -> Family<T> {
    if (size.is_infinite()) {
      LazyTraits t;
      LazyTraits in = fam.traits();
      if (in.support_bound) {
        t.support_bound = *in.support_bound > start ? *in.support_bound - start : 0;
      }
      return c.lazy([fam, start](std::size_t i) { return fam.at(start + i); }, t);
    }
    std::vector<typename Family<T>::Entry> out;
    for (std::size_t i = 0; i < size.value(); ++i) out.push_back({i, fam.at(start + i)});
    return c.finite(std::move(out));
  };
  // Fibres beyond the listed ones hold single entries; stop once they are past the support.
  std::size_t listed = xi.fibres().size();
  std::size_t end = listed;
  if (!xi.final_infinite()) {
    std::optional<std::size_t> support = fam.support_end();
    std::size_t covered = xi.fibre(listed).first;
    if (support && *support > covered) end += *support - covered;
  }
  std::vector<typename Family<T>::Entry> grouped;
  bool partial = false;
  for (std::size_t n = 0; n < end; ++n) {
    auto [start, size] = xi.fibre(n);
    Partial<T> p = om.product(block(start, size));
    partial = partial || p.partial;
    grouped.push_back({n, p.value});
  }
  Partial<T> lhs = om.product(c.finite(std::move(grouped)));
  lhs.partial = lhs.partial || partial;
  Partial<T> rhs = om.product(fam);
  if (rhs.partial) return Check::inconclusive("ungrouped product: scan budget exhausted");
  return expect_equal(c, lhs, rhs.value, level, "grouped by " + xi.str() + " vs ungrouped");
}

}  // namespace realsets
