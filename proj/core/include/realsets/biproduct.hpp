#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "realsets/extnat_series.hpp"
#include "realsets/series.hpp"

namespace realsets {

/// Element of ∏ₖ Aₖ: one component per factor, zero almost everywhere when
/// finite-support.
template <class T>
struct BiproductElem {
  Family<T> components;
};

/// A countable family of series monoids on one carrier type. Indices past
/// the listed factors use `rest` when present and the zero monoid otherwise.
template <class T>
class Biproduct {
 public:
  Biproduct(std::vector<SeriesMonoid<T>> factors, std::optional<SeriesMonoid<T>> rest = std::nullopt)
      : factors_(std::move(factors)), rest_(std::move(rest)) {
    if (factors_.empty() && !rest_) throw std::invalid_argument("Biproduct: no factors");
    const SeriesMonoid<T>& first = factor(0);
    for (const auto& f : factors_) {
      if (!first.is_zero(f.zero)) throw std::invalid_argument("Biproduct: factors must share a zero");
    }
  }

  const SeriesMonoid<T>& factor(std::size_t k) const {
    if (k < factors_.size()) return factors_[k];
    if (rest_) return *rest_;
    if (!factors_.empty()) return factors_.front();
    throw std::out_of_range("Biproduct::factor");
  }
  /// Number of non-trivial factors, when finite.
  std::optional<std::size_t> width() const {
    return rest_ ? std::nullopt : std::optional(factors_.size());
  }

  const SeriesMonoid<T>& carrier() const { return factor(0); }

  BiproductElem<T> zero() const { return {carrier().finite({})}; }

  BiproductElem<T> make(std::vector<typename Family<T>::Entry> components) const {
    for (const auto& e : components) check_index(e.index);
    return {carrier().finite(std::move(components))};
  }

  /// inₖ(a)
  BiproductElem<T> in(std::size_t k, const T& a) const {
    check_index(k);
    return {carrier().single(k, a)};
  }
  /// prₖ(x)
  T pr(std::size_t k, const BiproductElem<T>& x) const { return x.components.at(k); }

  /// Componentwise Σ.
  Partial<BiproductElem<T>> sum(const Family<BiproductElem<T>>& fam) const {
    std::optional<std::size_t> end = component_end(fam);
    if (end) {
      std::vector<typename Family<T>::Entry> out;
      bool partial = false;
      for (std::size_t k = 0; k < *end; ++k) {
        Partial<T> s = factor(k).sum(column(fam, k));
        partial = partial || s.partial;
        out.push_back({k, s.value});
      }
      return {{carrier().finite(std::move(out))}, partial};
    }
    Biproduct self = *this;
    LazyTraits t;
    t.support_bound = width();
    Family<T> components = carrier().lazy(
        [self, fam](std::size_t k) { return self.factor(k).sum(self.column(fam, k)).value; }, t);
    return {{components}, true};
  }

  Verdict eq_at(const BiproductElem<T>& x, const BiproductElem<T>& y, ApproxLevel level) const {
    auto ex = x.components.support_end();
    auto ey = y.components.support_end();
    bool bounded = ex && ey;
    std::size_t end = bounded ? std::max(*ex, *ey) : level.bits + 1;
    Verdict acc = Verdict::equal;
    for (std::size_t k = 0; k < end; ++k) {
      Verdict v = factor(k).eq_at(x.components.at(k), y.components.at(k), level);
      if (v == Verdict::unequal) return v;
      if (v == Verdict::unknown) acc = v;
    }
    return bounded ? acc : Verdict::unknown;
  }

  bool is_zero(const BiproductElem<T>& x) const {
    if (x.components.is_finite_support()) return x.components.entries().empty();
    auto end = x.components.support_end();
    if (!end) return false;
    for (std::size_t k = 0; k < *end; ++k) {
      if (!factor(k).is_zero(x.components.at(k))) return false;
    }
    return true;
  }

  std::string show(const BiproductElem<T>& x) const {
    auto end = x.components.support_end();
    std::size_t shown = end ? *end : 8;
    std::string out = "(";
    for (std::size_t k = 0; k < shown; ++k) {
      if (k) out += ", ";
      out += factor(k).show(x.components.at(k));
    }
    return out + (end ? ")" : ", ...)");
  }

  /// The series monoid structure on ∏ₖ Aₖ.
  SeriesMonoid<BiproductElem<T>> instance(std::string name) const {
    auto self = std::make_shared<const Biproduct>(*this);
    using E = BiproductElem<T>;
    return SeriesMonoid<E>{
        .name = std::move(name),
        .zero = zero(),
        .is_zero = [self](const E& x) { return self->is_zero(x); },
        .sum = [self](const Family<E>& fam) { return self->sum(fam); },
        .eq_at = [self](const E& x, const E& y, ApproxLevel level) { return self->eq_at(x, y, level); },
        .same =
            [self](const E& x, const E& y) {
              auto ex = x.components.support_end();
              auto ey = y.components.support_end();
              if (!ex || !ey) return false;
              for (std::size_t k = 0; k < std::max(*ex, *ey); ++k) {
                if (!self->factor(k).same(x.components.at(k), y.components.at(k))) return false;
              }
              return true;
            },
        .show = [self](const E& x) { return self->show(x); },
        .subtract = {},
        .enumerate = {},
        .idempotent = false,
    };
  }

  /// The copairing [fₖ] = Σₖ fₖ ∘ prₖ into a target monoid.
  template <class U>
  std::function<Partial<U>(const BiproductElem<T>&)> copair(
      SeriesMonoid<U> target, std::function<std::function<U(const T&)>(std::size_t)> maps) const {
    Biproduct self = *this;
    return [self, target, maps](const BiproductElem<T>& x) {
      const Family<T>& c = x.components;
      if (auto end = c.support_end()) {
        std::vector<typename Family<U>::Entry> terms;
        for (std::size_t k = 0; k < *end; ++k) terms.push_back({k, maps(k)(c.at(k))});
        return target.sum(target.finite(std::move(terms)));
      }
      return target.sum(target.lazy([c, maps](std::size_t k) { return maps(k)(c.at(k)); }));
    };
  }

 private:
  void check_index(std::size_t k) const {
    if (!rest_ && k >= factors_.size()) {
      throw std::out_of_range("Biproduct: component " + std::to_string(k) +
                              " lies in a trivial factor");
    }
  }

  /// n ↦ (x_n)_k
  Family<T> column(const Family<BiproductElem<T>>& fam, std::size_t k) const {
    const SeriesMonoid<T>& f = factor(k);
    if (fam.is_finite_support()) {
      std::vector<typename Family<T>::Entry> out;
      for (const auto& e : fam.entries()) out.push_back({e.index, e.value.components.at(k)});
      return f.finite(std::move(out));
    }
    LazyTraits t;
    LazyTraits in = fam.traits();
    t.support_bound = in.support_bound;
    t.constant_from = in.constant_from;
    return f.lazy([fam, k](std::size_t n) { return fam.at(n).components.at(k); }, t);
  }

  /// One past the last component any family member can populate, if known.
  std::optional<std::size_t> component_end(const Family<BiproductElem<T>>& fam) const {
    if (auto w = width()) return *w;
    std::size_t end = 0;
    if (fam.is_finite_support()) {
      for (const auto& e : fam.entries()) {
        auto c = e.value.components.support_end();
        if (!c) return std::nullopt;
        end = std::max(end, *c);
      }
      return end;
    }
    auto bound = fam.support_end();
    if (!bound) return std::nullopt;
    for (std::size_t n = 0; n < *bound; ++n) {
      auto c = fam.at(n).components.support_end();
      if (!c) return std::nullopt;
      end = std::max(end, *c);
    }
    return end;
  }

  std::vector<SeriesMonoid<T>> factors_;
  std::optional<SeriesMonoid<T>> rest_;
};

// ---------------------------------------------------------------------------
// Free series monoids

/// Element of the free series monoid on a countable generator set (indexed by
/// ℕ): a countable-support map from generators to ℕ∪{∞}.
using FreeSeriesElem = BiproductElem<ExtNat>;

/// Free series monoid on `generators` generators, or on ℕ when nullopt.
inline Biproduct<ExtNat> free_series_monoid(std::optional<std::size_t> generators) {
  if (generators) {
    return Biproduct<ExtNat>(std::vector<SeriesMonoid<ExtNat>>(*generators, extnat_instance()));
  }
  return Biproduct<ExtNat>({}, extnat_instance());
}

/// n·a = a + ... + a (n copies), and ∞·a = a + a + ... .
template <class T>
Partial<T> multiple(const SeriesMonoid<T>& target, ExtNat n, const T& a) {
  if (n.is_infinite()) return target.sum(target.constant(a));
  std::vector<typename Family<T>::Entry> copies;
  for (std::uint64_t i = 0; i < n.value(); ++i) copies.push_back({i, a});
  return target.sum(target.finite(std::move(copies)));
}

/// The unique series monoid morphism from the free series monoid that sends
/// generator g to assignment(g). Throws std::out_of_range for a generator the
/// assignment does not cover.
template <class T>
std::function<Partial<T>(const FreeSeriesElem&)> free_extend(
    SeriesMonoid<T> target, std::function<std::optional<T>(std::size_t)> assignment) {
  return [target, assignment](const FreeSeriesElem& x) -> Partial<T> {
    auto image = [&](std::size_t g, ExtNat c) -> Partial<T> {
      if (c.is_zero()) return {target.zero};
      std::optional<T> a = assignment(g);
      if (!a) throw std::out_of_range("free_extend: generator " + std::to_string(g) + " is unassigned");
      return multiple(target, c, *a);
    };
    const Family<ExtNat>& coeffs = x.components;
    if (auto end = coeffs.support_end()) {
      std::vector<typename Family<T>::Entry> terms;
      bool partial = false;
      for (std::size_t g = 0; g < *end; ++g) {
        Partial<T> t = image(g, coeffs.at(g));
        partial = partial || t.partial;
        terms.push_back({g, t.value});
      }
      Partial<T> s = target.sum(target.finite(std::move(terms)));
      s.partial = s.partial || partial;
      return s;
    }
    LazyTraits t;
    t.constant_from = coeffs.traits().constant_from;
    return target.sum(target.lazy(
        [target, assignment, coeffs](std::size_t g) {
          ExtNat c = coeffs.at(g);
          if (c.is_zero()) return target.zero;
          std::optional<T> a = assignment(g);
          if (!a) throw std::out_of_range("free_extend: generator " + std::to_string(g) + " is unassigned");
          return multiple(target, c, *a).value;
        },
        t));
  };
}

/// The one-generator case: f_a(n) = n·a.
template <class T>
std::function<Partial<T>(ExtNat)> free_extend_one(const SeriesMonoid<T>& target, const T& a) {
  return [target, a](ExtNat n) { return multiple(target, n, a); };
}

/// ev₁ is a bijection: f_a(1) = a for each sampled a, and f_{f(1)} = f on each
/// sampled morphism (given as a function on ℕ∪{∞}) over the sampled inputs.
template <class T>
Check ev1_bijection_check(const SeriesMonoid<T>& target, const std::vector<T>& elements,
                          const std::vector<std::function<T(ExtNat)>>& morphisms,
                          const std::vector<ExtNat>& inputs, ApproxLevel level) {
  Check acc;
  for (const T& a : elements) {
    auto f = free_extend_one(target, a);
    acc = both(acc, expect_equal(target, f(ExtNat(1)), a, level, "f_a(1) = a"));
    acc = both(acc, expect_equal(target, f(ExtNat(0)), target.zero, level, "f_a(0) = 0"));
  }
  for (const auto& g : morphisms) {
    auto rebuilt = free_extend_one(target, g(ExtNat(1)));
    for (ExtNat n : inputs) {
      acc = both(acc, expect_equal(target, rebuilt(n), g(n), level,
                                   "f_{g(1)}(" + n.str() + ") = g(" + n.str() + ")"));
    }
  }
  return acc;
}

}  // namespace realsets
