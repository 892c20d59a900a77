#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "realsets/biproduct.hpp"
#include "realsets/expansion.hpp"
#include "realsets/lattice.hpp"
#include "realsets/lower_real.hpp"
#include "realsets/series.hpp"

namespace realsets {

/// An endomorphism of one series monoid.
template <class T>
struct Endo {
  std::string name;
  std::function<T(const T&)> apply;
  /// Optional: what is known about the iterates n ↦ f^(n+1)(a), such as a
  /// tail certificate or unbounded growth. An empty LazyTraits means nothing.
  std::function<LazyTraits(const T&)> iterate_traits;

  T operator()(const T& a) const { return apply(a); }
  /// f^n(a)
  T power(std::size_t n, T a) const {
    for (std::size_t i = 0; i < n; ++i) a = apply(a);
    return a;
  }
};

/// The family n ↦ f^(n+1)(a). Exact (finite or eventually constant) when the
/// iterates hit zero or a fixed point within `probe` steps; otherwise lazy
/// with the endomorphism's iterate traits. Informative traits skip the probe.
template <class T>
Family<T> iterate_family(const SeriesMonoid<T>& inst, const Endo<T>& f, const T& a,
                         std::size_t probe = 64) {
  T x = f(a);
  if (inst.same(x, a)) return inst.constant(x);
  LazyTraits t;
  if (f.iterate_traits) t = f.iterate_traits(a);
  bool informed = t.unbounded || t.tail_bound || t.support_bound || t.constant_from;
  std::vector<T> seen;
  for (std::size_t i = 0; i < probe && !informed; ++i) {
    if (inst.is_zero(x)) return inst.list(seen);
    T next = f(x);
    if (inst.same(next, x)) {
      seen.push_back(x);
      LazyTraits c;
      c.constant_from = seen.size() - 1;
      c.infinite_support = true;
      return inst.lazy([seen](std::size_t n) { return seen[std::min(n, seen.size() - 1)]; },
                       std::move(c));
    }
    seen.push_back(std::move(x));
    x = std::move(next);
  }
  return inst.lazy([f, a](std::size_t n) { return f.power(n + 1, a); }, std::move(t));
}

/// f̃(a) = Σₙ f^(n+1)(a).
template <class T>
Partial<T> tilde(const SeriesMonoid<T>& inst, const Endo<T>& f, const T& a) {
  return inst.sum(iterate_family(inst, f, a));
}

/// f(a) + f(f̃(a)) = f̃(a).
template <class T>
Check check_tilde_equation(const SeriesMonoid<T>& inst, const Endo<T>& f, const T& a,
                           ApproxLevel level) {
  Partial<T> t = tilde(inst, f, a);
  if (t.partial) return Check::inconclusive("f~(a): scan budget exhausted");
  Partial<T> lhs{binary_add(inst, f(a), f(t.value))};
  return expect_equal(inst, lhs, t.value, level, "f(a) + f(f~(a)) = f~(a)");
}

/// h̃ = 1 on every sample, together with its consequence h(a) + h(a) = a.
template <class T>
Check zeno_verify(const SeriesMonoid<T>& inst, const Endo<T>& h, const std::vector<T>& samples,
                  ApproxLevel level) {
  Check acc;
  for (const T& a : samples) {
    acc = both(acc, expect_equal(inst, tilde(inst, h, a), a, level,
                                 h.name + "~(" + inst.show(a) + ") = " + inst.show(a)));
    acc = both(acc, expect_equal(inst, Partial<T>{binary_add(inst, h(a), h(a))}, a, level,
                                 h.name + "(a) + " + h.name + "(a) = a at a = " + inst.show(a)));
    if (acc.outcome == Outcome::fail) return acc;
  }
  return acc;
}

/// A series monoid whose Zeno endomorphism has passed zeno_verify. Only
/// make_magnitude_module creates one.
template <class T>
class MagnitudeModule {
 public:
  const SeriesMonoid<T>& base() const { return base_; }
  const Endo<T>& zeno() const { return h_; }

  /// α·a = N·a + Σₙ h^(mₙ)(a) for α = N + Σ 2^-mₙ. A ones tail from q adds
  /// Σ_{m>=q} h^m(a) = h̃(h^(q-1)(a)).
  Partial<T> act(const BinaryExpansion& alpha, const T& a) const {
    if (alpha.known_until) {
      throw std::invalid_argument("scalar_action: scalar is only a known prefix");
    }
    std::vector<T> terms;
    bool partial = false;
    Partial<T> whole = multiple(base_, alpha.integer, a);
    partial = whole.partial;
    terms.push_back(whole.value);
    for (std::size_t m : alpha.positions) terms.push_back(h_.power(m, a));
    if (alpha.ones_from) {
      Partial<T> t = tilde(base_, h_, h_.power(*alpha.ones_from - 1, a));
      partial = partial || t.partial;
      terms.push_back(t.value);
    }
    Partial<T> s = base_.sum(base_.list(terms));
    s.partial = s.partial || partial;
    return s;
  }
  Partial<T> act(const DyadicExt& alpha, const T& a) const {
    if (alpha.is_infinite()) return multiple(base_, ExtNat::infinity(), a);
    return act(binary_expand(alpha), a);
  }

 private:
  template <class U>
  friend std::optional<MagnitudeModule<U>> make_magnitude_module(const SeriesMonoid<U>&,
                                                                 const Endo<U>&,
                                                                 const std::vector<U>&,
                                                                 ApproxLevel, Check*);
  MagnitudeModule(SeriesMonoid<T> base, Endo<T> h) : base_(std::move(base)), h_(std::move(h)) {}

  SeriesMonoid<T> base_;
  Endo<T> h_;
};

/// Runs zeno_verify and returns the module only on a clean pass.
template <class T>
std::optional<MagnitudeModule<T>> make_magnitude_module(const SeriesMonoid<T>& inst,
                                                        const Endo<T>& h,
                                                        const std::vector<T>& samples,
                                                        ApproxLevel level, Check* report = nullptr) {
  Check c = zeno_verify(inst, h, samples, level);
  if (report) *report = c;
  if (!c.passed()) return std::nullopt;
  return MagnitudeModule<T>(inst, h);
}

/// α·a in a verified magnitude module.
template <class T, class Scalar>
Partial<T> scalar_action(const std::optional<MagnitudeModule<T>>& module, const Scalar& alpha,
                         const T& a) {
  if (!module) throw std::logic_error("scalar_action: Zeno structure was not verified");
  return module->act(alpha, a);
}

// ---------------------------------------------------------------------------
// Registered endomorphisms

/// h(x) = x/2 on [0,∞], certified for finite two-sided arguments.
Endo<LowerReal> halving();
/// h(x) = x/2 on exact dyadics.
Endo<DyadicExt> dyadic_halving();
/// The identity, which is Zeno on every sup-lattice.
template <class T>
Endo<T> identity_endo() {
  return {"id", [](const T& a) { return a; }, {}};
}
/// The zero map.
template <class T>
Endo<T> zero_endo(T zero) {
  return {"0", [zero](const T&) { return zero; }, {}};
}

/// Every series monoid endomorphism of ℕ∪{∞} is n ↦ n·v for some v ∈ ℕ∪{∞};
/// this lists v = 0..max_v and v = ∞.
std::vector<Endo<ExtNat>> extnat_endomorphisms(std::uint64_t max_v = 8);

/// Multiplication on [0,∞]: exact for exact arguments, otherwise a product of
/// bounds. 0 absorbs, including 0·∞ = 0.
DyadicExt extreal_mul(const DyadicExt& x, const DyadicExt& y);
LowerReal extreal_mul(const LowerReal& x, const LowerReal& y);

}  // namespace realsets
