#include "realsets/lower_real.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace realsets {

LowerReal::LowerReal() : exact_(DyadicExt{}) {}

LowerReal::LowerReal(DyadicExt exact) : exact_(std::move(exact)) {}

LowerReal LowerReal::from_bounds(Bound bound, bool modulus) {
  if (!bound) throw std::invalid_argument("LowerReal::from_bounds: empty bound function");
  LowerReal x;
  x.exact_.reset();
  x.bound_ = std::make_shared<const Bound>(std::move(bound));
  x.modulus_ = modulus;
  return x;
}

LowerReal LowerReal::from_rational(const mpq_class& q) {
  if (q < 0) throw std::invalid_argument("LowerReal::from_rational: negative rational");
  if (mpz_popcount(q.get_den().get_mpz_t()) == 1) return LowerReal(DyadicExt::from_rational(q));
  return from_bounds([q](std::size_t k) { return DyadicExt::floor_of(q, k); }, true);
}

DyadicExt LowerReal::bound(std::size_t stage) const {
  if (exact_) return *exact_;
  return (*bound_)(stage);
}

LowerReal halve(const LowerReal& x) {
  if (x.exact()) return LowerReal(x.exact()->half());
  return LowerReal::from_bounds([x](std::size_t k) { return x.bound(k).half(); },
                                x.has_modulus());
}

namespace {

LowerReal sum_of(std::vector<LowerReal> terms) {
  std::erase_if(terms, [](const LowerReal& t) { return t.is_exact_zero(); });
  if (terms.empty()) return LowerReal();
  bool all_exact = true;
  bool all_modulus = true;
  for (const LowerReal& t : terms) {
    if (t.exact() && t.exact()->is_infinite()) return LowerReal::infinity();
    all_exact = all_exact && t.exact().has_value();
    all_modulus = all_modulus && t.has_modulus();
  }
  if (terms.size() == 1) return terms.front();
  if (all_exact) {
    DyadicExt total;
    for (const LowerReal& t : terms) total += *t.exact();
    return LowerReal(total);
  }
  // Stage shift so that n errors of 2^-(k+shift) add up to at most 2^-k.
  std::size_t shift = all_modulus ? ceil_log2(static_cast<std::uint64_t>(terms.size())) : 0;
  return LowerReal::from_bounds(
      [terms = std::move(terms), shift](std::size_t k) {
        DyadicExt total;
        for (const LowerReal& t : terms) {
          total += t.bound(k + shift);
          if (total.is_infinite()) break;
        }
        return total;
      },
      all_modulus);
}

}  // namespace

LowerReal operator+(const LowerReal& a, const LowerReal& b) { return sum_of({a, b}); }

LowerReal lower_real_sum(const Family<LowerReal>& fam) {
  if (fam.is_finite_support()) {
    std::vector<LowerReal> terms;
    for (const auto& e : fam.entries()) terms.push_back(e.value);
    return sum_of(std::move(terms));
  }
  LazyTraits traits = fam.traits();
  if (traits.unbounded) return LowerReal::infinity();
  if (traits.support_bound) {
    std::vector<LowerReal> terms;
    for (std::size_t i = 0; i < *traits.support_bound; ++i) terms.push_back(fam.at(i));
    return sum_of(std::move(terms));
  }
  if (traits.constant_from) {
    std::size_t from = *traits.constant_from;
    LowerReal c = fam.at(from);
    std::vector<LowerReal> prefix;
    for (std::size_t i = 0; i < from; ++i) prefix.push_back(fam.at(i));
    if (c.is_exact_zero()) return sum_of(std::move(prefix));
    DyadicExt c0 = c.bound(0);
    if (c.exact() || !c0.is_zero()) return LowerReal::infinity();
  }
  if (traits.tail_bound) {
    auto tail_bound = traits.tail_bound;
    return LowerReal::from_bounds(
        [fam, tail_bound](std::size_t k) {
          std::size_t n = 0;
          for (std::size_t j = 0; j <= k; ++j) n = std::max(n, tail_bound(j));
          std::size_t shift = 1 + ceil_log2(static_cast<std::uint64_t>(n + 1));
          DyadicExt total;
          for (std::size_t i = 0; i <= n && total.is_finite(); ++i) {
            total += fam.at(i).bound(k + shift);
          }
          return total;
        },
        true);
  }
  return LowerReal::from_bounds(
      [fam](std::size_t k) {
        DyadicExt total;
        for (std::size_t i = 0; i <= k && total.is_finite(); ++i) total += fam.at(i).bound(k);
        return total;
      },
      false);
}

Verdict lower_real_eq(const LowerReal& x, const LowerReal& y, ApproxLevel level) {
  if (x.exact() && y.exact()) return *x.exact() == *y.exact() ? Verdict::equal : Verdict::unequal;
  // An exact ∞ against a provably finite value: never equal at any level.
  auto infinite_vs_finite = [](const LowerReal& inf, const LowerReal& other) {
    return inf.exact() && inf.exact()->is_infinite() && other.has_modulus() &&
           other.bound(0).is_finite();
  };
  if (infinite_vs_finite(x, y) || infinite_vs_finite(y, x)) return Verdict::unequal;
  DyadicExt lx = x.bound(level.bits);
  DyadicExt ly = y.bound(level.bits);
  if (lx.is_infinite() && ly.is_infinite()) return Verdict::equal;
  if (lx.is_infinite() || ly.is_infinite()) return Verdict::unknown;
  const DyadicExt& lo = std::min(lx, ly);
  const DyadicExt& hi = std::max(lx, ly);
  DyadicExt gap = *lo.subtract_from(hi);
  return gap <= DyadicExt::pow2(-static_cast<std::int64_t>(level.bits)) ? Verdict::equal
                                                                         : Verdict::unknown;
}

std::string format_bound(const DyadicExt& d) {
  if (d.is_finite() && d.exponent() >= 8) {
    mpz_class next = d.mantissa() + 1;
    if (mpz_scan1(next.get_mpz_t(), 0) >= d.exponent()) {
      mpz_class n;
      mpz_fdiv_q_2exp(n.get_mpz_t(), next.get_mpz_t(), d.exponent());
      return n.get_str() + " - 2^-" + std::to_string(d.exponent());
    }
  }
  return d.str();
}

std::string format(const LowerReal& x, ApproxLevel level) {
  if (x.exact()) return x.exact()->str();
  DyadicExt b = x.approx(level);
  if (b.is_infinite()) return "inf";
  if (x.has_modulus()) return "= " + format_bound(b) + " ± 2^-" + std::to_string(level.bits);
  return "≥ " + format_bound(b) + " (" + std::to_string(level.bits) + " bits)";
}

SeriesMonoid<LowerReal> extreal_instance() {
  SeriesMonoid<LowerReal> inst;
  inst.name = "extreal";
  inst.zero = LowerReal();
  inst.is_zero = [](const LowerReal& x) { return x.is_exact_zero(); };
  inst.sum = [](const Family<LowerReal>& fam) { return Partial<LowerReal>{lower_real_sum(fam)}; };
  inst.eq_at = lower_real_eq;
  inst.same = [](const LowerReal& x, const LowerReal& y) {
    return x.exact() && y.exact() && *x.exact() == *y.exact();
  };
  inst.show = [](const LowerReal& x) { return format(x, ApproxLevel{32}); };
  inst.subtract = [](const LowerReal& a, const LowerReal& b) -> Witness<LowerReal> {
    using Status = Witness<LowerReal>::Status;
    if (!a.exact() || !b.exact()) return {Status::undecided, std::nullopt};
    auto u = a.exact()->subtract_from(*b.exact());
    if (!u) return {Status::disproved, std::nullopt};
    return {Status::found, LowerReal(*u)};
  };
  return inst;
}

SeriesMonoid<DyadicExt> dyadic_instance(std::size_t scan_budget) {
  SeriesMonoid<DyadicExt> inst;
  inst.name = "dyadic";
  inst.zero = DyadicExt{};
  inst.is_zero = [](const DyadicExt& x) { return x.is_zero(); };
  inst.sum = [scan_budget](const Family<DyadicExt>& fam) -> Partial<DyadicExt> {
    auto total_of = [&](std::size_t end) {
      DyadicExt total;
      for (std::size_t i = 0; i < end && total.is_finite(); ++i) total += fam.at(i);
      return total;
    };
    if (fam.is_finite_support()) {
      DyadicExt total;
      for (const auto& e : fam.entries()) total += e.value;
      return {total};
    }
    LazyTraits t = fam.traits();
    if (t.unbounded) return {DyadicExt::infinity()};
    if (t.support_bound) return {total_of(*t.support_bound)};
    if (t.constant_from) {
      DyadicExt prefix = total_of(*t.constant_from);
      if (fam.at(*t.constant_from).is_zero()) return {prefix};
      return {DyadicExt::infinity()};
    }
    DyadicExt scanned = total_of(scan_budget);
    return {scanned, scanned.is_finite()};
  };
  inst.eq_at = [](const DyadicExt& x, const DyadicExt& y, ApproxLevel) {
    return x == y ? Verdict::equal : Verdict::unequal;
  };
  inst.same = [](const DyadicExt& x, const DyadicExt& y) { return x == y; };
  inst.show = [](const DyadicExt& x) { return x.str(); };
  inst.subtract = [](const DyadicExt& a, const DyadicExt& b) -> Witness<DyadicExt> {
    using Status = Witness<DyadicExt>::Status;
    auto u = a.subtract_from(b);
    if (!u) return {Status::disproved, std::nullopt};
    return {Status::found, *u};
  };
  return inst;
}

LowerReal embed(const ExtNat& n) {
  if (n.is_infinite()) return LowerReal::infinity();
  return LowerReal(DyadicExt(n.value()));
}

}  // namespace realsets
