#include "realsets/extnat_series.hpp"

#include <algorithm>

namespace realsets {

Partial<ExtNat> extnat_sum(const Family<ExtNat>& fam, std::size_t scan_budget) {
  auto prefix = [&](std::size_t end) {
    ExtNat total;
    for (std::size_t i = 0; i < end && total.is_finite(); ++i) total += fam.at(i);
    return total;
  };
  if (fam.is_finite_support()) {
    ExtNat total;
    for (const auto& e : fam.entries()) total += e.value;
    return {total};
  }
  LazyTraits t = fam.traits();
  if (t.support_bound) return {prefix(*t.support_bound)};
  if (t.unbounded || t.infinite_support) return {ExtNat::infinity()};
  if (t.constant_from) {
    if (fam.at(*t.constant_from).is_zero()) return {prefix(*t.constant_from)};
    return {ExtNat::infinity()};
  }
  ExtNat scanned = prefix(scan_budget);
  return {scanned, scanned.is_finite()};
}

Partial<ExtNat> natmax_sum(const Family<ExtNat>& fam, std::size_t scan_budget) {
  auto prefix = [&](std::size_t end) {
    ExtNat top;
    for (std::size_t i = 0; i < end && top.is_finite(); ++i) top = std::max(top, fam.at(i));
    return top;
  };
  if (fam.is_finite_support()) {
    ExtNat top;
    for (const auto& e : fam.entries()) top = std::max(top, e.value);
    return {top};
  }
  LazyTraits t = fam.traits();
  if (t.support_bound) return {prefix(*t.support_bound)};
  if (t.unbounded) return {ExtNat::infinity()};
  if (t.constant_from) return {prefix(*t.constant_from + 1)};
  ExtNat scanned = prefix(scan_budget);
  return {scanned, scanned.is_finite()};
}

namespace {

SeriesMonoid<ExtNat> extnat_base(std::string name) {
  SeriesMonoid<ExtNat> inst;
  inst.name = std::move(name);
  inst.zero = ExtNat(0);
  inst.is_zero = [](const ExtNat& x) { return x.is_zero(); };
  inst.eq_at = [](const ExtNat& x, const ExtNat& y, ApproxLevel) {
    return x == y ? Verdict::equal : Verdict::unequal;
  };
  inst.same = [](const ExtNat& x, const ExtNat& y) { return x == y; };
  inst.show = [](const ExtNat& x) { return x.str(); };
  inst.enumerate = [](std::size_t i) { return i == 0 ? ExtNat::infinity() : ExtNat(i - 1); };
  return inst;
}

}  // namespace

SeriesMonoid<ExtNat> extnat_instance(std::size_t scan_budget) {
  SeriesMonoid<ExtNat> inst = extnat_base("extnat");
  inst.sum = [scan_budget](const Family<ExtNat>& fam) { return extnat_sum(fam, scan_budget); };
  inst.subtract = [](const ExtNat& a, const ExtNat& b) -> Witness<ExtNat> {
    using Status = Witness<ExtNat>::Status;
    if (b.is_infinite()) return {Status::found, a.is_infinite() ? ExtNat(0) : ExtNat::infinity()};
    if (a.is_infinite() || a.value() > b.value()) return {Status::disproved, std::nullopt};
    return {Status::found, ExtNat(b.value() - a.value())};
  };
  return inst;
}

SeriesMonoid<ExtNat> natmax_instance(std::size_t scan_budget) {
  SeriesMonoid<ExtNat> inst = extnat_base("natmax");
  inst.sum = [scan_budget](const Family<ExtNat>& fam) { return natmax_sum(fam, scan_budget); };
  inst.subtract = [](const ExtNat& a, const ExtNat& b) -> Witness<ExtNat> {
    using Status = Witness<ExtNat>::Status;
    if (a <= b) return {Status::found, b};
    return {Status::disproved, std::nullopt};
  };
  inst.idempotent = true;
  return inst;
}

}  // namespace realsets
