#include "realsets/harness/samples.hpp"

#include <algorithm>
#include <stdexcept>

namespace realsets::harness {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

CaseRng::CaseRng(std::uint64_t seed, std::uint64_t index)
    : engine_(splitmix64(splitmix64(seed) ^ index)) {}

std::uint64_t CaseRng::between(std::uint64_t lo, std::uint64_t hi) {
  if (hi < lo) throw std::invalid_argument("CaseRng::between: empty range");
  std::uint64_t span = hi - lo + 1;
  return span == 0 ? next() : lo + next() % span;
}

ExtNat sample_extnat(CaseRng& rng, std::uint64_t max, std::uint64_t infinity_one_in) {
  if (infinity_one_in && rng.chance(infinity_one_in)) return ExtNat::infinity();
  return ExtNat(rng.between(0, max));
}

DyadicExt sample_dyadic(CaseRng& rng, unsigned mantissa_bits, unsigned max_exponent) {
  std::uint64_t m = rng.between(0, (std::uint64_t{1} << mantissa_bits) - 1);
  return DyadicExt(mpz_class(static_cast<unsigned long>(m)), rng.between(0, max_exponent));
}

DyadicExt sample_unit_dyadic(CaseRng& rng, unsigned max_exponent) {
  std::uint64_t e = rng.between(0, max_exponent);
  std::uint64_t m = rng.between(1, std::uint64_t{1} << e);
  return DyadicExt(mpz_class(static_cast<unsigned long>(m)), e);
}

namespace {

/// c·(1/2 + 1/4 + ...) as a certified lazy sum.
LowerReal certified_series(const DyadicExt& c) {
  std::size_t u = ceil_log2(c.integer_part() + 1);
  LazyTraits t;
  t.tail_bound = [u](std::size_t k) { return k + u; };
  auto fam = Family<LowerReal>::lazy(
      [c](std::size_t n) { return LowerReal(c.scaled(-static_cast<std::int64_t>(n + 1))); },
      LowerReal(), t);
  return lower_real_sum(fam);
}

LowerReal sample_rational(CaseRng& rng) {
  static const unsigned long dens[] = {3, 5, 6, 7, 9, 10, 11, 12, 13};
  unsigned long q = dens[rng.between(0, 8)];
  mpq_class v(static_cast<unsigned long>(rng.between(1, 40)), q);
  v.canonicalize();
  return LowerReal::from_rational(v);
}

}  // namespace

LowerReal sample_finite_lower_real(CaseRng& rng) {
  switch (rng.between(0, 3)) {
    case 0:
      return LowerReal(sample_dyadic(rng));
    case 1:
      return sample_rational(rng);
    case 2:
      return certified_series(sample_dyadic(rng, 6, 4));
    default:
      return halve(sample_rational(rng));
  }
}

LowerReal sample_lower_real(CaseRng& rng) {
  if (rng.chance(12)) return LowerReal::infinity();
  return sample_finite_lower_real(rng);
}

LatticePoint sample_point(CaseRng& rng, const FiniteLattice& lattice) {
  return {rng.between(0, lattice.size() - 1)};
}

FormalMagnitude sample_formal(CaseRng& rng, std::uint64_t max_coeff, std::size_t max_support) {
  FormalMagnitude x;
  std::size_t count = rng.between(0, max_support);
  for (std::size_t i = 0; i < count; ++i) {
    std::uint64_t c = rng.between(0, max_coeff);
    if (c) x.coeffs[rng.between(0, 2 * max_support)] = ExtNat(c);
  }
  if (rng.chance(16)) x.coeffs[rng.between(0, max_support)] = ExtNat::infinity();
  return x;
}

ZPElem sample_zp(CaseRng& rng) {
  switch (rng.between(0, 4)) {
    case 0:
      return {};
    case 1:
    case 2: {
      DyadicExt d = sample_dyadic(rng, 8, 6);
      if (d.is_zero()) d = DyadicExt(1);
      return ZPElem::terminating(d.to_rational());
    }
    case 3: {
      DyadicExt d = sample_dyadic(rng, 8, 6);
      if (d.is_zero()) d = DyadicExt(1);
      return ZPElem::nonterminating(d.to_rational());
    }
    default: {
      mpq_class v(static_cast<unsigned long>(rng.between(1, 200)),
                  static_cast<unsigned long>(rng.between(1, 48)));
      v.canonicalize();
      return ZPElem::nonterminating(v);
    }
  }
}

std::vector<std::size_t> sample_permutation(CaseRng& rng, std::size_t n) {
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[rng.between(0, i - 1)]);
  return p;
}

Injection sample_injection(CaseRng& rng, std::size_t dom, std::size_t cod) {
  if (dom > cod) throw std::invalid_argument("sample_injection: no injection exists");
  std::vector<std::size_t> p = sample_permutation(rng, cod);
  p.resize(dom);
  return Injection::make(dom, cod, std::move(p));
}

IntObject sample_int_object(CaseRng& rng, std::size_t max_size) {
  return {rng.between(0, max_size), rng.between(0, max_size)};
}

IntObject sample_target(CaseRng& rng, IntObject from, std::size_t max_size, IntMode mode) {
  // Need Y + U >= X + V (equality for FB) with Y, V <= max_size.
  std::size_t x = from.x, u = from.u;
  std::size_t v_hi = std::min(max_size, max_size + u - std::min(x, max_size + u));
  std::size_t v_lo = mode == IntMode::FB && u > x ? u - x : 0;
  std::size_t v = rng.between(v_lo, std::max(v_lo, v_hi));
  std::size_t y_lo = x + v > u ? x + v - u : 0;
  std::size_t y = mode == IntMode::FB ? y_lo : rng.between(y_lo, std::max(y_lo, max_size));
  return {y, v};
}

IntMorphism sample_int_morphism(CaseRng& rng, IntObject dom, IntObject cod, IntMode mode) {
  Injection map = sample_injection(rng, dom.x + cod.u, cod.x + dom.u);
  return IntMorphism::make(dom, cod, map.table, mode);
}

OrderPreservingMap sample_fibres(CaseRng& rng, std::size_t max_fibres, std::size_t max_size) {
  std::vector<ExtNat> sizes;
  std::size_t count = rng.between(0, max_fibres);
  for (std::size_t i = 0; i < count; ++i) sizes.push_back(ExtNat(rng.between(0, max_size)));
  return OrderPreservingMap(std::move(sizes));
}

}  // namespace realsets::harness
