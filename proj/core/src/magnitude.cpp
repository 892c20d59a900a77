#include "realsets/magnitude.hpp"

namespace realsets {

namespace {

/// Smallest u with value <= 2^u, for a two-sided finite LowerReal.
std::optional<std::size_t> log2_upper(const LowerReal& a) {
  if (!a.has_modulus()) return std::nullopt;
  DyadicExt b0 = a.bound(0);
  if (b0.is_infinite()) return std::nullopt;
  // value <= bound(0) + 1 <= floor(bound(0)) + 2
  mpz_class upper = b0.integer_part() + 2;
  return ceil_log2(upper);
}

}  // namespace

Endo<LowerReal> halving() {
  Endo<LowerReal> h;
  h.name = "h";
  h.apply = [](const LowerReal& x) { return halve(x); };
  h.iterate_traits = [](const LowerReal& a) {
    LazyTraits t;
    if (auto u = log2_upper(a)) {
      // Σ_{n>N} a/2^(n+1) = a/2^(N+1) <= 2^(u-N-1) <= 2^-(k+1) once N >= k + u.
      t.tail_bound = [u = *u](std::size_t k) { return k + u; };
    }
    return t;
  };
  return h;
}

Endo<DyadicExt> dyadic_halving() {
  return {"h", [](const DyadicExt& x) { return x.half(); }, {}};
}

std::vector<Endo<ExtNat>> extnat_endomorphisms(std::uint64_t max_v) {
  std::vector<Endo<ExtNat>> out;
  auto make = [](ExtNat v) {
    Endo<ExtNat> f{"f_" + v.str(), [v](const ExtNat& n) { return n * v; }, {}};
    // For v >= 2 the iterates a·v^n of a non-zero a eventually pass every natural.
    f.iterate_traits = [v](const ExtNat& a) {
      LazyTraits t;
      t.unbounded = !a.is_zero() && v >= ExtNat(2);
      t.infinite_support = t.unbounded;
      return t;
    };
    return f;
  };
  for (std::uint64_t v = 0; v <= max_v; ++v) out.push_back(make(ExtNat(v)));
  out.push_back(make(ExtNat::infinity()));
  return out;
}

DyadicExt extreal_mul(const DyadicExt& x, const DyadicExt& y) { return x * y; }

LowerReal extreal_mul(const LowerReal& x, const LowerReal& y) {
  if (x.is_exact_zero() || y.is_exact_zero()) return LowerReal();
  if (x.exact() && y.exact()) return LowerReal(*x.exact() * *y.exact());

  auto finite_two_sided = [](const LowerReal& z) {
    return z.has_modulus() && z.bound(0).is_finite();
  };
  auto product = [](LowerReal a, LowerReal b, std::size_t shift, bool modulus) {
    return LowerReal::from_bounds(
        [a, b, shift](std::size_t k) { return a.bound(k + shift) * b.bound(k + shift); },
        modulus);
  };
  // c·y with c exact: the error c·2^-(k+s) needs 2^s >= c.
  auto scaled = [&](const DyadicExt& c, const LowerReal& z) -> std::optional<LowerReal> {
    if (c.is_infinite() || !finite_two_sided(z)) return std::nullopt;
    std::size_t s = ceil_log2(c.integer_part() + 1);
    return product(LowerReal(c), z, s, true);
  };
  if (x.exact()) {
    if (auto r = scaled(*x.exact(), y)) return *r;
  }
  if (y.exact()) {
    if (auto r = scaled(*y.exact(), x)) return *r;
  }
  if (finite_two_sided(x) && finite_two_sided(y)) {
    // xy - x_k y_k <= x·e_y + y_k·e_x <= (U_x + U_y)·2^-(k+s) with U = bound(0) + 1.
    mpz_class ux = x.bound(0).integer_part() + 2;
    mpz_class uy = y.bound(0).integer_part() + 2;
    return product(x, y, ceil_log2(mpz_class(ux + uy)), true);
  }
  return product(x, y, 0, false);
}

}  // namespace realsets
