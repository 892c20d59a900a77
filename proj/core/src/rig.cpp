#include "realsets/rig.hpp"

#include "realsets/extnat_series.hpp"
#include "realsets/magnitude.hpp"

namespace realsets {

Rig<ExtNat> nat_rig() {
  return {extnat_instance(), [](const ExtNat& a, const ExtNat& b) { return a * b; }, ExtNat(1),
          true, {}};
}

Rig<DyadicExt> dyadic_rig() {
  return {dyadic_instance(), [](const DyadicExt& a, const DyadicExt& b) { return a * b; },
          DyadicExt(1), true, {}};
}

Rig<LowerReal> extreal_rig() {
  Rig<LowerReal> rig;
  rig.base = extreal_instance();
  rig.mul = [](const LowerReal& a, const LowerReal& b) { return extreal_mul(a, b); };
  rig.one = LowerReal(DyadicExt(1));
  rig.lazy_p = [](const Family<LowerReal>& fam) -> Partial<LowerReal> {
    Rig<DyadicExt> exact = dyadic_rig();
    // Prefix P's of lower bounds increase with both the prefix and the stage.
    return {LowerReal::from_bounds(
        [fam, exact](std::size_t k) {
          std::vector<DyadicExt> xs;
          for (std::size_t i = 0; i <= k; ++i) xs.push_back(fam.at(i).bound(k));
          return p_of_list(exact, xs);
        },
        false)};
  };
  return rig;
}

LowerReal geometric_inverse(const DyadicExt& a) {
  if (a.is_infinite() || a.is_zero() || a > DyadicExt(1)) {
    throw std::domain_error("geometric_inverse: need 0 < a <= 1, got " + a.str());
  }
  if (a == DyadicExt(1)) return LowerReal(DyadicExt(1));
  const std::uint64_t e = a.exponent();
  mpz_class one_e;
  mpz_ui_pow_ui(one_e.get_mpz_t(), 2, e);
  const mpz_class u = one_e - a.mantissa();  // u = u/2^e
  // a >= 2^-L
  mpz_class inv_ceil;
  mpz_cdiv_q(inv_ceil.get_mpz_t(), one_e.get_mpz_t(), a.mantissa().get_mpz_t());
  const std::uint64_t L = ceil_log2(inv_ceil);

  // Σ uⁿ to within 2^-j from below: the tail after N terms is u^(N+1)/a, at
  // most 2^-(j+1) once a(N+1) >= (j+1+L)·ln 2, and rounding each term down to
  // p bits loses at most (N+1)²·2^-p <= 2^-(j+1).
  auto approx = [a, e, u, L](std::size_t j) {
    mpq_class need = mpq_class(7 * (j + 1 + L), 10) / a.to_rational();
    mpz_class terms;
    mpz_cdiv_q(terms.get_mpz_t(), need.get_num().get_mpz_t(), need.get_den().get_mpz_t());
    const std::uint64_t p = j + 1 + 2 * ceil_log2(mpz_class(terms + 1));
    mpz_class t;
    mpz_ui_pow_ui(t.get_mpz_t(), 2, p);
    mpz_class total = t;
    for (mpz_class n = 1; n < terms && t != 0; ++n) {
      t *= u;
      mpz_fdiv_q_2exp(t.get_mpz_t(), t.get_mpz_t(), e);
      total += t;
    }
    return std::pair{total, p};
  };
  // bound(k) = approx(k+2) - 2^-(k+2) lies in [v - 2^-(k+1), v - 2^-(k+2)],
  // which makes the stream monotone.
  return LowerReal::from_bounds(
      [approx](std::size_t k) {
        auto [total, p] = approx(k + 2);
        mpz_class step;
        mpz_ui_pow_ui(step.get_mpz_t(), 2, p - (k + 2));
        if (total <= step) return DyadicExt();
        return DyadicExt(mpz_class(total - step), p);
      },
      true);
}

}  // namespace realsets
