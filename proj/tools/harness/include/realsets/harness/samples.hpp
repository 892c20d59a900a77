#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "realsets/biproduct.hpp"
#include "realsets/dyadic.hpp"
#include "realsets/extnat.hpp"
#include "realsets/formal.hpp"
#include "realsets/intsets.hpp"
#include "realsets/lattice.hpp"
#include "realsets/lower_real.hpp"
#include "realsets/omega.hpp"
#include "realsets/paradoxical.hpp"

namespace realsets::harness {

/// Per-case generator: each case index gets its own stream derived from the
/// run seed, so cases can run in any order or in parallel.
class CaseRng {
 public:
  CaseRng(std::uint64_t seed, std::uint64_t index);

  std::uint64_t next() { return engine_(); }
  /// Uniform in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi);
  bool chance(std::uint64_t one_in) { return between(1, one_in) == 1; }

 private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

ExtNat sample_extnat(CaseRng& rng, std::uint64_t max = 20, std::uint64_t infinity_one_in = 8);
/// m/2^e with m < 2^mantissa_bits and e <= max_exponent.
DyadicExt sample_dyadic(CaseRng& rng, unsigned mantissa_bits = 10, unsigned max_exponent = 10);
/// A dyadic in (0, 1] with exponent <= max_exponent.
DyadicExt sample_unit_dyadic(CaseRng& rng, unsigned max_exponent = 8);
/// Two-sided [0,∞] values: exact dyadics, ∞, non-dyadic rationals, and
/// certified infinite sums.
LowerReal sample_lower_real(CaseRng& rng);
/// Finite two-sided values only.
LowerReal sample_finite_lower_real(CaseRng& rng);
LatticePoint sample_point(CaseRng& rng, const FiniteLattice& lattice);
FormalMagnitude sample_formal(CaseRng& rng, std::uint64_t max_coeff = 8, std::size_t max_support = 8);
/// Mixes Zero, S and X elements; X values include dyadics and repeating rationals.
ZPElem sample_zp(CaseRng& rng);
Injection sample_injection(CaseRng& rng, std::size_t dom, std::size_t cod);
/// A random morphism (X,U) → (Y,V); needs |X|+|V| <= |Y|+|U| (equality in FB).
IntMorphism sample_int_morphism(CaseRng& rng, IntObject dom, IntObject cod, IntMode mode);
IntObject sample_int_object(CaseRng& rng, std::size_t max_size);
/// An object with sizes <= max_size that `from` has morphisms into.
IntObject sample_target(CaseRng& rng, IntObject from, std::size_t max_size, IntMode mode);
/// Fibre sizes for an order-preserving map, sometimes with an empty fibre.
OrderPreservingMap sample_fibres(CaseRng& rng, std::size_t max_fibres, std::size_t max_size);
std::vector<std::size_t> sample_permutation(CaseRng& rng, std::size_t n);

/// A finite-support family with at most `max_support` entries at indices
/// below `max_index`.
template <class T, class Gen>
Family<T> sample_family(CaseRng& rng, const SeriesMonoid<T>& inst, Gen gen, std::size_t max_support,
                        std::size_t max_index) {
  std::vector<typename Family<T>::Entry> entries;
  std::size_t count = rng.between(0, max_support);
  std::vector<bool> used(max_index, false);
  for (std::size_t i = 0; i < count; ++i) {
    std::size_t idx = rng.between(0, max_index - 1);
    if (used[idx]) continue;
    used[idx] = true;
    entries.push_back({idx, gen(rng)});
  }
  return inst.finite(std::move(entries));
}

/// A rows × cols matrix family of families.
template <class T, class Gen>
Family<Family<T>> sample_matrix(CaseRng& rng, const SeriesMonoid<T>& inst, Gen gen,
                                std::size_t max_rows, std::size_t max_cols) {
  std::size_t rows = rng.between(1, max_rows);
  std::size_t cols = rng.between(1, max_cols);
  std::vector<std::vector<T>> m(rows, std::vector<T>(cols, inst.zero));
  for (auto& row : m) {
    for (auto& cell : row) {
      if (!rng.chance(3)) cell = gen(rng);
    }
  }
  return inst.matrix(m);
}

}  // namespace realsets::harness
