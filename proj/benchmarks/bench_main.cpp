#include <benchmark/benchmark.h>

#include "realsets/intsets.hpp"
#include "realsets/lower_real.hpp"
#include "realsets/rig.hpp"

using namespace realsets;

namespace {

void BM_GeometricSumBound(benchmark::State& state) {
  auto inst = extreal_instance();
  auto fam = inst.lazy([](std::size_t n) { return LowerReal(DyadicExt::pow2(-static_cast<std::int64_t>(n) - 1)); });
  std::size_t bits = state.range(0);
  for (auto _ : state) {
    LowerReal s = inst.sum(fam).value;
    benchmark::DoNotOptimize(s.bound(bits));
  }
}
BENCHMARK(BM_GeometricSumBound)->Arg(16)->Arg(64)->Arg(256);

void BM_PRecurrence(benchmark::State& state) {
  Rig<DyadicExt> rig = dyadic_rig();
  std::vector<DyadicExt> xs;
  for (std::int64_t i = 0; i < state.range(0); ++i) xs.push_back(DyadicExt(mpz_class(2 * i + 1), i % 7));
  for (auto _ : state) benchmark::DoNotOptimize(p_of_list(rig, xs));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PRecurrence)->RangeMultiplier(4)->Range(4, 256)->Complexity();

void BM_GeometricInverse(benchmark::State& state) {
  DyadicExt a(mpz_class(3), 4);
  for (auto _ : state) benchmark::DoNotOptimize(geometric_inverse(a).bound(state.range(0)));
}
BENCHMARK(BM_GeometricInverse)->Arg(32)->Arg(128);

void BM_IntCompose(benchmark::State& state) {
  std::size_t n = state.range(0);
  // A cycle through the whole feedback block on each side.
  IntObject a{n, n};
  std::vector<std::size_t> table(2 * n);
  for (std::size_t i = 0; i < 2 * n; ++i) table[i] = (i + 1) % (2 * n);
  IntMorphism f = IntMorphism::make(a, a, table, IntMode::FB);
  for (auto _ : state) benchmark::DoNotOptimize(int_compose(f, f));
}
BENCHMARK(BM_IntCompose)->RangeMultiplier(4)->Range(4, 1024);

}  // namespace

BENCHMARK_MAIN();
