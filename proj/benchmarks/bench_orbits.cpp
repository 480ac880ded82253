#include <benchmark/benchmark.h>

#include "hitsieve/charsum.hpp"
#include "hitsieve/dynamics.hpp"
#include "hitsieve/primes.hpp"
#include "hitsieve/sieve_bounds.hpp"

using namespace hitsieve;

static void BM_OrbitBrent(benchmark::State& state) {
  const PolyMap f(IntPoly({1, 0, 1}));
  const auto primes = primes_up_to(static_cast<std::uint64_t>(state.range(0)));
  std::size_t i = primes.size() / 2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(orbit_mod_p(f, 0, primes[i]));
    if (++i == primes.size()) i = primes.size() / 2;
  }
}
BENCHMARK(BM_OrbitBrent)->Arg(1 << 16)->Arg(1 << 22);

static void BM_DensityProfile(benchmark::State& state) {
  const PolyMap f(IntPoly({1, 0, 1}));
  for (auto _ : state) benchmark::DoNotOptimize(density_profile(f, 0, static_cast<std::uint64_t>(state.range(0)), 0.7));
}
BENCHMARK(BM_DensityProfile)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

static void BM_DeviationCheck(benchmark::State& state) {
  const auto inst = QuadCoverInstance::make(IntPoly({1, -2, 0, 3, 0, 1}), static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(deviation_check(inst));
}
BENCHMARK(BM_DeviationCheck)->Arg(101)->Arg(499)->Arg(10007);

static void BM_AutoCutoff(benchmark::State& state) {
  const double B = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(auto_cutoff(0.5, 1, {}, B, 1));
}
BENCHMARK(BM_AutoCutoff)->Arg(1000)->Arg(100000);

BENCHMARK_MAIN();
