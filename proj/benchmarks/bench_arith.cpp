#include <benchmark/benchmark.h>

#include <random>

#include "hitsieve/factor.hpp"
#include "hitsieve/galois.hpp"
#include "hitsieve/primes.hpp"

using namespace hitsieve;

static std::vector<IntPoly> random_quartics(std::size_t count, std::int64_t B) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::int64_t> u(-B, B);
  std::vector<IntPoly> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(family_poly({u(rng), u(rng), u(rng), u(rng)}));
  return out;
}

static void BM_PrimesUpTo(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(primes_up_to(static_cast<std::uint64_t>(state.range(0))));
}
BENCHMARK(BM_PrimesUpTo)->Range(1 << 12, 1 << 24);

static void BM_FpFactorShape(benchmark::State& state) {
  const auto polys = random_quartics(256, 50);
  const auto p = static_cast<std::uint64_t>(state.range(0));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(fp_factor_shape(polys[i++ & 255].mod(p)));
}
BENCHMARK(BM_FpFactorShape)->Arg(7)->Arg(101)->Arg(1000003);

static void BM_IntPolyFactorQuartic(benchmark::State& state) {
  const auto polys = random_quartics(256, state.range(0));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(int_poly_factor(polys[i++ & 255], 0));
}
BENCHMARK(BM_IntPolyFactorQuartic)->Arg(10)->Arg(1000);

static void BM_IntPolyDisc(benchmark::State& state) {
  const auto polys = random_quartics(256, 100);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(int_poly_disc(polys[i++ & 255]));
}
BENCHMARK(BM_IntPolyDisc);

static void BM_IsPrime(benchmark::State& state) {
  std::uint64_t n = (1ULL << 61) - 1;
  for (auto _ : state) benchmark::DoNotOptimize(is_prime(n += 2));
}
BENCHMARK(BM_IsPrime);

BENCHMARK_MAIN();
