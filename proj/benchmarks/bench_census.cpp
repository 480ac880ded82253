#include <benchmark/benchmark.h>

#include "hitsieve/census.hpp"
#include "hitsieve/elliptic.hpp"
#include "hitsieve/gl2_serre.hpp"
#include "hitsieve/groups.hpp"

using namespace hitsieve;

static void BM_GaloisQuartic(benchmark::State& state) {
  const auto total = box_size(4, 10);
  std::uint64_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(galois_quartic(box_point(4, 10, i++ % total)));
}
BENCHMARK(BM_GaloisQuartic);

static void BM_SnCertificateQuintic(benchmark::State& state) {
  const auto total = box_size(5, 6);
  std::uint64_t i = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(sn_certificate(family_poly(box_point(5, 6, i++ % total)), 30, 0));
}
BENCHMARK(BM_SnCertificateQuintic);

// Box enumeration throughput by shard count on the available threads.
static void BM_CubicCensus(benchmark::State& state) {
  const Parallelism par{static_cast<unsigned>(state.range(0)), 0};
  for (auto _ : state) benchmark::DoNotOptimize(count_census(3, 15, CensusMode::Exact, 0, 0, par));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(box_size(3, 15)));
}
BENCHMARK(BM_CubicCensus)->Arg(1)->Arg(2)->UseRealTime()->Unit(benchmark::kMillisecond);

static void BM_PointCount(benchmark::State& state) {
  const auto E = CurveQ::make(1, 1);
  const auto p = static_cast<std::uint64_t>(state.range(0));
  const QuadraticCharacter chi(p);
  for (auto _ : state) benchmark::DoNotOptimize(point_count_mod_p(E, p, &chi));
}
BENCHMARK(BM_PointCount)->Arg(101)->Arg(1999)->Arg(100003);

static void BM_ScanGenerated(benchmark::State& state) {
  const auto ell = static_cast<std::uint32_t>(state.range(0));
  const std::vector<Mat2> gens{Mat2::make(1, 1, 0, 1, ell), Mat2::make(0, ell - 1, 1, 0, ell), Mat2::make(2, 0, 0, 1, ell)};
  for (auto _ : state) benchmark::DoNotOptimize(scan_generated(gens, ell));
}
BENCHMARK(BM_ScanGenerated)->Arg(5)->Arg(13)->Arg(31);

static void BM_CommutatorLevel8(benchmark::State& state) {
  const auto G = gl2_group(8);
  for (auto _ : state) benchmark::DoNotOptimize(commutator_subgroup(G));
}
BENCHMARK(BM_CommutatorLevel8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
