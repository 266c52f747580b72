#include <benchmark/benchmark.h>

#include <numeric>

#include "aci/classification.hpp"
#include "aci/koszul_betti.hpp"
#include "aci/monomial_ideal.hpp"
#include "aci/pfaffian.hpp"

namespace {

void BM_KoszulBettiRigidWitness(benchmark::State& state) {
  const auto ideal = aci::rigid_aci_witness(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(aci::betti_numbers(ideal));
}
BENCHMARK(BM_KoszulBettiRigidWitness)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);

void BM_KoszulBettiAciConstruction(benchmark::State& state) {
  const int a = static_cast<int>(state.range(0));
  const auto ideal = aci::aci_construction({a, a, a}, a + 1);
  for (auto _ : state) benchmark::DoNotOptimize(aci::betti_numbers(ideal));
}
BENCHMARK(BM_KoszulBettiAciConstruction)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_HilbertFunctionMonomial(benchmark::State& state) {
  const int a = static_cast<int>(state.range(0));
  const auto ideal = aci::aci_construction({a, a + 1, a + 2}, a + 3);
  for (auto _ : state) benchmark::DoNotOptimize(aci::hilbert_function(ideal));
}
BENCHMARK(BM_HilbertFunctionMonomial)->RangeMultiplier(2)->Range(2, 16);

void BM_EnumerateTables(benchmark::State& state) {
  const int a = static_cast<int>(state.range(0));
  for (auto _ : state)
    for (int h = a + 1; h <= 3 * a - 2; ++h) benchmark::DoNotOptimize(aci::enumerate_tables(a, h));
}
BENCHMARK(BM_EnumerateTables)->DenseRange(2, 12, 2);

void BM_GenericPfaffian(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto m = aci::generic_alternating(n);
  std::vector<std::size_t> all(n);
  std::iota(all.begin(), all.end(), 0);
  for (auto _ : state) {
    aci::PfaffianExpander expander(m);
    benchmark::DoNotOptimize(expander.pfaffian(all));
  }
}
BENCHMARK(BM_GenericPfaffian)->DenseRange(2, 10, 2)->Unit(benchmark::kMicrosecond);

void BM_SubPfaffiansAlt(benchmark::State& state) {
  const auto m = aci::alt_matrix(aci::GorensteinDelta({2, 3, 3, 4, 4, 5, 6}));
  for (auto _ : state) benchmark::DoNotOptimize(aci::sub_pfaffians(m));
}
BENCHMARK(BM_SubPfaffiansAlt)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
