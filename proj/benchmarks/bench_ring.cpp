#include <benchmark/benchmark.h>

#include "brl/annulus_green.hpp"
#include "brl/interaction.hpp"
#include "brl/reduced_system.hpp"
#include "brl/ring_analysis.hpp"

namespace {

const brl::AnnulusGeometry kHalf(0.5);

void BM_RingScan(benchmark::State& state) {
  brl::ScanOptions opts;
  opts.grid_points = static_cast<std::size_t>(state.range(1));
  opts.workers = 1;
  const auto k = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(brl::min_over_r(k, kHalf, brl::SeriesControl{}, opts));
}
BENCHMARK(BM_RingScan)->Args({2, 128})->Args({2, 512})->Args({4, 128})->Unit(benchmark::kMillisecond);

void BM_SmallestEigen(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  const brl::AnnulusOracle oracle(kHalf);
  const brl::Matrix m =
      brl::assemble_m(brl::sample_annulus_configuration(k, kHalf, 0.02, 7), oracle).entries;
  for (auto _ : state) benchmark::DoNotOptimize(brl::smallest_eigen(m));
}
BENCHMARK(BM_SmallestEigen)->DenseRange(2, 8, 2);

void BM_AssembleInteraction(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  const brl::AnnulusOracle oracle(kHalf);
  const brl::Configuration c = brl::sample_annulus_configuration(k, kHalf, 0.02, 7);
  for (auto _ : state) benchmark::DoNotOptimize(brl::assemble_m(c, oracle));
}
BENCHMARK(BM_AssembleInteraction)->DenseRange(2, 8, 2);

void BM_ReducedSolve(benchmark::State& state) {
  const brl::AnnulusOracle oracle(kHalf);
  const brl::Configuration c = brl::RingConfig{3, 0.73}.configuration();
  for (auto _ : state) benchmark::DoNotOptimize(brl::solve_d_lambda(c, oracle));
}
BENCHMARK(BM_ReducedSolve);

}  // namespace
