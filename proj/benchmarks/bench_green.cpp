#include <benchmark/benchmark.h>

#include "brl/annulus_green.hpp"
#include "brl/ring_analysis.hpp"
#include "brl/special_functions.hpp"

namespace {

const brl::AnnulusGeometry kHalf(0.5);

void BM_GegenbauerRecurrence(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  double t = 0.3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(brl::gegenbauer_p1(m, t));
    t = t > 0.9 ? -0.9 : t + 1e-3;
  }
}
BENCHMARK(BM_GegenbauerRecurrence)->Arg(10)->Arg(60)->Arg(200);

// Nearer the wall the series needs more terms to reach the same tail bound.
void BM_Green(benchmark::State& state) {
  const double r = 0.5 + 0.5 * static_cast<double>(state.range(0)) / 100.0;
  const brl::Vec4 x(r, 0, 0, 0), y(0, 0.7, 0, 0);
  const brl::SeriesControl ctrl{brl::kMaxTermsCap, 1e-10};
  for (auto _ : state) benchmark::DoNotOptimize(brl::green(x, y, kHalf, ctrl));
}
BENCHMARK(BM_Green)->Arg(50)->Arg(90)->Arg(99);

void BM_Robin(benchmark::State& state) {
  const brl::SeriesControl ctrl{brl::kMaxTermsCap, 1e-10};
  const double s = 0.5 + 0.5 * static_cast<double>(state.range(0)) / 100.0;
  for (auto _ : state) benchmark::DoNotOptimize(brl::robin_radial(s, kHalf, ctrl));
}
BENCHMARK(BM_Robin)->Arg(50)->Arg(90)->Arg(99);

void BM_GradGreen(benchmark::State& state) {
  const brl::Vec4 x(0.7, 0.1, 0, 0), y(0, 0.7, 0.1, 0);
  for (auto _ : state)
    benchmark::DoNotOptimize(brl::grad_green(x, y, kHalf, brl::SeriesControl{}));
}
BENCHMARK(BM_GradGreen);

}  // namespace
