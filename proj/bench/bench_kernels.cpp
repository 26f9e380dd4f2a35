// Serial reference vs OpenMP kernels on the grid loops the acceptance
// suite and CLI spend their time in.

#include <benchmark/benchmark.h>

#include <vector>

#include "hardy/kernels.hpp"

using hardy::WeightParams;
using hardy::kernels::Exec;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(0) == 0 ? Exec::serial : Exec::parallel; }

void BM_LowerBoundScan(benchmark::State& state) {
  const auto p = WeightParams::hardy_optimal(0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hardy::kernels::lower_bound_scan(p, p.hardy_constant(), 200000, exec_of(state)));
  }
}
BENCHMARK(BM_LowerBoundScan)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

void BM_RandomTrials(benchmark::State& state) {
  const auto p = WeightParams::hardy_optimal(0.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hardy::kernels::random_trials(p, 1000, 1000, 42, exec_of(state)));
  }
}
BENCHMARK(BM_RandomTrials)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

void BM_RemainderGrid(benchmark::State& state) {
  std::vector<double> xs(100000);
  for (std::size_t i = 0; i < xs.size(); ++i) xs[i] = 0.5 * static_cast<double>(i + 1) / xs.size();
  for (auto _ : state) benchmark::DoNotOptimize(hardy::kernels::remainder_grid(0.2, xs, exec_of(state)));
}
BENCHMARK(BM_RemainderGrid)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

void BM_SectionMinima(benchmark::State& state) {
  const std::vector<std::int64_t> sizes = {100, 1000, 10000, 100000};
  for (auto _ : state) {
    benchmark::DoNotOptimize(hardy::kernels::section_minima(0.0, sizes, 1e-10, exec_of(state)));
  }
}
BENCHMARK(BM_SectionMinima)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

void BM_SweepRows(benchmark::State& state) {
  const auto betas = hardy::default_beta_grid(0.0);
  const std::vector<std::int64_t> sizes = {1000, 10000, 100000};
  for (auto _ : state) benchmark::DoNotOptimize(hardy::kernels::sweep_rows(0.0, betas, sizes, exec_of(state)));
}
BENCHMARK(BM_SweepRows)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
