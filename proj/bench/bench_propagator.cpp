// Serial reference vs OpenMP grid evaluation on the figure presets.

#include <benchmark/benchmark.h>

#include "lambdaphase/scenario.hpp"

namespace {

using lambdaphase::Execution;

void run_grid(benchmark::State& state, const char* preset, Execution execution) {
  lambdaphase::RunConfig config = lambdaphase::preset_config(preset);
  config.tau_steps = static_cast<int>(state.range(0));
  const lambdaphase::Propagator propagator(config.params);
  const auto taus = lambdaphase::tau_grid(config);
  std::vector<double> times;
  for (double tau : taus) times.push_back(lambdaphase::time_from_tau(config.params, tau));
  for (auto _ : state) {
    auto rows = lambdaphase::observe_grid(propagator, times, execution);
    benchmark::DoNotOptimize(rows.data());
  }
  state.counters["blocks"] = static_cast<double>(propagator.block_count());
  state.counters["threads"] = execution == Execution::kParallel ? lambdaphase::available_threads() : 1;
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(times.size() * propagator.block_count()));
}

void BM_Fig3bSerial(benchmark::State& s) { run_grid(s, "fig3b", Execution::kSerial); }
void BM_Fig3bParallel(benchmark::State& s) { run_grid(s, "fig3b", Execution::kParallel); }
void BM_Fig2Serial(benchmark::State& s) { run_grid(s, "fig2", Execution::kSerial); }
void BM_Fig2Parallel(benchmark::State& s) { run_grid(s, "fig2", Execution::kParallel); }

void BM_PrepareFig3b(benchmark::State& state) {
  const auto params = lambdaphase::preset_config("fig3b").params;
  for (auto _ : state) {
    lambdaphase::Propagator p(params);
    benchmark::DoNotOptimize(&p);
  }
}

}  // namespace

BENCHMARK(BM_Fig3bSerial)->Arg(101)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Fig3bParallel)->Arg(101)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Fig2Serial)->Arg(401)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Fig2Parallel)->Arg(401)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PrepareFig3b)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
