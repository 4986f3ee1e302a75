// Serial reference vs OpenMP sweep on a reduced canonical sweep.

#include <benchmark/benchmark.h>

#include "afd/harness.hpp"

namespace {

afd::SweepSpec bench_spec() {
    afd::SweepSpec s;
    s.excess_values = {0, 25, 50};
    s.trials = 50;
    return s;
}

void BM_SweepSerial(benchmark::State& state) {
    const auto cfg = afd::ScenarioConfig::defaults();
    const auto spec = bench_spec();
    for (auto _ : state) benchmark::DoNotOptimize(afd::run_sweep_serial(spec, cfg));
    state.SetItemsProcessed(state.iterations() * 4 * 3 * 50);
}

void BM_SweepParallel(benchmark::State& state) {
    const auto cfg = afd::ScenarioConfig::defaults();
    const auto spec = bench_spec();
    const int workers = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(afd::run_sweep(spec, cfg, workers));
    state.SetItemsProcessed(state.iterations() * 4 * 3 * 50);
}

}  // namespace

BENCHMARK(BM_SweepSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SweepParallel)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
