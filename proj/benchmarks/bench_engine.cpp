#include <dsd/decomposition.hpp>
#include <dsd/engine.hpp>
#include <dsd/fixtures.hpp>
#include <dsd/oracle.hpp>

#include <benchmark/benchmark.h>

namespace {

const dsd::Dataset& fixture() {
    static const auto ds = dsd::fixtures::paper_shaped();
    return ds;
}

void BM_SingleInterval(benchmark::State& state) {
    const auto states = dsd::derive_factor_states(fixture());
    const dsd::IntegrationSettings settings{static_cast<std::size_t>(state.range(0))};
    for (auto _ : state) benchmark::DoNotOptimize(dsd::run_dsd(states[0], states[1], settings));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SingleInterval)->Arg(1000)->Arg(16000)->Arg(128000);

void BM_Chain2000To2020(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(dsd::chain_yearly(fixture(), 2000, 2020));
}
BENCHMARK(BM_Chain2000To2020)->Unit(benchmark::kMillisecond);

void BM_Reference(benchmark::State& state) {
    const auto states = dsd::derive_factor_states(fixture());
    for (auto _ : state) {
        benchmark::DoNotOptimize(dsd::oracle::fine_step_reference(states[0], states[1], 16000 * 64));
    }
}
BENCHMARK(BM_Reference)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
