#include <benchmark/benchmark.h>

#include "ochain/chaining.hpp"
#include "ochain/synthetic.hpp"

using namespace ochain;

namespace {

void BM_TwoSidedWeak(benchmark::State& state) {
    const AnchorSet set = scaling_instance(7, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(chain_two_sided_weak(set).best_score);
    }
    state.SetComplexityN(state.range(0));
}

void BM_TwoSidedStrict(benchmark::State& state) {
    const AnchorSet set = scaling_instance(7, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(chain_two_sided_strict(set).best_score);
    }
    state.SetComplexityN(state.range(0));
}

void BM_OneSided(benchmark::State& state) {
    const AnchorSet set = scaling_instance(7, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(chain_one_sided(set).best_score);
    }
    state.SetComplexityN(state.range(0));
}

void BM_BruteStrict(benchmark::State& state) {
    const AnchorSet set = scaling_instance(7, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(chain_brute_strict(set).best_score);
    }
    state.SetComplexityN(state.range(0));
}

} // namespace

BENCHMARK(BM_TwoSidedWeak)->RangeMultiplier(4)->Range(1 << 10, 1 << 16)->Complexity();
BENCHMARK(BM_TwoSidedStrict)->RangeMultiplier(4)->Range(1 << 10, 1 << 16)->Complexity();
BENCHMARK(BM_OneSided)->RangeMultiplier(4)->Range(1 << 10, 1 << 16)->Complexity();
BENCHMARK(BM_BruteStrict)->RangeMultiplier(4)->Range(1 << 8, 1 << 12)->Complexity(benchmark::oNSquared);
