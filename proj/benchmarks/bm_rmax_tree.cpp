#include <benchmark/benchmark.h>

#include <random>

#include "ochain/rmax_tree.hpp"

using namespace ochain;

namespace {

std::vector<Key1D> make_keys(std::size_t n) {
    std::vector<Key1D> keys;
    keys.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        keys.push_back({static_cast<std::int64_t>(2 * i), static_cast<std::int64_t>(i)});
    }
    return keys;
}

void BM_Tree1DUpgradeQuery(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto keys = make_keys(n);
    RMaxTree1D tree(keys);
    std::mt19937_64 rng(5);
    for (auto _ : state) {
        const std::size_t i = rng() % n;
        tree.upgrade(keys[i], static_cast<std::int64_t>(rng() % 1000));
        const std::int64_t lo = static_cast<std::int64_t>(rng() % (2 * n));
        benchmark::DoNotOptimize(tree.range_max(lo, lo + static_cast<std::int64_t>(n)));
    }
}

void BM_Tree2DUpgradeQuery(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::vector<Point2D> pts;
    pts.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        pts.push_back({static_cast<std::int64_t>(i % 257),
                       static_cast<std::int64_t>(i / 257),
                       static_cast<std::int64_t>(i)});
    }
    std::sort(pts.begin(), pts.end());
    RMaxTree2D tree(pts);
    std::mt19937_64 rng(6);
    for (auto _ : state) {
        const std::size_t i = rng() % n;
        tree.upgrade(pts[i], static_cast<std::int64_t>(rng() % 1000));
        const std::int64_t plo = static_cast<std::int64_t>(rng() % 257);
        const std::int64_t slo = static_cast<std::int64_t>(rng() % (n / 257 + 1));
        benchmark::DoNotOptimize(tree.range_max(plo, plo + 64, slo, slo + 64));
    }
}

} // namespace

BENCHMARK(BM_Tree1DUpgradeQuery)->RangeMultiplier(8)->Range(1 << 8, 1 << 17);
BENCHMARK(BM_Tree2DUpgradeQuery)->RangeMultiplier(8)->Range(1 << 8, 1 << 17);
