#include <benchmark/benchmark.h>

#include "prunedperm/inliers.hpp"
#include "prunedperm/pruning.hpp"

using namespace pp;

namespace {

// gap at alpha = beta via serial scan: walk until beta inliers are seen
static void BM_GapSerialScan(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    auto p = Permutation::brp(n);
    u64 k = p.size(), beta = 3 * (k / 4);
    for (auto _ : state) {
        u64 seen = 0, pos = 0;
        while (seen < beta) {
            if (p(pos) < beta) ++seen;
            ++pos;
        }
        benchmark::DoNotOptimize(pos - beta);
    }
}
BENCHMARK(BM_GapSerialScan)->DenseRange(12, 24, 4);

static void BM_GapMinimalInliers(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    auto p = Permutation::brp(n);
    u64 k = p.size(), beta = 3 * (k / 4);
    for (auto _ : state) {
        auto t = minimal_inliers(p, beta, beta);
        benchmark::DoNotOptimize(t.final_gap);
    }
}
BENCHMARK(BM_GapMinimalInliers)->DenseRange(12, 24, 4);

static void BM_PpbriFullBlock(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    auto p = Permutation::brp(n);
    u64 k = p.size(), beta = 3 * (k / 4);
    for (auto _ : state) {
        auto a = ppbri(p, 8, beta);
        benchmark::DoNotOptimize(a.data());
    }
}
BENCHMARK(BM_PpbriFullBlock)->DenseRange(12, 20, 4);

static void BM_InlBrpRecursion(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    u64 k = u64{1} << n;
    u64 a = 2 * (k / 3) + 1, b = k / 2 + 3;
    for (auto _ : state) benchmark::DoNotOptimize(inl_brp(n, a, b));
}
BENCHMARK(BM_InlBrpRecursion)->DenseRange(8, 24, 4);

static void BM_InlBruteScan(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    auto p = Permutation::brp(n);
    u64 k = p.size();
    u64 a = 2 * (k / 3) + 1, b = k / 2 + 3;
    for (auto _ : state) benchmark::DoNotOptimize(inl_brute(p, a, b));
}
BENCHMARK(BM_InlBruteScan)->DenseRange(8, 20, 4);

}  // namespace

BENCHMARK_MAIN();
