#include <benchmark/benchmark.h>

#include "jp/counting.hpp"
#include "jp/genfun.hpp"
#include "jp/pochhammer.hpp"

static void BM_BivariateMul(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    jp::BivariateSeries f = jp::pochhammer_neg_inf(1, n, 2 * n);
    jp::BivariateSeries g = jp::pochhammer_finite({1, 2, 1}, 2 * n, n, 2 * n);
    for (auto _ : state) {
        auto h = f * g;
        benchmark::DoNotOptimize(h);
    }
}
BENCHMARK(BM_BivariateMul)->Arg(8)->Arg(16)->Arg(24);

static void BM_PochhammerNegInf(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto f = jp::pochhammer_neg_inf(1, n, 2 * n);
        benchmark::DoNotOptimize(f);
    }
}
BENCHMARK(BM_PochhammerNegInf)->Arg(16)->Arg(32);

static void BM_SeriesA(benchmark::State& state) {
    const int K = static_cast<int>(state.range(0));
    jp::RestrictionParams r(K);
    for (auto _ : state) {
        auto s = jp::series_A(r, r.kappa(), 12, 20);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_SeriesA)->Arg(4)->Arg(5)->Arg(7);

static void BM_EnumerateJagged(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto v = jp::enumerate_jagged(n / 2, n);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_EnumerateJagged)->Arg(12)->Arg(16);

static void BM_JaggedCounts(benchmark::State& state) {
    jp::RestrictionParams r(5);
    for (auto _ : state) {
        jp::JaggedCounts counts(r, 10, 14);
        benchmark::DoNotOptimize(counts.count_A(2, 6, 7));
    }
}
BENCHMARK(BM_JaggedCounts);

BENCHMARK_MAIN();
