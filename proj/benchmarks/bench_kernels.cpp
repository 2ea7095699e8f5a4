#include <benchmark/benchmark.h>

#include "finearith/divisor.hpp"
#include "finearith/quadform.hpp"
#include "finearith/series.hpp"
#include "finearith/verify.hpp"

using namespace finearith;

static void BM_FineProduct(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(fine_product(7, 3, order));
}
BENCHMARK(BM_FineProduct)->Arg(500)->Arg(2000)->Arg(8000);

static void BM_SignedSeries(benchmark::State& state) {
    const FineParams params(7, 3);
    const int order = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(signed_series(params, order));
}
BENCHMARK(BM_SignedSeries)->Arg(500)->Arg(5000)->Arg(50000);

static void BM_SeriesSquare(benchmark::State& state) {
    const PowerSeries s = fine_product(7, 3, static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(square(s));
}
BENCHMARK(BM_SeriesSquare)->Arg(500)->Arg(2000);

static void BM_ExcessTable(benchmark::State& state) {
    const std::int64_t limit = state.range(0);
    for (auto _ : state)
        benchmark::DoNotOptimize(excess_table(limit, 3, 14));
}
BENCHMARK(BM_ExcessTable)->Arg(10000)->Arg(100000);

static void BM_Fine2Table(benchmark::State& state) {
    const FineParams params(7, 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(fine2_table(params, state.range(0)));
}
BENCHMARK(BM_Fine2Table)->Arg(1000)->Arg(5000);

static void BM_VerifyThm2(benchmark::State& state) {
    const FineParams params(7, 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_thm2(params, state.range(0)));
}
BENCHMARK(BM_VerifyThm2)->Arg(200)->Arg(500);

static void BM_AndrewsProduct(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(andrews_product(n, 2 * n + 2));
}
BENCHMARK(BM_AndrewsProduct)->Arg(20)->Arg(40);

BENCHMARK_MAIN();
