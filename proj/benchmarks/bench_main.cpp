#include <benchmark/benchmark.h>

#include <cmath>

#include "cesaro/bessel.hpp"
#include "cesaro/experiment.hpp"

namespace {

void BM_SieveVonMangoldt(benchmark::State& state) {
    auto n = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(cesaro::sieve_von_mangoldt(n));
    state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_SieveVonMangoldt)->Arg(100'000)->Arg(1'000'000);

void BM_GoldbachConvolution(benchmark::State& state) {
    auto n = state.range(0);
    auto lambda = cesaro::sieve_von_mangoldt(n);
    for (auto _ : state)
        benchmark::DoNotOptimize(cesaro::repr_counts({2, 0, {1, 1}}, n, lambda));
}
BENCHMARK(BM_GoldbachConvolution)->Arg(5'000)->Arg(20'000)->Unit(benchmark::kMillisecond);

void BM_CesaroAverage(benchmark::State& state) {
    auto n = state.range(0);
    auto lambda = cesaro::sieve_von_mangoldt(n);
    auto table = cesaro::repr_counts({1, 0, {1}}, n, lambda);
    for (auto _ : state) benchmark::DoNotOptimize(cesaro::cesaro_average(table, n, 2.0));
}
BENCHMARK(BM_CesaroAverage)->Arg(100'000)->Unit(benchmark::kMicrosecond);

void BM_BesselSeries(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(cesaro::bessel_j_series({1.5, 1.0}, 25.0));
}
BENCHMARK(BM_BesselSeries);

void BM_BesselAsymptotic(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(cesaro::bessel_j_asymptotic({1.5, 1.0}, 500.0));
}
BENCHMARK(BM_BesselAsymptotic);

void BM_ZeroSumM3(benchmark::State& state) {
    auto zeros = cesaro::load_zeros(std::string(CESARO_BENCH_DATA_DIR) + "/zeros1000.txt");
    int d = int(state.range(0));
    cesaro::TermContext ctx{{d, 0, std::vector<int>(std::size_t(d), 1)}, double(d) + 1.0,
                            state.range(1) == 0 ? 240.0 : double(state.range(1)), 40.0};
    for (auto _ : state)
        benchmark::DoNotOptimize(cesaro::eval_M3(ctx, 100000.0, zeros));
}
BENCHMARK(BM_ZeroSumM3)->Args({1, 1419})->Args({2, 240})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
