// Parallel kernels vs their serial reference implementations.
#include <benchmark/benchmark.h>

#include "gintail/montecarlo.hpp"
#include "gintail/specfun.hpp"

using namespace gintail;

static void BM_batch_log_q_serial(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const double x = 1.21 * n;
    for (auto _ : state) benchmark::DoNotOptimize(specfun::batch_log_q_serial(n, x));
    state.SetComplexityN(n);
}
BENCHMARK(BM_batch_log_q_serial)->Arg(1000)->Arg(10000)->Arg(100000)->Complexity();

static void BM_batch_log_q_parallel(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const double x = 1.21 * n;
    for (auto _ : state) benchmark::DoNotOptimize(specfun::batch_log_q(n, x));
    state.SetComplexityN(n);
}
BENCHMARK(BM_batch_log_q_parallel)->Arg(1000)->Arg(10000)->Arg(100000)->Complexity();

static void BM_mc_radius_one_worker(benchmark::State& state) {
    TailQuery q{Beta::complex, Statistic::radius, 100, 1.1};
    for (auto _ : state)
        benchmark::DoNotOptimize(
            montecarlo::estimate_tail(q, state.range(0), 7, montecarlo::Route::kostlan, 1));
}
BENCHMARK(BM_mc_radius_one_worker)->Arg(2000)->Arg(20000);

static void BM_mc_radius_default_workers(benchmark::State& state) {
    TailQuery q{Beta::complex, Statistic::radius, 100, 1.1};
    for (auto _ : state)
        benchmark::DoNotOptimize(
            montecarlo::estimate_tail(q, state.range(0), 7, montecarlo::Route::kostlan, 0));
}
BENCHMARK(BM_mc_radius_default_workers)->Arg(2000)->Arg(20000);

BENCHMARK_MAIN();
