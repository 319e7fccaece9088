// Serial reference against the OpenMP suite runner, plus the two heaviest
// kernels on their own.

#include <benchmark/benchmark.h>

#include "lgid/catalog.hpp"
#include "lgid/quadrature.hpp"
#include "lgid/series_engine.hpp"
#include "lgid/specfun.hpp"

namespace {

lgid::SuiteOptions options(int jobs) {
    lgid::SuiteOptions o;
    o.jobs = jobs;
    return o;
}

void BM_SuiteSerial(benchmark::State& state) {
    const auto& cat = lgid::Catalog::builtin();
    for (auto _ : state) benchmark::DoNotOptimize(lgid::run_suite_serial(cat, options(1)));
}

void BM_SuiteParallel(benchmark::State& state) {
    const auto& cat = lgid::Catalog::builtin();
    auto o = options(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(lgid::run_suite(cat, o));
}

void BM_CiLattice(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(lgid::sum_ci_lattice(2 * 3.141592653589793, 2, false));
}

void BM_LogGammaQuadrature(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(lgid::integrate([](double x) { return lgid::log_gamma(x).value; }, 0.0, 1.0));
}

}  // namespace

BENCHMARK(BM_SuiteSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SuiteParallel)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_CiLattice)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_LogGammaQuadrature)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
