// Serial reference vs OpenMP paths. Argument 0 = serial, 1 = parallel.

#include <benchmark/benchmark.h>

#include <complex>
#include <vector>

#include "abh/extremal.hpp"
#include "abh/poisson.hpp"
#include "abh/verify.hpp"

namespace {

abh::Execution exec_of(const benchmark::State& state) {
    return state.range(0) == 0 ? abh::Execution::serial : abh::Execution::parallel;
}

void BM_ExtendOnGrid(benchmark::State& state) {
    const abh::ParamPair params({0.5, 0.2}, {1.0, -0.1});
    const auto phi = abh::BoundaryFunction::random_trig(8, 7);
    std::vector<abh::DiskPoint> points;
    for (int i = 0; i < 32; ++i) {
        for (int j = 0; j < 32; ++j) {
            points.emplace_back(std::polar(0.95 * (i + 0.5) / 32.0, 2.0 * abh::kPi * j / 32.0));
        }
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(abh::extend_on_grid(params, phi, points, {}, exec_of(state)));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long>(points.size()));
}
BENCHMARK(BM_ExtendOnGrid)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_CheckDfzp(benchmark::State& state) {
    const abh::ParamPair params(0.5, 0.5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(abh::check_dfzp(params, 2.0, 100, 42, {}, exec_of(state)));
    }
}
BENCHMARK(BM_CheckDfzp)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_RandomSearch(benchmark::State& state) {
    const abh::ParamPair params(0.0, 0.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(abh::random_search(params, 4.0, 50, 8, 42, exec_of(state)));
    }
}
BENCHMARK(BM_RandomSearch)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
