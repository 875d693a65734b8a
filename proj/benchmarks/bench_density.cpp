#include <benchmark/benchmark.h>

#include "prbh/density.hpp"

namespace {

void BM_DensityCurve(benchmark::State& state) {
    const int steps = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(prbh::density_curve(5, steps));
    }
}
BENCHMARK(BM_DensityCurve)->Arg(200)->Arg(2000);

void BM_FitDistance(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(prbh::fit_distance(3, 200));
    }
}
BENCHMARK(BM_FitDistance);

}  // namespace

BENCHMARK_MAIN();
