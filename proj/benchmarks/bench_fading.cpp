#include <benchmark/benchmark.h>

#include <vector>

#include "prbh/fading.hpp"

namespace {

void BM_PhasorSum(benchmark::State& state) {
    prbh::RngStream rng(42, 0);
    const int j = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(prbh::sample_phasor_sum(j, 1.0, rng));
    }
}
BENCHMARK(BM_PhasorSum)->Arg(2)->Arg(8)->Arg(64);

void BM_ComplexGaussian(benchmark::State& state) {
    prbh::RngStream rng(42, 0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(prbh::sample_complex_gaussian(1.0, rng));
    }
}
BENCHMARK(BM_ComplexGaussian);

void BM_KsStatistic(benchmark::State& state) {
    prbh::RngStream rng(42, 0);
    std::vector<double> values(static_cast<std::size_t>(state.range(0)));
    for (auto& v : values) v = std::abs(prbh::sample_complex_gaussian(1.0, rng));
    const auto model = prbh::FitModel::rayleigh(1.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(prbh::ks_statistic(values, model));
    }
}
BENCHMARK(BM_KsStatistic)->Arg(1000)->Arg(100000);

void BM_CoefficientVector(benchmark::State& state) {
    prbh::RngStream rng(42, 0);
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(prbh::build_coefficient_vector(0.1875, n, 1.0, rng));
    }
}
BENCHMARK(BM_CoefficientVector)->Arg(2)->Arg(16)->Arg(128);

}  // namespace
