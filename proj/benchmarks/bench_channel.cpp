#include <benchmark/benchmark.h>

#include "prbh/channel.hpp"

namespace {

void BM_ClonerProbability(benchmark::State& state) {
    const prbh::MassIndicator z(0.5);
    int n = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(prbh::cloner_probability(z, n));
        n = n % 64 + 1;
    }
}
BENCHMARK(BM_ClonerProbability);

void BM_BuildDistribution(benchmark::State& state) {
    const prbh::MassIndicator z(state.range(0) / 100.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(prbh::build_distribution(z, 1e-9));
    }
}
BENCHMARK(BM_BuildDistribution)->Arg(10)->Arg(50)->Arg(90)->Arg(99);

void BM_QuantumCapacity(benchmark::State& state) {
    const prbh::MassIndicator z(state.range(0) / 100.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(prbh::quantum_capacity(z, 1e-12));
    }
}
BENCHMARK(BM_QuantumCapacity)->Arg(10)->Arg(50)->Arg(90)->Arg(99);

}  // namespace
