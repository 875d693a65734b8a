#include <benchmark/benchmark.h>

#include "prbh/states.hpp"

namespace {

void BM_Su2Generators(benchmark::State& state) {
    const int dim = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(prbh::su2_generators(dim));
    }
}
BENCHMARK(BM_Su2Generators)->Arg(2)->Arg(16)->Arg(64)->Arg(256);

void BM_ChannelApply(benchmark::State& state) {
    const prbh::MassIndicator z(state.range(0) / 100.0);
    const auto n = prbh::BlochVector::unit(0.6, 0.0, 0.8);
    for (auto _ : state) {
        benchmark::DoNotOptimize(prbh::channel_apply(n, z, 1e-9));
    }
}
BENCHMARK(BM_ChannelApply)->Arg(10)->Arg(50)->Arg(90);

void BM_BlockSpectrum(benchmark::State& state) {
    const auto n = prbh::BlochVector::unit(0.6, 0.0, 0.8);
    const auto block = prbh::xi_block(static_cast<int>(state.range(0)), n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(prbh::tridiagonal_hermitian_eigenvalues(block));
    }
}
BENCHMARK(BM_BlockSpectrum)->Arg(8)->Arg(64)->Arg(256);

}  // namespace
