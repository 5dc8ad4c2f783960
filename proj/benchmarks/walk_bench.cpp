#include <benchmark/benchmark.h>

#include "weyl/walk/lattice.hpp"
#include "weyl/walk/walk.hpp"

namespace {

using namespace weyl::walk;

void BM_WalkOperator(benchmark::State& state) {
    const WaveVector k(0.3, -0.7, 1.1);
    for (auto _ : state) benchmark::DoNotOptimize(walk_operator_power(k, Chirality::Plus, 7));
}
BENCHMARK(BM_WalkOperator);

void BM_FftStep(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const LatticeState psi = gaussian_packet(n, Chirality::Plus, {0.6, 0.3, 0.0}, 0.1, {n / 2.0, n / 2.0, n / 2.0});
    for (auto _ : state) benchmark::DoNotOptimize(step(psi, Chirality::Plus, 1));
    state.SetItemsProcessed(state.iterations() * static_cast<long>(psi.sites()));
}
BENCHMARK(BM_FftStep)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_ShiftStep(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const LatticeState psi = gaussian_packet(n, Chirality::Plus, {0.6, 0.3, 0.0}, 0.1, {n / 2.0, n / 2.0, n / 2.0});
    for (auto _ : state) benchmark::DoNotOptimize(step_position_space(psi, Chirality::Plus));
    state.SetItemsProcessed(state.iterations() * static_cast<long>(psi.sites()));
}
BENCHMARK(BM_ShiftStep)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

}  // namespace
