#include <benchmark/benchmark.h>

#include "weyl/hopf/report.hpp"

namespace {

using namespace weyl::hopf;

void BM_SpacetimeTable(benchmark::State& state) {
    const CoproductModel m = CoproductModel::kappa();
    const BasisMap w = walk_basis_map();
    for (auto _ : state) benchmark::DoNotOptimize(spacetime_commutators(m, w));
}
BENCHMARK(BM_SpacetimeTable)->Unit(benchmark::kMillisecond);

void BM_PhaseTable(benchmark::State& state) {
    const CoproductModel m = CoproductModel::kappa();
    const BasisMap w = walk_basis_map();
    for (auto _ : state) benchmark::DoNotOptimize(phase_space_commutators(m, w));
}
BENCHMARK(BM_PhaseTable)->Unit(benchmark::kMillisecond);

void BM_RandomMapTrial(benchmark::State& state) {
    std::uint64_t t = 0;
    for (auto _ : state) benchmark::DoNotOptimize(lemma1_fuzz(ModelKind::Kappa, 1, t++));
}
BENCHMARK(BM_RandomMapTrial)->Unit(benchmark::kMillisecond);

void BM_KappaLimit(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(kappa_classical_limit({1e3, 1e6}));
}
BENCHMARK(BM_KappaLimit);

}  // namespace
