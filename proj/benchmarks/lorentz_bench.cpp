#include <benchmark/benchmark.h>

#include "weyl/lorentz/deformation.hpp"

namespace {

using namespace weyl::lorentz;

OnShellPoint sample_point() {
    OnShellPoint pt;
    pt.k = {0.2, -0.1, 0.15};
    pt.omega = weyl::walk::dispersion(pt.k, pt.chirality);
    return pt;
}

void BM_DeformedBoost(benchmark::State& state) {
    const DeformationConfig cfg;
    const OnShellPoint pt = sample_point();
    const Vec3 beta(0.2, 0.1, -0.15);
    for (auto _ : state) benchmark::DoNotOptimize(deformed_boost(pt, beta, Vec3::Zero(), cfg));
}
BENCHMARK(BM_DeformedBoost);

void BM_SymmetryCheck(benchmark::State& state) {
    const DeformationConfig cfg;
    const OnShellPoint pt = sample_point();
    const Vec3 beta(0.2, 0.1, -0.15);
    for (auto _ : state) benchmark::DoNotOptimize(check_symmetry(pt, beta, Vec3::Zero(), cfg));
}
BENCHMARK(BM_SymmetryCheck);

}  // namespace
