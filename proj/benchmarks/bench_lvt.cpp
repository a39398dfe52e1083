#include <benchmark/benchmark.h>

#include "lvt/circular.hpp"
#include "lvt/microlocal.hpp"
#include "lvt/phantoms.hpp"
#include "lvt/reconstruct.hpp"
#include "lvt/spherical.hpp"

using namespace lvt;

namespace {

const DiscPhantom2D& disc() {
    static const DiscPhantom2D p({{{0.0, 0.0}, 0.5, 1.0}});
    return p;
}

const BallPhantom3D& balls() {
    static const BallPhantom3D p({{{0.0, 0.0, 1.5}, 0.5, 1.0}, {{0.0, 0.5, 2.0}, 0.5, 1.0}});
    return p;
}

void BM_ForwardCircularNumeric(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto field = rasterize(disc(), GridSpec2D::square(n));
    const SinogramGrid g{0.0, kTwoPi, 180, 2.0, 256};
    for (auto _ : state) benchmark::DoNotOptimize(forward_circular_numeric(field, g, 512));
}
BENCHMARK(BM_ForwardCircularNumeric)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_BackprojectCircular(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const SinogramGrid g{0.0, kPi, 361, 2.0, 256};
    const auto sino = analytic_circular_sinogram(disc(), g);
    for (auto _ : state) benchmark::DoNotOptimize(backproject_circular(sino, GridSpec2D::square(n)));
    state.SetItemsProcessed(state.iterations() * n * n * g.nphi);
}
BENCHMARK(BM_BackprojectCircular)->Arg(128)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

void BM_ReconstructSonar(benchmark::State& state) {
    const auto preset = sonar_preset();
    const auto data = analytic_sonar_data(balls(), preset.data_grid);
    SonarReconstructionOptions opts;
    opts.centers = preset.centers;
    opts.order = preset.order;
    if (state.range(0) != 0) opts.cutoff = SmoothCutoff{preset.eps};
    for (auto _ : state) benchmark::DoNotOptimize(reconstruct_sonar(data, opts, preset.plane, preset.slice_grid));
}
BENCHMARK(BM_ReconstructSonar)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_SonarCurvesAndMask(benchmark::State& state) {
    const auto preset = sonar_preset();
    const int n_boundary = static_cast<int>(state.range(0));
    for (auto _ : state) {
        const auto curves = predicted_artifact_curves_sonar(balls(), preset.centers, n_boundary);
        benchmark::DoNotOptimize(rasterize_mask(curves, preset.slice_grid, 1.5 * preset.slice_grid.dx(), preset.plane));
    }
}
BENCHMARK(BM_SonarCurvesAndMask)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
