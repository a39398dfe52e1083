#include "lvt/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lvt/error.hpp"

namespace lvt {

namespace {

double ratio_or_nan(const ScalarField2D& f, const Mask2D& num, const Mask2D& den) {
    if (num.empty() || den.empty()) return std::numeric_limits<double>::quiet_NaN();
    const double d = band_rms(f, den);
    if (d == 0.0) return kMaxReductionRatio;
    return std::min(band_rms(f, num) / d, kMaxReductionRatio);
}

double rms_or_nan(const ScalarField2D& f, const Mask2D& m) {
    return m.empty() ? std::numeric_limits<double>::quiet_NaN() : band_rms(f, m);
}

}  // namespace

MetricRows PatArtifactReport::metrics() const {
    return {{"artifact_rms", artifact_rms},
            {"control_rms", control_rms},
            {"localization_ratio", localization_ratio},
            {"artifact_reduction_ratio", reduction_ratio},
            {"hard_edge_gradient", hard_edge_gradient},
            {"smooth_edge_gradient", smooth_edge_gradient},
            {"edge_gradient_ratio", smooth_edge_gradient / hard_edge_gradient},
            {"artifact_circles", static_cast<double>(curves.count_circles())},
            {"artifact_pixels", static_cast<double>(artifact_mask.count())},
            {"control_pixels", static_cast<double>(control_mask.count())}};
}

PatArtifactReport run_pat_artifact_experiment(const PatArtifactConfig& config) {
    config.range.validate();
    PatArtifactReport rep;
    const SinogramGrid sg{config.range.a, config.range.b, config.nphi, config.rmax, config.nr};
    rep.data = analytic_circular_sinogram(config.phantom, sg);
    rep.phantom_image = rasterize(config.phantom, config.grid);

    CircularReconstructionOptions opts;
    opts.range = config.range;
    opts.order = config.order;
    opts.cutoff = HardCutoff{};
    rep.hard = reconstruct_circular(rep.data, opts, config.grid);
    opts.cutoff = SmoothCutoff{config.eps};
    rep.smooth = reconstruct_circular(rep.data, opts, config.grid);

    rep.curves = predicted_artifact_circles(config.phantom, config.range);
    rep.edge_mask = edge_tube_mask(config.phantom, config.grid, config.edge_exclusion);
    const Mask2D predicted = rasterize_mask(rep.curves, config.grid, config.tube);
    rep.artifact_mask = predicted - rep.edge_mask;
    if (!rep.curves.curves.empty())
        rep.control_mask =
            rasterize_mask(rotated(rep.curves, 0.5 * kPi), config.grid, config.tube) - predicted - rep.edge_mask;
    else
        rep.control_mask = Mask2D(config.grid);

    rep.artifact_rms = rms_or_nan(rep.hard, rep.artifact_mask);
    rep.control_rms = rms_or_nan(rep.hard, rep.control_mask);
    rep.localization_ratio = ratio_or_nan(rep.hard, rep.artifact_mask, rep.control_mask);
    rep.reduction_ratio = rep.artifact_mask.empty() ? std::numeric_limits<double>::quiet_NaN()
                                                    : artifact_reduction_ratio(rep.hard, rep.smooth, rep.artifact_mask);

    rep.hard_profile = edge_visibility_profile(rep.hard, config.phantom, config.range, config.edge_samples);
    rep.smooth_profile = edge_visibility_profile(rep.smooth, config.phantom, config.range, config.edge_samples);
    rep.hard_edge_gradient = mean_visible_edge_gradient(rep.hard_profile, config.range, 2.0 * config.eps);
    rep.smooth_edge_gradient = mean_visible_edge_gradient(rep.smooth_profile, config.range, 2.0 * config.eps);
    return rep;
}

MetricRows SonarArtifactReport::metrics() const {
    return {{"artifact_rms", artifact_rms},
            {"control_rms", control_rms},
            {"localization_ratio", localization_ratio},
            {"artifact_reduction_ratio", reduction_ratio},
            {"predicted_area", static_cast<double>(predicted_area)},
            {"artifact_arcs", static_cast<double>(curves.count_arcs())},
            {"artifact_hemispheres", static_cast<double>(curves.count_hemispheres())},
            {"artifact_pixels", static_cast<double>(artifact_mask.count())},
            {"control_pixels", static_cast<double>(control_mask.count())}};
}

SonarArtifactReport run_sonar_artifact_experiment(const SonarArtifactConfig& config) {
    const auto& grid = config.slice_grid;
    grid.validate();
    SonarArtifactReport rep;
    const auto [lo, hi] = config.centers.bounding_box();
    const SonarGrid dg{lo.x, hi.x, lo.y, hi.y, config.n_centers, config.n_centers, config.rmax, config.nr};
    rep.data = analytic_sonar_data(config.phantom, dg);

    SonarReconstructionOptions opts;
    opts.centers = config.centers;
    opts.order = config.order;
    opts.cutoff = HardCutoff{};
    rep.hard = reconstruct_sonar(rep.data, opts, config.plane, grid);
    opts.cutoff = SmoothCutoff{config.eps};
    rep.smooth = reconstruct_sonar(rep.data, opts, config.plane, grid);

    const double tube = config.tube > 0.0 ? config.tube : 1.5 * std::max(grid.dx(), grid.dy());
    rep.curves = predicted_artifact_curves_sonar(config.phantom, config.centers, config.n_boundary);
    rep.predicted_mask = rasterize_mask(rep.curves, grid, tube, config.plane);
    rep.predicted_area = rep.predicted_mask.count();
    rep.edge_mask = edge_tube_mask(config.phantom, config.plane, grid, config.edge_exclusion);
    rep.artifact_mask = rep.predicted_mask - rep.edge_mask;
    rep.control_mask =
        rasterize_mask(rotated(rep.curves, 0.5 * kPi), grid, tube, config.plane) - rep.predicted_mask - rep.edge_mask;

    rep.artifact_rms = rms_or_nan(rep.hard, rep.artifact_mask);
    rep.control_rms = rms_or_nan(rep.hard, rep.control_mask);
    rep.localization_ratio = ratio_or_nan(rep.hard, rep.artifact_mask, rep.control_mask);
    rep.reduction_ratio = rep.artifact_mask.empty() ? std::numeric_limits<double>::quiet_NaN()
                                                    : artifact_reduction_ratio(rep.hard, rep.smooth, rep.artifact_mask);
    return rep;
}

BallPhantom3D desk_sonar_phantom() {
    return BallPhantom3D({{{0.0, 0.0, 1.5}, 0.5, 1.0}, {{0.0, 0.5, 2.0}, 0.5, 1.0}});
}

SonarArtifactConfig desk_sonar_config(const CenterSet& centers) {
    const SonarPreset p = sonar_preset();
    SonarArtifactConfig c;
    c.phantom = desk_sonar_phantom();
    c.centers = centers;
    c.n_centers = p.data_grid.ny1;
    c.nr = p.data_grid.nr;
    c.rmax = p.data_grid.rmax;
    c.plane = p.plane;
    c.slice_grid = p.slice_grid;
    c.eps = p.eps;
    c.order = p.order;
    return c;
}

}  // namespace lvt
