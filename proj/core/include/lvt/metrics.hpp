#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "lvt/cutoffs.hpp"
#include "lvt/field.hpp"
#include "lvt/microlocal.hpp"
#include "lvt/phantoms.hpp"

namespace lvt {

/// sqrt(mean v^2) over the marked pixels. Throws InvalidArgument on an empty
/// mask or mismatched grids.
double band_rms(const ScalarField2D& field, const Mask2D& mask);

inline constexpr double kMaxReductionRatio = 1e6;

/// band_rms(hard) / band_rms(smooth), capped at kMaxReductionRatio.
/// Two fields that vanish on the mask compare as 1.
double artifact_reduction_ratio(const ScalarField2D& hard, const ScalarField2D& smooth, const Mask2D& artifact_mask);

struct EdgeSample {
    int disc = 0;
    double boundary_angle = 0.0;  ///< angle of the outward normal, radians
    bool visible = false;
    double gradient = 0.0;  ///< |directional difference| across the edge
};

/// n_samples boundary points per disc, uniform in boundary angle. The
/// gradient is a central difference along the outward normal with a step of
/// one pixel, reading the nearest pixel on each side. Requires n_samples >= 16.
std::vector<EdgeSample> edge_visibility_profile(const ScalarField2D& field, const DiscPhantom2D& phantom,
                                                const AngularRange& range, int n_samples);

/// Angle between the line spanned by `direction_angle` and the closest of the
/// directions a, b (lines are unoriented, so the result is in [0, pi/2]).
double angular_distance_to_endpoints(double direction_angle, const AngularRange& range);

/// Mean gradient over visible samples whose normal is further than
/// `min_distance` from the endpoint directions. NaN when no sample qualifies.
double mean_visible_edge_gradient(const std::vector<EdgeSample>& profile, const AngularRange& range,
                                  double min_distance);

using MetricRows = std::vector<std::pair<std::string, double>>;

/// CSV with header "metric,value".
void write_metrics_csv(const MetricRows& rows, const std::filesystem::path& path);
MetricRows read_metrics_csv(const std::filesystem::path& path);
/// CSV with header "disc,boundary_angle,visible,gradient".
void write_edge_profile_csv(const std::vector<EdgeSample>& profile, const std::filesystem::path& path);

}  // namespace lvt
