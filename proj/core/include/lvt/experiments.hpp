#pragma once

// End-to-end artifact experiments: simulate limited data, reconstruct with a
// hard and a smooth cutoff, predict the artifact curves and measure energy in
// the predicted tubes against a control tube. Shared by the CLI demos and the
// acceptance suite.

#include "lvt/cutoffs.hpp"
#include "lvt/field.hpp"
#include "lvt/metrics.hpp"
#include "lvt/microlocal.hpp"
#include "lvt/phantoms.hpp"
#include "lvt/reconstruct.hpp"
#include "lvt/sonar_data.hpp"

namespace lvt {

struct PatArtifactConfig {
    DiscPhantom2D phantom;
    AngularRange range;
    int nphi = 750;
    int nr = 256;
    double rmax = 2.0;
    double eps = deg_to_rad(18.0);
    RadialFilterOrder order = RadialFilterOrder::second;
    GridSpec2D grid = GridSpec2D::square(256);
    /// Half-width of artifact and control tubes, scene units.
    double tube = 1.5 * (2.0 / 256);
    /// Half-width of the band around phantom boundaries removed from every tube.
    double edge_exclusion = 0.1;
    int edge_samples = 360;
};

struct PatArtifactReport {
    Sinogram data;
    ScalarField2D phantom_image;
    ScalarField2D hard;
    ScalarField2D smooth;
    ArtifactCurveSet curves;
    Mask2D artifact_mask;  ///< predicted tubes minus the edge band
    Mask2D control_mask;   ///< 90 degree rotated tubes minus predicted tubes and edge band
    Mask2D edge_mask;
    double artifact_rms = 0.0;
    double control_rms = 0.0;
    double localization_ratio = 0.0;  ///< artifact_rms / control_rms on the hard reconstruction
    double reduction_ratio = 0.0;     ///< artifact_reduction_ratio(hard, smooth)
    std::vector<EdgeSample> hard_profile;
    std::vector<EdgeSample> smooth_profile;
    double hard_edge_gradient = 0.0;  ///< mean over normals > 2 eps from the endpoint directions
    double smooth_edge_gradient = 0.0;

    MetricRows metrics() const;
};

/// Analytic data over [a, b] (nphi samples), reconstruction with both cutoffs.
PatArtifactReport run_pat_artifact_experiment(const PatArtifactConfig& config);

struct SonarArtifactConfig {
    BallPhantom3D phantom;
    CenterSet centers = CenterSet::rectangle({0.0, 0.0}, {3.0, 3.0});
    int n_centers = 33;  ///< per axis over the bounding box of K
    int nr = 128;
    double rmax = 6.0;
    SlicePlane plane{1, 0.125};
    GridSpec2D slice_grid;
    double eps = 0.75;
    RadialFilterOrder order = RadialFilterOrder::second;
    /// Tube half-width; <= 0 selects 1.5 pixels (larger pixel side).
    double tube = 0.0;
    double edge_exclusion = 0.1;
    int n_boundary = 1024;
};

struct SonarArtifactReport {
    SonarData data;
    ScalarField2D hard;
    ScalarField2D smooth;
    ArtifactCurveSet curves;
    Mask2D predicted_mask;  ///< every predicted tube meeting the slice
    Mask2D artifact_mask;   ///< predicted minus the edge band
    Mask2D control_mask;    ///< tubes of the curves rotated 90 degrees about the x3 axis, minus predicted tubes and edge band
    Mask2D edge_mask;
    double artifact_rms = 0.0;
    double control_rms = 0.0;
    double localization_ratio = 0.0;
    double reduction_ratio = 0.0;
    std::size_t predicted_area = 0;  ///< pixel count of predicted_mask

    MetricRows metrics() const;
};

/// Analytic spherical means on a centre lattice over K's bounding box.
SonarArtifactReport run_sonar_artifact_experiment(const SonarArtifactConfig& config);

/// Two-ball desk-scale scene: balls at (0,0,1.5) and (0,0.5,2), radius 0.5.
BallPhantom3D desk_sonar_phantom();
/// Config for the desk-scale scene on the given centre set.
SonarArtifactConfig desk_sonar_config(const CenterSet& centers);

}  // namespace lvt
