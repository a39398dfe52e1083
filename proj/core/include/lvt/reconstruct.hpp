#pragma once

#include <string>

#include "lvt/circular.hpp"
#include "lvt/cutoffs.hpp"
#include "lvt/field.hpp"
#include "lvt/sonar_data.hpp"

namespace lvt {

struct CircularReconstructionOptions {
    AngularRange range;
    Cutoff cutoff = HardCutoff{};
    RadialFilterOrder order = RadialFilterOrder::second;
    /// Input already holds p = 1/2 d/dr M f: skip the derivative, scale by 2. Order 1 only.
    bool pressure_mode = false;
};

/// Lambda-type reconstruction M* P K M f from circular-mean (or pressure) data:
/// cutoff, then radial filter, then backprojection onto `grid`.
ScalarField2D reconstruct_circular(const Sinogram& sino, const CircularReconstructionOptions& options,
                                   const GridSpec2D& grid);

struct SonarReconstructionOptions {
    CenterSet centers = CenterSet::rectangle({0.0, 0.0}, {1.0, 1.0});
    Cutoff cutoff = HardCutoff{};
    RadialFilterOrder order = RadialFilterOrder::second;
};

/// Sonar analogue on a vertical slice.
ScalarField2D reconstruct_sonar(const SonarData& data, const SonarReconstructionOptions& options,
                                const SlicePlane& plane, const GridSpec2D& grid);

/// Named parameter sets for the demo experiments.
struct CircularPreset {
    std::string name;
    AngularRange range;
    int nphi = 0;
    int nr = 0;
    double rmax = 2.0;
    double eps = 0.0;  ///< smooth cutoff width, radians
    int grid_n = 0;
    RadialFilterOrder order = RadialFilterOrder::second;
};

/// fig1: [25 deg, 155 deg], 361 projections, 725 radii, 512^2.
/// fig3: [0 deg, 180 deg], 750 projections, 725 radii, eps = 18 deg, 512^2.
CircularPreset circular_preset(const std::string& name);

struct SonarPreset {
    CenterSet centers = CenterSet::rectangle({0.0, 0.0}, {3.0, 3.0});
    SonarGrid data_grid;
    SlicePlane plane;
    GridSpec2D slice_grid;
    double eps = 0.75;
    RadialFilterOrder order = RadialFilterOrder::second;
};

/// Desk-scale sonar configuration: K = [-3,3]^2, 33 x 33 centres, 128 radii,
/// slice x1 = 0.125 on a 128^2 raster.
SonarPreset sonar_preset();

}  // namespace lvt
