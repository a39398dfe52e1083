#include "lvt/reconstruct.hpp"

#include "lvt/error.hpp"
#include "lvt/spherical.hpp"

namespace lvt {

ScalarField2D reconstruct_circular(const Sinogram& sino, const CircularReconstructionOptions& options,
                                   const GridSpec2D& grid) {
    if (options.pressure_mode && options.order != RadialFilterOrder::first)
        throw InvalidArgument("pressure mode requires radial filter order 1");
    Sinogram cut = apply_angular_cutoff(sino, options.range, options.cutoff);
    if (options.pressure_mode) {
        for (double& v : cut.values()) v *= 2.0;
        return backproject_circular(cut, grid);
    }
    return backproject_circular(radial_filter(cut, options.order), grid);
}

ScalarField2D reconstruct_sonar(const SonarData& data, const SonarReconstructionOptions& options,
                                const SlicePlane& plane, const GridSpec2D& grid) {
    const SonarData cut = apply_center_cutoff(data, options.centers, options.cutoff);
    return backproject_spherical_slice(radial_filter(cut, options.order), plane, grid);
}

CircularPreset circular_preset(const std::string& name) {
    if (name == "fig1")
        return {"fig1", {deg_to_rad(25.0), deg_to_rad(155.0)}, 361, 725, 2.0, deg_to_rad(18.0), 512,
                RadialFilterOrder::second};
    if (name == "fig3")
        return {"fig3", {0.0, kPi}, 750, 725, 2.0, deg_to_rad(18.0), 512, RadialFilterOrder::second};
    throw InvalidArgument("unknown circular preset '" + name + "'");
}

SonarPreset sonar_preset() {
    SonarPreset p;
    p.centers = CenterSet::rectangle({0.0, 0.0}, {3.0, 3.0});
    p.data_grid = {-3.0, 3.0, -3.0, 3.0, 33, 33, 6.0, 128};
    p.plane = {1, 0.125};
    p.slice_grid = {128, 128, -3.0, 3.0, 0.1, 4.1};
    p.eps = 0.75;
    p.order = RadialFilterOrder::second;
    return p;
}

}  // namespace lvt
