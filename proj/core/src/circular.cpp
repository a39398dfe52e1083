#include "lvt/circular.hpp"

#include <cmath>
#include <vector>

#include "lvt/error.hpp"

namespace lvt {

Sinogram forward_circular_numeric(const ScalarField2D& field, const SinogramGrid& grid, int n_arc) {
    if (n_arc < 8) throw InvalidArgument("forward_circular_numeric needs n_arc >= 8");
    Sinogram out(grid);
    std::vector<Vec2> dirs(static_cast<std::size_t>(n_arc));
    for (int m = 0; m < n_arc; ++m) dirs[m] = unit_circle_point(kTwoPi * m / n_arc);
    const int total = grid.nphi * grid.nr;

#pragma omp parallel for schedule(dynamic, 16)
    for (int s = 0; s < total; ++s) {
        const int i = s / grid.nr;
        const int k = s % grid.nr;
        const Vec2 p = unit_circle_point(grid.phi(i));
        const double r = grid.r(k);
        double acc = 0.0;
        for (const auto& u : dirs) acc += field.interpolate(p + r * u);
        out.at(i, k) = acc / n_arc;
    }
    return out;
}

ScalarField2D backproject_circular(const Sinogram& sino, const GridSpec2D& grid) {
    const auto& sg = sino.grid();
    ScalarField2D out(grid);
    const auto w = sg.angular_weights();
    std::vector<Vec2> det(static_cast<std::size_t>(sg.nphi));
    for (int i = 0; i < sg.nphi; ++i) det[i] = unit_circle_point(sg.phi(i));
    const double dr = sg.dr();
    const double inv_2pi = 1.0 / kTwoPi;
    const int npix = static_cast<int>(grid.size());

#pragma omp parallel for schedule(static)
    for (int idx = 0; idx < npix; ++idx) {
        const Vec2 x = grid.center(idx % grid.nx, idx / grid.nx);
        double acc = 0.0;
        for (int i = 0; i < sg.nphi; ++i) {
            const double r = norm(x - det[i]);
            if (r <= 0.0) continue;
            const double g = interpolate_radial(sino.row(i), dr, r);
            if (g != 0.0) acc += w[i] * g * inv_2pi / r;
        }
        out.values()[idx] = acc;
    }
    return out;
}

RadialFilterOrder radial_filter_order(int order) {
    if (order == 1) return RadialFilterOrder::first;
    if (order == 2) return RadialFilterOrder::second;
    throw InvalidArgument("radial filter order must be 1 or 2");
}

namespace {

void filter_profile(std::span<const double> g, std::span<double> out, double dr, RadialFilterOrder order) {
    const int n = static_cast<int>(g.size());
    if (order == RadialFilterOrder::first) {
        const double h = 1.0 / (2.0 * dr);
        for (int k = 1; k < n - 1; ++k) out[k] = (g[k + 1] - g[k - 1]) * h;
        out[0] = (g[1] - g[0]) / dr;
        out[n - 1] = (g[n - 1] - g[n - 2]) / dr;
    } else {
        const double h = 1.0 / (dr * dr);
        for (int k = 1; k < n - 1; ++k) out[k] = -(g[k + 1] - 2.0 * g[k] + g[k - 1]) * h;
        out[0] = out[1];
        out[n - 1] = out[n - 2];
    }
}

}  // namespace

Sinogram radial_filter(const Sinogram& sino, RadialFilterOrder order) {
    const auto& sg = sino.grid();
    if (sg.nr < 3) throw InvalidArgument("radial_filter needs nr >= 3");
    Sinogram out(sg);
#pragma omp parallel for schedule(static)
    for (int i = 0; i < sg.nphi; ++i) filter_profile(sino.row(i), out.row(i), sg.dr(), order);
    return out;
}

SonarData radial_filter(const SonarData& data, RadialFilterOrder order) {
    const auto& g = data.grid();
    if (g.nr < 3) throw InvalidArgument("radial_filter needs nr >= 3");
    SonarData out(g);
#pragma omp parallel for schedule(static)
    for (int i1 = 0; i1 < g.ny1; ++i1)
        for (int i2 = 0; i2 < g.ny2; ++i2) filter_profile(data.profile(i1, i2), out.profile(i1, i2), g.dr(), order);
    return out;
}

}  // namespace lvt
