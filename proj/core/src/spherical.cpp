#include "lvt/spherical.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "lvt/error.hpp"

namespace lvt {

std::vector<Vec3> symmetric_sphere_points(int n) {
    if (n < 8) throw InvalidArgument("symmetric_sphere_points needs n >= 8");
    const int m = (n + 7) / 8;
    const double golden = kPi * (3.0 - std::sqrt(5.0));
    std::vector<Vec3> out;
    out.reserve(static_cast<std::size_t>(8 * m));
    for (int k = 0; k < m; ++k) {
        // Fibonacci point on the upper hemisphere, folded into the first octant.
        const double z = 1.0 - (k + 0.5) / m;
        const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
        const double t = golden * k;
        const Vec3 p{std::abs(rho * std::cos(t)), std::abs(rho * std::sin(t)), z};
        for (int s = 0; s < 8; ++s)
            out.push_back({(s & 1) ? -p.x : p.x, (s & 2) ? -p.y : p.y, (s & 4) ? -p.z : p.z});
    }
    return out;
}

SonarData forward_spherical_numeric(const std::function<double(Vec3)>& f, const SonarGrid& grid, int n_sph) {
    if (n_sph < 16) throw InvalidArgument("forward_spherical_numeric needs n_sph >= 16");
    const auto dirs = symmetric_sphere_points(n_sph);
    const double inv = 1.0 / static_cast<double>(dirs.size());
    SonarData out(grid);
    const int ncent = static_cast<int>(grid.num_centers());

#pragma omp parallel for schedule(dynamic, 1)
    for (int c = 0; c < ncent; ++c) {
        const int i1 = c / grid.ny2;
        const int i2 = c % grid.ny2;
        const Vec3 y = on_surface(grid.center(i1, i2));
        for (int k = 0; k < grid.nr; ++k) {
            const double r = grid.r(k);
            double acc = 0.0;
            for (const auto& u : dirs) acc += f(y + r * u);
            out.at(i1, i2, k) = acc * inv;
        }
    }
    return out;
}

SonarData forward_spherical_numeric(const BallPhantom3D& phantom, const SonarGrid& grid, int n_sph) {
    return forward_spherical_numeric([&phantom](Vec3 p) { return phantom.value(p); }, grid, n_sph);
}

ScalarField2D backproject_spherical_slice(const SonarData& data, const SlicePlane& plane, const GridSpec2D& grid) {
    plane.validate();
    grid.validate();
    if (!(grid.ymin > 0.0)) throw InvalidArgument("slice raster must lie in x3 > 0");
    const auto& g = data.grid();
    const double cell = g.dy1() * g.dy2();
    const double dr = g.dr();
    const double inv_4pi = 1.0 / (4.0 * kPi);
    const int ncent = static_cast<int>(g.num_centers());
    std::vector<Vec3> centers(static_cast<std::size_t>(ncent));
    for (int c = 0; c < ncent; ++c) centers[c] = on_surface(g.center(c / g.ny2, c % g.ny2));

    ScalarField2D out(grid);
    const int npix = static_cast<int>(grid.size());
#pragma omp parallel for schedule(static)
    for (int idx = 0; idx < npix; ++idx) {
        const Vec3 x = plane.to_space(grid.center(idx % grid.nx, idx / grid.nx));
        double acc = 0.0;
        for (int c = 0; c < ncent; ++c) {
            const Vec3 d = x - centers[c];
            const double r2 = dot(d, d);
            const double gv = interpolate_radial(data.profile(c / g.ny2, c % g.ny2), dr, std::sqrt(r2));
            if (gv != 0.0) acc += gv * inv_4pi / r2;
        }
        out.values()[idx] = cell * acc;
    }
    return out;
}

}  // namespace lvt
