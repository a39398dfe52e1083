#pragma once

#include <functional>
#include <vector>

#include "lvt/field.hpp"
#include "lvt/phantoms.hpp"
#include "lvt/sonar_data.hpp"

namespace lvt {

/// Near-uniform deterministic point set on S^2.
///
/// Fibonacci points are folded into the positive octant and then unfolded by
/// all eight coordinate sign flips, so the set is closed under x1 -> -x1,
/// x2 -> -x2, x3 -> -x3 and hence under u -> -u. The returned size is n
/// rounded up to a multiple of 8.
std::vector<Vec3> symmetric_sphere_points(int n);

/// Spherical means of a point function by equal-weight quadrature over
/// symmetric_sphere_points(n_sph). Requires n_sph >= 16.
SonarData forward_spherical_numeric(const std::function<double(Vec3)>& f, const SonarGrid& grid, int n_sph);
SonarData forward_spherical_numeric(const BallPhantom3D& phantom, const SonarGrid& grid, int n_sph);

/// Dual spherical transform evaluated on a vertical slice:
///   M_S* g(x) = dy1 dy2 sum_y g~(y, |x - (y,0)|) / (4 pi |x - (y,0)|^2).
/// The slice raster must lie in x3 > 0 (ymin > 0), otherwise InvalidArgument.
ScalarField2D backproject_spherical_slice(const SonarData& data, const SlicePlane& plane, const GridSpec2D& grid);

}  // namespace lvt
