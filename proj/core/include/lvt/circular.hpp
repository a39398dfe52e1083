#pragma once

#include "lvt/field.hpp"
#include "lvt/sonar_data.hpp"

namespace lvt {

/// Circular means of a raster over circles centred on S^1.
///
/// g(phi_i, r_k) = (1/n_arc) sum_m f~(theta(phi_i) + r_k (cos psi_m, sin psi_m)),
/// psi_m = 2 pi m / n_arc, with f~ the bilinear interpolant of the field (zero
/// outside). Requires n_arc >= 8.
Sinogram forward_circular_numeric(const ScalarField2D& field, const SinogramGrid& grid, int n_arc);

/// Discrete dual transform:
///   M*g(x) = sum_i w_i g~(phi_i, |x - theta(phi_i)|) / (2 pi |x - theta(phi_i)|)
/// with g~ linear in r (zero outside [dr, rmax]) and w_i the sinogram's angular weights.
ScalarField2D backproject_circular(const Sinogram& sino, const GridSpec2D& grid);

enum class RadialFilterOrder { first = 1, second = 2 };

/// order 1: d/dr by central differences, one-sided two-point differences at the ends.
/// order 2: -d^2/dr^2 by the three-point stencil, end samples copy their neighbour.
/// Requires nr >= 3.
Sinogram radial_filter(const Sinogram& sino, RadialFilterOrder order);
SonarData radial_filter(const SonarData& data, RadialFilterOrder order);

/// Parse 1 or 2; anything else throws InvalidArgument.
RadialFilterOrder radial_filter_order(int order);

}  // namespace lvt
