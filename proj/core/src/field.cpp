#include "lvt/field.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lvt/error.hpp"
#include "lvt/sonar_data.hpp"

namespace lvt {

namespace {

bool finite_all(std::span<const double> v) {
    return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
}

}  // namespace

GridSpec2D GridSpec2D::square(int n, double half) { return {n, n, -half, half, -half, half}; }

void GridSpec2D::validate() const {
    if (nx < 2 || ny < 2) throw InvalidArgument("grid needs nx >= 2 and ny >= 2");
    if (!(xmax > xmin) || !(ymax > ymin)) throw InvalidArgument("grid extent is degenerate");
    if (!std::isfinite(xmin) || !std::isfinite(xmax) || !std::isfinite(ymin) || !std::isfinite(ymax))
        throw InvalidArgument("grid extent is not finite");
}

ScalarField2D::ScalarField2D(GridSpec2D grid) : grid_(grid), values_(grid.size(), 0.0) { grid_.validate(); }

ScalarField2D::ScalarField2D(GridSpec2D grid, std::vector<double> values) : grid_(grid), values_(std::move(values)) {
    grid_.validate();
    if (values_.size() != grid_.size())
        throw InvalidArgument("field has " + std::to_string(values_.size()) + " values, grid needs " +
                              std::to_string(grid_.size()));
}

double ScalarField2D::interpolate(Vec2 p) const {
    const double fx = (p.x - grid_.xmin) / grid_.dx() - 0.5;
    const double fy = (p.y - grid_.ymin) / grid_.dy() - 0.5;
    if (!(fx > -1.0) || !(fy > -1.0) || !(fx < grid_.nx) || !(fy < grid_.ny)) return 0.0;
    const int i0 = static_cast<int>(std::floor(fx));
    const int j0 = static_cast<int>(std::floor(fy));
    const double wx = fx - i0;
    const double wy = fy - j0;
    auto sample = [&](int i, int j) {
        if (i < 0 || j < 0 || i >= grid_.nx || j >= grid_.ny) return 0.0;
        return values_[grid_.index(i, j)];
    };
    return (1.0 - wy) * ((1.0 - wx) * sample(i0, j0) + wx * sample(i0 + 1, j0)) +
           wy * ((1.0 - wx) * sample(i0, j0 + 1) + wx * sample(i0 + 1, j0 + 1));
}

bool ScalarField2D::all_finite() const { return finite_all(values_); }

void SinogramGrid::validate() const {
    if (nphi < 2 || nr < 2) throw InvalidArgument("sinogram needs nphi >= 2 and nr >= 2");
    if (!(rmax > 0.0)) throw InvalidArgument("sinogram needs rmax > 0");
    const double span = phi1 - phi0;
    if (!(span >= 0.0) || span > kTwoPi * (1.0 + 1e-12))
        throw InvalidArgument("sinogram angular span must lie in [0, 2 pi]");
}

bool SinogramGrid::is_full_wrap() const { return std::abs((phi1 - phi0) - kTwoPi) <= 1e-12 * kTwoPi; }

std::vector<double> SinogramGrid::angular_weights() const {
    std::vector<double> w(static_cast<std::size_t>(nphi), dphi());
    w.front() *= 0.5;
    w.back() *= 0.5;
    return w;
}

Sinogram::Sinogram(SinogramGrid grid) : grid_(grid), values_(grid.size(), 0.0) { grid_.validate(); }

Sinogram::Sinogram(SinogramGrid grid, std::vector<double> values) : grid_(grid), values_(std::move(values)) {
    grid_.validate();
    if (values_.size() != grid_.size())
        throw InvalidArgument("sinogram has " + std::to_string(values_.size()) + " values, grid needs " +
                              std::to_string(grid_.size()));
}

bool Sinogram::all_finite() const { return finite_all(values_); }

void SonarGrid::validate() const {
    if (ny1 < 2 || ny2 < 2 || nr < 2) throw InvalidArgument("sonar grid counts must be >= 2");
    if (!(rmax > 0.0)) throw InvalidArgument("sonar grid needs rmax > 0");
    if (!(y1max > y1min) || !(y2max > y2min)) throw InvalidArgument("sonar centre box is degenerate");
}

SonarData::SonarData(SonarGrid grid) : grid_(grid), values_(grid.size(), 0.0) { grid_.validate(); }

SonarData::SonarData(SonarGrid grid, std::vector<double> values) : grid_(grid), values_(std::move(values)) {
    grid_.validate();
    if (values_.size() != grid_.size())
        throw InvalidArgument("sonar data has " + std::to_string(values_.size()) + " values, grid needs " +
                              std::to_string(grid_.size()));
}

bool SonarData::all_finite() const { return finite_all(values_); }

void SlicePlane::validate() const {
    if (axis != 1 && axis != 2) throw InvalidArgument("slice axis must be 1 or 2");
    if (!std::isfinite(offset)) throw InvalidArgument("slice offset must be finite");
}

}  // namespace lvt
