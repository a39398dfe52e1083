#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "lvt/geometry.hpp"

namespace lvt {

/// Raster on the physical rectangle [xmin,xmax] x [ymin,ymax].
///
/// Samples sit at pixel centers; pixel (i, j) has center
/// (xmin + (i + 0.5) dx, ymin + (j + 0.5) dy). Index j runs along y.
struct GridSpec2D {
    int nx = 0;
    int ny = 0;
    double xmin = 0.0;
    double xmax = 0.0;
    double ymin = 0.0;
    double ymax = 0.0;

    /// n x n grid over [-half, half]^2.
    static GridSpec2D square(int n, double half = 1.0);

    /// Throws InvalidArgument unless nx, ny >= 2 and the extent is non-degenerate.
    void validate() const;

    double dx() const { return (xmax - xmin) / nx; }
    double dy() const { return (ymax - ymin) / ny; }
    double pixel_area() const { return dx() * dy(); }
    double x_center(int i) const { return xmin + (i + 0.5) * dx(); }
    double y_center(int j) const { return ymin + (j + 0.5) * dy(); }
    Vec2 center(int i, int j) const { return {x_center(i), y_center(j)}; }
    std::size_t size() const { return static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny); }
    std::size_t index(int i, int j) const {
        return static_cast<std::size_t>(j) * static_cast<std::size_t>(nx) + static_cast<std::size_t>(i);
    }

    bool operator==(const GridSpec2D&) const = default;
};

/// Real raster, row-major (row j holds all i at fixed y).
class ScalarField2D {
public:
    ScalarField2D() = default;
    explicit ScalarField2D(GridSpec2D grid);
    ScalarField2D(GridSpec2D grid, std::vector<double> values);

    const GridSpec2D& grid() const { return grid_; }
    std::span<const double> values() const& { return values_; }
    std::span<double> values() & { return values_; }
    std::vector<double> values() && { return std::move(values_); }

    double at(int i, int j) const { return values_[grid_.index(i, j)]; }
    double& at(int i, int j) { return values_[grid_.index(i, j)]; }

    /// Bilinear interpolation between pixel centers; zero outside the sampled lattice.
    double interpolate(Vec2 p) const;

    bool all_finite() const;

private:
    GridSpec2D grid_;
    std::vector<double> values_;
};

/// Uniform (phi, r) sampling of circular-mean data.
///
/// phi_i = phi0 + i * dphi with dphi = (phi1 - phi0) / (nphi - 1);
/// r_k = (k + 1) * dr with dr = rmax / nr, so r = 0 is never sampled.
struct SinogramGrid {
    double phi0 = 0.0;
    double phi1 = kTwoPi;
    int nphi = 0;
    double rmax = 0.0;
    int nr = 0;

    void validate() const;

    double dphi() const { return (phi1 - phi0) / (nphi - 1); }
    double dr() const { return rmax / nr; }
    double phi(int i) const { return phi0 + i * dphi(); }
    double r(int k) const { return (k + 1) * dr(); }
    /// True when the samples cover a whole turn (phi1 - phi0 == 2 pi).
    bool is_full_wrap() const;
    std::size_t size() const { return static_cast<std::size_t>(nphi) * static_cast<std::size_t>(nr); }

    /// Quadrature weights over phi. Trapezoid rule; on a full turn this is the
    /// periodic rectangle rule since phi0 and phi1 name the same detector.
    std::vector<double> angular_weights() const;

    bool operator==(const SinogramGrid&) const = default;
};

/// g(phi_i, r_k), stored as values[i * nr + k].
class Sinogram {
public:
    Sinogram() = default;
    explicit Sinogram(SinogramGrid grid);
    Sinogram(SinogramGrid grid, std::vector<double> values);

    const SinogramGrid& grid() const { return grid_; }
    std::span<const double> values() const& { return values_; }
    std::span<double> values() & { return values_; }
    std::vector<double> values() && { return std::move(values_); }

    double at(int i, int k) const { return values_[index(i, k)]; }
    double& at(int i, int k) { return values_[index(i, k)]; }
    std::span<const double> row(int i) const {
        return std::span<const double>(values_).subspan(static_cast<std::size_t>(i) * grid_.nr, grid_.nr);
    }
    std::span<double> row(int i) {
        return std::span<double>(values_).subspan(static_cast<std::size_t>(i) * grid_.nr, grid_.nr);
    }

    bool all_finite() const;

private:
    std::size_t index(int i, int k) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(grid_.nr) + static_cast<std::size_t>(k);
    }

    SinogramGrid grid_;
    std::vector<double> values_;
};

/// Linear interpolation of one radial profile sampled at r_k = (k+1) dr.
/// Zero outside [dr, nr*dr].
inline double interpolate_radial(std::span<const double> profile, double dr, double r) {
    const double t = r / dr - 1.0;
    const int n = static_cast<int>(profile.size());
    if (!(t >= 0.0) || t > n - 1) return 0.0;
    int k = static_cast<int>(t);
    if (k >= n - 1) k = n - 2;
    const double w = t - k;
    return (1.0 - w) * profile[k] + w * profile[k + 1];
}

}  // namespace lvt
