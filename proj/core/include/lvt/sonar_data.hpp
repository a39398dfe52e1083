#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "lvt/field.hpp"
#include "lvt/geometry.hpp"

namespace lvt {

/// Centers y on a ny1 x ny2 lattice spanning [y1min,y1max] x [y2min,y2max]
/// (end points included) and radii r_k = (k + 1) * rmax / nr.
struct SonarGrid {
    double y1min = 0.0;
    double y1max = 0.0;
    double y2min = 0.0;
    double y2max = 0.0;
    int ny1 = 0;
    int ny2 = 0;
    double rmax = 0.0;
    int nr = 0;

    void validate() const;

    double dy1() const { return (y1max - y1min) / (ny1 - 1); }
    double dy2() const { return (y2max - y2min) / (ny2 - 1); }
    double dr() const { return rmax / nr; }
    Vec2 center(int i1, int i2) const { return {y1min + i1 * dy1(), y2min + i2 * dy2()}; }
    double r(int k) const { return (k + 1) * dr(); }
    std::size_t num_centers() const { return static_cast<std::size_t>(ny1) * static_cast<std::size_t>(ny2); }
    std::size_t size() const { return num_centers() * static_cast<std::size_t>(nr); }

    bool operator==(const SonarGrid&) const = default;
};

/// g(y, r), stored as values[(i1 * ny2 + i2) * nr + k].
class SonarData {
public:
    SonarData() = default;
    explicit SonarData(SonarGrid grid);
    SonarData(SonarGrid grid, std::vector<double> values);

    const SonarGrid& grid() const { return grid_; }
    std::span<const double> values() const& { return values_; }
    std::span<double> values() & { return values_; }
    std::vector<double> values() && { return std::move(values_); }

    double at(int i1, int i2, int k) const { return values_[index(i1, i2, k)]; }
    double& at(int i1, int i2, int k) { return values_[index(i1, i2, k)]; }
    std::span<const double> profile(int i1, int i2) const {
        return std::span<const double>(values_).subspan(index(i1, i2, 0), grid_.nr);
    }
    std::span<double> profile(int i1, int i2) {
        return std::span<double>(values_).subspan(index(i1, i2, 0), grid_.nr);
    }

    bool all_finite() const;

private:
    std::size_t index(int i1, int i2, int k) const {
        return (static_cast<std::size_t>(i1) * grid_.ny2 + static_cast<std::size_t>(i2)) * grid_.nr +
               static_cast<std::size_t>(k);
    }

    SonarGrid grid_;
    std::vector<double> values_;
};

/// Vertical reconstruction plane {x_axis = offset}.
///
/// A slice raster uses the remaining horizontal coordinate as its x axis and
/// x3 as its y axis.
struct SlicePlane {
    int axis = 1;  ///< 1 or 2
    double offset = 0.0;

    void validate() const;

    /// 3D point of slice coordinates (u, x3).
    Vec3 to_space(Vec2 uv) const {
        return axis == 1 ? Vec3{offset, uv.x, uv.y} : Vec3{uv.x, offset, uv.y};
    }
    /// Signed distance of a point from the plane.
    double signed_distance(Vec3 p) const { return (axis == 1 ? p.x : p.y) - offset; }
    /// In-plane coordinates (u, x3) of a point.
    Vec2 to_slice(Vec3 p) const { return axis == 1 ? Vec2{p.y, p.z} : Vec2{p.x, p.z}; }
};

}  // namespace lvt
