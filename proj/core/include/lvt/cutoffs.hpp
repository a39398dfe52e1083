#pragma once

#include <array>
#include <variant>
#include <vector>

#include "lvt/field.hpp"
#include "lvt/geometry.hpp"
#include "lvt/sonar_data.hpp"

namespace lvt {

/// Detector angles [a, b] (radians), 0 < b - a <= 2 pi.
struct AngularRange {
    double a = 0.0;
    double b = kTwoPi;

    void validate() const;
    double width() const { return b - a; }
    bool is_full() const;
    /// phi taken modulo 2 pi into [a, a + 2 pi), then compared with b.
    bool contains(double phi) const;
};

struct HardCutoff {};
struct SmoothCutoff {
    double eps = 0.0;
};
using Cutoff = std::variant<HardCutoff, SmoothCutoff>;

struct RectangleShape {
    Vec2 center;
    Vec2 half_widths;
};
struct DiscShape {
    Vec2 center;
    double radius = 0.0;
};

/// A boundary sample of a center set with its outward unit normal.
struct BoundaryPoint {
    Vec2 point;
    Vec2 normal;
};

/// Compact set K of sonar transceiver positions.
class CenterSet {
public:
    static CenterSet rectangle(Vec2 center, Vec2 half_widths);
    static CenterSet disc(Vec2 center, double radius);

    bool is_rectangle() const { return std::holds_alternative<RectangleShape>(shape_); }
    const std::variant<RectangleShape, DiscShape>& shape() const { return shape_; }

    bool contains(Vec2 y) const;
    double area() const;
    /// Smallest half-width (rectangle) or the radius (disc).
    double inner_size() const;
    /// Bounding box as (min corner, max corner).
    std::pair<Vec2, Vec2> bounding_box() const;

    /// n points spread uniformly in arc length over bd(K), never on a corner.
    std::vector<BoundaryPoint> boundary_samples(int n) const;
    /// Corners of a rectangle; empty for a disc.
    std::vector<Vec2> corners() const;

private:
    explicit CenterSet(std::variant<RectangleShape, DiscShape> shape) : shape_(shape) {}
    std::variant<RectangleShape, DiscShape> shape_;
};

/// nu_eps(t) = exp(t^2 / (t^2 - eps^2)) for |t| < eps, else 0.
double nu_eps(double t, double eps);

/// Smooth angular window: 0 outside [a,b], 1 on [a+eps, b-eps],
/// nu_eps(a+eps-phi) on [a, a+eps], nu_eps(phi-b+eps) on [b-eps, b].
/// Requires 0 < eps < (b-a)/2.
double angular_cutoff_value(const AngularRange& range, double eps, double phi);

Sinogram apply_angular_cutoff(const Sinogram& sino, const AngularRange& range, const Cutoff& cutoff);

/// Smooth window over K: one on the inner set K' (points at depth >= eps),
/// nu-shaped ramp of width eps inside bd(K), zero outside K. Rectangles use
/// the product of per-axis ramps. Requires 0 < eps < inner_size() / 2.
double center_cutoff_value(const CenterSet& k, double eps, Vec2 y);

SonarData apply_center_cutoff(const SonarData& data, const CenterSet& k, const Cutoff& cutoff);

}  // namespace lvt
