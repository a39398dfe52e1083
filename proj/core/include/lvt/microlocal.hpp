#pragma once

// Geometric side of the limited-data characterisation: canonical-relation
// maps between object covectors and data, visibility predicates, and the
// curves along which a hard data cutoff can add singularities.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "lvt/cutoffs.hpp"
#include "lvt/field.hpp"
#include "lvt/geometry.hpp"
#include "lvt/phantoms.hpp"
#include "lvt/sonar_data.hpp"

namespace lvt {

/// (x, xi dx) over the open unit disk.
struct Covector2D {
    Vec2 x;
    Vec2 xi;

    /// Throws InvalidArgument unless |x| < 1 and xi != 0.
    void validate() const;
};

/// (x, xi dx) over the open upper half space.
struct Covector3D {
    Vec3 x;
    Vec3 xi;

    /// Throws InvalidArgument unless x3 > 0 and xi != 0.
    void validate() const;
};

/// Image of a sonar covector: sphere S(y, r), covector alpha (omega' dy + dr).
struct DataCovectorSonar {
    Vec2 y;
    double r = 0.0;
    double alpha = 0.0;
    Vec3 omega;  ///< unit, omega3 > 0
};

/// Angles where the line {x + t xi} meets S^1: first for t < 0, second for t > 0.
/// Both in [0, 2 pi).
std::pair<double, double> ray_circle_angles(const Covector2D& cv);

/// True iff xi is normal to a data circle C(phi, |x - theta(phi)|) with phi in the range.
bool is_visible_circular(const Covector2D& cv, const AngularRange& range);

/// Canonical map c: (x, xi) -> (y, r, alpha, omega). Throws InvisibleCovectorError if xi3 == 0.
DataCovectorSonar sonar_cov_to_data(const Covector3D& cv);

/// Inverse map: nbar = (nu/alpha, sqrt(1 - |nu/alpha|^2)), x = (y,0) + r nbar,
/// xi = alpha nbar. Throws OutOfRangeError unless |nu/alpha| < 1, InvalidArgument unless r > 0.
Covector3D sonar_data_to_cov(Vec2 y, double r, Vec2 nu, double alpha);

/// True iff xi3 != 0 and the sphere centre y(x, xi) lies in K.
bool is_visible_sonar(const Covector3D& cv, const CenterSet& k);

// ---------------------------------------------------------------------------
// Predicted artifact curves

struct ArtifactCircle2D {
    Vec2 center;
    double radius = 0.0;
    double endpoint_angle = 0.0;  ///< a or b
    int disc = 0;                 ///< generating disc index
};

/// Sampled semicircle C(y, r, eta, n) intersected with x3 >= 0.
struct ArtifactArc3D {
    std::vector<Vec3> points;
    Vec2 boundary_point;  ///< y on bd(K)
    Vec2 normal;          ///< eta, unit outward normal of K at y
    Vec3 tangency_normal; ///< n, unit normal of S(y, r) at the tangency point
    double radius = 0.0;
    int ball = 0;
    int sign = 1;  ///< +1 for r = d + rho, -1 for r = d - rho
    int boundary_index = 0;  ///< k of the boundary sample
    int boundary_count = 0;  ///< number of boundary samples in the sweep
};

/// Whole upper hemisphere S(y, r) with x3 >= 0, spawned by a corner of K.
struct ArtifactHemisphere {
    Vec2 center;  ///< the corner point y
    double radius = 0.0;
    int ball = 0;
    int corner = 0;
};

using ArtifactCurve = std::variant<ArtifactCircle2D, ArtifactArc3D, ArtifactHemisphere>;

struct ArtifactCurveSet {
    std::vector<ArtifactCurve> curves;

    std::size_t count_circles() const;
    std::size_t count_arcs() const;
    std::size_t count_hemispheres() const;
};

/// For each endpoint e in {a, b} and each disc (c, rho), with d = |theta(e) - c|:
/// circles centred at theta(e) of radius d - rho (when positive) and d + rho,
/// kept when they meet the open unit disk.
ArtifactCurveSet predicted_artifact_circles(const DiscPhantom2D& phantom, const AngularRange& range);

inline constexpr int kDefaultArcSamples = 512;

/// Arcs from n_boundary samples of bd(K) and, for rectangles, a hemisphere per
/// corner, ball and admissible radius. Requires n_boundary >= 8.
ArtifactCurveSet predicted_artifact_curves_sonar(const BallPhantom3D& phantom, const CenterSet& k, int n_boundary,
                                                 int arc_samples = kDefaultArcSamples);

/// Copy of a curve set rotated about the origin (3D curves about the x3 axis).
ArtifactCurveSet rotated(const ArtifactCurveSet& curves, double angle);

/// Typed JSON records. Arc polylines are included only when with_points is set.
std::string curves_to_json(const ArtifactCurveSet& curves, bool with_points = true);

// ---------------------------------------------------------------------------
// Masks

class Mask2D {
public:
    Mask2D() = default;
    explicit Mask2D(GridSpec2D grid);

    const GridSpec2D& grid() const { return grid_; }
    bool at(int i, int j) const { return marked_[grid_.index(i, j)] != 0; }
    void set(int i, int j, bool v = true) { marked_[grid_.index(i, j)] = v ? 1 : 0; }
    bool at_index(std::size_t idx) const { return marked_[idx] != 0; }
    std::size_t size() const { return marked_.size(); }
    std::size_t count() const;
    bool empty() const { return count() == 0; }

    Mask2D operator|(const Mask2D& o) const;
    Mask2D operator&(const Mask2D& o) const;
    /// Marked here and not in o.
    Mask2D operator-(const Mask2D& o) const;
    /// Mirror top to bottom (j -> ny - 1 - j).
    Mask2D flipped_vertically() const;

    /// 0/1 field for serialisation.
    ScalarField2D to_field() const;
    static Mask2D from_field(const ScalarField2D& field);

private:
    void require_same_grid(const Mask2D& o) const;

    GridSpec2D grid_;
    std::vector<std::uint8_t> marked_;
};

/// Marks pixels whose centre lies within `tube` of any curve.
///
/// Without a slice the raster is the (x1, x2) plane and only 2D circles are
/// allowed (distance |‖p - c‖ - r|). With a slice, 2D circles are ignored and
/// 3D curves are first cut with the plane, then tubed inside the plane:
/// arcs from neighbouring boundary samples (same ball, same sign, normals less
/// than 60 degrees apart) bound a triangulated strip of the artifact surface
/// whose intersection with the plane is a polyline; every arc segment that
/// crosses the plane contributes its crossing point as well; a hemisphere
/// meets the plane in a circle.
Mask2D rasterize_mask(const ArtifactCurveSet& curves, const GridSpec2D& grid, double tube,
                      const std::optional<SlicePlane>& slice = std::nullopt);

/// Pixels within `tube` of any disc boundary.
Mask2D edge_tube_mask(const DiscPhantom2D& phantom, const GridSpec2D& grid, double tube);
/// Pixels of the slice within `tube` (in space) of any ball boundary.
Mask2D edge_tube_mask(const BallPhantom3D& phantom, const SlicePlane& plane, const GridSpec2D& grid, double tube);

}  // namespace lvt
