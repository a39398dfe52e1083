#include "lvt/microlocal.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <tuple>

#include <json.hpp>

#include "lvt/error.hpp"

namespace lvt {

void Covector2D::validate() const {
    if (!(norm(x) < 1.0)) throw InvalidArgument("covector base point must lie in the open unit disk");
    if (!(norm(xi) > 0.0)) throw InvalidArgument("covector direction must be nonzero");
}

void Covector3D::validate() const {
    if (!(x.z > 0.0)) throw InvalidArgument("covector base point must satisfy x3 > 0");
    if (!(norm(xi) > 0.0)) throw InvalidArgument("covector direction must be nonzero");
}

std::pair<double, double> ray_circle_angles(const Covector2D& cv) {
    cv.validate();
    // |x + t xi|^2 = 1  <=>  A t^2 + 2 B t + C = 0 with C < 0
    const double a = dot(cv.xi, cv.xi);
    const double b = dot(cv.x, cv.xi);
    const double c = dot(cv.x, cv.x) - 1.0;
    const double disc = std::sqrt(b * b - a * c);
    // q has the sign of -b, so both roots come out without cancellation
    const double q = b >= 0.0 ? -(b + disc) : -(b - disc);
    double t1 = q / a;
    double t2 = c / q;
    if (t1 > t2) std::swap(t1, t2);
    auto angle = [&](double t) {
        const Vec2 p = cv.x + t * cv.xi;
        return wrap_angle(std::atan2(p.y, p.x));
    };
    return {angle(t1), angle(t2)};
}

bool is_visible_circular(const Covector2D& cv, const AngularRange& range) {
    range.validate();
    if (range.is_full()) {
        cv.validate();
        return true;
    }
    const auto [p1, p2] = ray_circle_angles(cv);
    return range.contains(p1) || range.contains(p2);
}

DataCovectorSonar sonar_cov_to_data(const Covector3D& cv) {
    cv.validate();
    if (cv.xi.z == 0.0) throw InvisibleCovectorError("covector with xi3 = 0 is normal to no data sphere");
    const double len = norm(cv.xi);
    const double sgn = cv.xi.z > 0.0 ? 1.0 : -1.0;
    const Vec3 foot = cv.x - (cv.x.z / cv.xi.z) * cv.xi;
    DataCovectorSonar out;
    out.y = foot.horizontal();
    out.r = cv.x.z * len / std::abs(cv.xi.z);
    out.alpha = sgn * len;
    out.omega = (sgn / len) * cv.xi;
    return out;
}

Covector3D sonar_data_to_cov(Vec2 y, double r, Vec2 nu, double alpha) {
    if (!(r > 0.0)) throw InvalidArgument("sonar radius must be positive");
    if (!(alpha != 0.0) || !std::isfinite(alpha)) throw InvalidArgument("alpha must be finite and nonzero");
    const double a = std::abs(alpha);
    const double m = std::hypot(nu.x, nu.y);
    if (!(m < a)) throw OutOfRangeError("|nu / alpha| must be < 1");
    const Vec3 nbar{nu.x / alpha, nu.y / alpha, std::sqrt((a - m) * (a + m)) / a};
    return {on_surface(y) + r * nbar, alpha * nbar};
}

bool is_visible_sonar(const Covector3D& cv, const CenterSet& k) {
    if (cv.xi.z == 0.0) return false;
    return k.contains(sonar_cov_to_data(cv).y);
}

// ---------------------------------------------------------------------------

namespace {

template <class T>
std::size_t count_of(const ArtifactCurveSet& s) {
    return static_cast<std::size_t>(std::count_if(s.curves.begin(), s.curves.end(),
                                                  [](const ArtifactCurve& c) { return std::holds_alternative<T>(c); }));
}

/// Semicircle of S(y, r) in the vertical plane parallel to eta through y + r n'.
ArtifactArc3D make_arc(Vec2 y, Vec2 eta, Vec3 n, double r, int ball, int sign, int samples, int index, int count) {
    ArtifactArc3D arc;
    arc.boundary_index = index;
    arc.boundary_count = count;
    arc.boundary_point = y;
    arc.normal = eta;
    arc.tangency_normal = n;
    arc.radius = r;
    arc.ball = ball;
    arc.sign = sign;
    const Vec2 eperp = perp(eta);
    const double s = r * dot(n.horizontal(), eperp);
    const double rc = std::sqrt(std::max(0.0, r * r - s * s));
    const Vec2 base = y + s * eperp;
    arc.points.reserve(static_cast<std::size_t>(samples));
    for (int m = 0; m < samples; ++m) {
        const double tau = kPi * m / (samples - 1);
        const Vec2 h = base + rc * std::cos(tau) * eta;
        arc.points.push_back({h.x, h.y, m == samples - 1 ? 0.0 : rc * std::sin(tau)});
    }
    return arc;
}

}  // namespace

std::size_t ArtifactCurveSet::count_circles() const { return count_of<ArtifactCircle2D>(*this); }
std::size_t ArtifactCurveSet::count_arcs() const { return count_of<ArtifactArc3D>(*this); }
std::size_t ArtifactCurveSet::count_hemispheres() const { return count_of<ArtifactHemisphere>(*this); }

ArtifactCurveSet predicted_artifact_circles(const DiscPhantom2D& phantom, const AngularRange& range) {
    range.validate();
    ArtifactCurveSet out;
    if (range.is_full()) return out;
    for (double e : {range.a, range.b}) {
        const Vec2 p = unit_circle_point(e);
        for (std::size_t k = 0; k < phantom.discs().size(); ++k) {
            const auto& disc = phantom.discs()[k];
            const double d = norm(p - disc.center);
            for (double radius : {d - disc.radius, d + disc.radius}) {
                // a circle centred on S^1 meets the open unit disk iff 0 < radius < 2
                if (radius > 0.0 && radius < 2.0)
                    out.curves.push_back(ArtifactCircle2D{p, radius, e, static_cast<int>(k)});
            }
        }
    }
    return out;
}

ArtifactCurveSet predicted_artifact_curves_sonar(const BallPhantom3D& phantom, const CenterSet& k, int n_boundary,
                                                 int arc_samples) {
    if (n_boundary < 8) throw InvalidArgument("predicted_artifact_curves_sonar needs n_boundary >= 8");
    if (arc_samples < 2) throw InvalidArgument("arcs need at least 2 samples");
    ArtifactCurveSet out;
    const auto& balls = phantom.balls();
    const auto samples = k.boundary_samples(n_boundary);
    for (int i = 0; i < n_boundary; ++i) {
        const auto& bp = samples[i];
        for (std::size_t b = 0; b < balls.size(); ++b) {
            const Vec3 to_c = balls[b].center - on_surface(bp.point);
            const double d = norm(to_c);
            const Vec3 n = to_c / d;
            const int ib = static_cast<int>(b);
            if (d - balls[b].radius > 0.0)
                out.curves.push_back(
                    make_arc(bp.point, bp.normal, n, d - balls[b].radius, ib, -1, arc_samples, i, n_boundary));
            out.curves.push_back(
                make_arc(bp.point, bp.normal, n, d + balls[b].radius, ib, 1, arc_samples, i, n_boundary));
        }
    }
    const auto corners = k.corners();
    for (std::size_t c = 0; c < corners.size(); ++c) {
        for (std::size_t b = 0; b < balls.size(); ++b) {
            const double d = norm(balls[b].center - on_surface(corners[c]));
            for (double r : {d - balls[b].radius, d + balls[b].radius})
                if (r > 0.0)
                    out.curves.push_back(
                        ArtifactHemisphere{corners[c], r, static_cast<int>(b), static_cast<int>(c)});
        }
    }
    return out;
}

ArtifactCurveSet rotated(const ArtifactCurveSet& curves, double angle) {
    ArtifactCurveSet out = curves;
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    auto rot3 = [&](Vec3 p) { return Vec3{c * p.x - s * p.y, s * p.x + c * p.y, p.z}; };
    for (auto& curve : out.curves) {
        if (auto* ci = std::get_if<ArtifactCircle2D>(&curve)) {
            ci->center = rotate(ci->center, angle);
            ci->endpoint_angle += angle;
        } else if (auto* arc = std::get_if<ArtifactArc3D>(&curve)) {
            for (auto& p : arc->points) p = rot3(p);
            arc->boundary_point = rotate(arc->boundary_point, angle);
            arc->normal = rotate(arc->normal, angle);
            arc->tangency_normal = rot3(arc->tangency_normal);
        } else {
            auto& h = std::get<ArtifactHemisphere>(curve);
            h.center = rotate(h.center, angle);
        }
    }
    return out;
}

std::string curves_to_json(const ArtifactCurveSet& curves, bool with_points) {
    using J = nlohmann::ordered_json;
    auto v2 = [](Vec2 v) { return J::array({v.x, v.y}); };
    auto v3 = [](Vec3 v) { return J::array({v.x, v.y, v.z}); };
    J arr = J::array();
    for (const auto& curve : curves.curves) {
        J rec;
        if (const auto* ci = std::get_if<ArtifactCircle2D>(&curve)) {
            rec["type"] = "circle2d";
            rec["center"] = v2(ci->center);
            rec["radius"] = ci->radius;
            rec["endpoint_angle"] = ci->endpoint_angle;
            rec["disc"] = ci->disc;
        } else if (const auto* arc = std::get_if<ArtifactArc3D>(&curve)) {
            rec["type"] = "arc3d";
            rec["boundary_point"] = v2(arc->boundary_point);
            rec["normal"] = v2(arc->normal);
            rec["tangency_normal"] = v3(arc->tangency_normal);
            rec["radius"] = arc->radius;
            rec["ball"] = arc->ball;
            rec["sign"] = arc->sign;
            if (with_points) {
                J pts = J::array();
                for (const auto& p : arc->points) pts.push_back(v3(p));
                rec["points"] = std::move(pts);
            }
        } else {
            const auto& h = std::get<ArtifactHemisphere>(curve);
            rec["type"] = "hemisphere";
            rec["center"] = v2(h.center);
            rec["radius"] = h.radius;
            rec["ball"] = h.ball;
            rec["corner"] = h.corner;
        }
        arr.push_back(std::move(rec));
    }
    J doc;
    doc["curves"] = std::move(arr);
    return doc.dump(1) + "\n";
}

// ---------------------------------------------------------------------------
// Masks

Mask2D::Mask2D(GridSpec2D grid) : grid_(grid), marked_(grid.size(), 0) { grid_.validate(); }

std::size_t Mask2D::count() const {
    return static_cast<std::size_t>(std::count(marked_.begin(), marked_.end(), std::uint8_t{1}));
}

void Mask2D::require_same_grid(const Mask2D& o) const {
    if (!(grid_ == o.grid_)) throw InvalidArgument("masks live on different grids");
}

Mask2D Mask2D::operator|(const Mask2D& o) const {
    require_same_grid(o);
    Mask2D out(grid_);
    for (std::size_t i = 0; i < marked_.size(); ++i) out.marked_[i] = marked_[i] | o.marked_[i];
    return out;
}

Mask2D Mask2D::operator&(const Mask2D& o) const {
    require_same_grid(o);
    Mask2D out(grid_);
    for (std::size_t i = 0; i < marked_.size(); ++i) out.marked_[i] = marked_[i] & o.marked_[i];
    return out;
}

Mask2D Mask2D::operator-(const Mask2D& o) const {
    require_same_grid(o);
    Mask2D out(grid_);
    for (std::size_t i = 0; i < marked_.size(); ++i) out.marked_[i] = marked_[i] & (o.marked_[i] ^ 1u);
    return out;
}

Mask2D Mask2D::flipped_vertically() const {
    Mask2D out(grid_);
    for (int j = 0; j < grid_.ny; ++j)
        for (int i = 0; i < grid_.nx; ++i) out.set(i, grid_.ny - 1 - j, at(i, j));
    return out;
}

ScalarField2D Mask2D::to_field() const {
    std::vector<double> v(marked_.begin(), marked_.end());
    return ScalarField2D(grid_, std::move(v));
}

Mask2D Mask2D::from_field(const ScalarField2D& field) {
    Mask2D out(field.grid());
    const auto vals = field.values();
    for (std::size_t i = 0; i < vals.size(); ++i) out.marked_[i] = vals[i] != 0.0 ? 1 : 0;
    return out;
}

namespace {

/// Pixel index range covering [lo, hi] along one axis, clamped to the grid.
std::pair<int, int> pixel_span(double lo, double hi, double origin, double step, int n) {
    const int first = std::max(0, static_cast<int>(std::floor((lo - origin) / step - 0.5)));
    const int last = std::min(n - 1, static_cast<int>(std::ceil((hi - origin) / step - 0.5)));
    return {first, last};
}

double segment_distance(Vec2 p, Vec2 a, Vec2 b) {
    const Vec2 ab = b - a;
    const double len2 = dot(ab, ab);
    const double t = len2 > 0.0 ? std::clamp(dot(p - a, ab) / len2, 0.0, 1.0) : 0.0;
    return norm(p - (a + t * ab));
}

/// In-plane tube around the segment [a, b] of slice coordinates.
void mark_segment(Vec2 a, Vec2 b, const GridSpec2D& grid, double tube, std::vector<std::uint8_t>& marks) {
    const auto [i0, i1] =
        pixel_span(std::min(a.x, b.x) - tube, std::max(a.x, b.x) + tube, grid.xmin, grid.dx(), grid.nx);
    const auto [j0, j1] =
        pixel_span(std::min(a.y, b.y) - tube, std::max(a.y, b.y) + tube, grid.ymin, grid.dy(), grid.ny);
    for (int j = j0; j <= j1; ++j)
        for (int i = i0; i <= i1; ++i) {
            const std::size_t idx = grid.index(i, j);
            if (!marks[idx] && segment_distance(grid.center(i, j), a, b) <= tube) marks[idx] = 1;
        }
}

bool crosses(double da, double db) { return (da <= 0.0) != (db <= 0.0); }

Vec3 crossing(Vec3 a, Vec3 b, double da, double db) { return a + (da / (da - db)) * (b - a); }

void mark_triangle_cut(const std::array<Vec3, 3>& tri, const SlicePlane& plane, const GridSpec2D& grid,
                       double tube, std::vector<std::uint8_t>& marks) {
    std::array<double, 3> d{};
    for (int v = 0; v < 3; ++v) d[v] = plane.signed_distance(tri[v]);
    std::array<Vec2, 2> cut{};
    int n = 0;
    for (int v = 0; v < 3; ++v) {
        const int w = (v + 1) % 3;
        if (crosses(d[v], d[w]) && n < 2) cut[n++] = plane.to_slice(crossing(tri[v], tri[w], d[v], d[w]));
    }
    if (n == 2) mark_segment(cut[0], cut[1], grid, tube, marks);
}

void mark_arc_crossings(const ArtifactArc3D& arc, const SlicePlane& plane, const GridSpec2D& grid, double tube,
                        std::vector<std::uint8_t>& marks) {
    for (std::size_t m = 0; m + 1 < arc.points.size(); ++m) {
        const double da = plane.signed_distance(arc.points[m]);
        const double db = plane.signed_distance(arc.points[m + 1]);
        if (!crosses(da, db)) continue;
        const Vec2 p = plane.to_slice(crossing(arc.points[m], arc.points[m + 1], da, db));
        mark_segment(p, p, grid, tube, marks);
    }
}

void mark_strip(const ArtifactArc3D& a, const ArtifactArc3D& b, const SlicePlane& plane, const GridSpec2D& grid,
                double tube, std::vector<std::uint8_t>& marks) {
    const std::size_t n = std::min(a.points.size(), b.points.size());
    for (std::size_t m = 0; m + 1 < n; ++m) {
        const double lo = std::min({plane.signed_distance(a.points[m]), plane.signed_distance(a.points[m + 1]),
                                    plane.signed_distance(b.points[m]), plane.signed_distance(b.points[m + 1])});
        const double hi = std::max({plane.signed_distance(a.points[m]), plane.signed_distance(a.points[m + 1]),
                                    plane.signed_distance(b.points[m]), plane.signed_distance(b.points[m + 1])});
        if (lo > 0.0 || hi <= 0.0) continue;
        mark_triangle_cut({a.points[m], a.points[m + 1], b.points[m + 1]}, plane, grid, tube, marks);
        mark_triangle_cut({a.points[m], b.points[m + 1], b.points[m]}, plane, grid, tube, marks);
    }
}

void mark_arcs(const std::vector<const ArtifactArc3D*>& arcs, const SlicePlane& plane, const GridSpec2D& grid,
               double tube, std::vector<std::uint8_t>& marks) {
    std::map<std::tuple<int, int, int>, const ArtifactArc3D*> by_key;
    for (const auto* arc : arcs) by_key[{arc->ball, arc->sign, arc->boundary_index}] = arc;
    for (const auto* arc : arcs) {
        mark_arc_crossings(*arc, plane, grid, tube, marks);
        if (arc->boundary_count < 2) continue;
        const int next = (arc->boundary_index + 1) % arc->boundary_count;
        const auto it = by_key.find({arc->ball, arc->sign, next});
        if (it == by_key.end()) continue;
        // 60 degrees: joins neighbours along a smooth boundary, never across a rectangle corner
        if (dot(arc->normal, it->second->normal) <= 0.5) continue;
        mark_strip(*arc, *it->second, plane, grid, tube, marks);
    }
}

}  // namespace

Mask2D rasterize_mask(const ArtifactCurveSet& curves, const GridSpec2D& grid, double tube,
                      const std::optional<SlicePlane>& slice) {
    if (!(tube > 0.0)) throw InvalidArgument("tube width must be positive");
    Mask2D out(grid);
    std::vector<std::uint8_t> marks(grid.size(), 0);

    std::vector<ArtifactCircle2D> circles;
    std::vector<const ArtifactArc3D*> arcs;
    // hemisphere traces: centre and radius of the circle cut from the plane
    std::vector<std::pair<Vec2, double>> traces;
    if (slice) slice->validate();
    for (const auto& curve : curves.curves) {
        if (const auto* ci = std::get_if<ArtifactCircle2D>(&curve)) {
            circles.push_back(*ci);
            continue;
        }
        if (!slice) throw InvalidArgument("3D artifact curves need a slice plane");
        if (const auto* arc = std::get_if<ArtifactArc3D>(&curve)) {
            arcs.push_back(arc);
        } else {
            const auto& h = std::get<ArtifactHemisphere>(curve);
            const Vec3 c = on_surface(h.center);
            const double delta = slice->signed_distance(c);
            if (h.radius > std::abs(delta))
                traces.emplace_back(slice->to_slice(c), std::sqrt(h.radius * h.radius - delta * delta));
        }
    }

    const int npix = static_cast<int>(grid.size());
#pragma omp parallel for schedule(static)
    for (int idx = 0; idx < npix; ++idx) {
        const Vec2 p = grid.center(idx % grid.nx, idx / grid.nx);
        bool hit = false;
        if (!slice) {
            for (const auto& c : circles)
                if (std::abs(norm(p - c.center) - c.radius) <= tube) {
                    hit = true;
                    break;
                }
        } else if (p.y >= -tube) {
            for (const auto& [c, r] : traces)
                if (std::abs(norm(p - c) - r) <= tube) {
                    hit = true;
                    break;
                }
        }
        if (hit) marks[idx] = 1;
    }
    if (slice) mark_arcs(arcs, *slice, grid, tube, marks);

    for (int j = 0; j < grid.ny; ++j)
        for (int i = 0; i < grid.nx; ++i)
            if (marks[grid.index(i, j)]) out.set(i, j);
    return out;
}

Mask2D edge_tube_mask(const DiscPhantom2D& phantom, const GridSpec2D& grid, double tube) {
    Mask2D out(grid);
    for (int j = 0; j < grid.ny; ++j)
        for (int i = 0; i < grid.nx; ++i) {
            const Vec2 p = grid.center(i, j);
            for (const auto& d : phantom.discs())
                if (std::abs(norm(p - d.center) - d.radius) <= tube) {
                    out.set(i, j);
                    break;
                }
        }
    return out;
}

Mask2D edge_tube_mask(const BallPhantom3D& phantom, const SlicePlane& plane, const GridSpec2D& grid, double tube) {
    plane.validate();
    Mask2D out(grid);
    for (int j = 0; j < grid.ny; ++j)
        for (int i = 0; i < grid.nx; ++i) {
            const Vec3 p = plane.to_space(grid.center(i, j));
            for (const auto& b : phantom.balls())
                if (std::abs(norm(p - b.center) - b.radius) <= tube) {
                    out.set(i, j);
                    break;
                }
        }
    return out;
}

}  // namespace lvt
