#include "lvt/cutoffs.hpp"

#include <algorithm>
#include <cmath>

#include "lvt/error.hpp"

namespace lvt {

namespace {

// Slack for grid angles and centres computed as start + i * step.
constexpr double kSlack = 1e-12;

double slack(double scale) { return kSlack * (1.0 + std::abs(scale)); }

void check_eps(const CenterSet& k, double eps) {
    if (!(eps > 0.0) || !(eps < 0.5 * k.inner_size()))
        throw InvalidArgument("centre cutoff needs 0 < eps < inner_size / 2");
}

// nu-shaped ramp in the depth below an edge: 0 at depth <= 0, 1 at depth >= eps.
double depth_ramp(double depth, double eps) {
    if (depth <= 0.0) return 0.0;
    if (depth >= eps) return 1.0;
    return nu_eps(eps - depth, eps);
}

}  // namespace

void AngularRange::validate() const {
    if (!std::isfinite(a) || !std::isfinite(b)) throw InvalidArgument("angular range must be finite");
    if (!(b > a)) throw InvalidArgument("angular range needs b > a");
    if (b - a > kTwoPi + slack(kTwoPi)) throw InvalidArgument("angular range wider than a full turn");
}

bool AngularRange::is_full() const { return b - a >= kTwoPi - slack(kTwoPi); }

bool AngularRange::contains(double phi) const {
    if (is_full()) return true;
    const double t = wrap_angle(phi, a);
    if (t <= b + slack(b)) return true;
    // phi just below a wraps to a + 2 pi
    return t >= a + kTwoPi - slack(a + kTwoPi);
}

CenterSet CenterSet::rectangle(Vec2 center, Vec2 half_widths) {
    if (!(half_widths.x > 0.0) || !(half_widths.y > 0.0)) throw InvalidArgument("rectangle needs positive half-widths");
    return CenterSet(RectangleShape{center, half_widths});
}

CenterSet CenterSet::disc(Vec2 center, double radius) {
    if (!(radius > 0.0)) throw InvalidArgument("disc needs a positive radius");
    return CenterSet(DiscShape{center, radius});
}

bool CenterSet::contains(Vec2 y) const {
    if (const auto* r = std::get_if<RectangleShape>(&shape_)) {
        const Vec2 d = y - r->center;
        return std::abs(d.x) <= r->half_widths.x + slack(r->half_widths.x) &&
               std::abs(d.y) <= r->half_widths.y + slack(r->half_widths.y);
    }
    const auto& d = std::get<DiscShape>(shape_);
    return norm(y - d.center) <= d.radius + slack(d.radius);
}

double CenterSet::area() const {
    if (const auto* r = std::get_if<RectangleShape>(&shape_)) return 4.0 * r->half_widths.x * r->half_widths.y;
    const auto& d = std::get<DiscShape>(shape_);
    return kPi * d.radius * d.radius;
}

double CenterSet::inner_size() const {
    if (const auto* r = std::get_if<RectangleShape>(&shape_)) return std::min(r->half_widths.x, r->half_widths.y);
    return std::get<DiscShape>(shape_).radius;
}

std::pair<Vec2, Vec2> CenterSet::bounding_box() const {
    if (const auto* r = std::get_if<RectangleShape>(&shape_))
        return {r->center - r->half_widths, r->center + r->half_widths};
    const auto& d = std::get<DiscShape>(shape_);
    return {d.center - Vec2{d.radius, d.radius}, d.center + Vec2{d.radius, d.radius}};
}

std::vector<BoundaryPoint> CenterSet::boundary_samples(int n) const {
    if (n < 1) throw InvalidArgument("boundary_samples needs n >= 1");
    std::vector<BoundaryPoint> out;
    out.reserve(static_cast<std::size_t>(n));
    if (const auto* d = std::get_if<DiscShape>(&shape_)) {
        for (int k = 0; k < n; ++k) {
            const Vec2 nrm = unit_circle_point(kTwoPi * (k + 0.5) / n);
            out.push_back({d->center + d->radius * nrm, nrm});
        }
        return out;
    }
    const auto& r = std::get<RectangleShape>(shape_);
    const double wx = 2.0 * r.half_widths.x;
    const double wy = 2.0 * r.half_widths.y;
    const double perimeter = 2.0 * (wx + wy);
    const std::array<double, 4> ends{wx, wx + wy, 2.0 * wx + wy, perimeter};
    const Vec2 lo = r.center - r.half_widths;
    const Vec2 hi = r.center + r.half_widths;
    for (int k = 0; k < n; ++k) {
        double s = perimeter * (k + 0.5) / n;
        for (double e : ends)
            if (std::abs(s - e) < 1e-9 * perimeter) s += 1e-6 * perimeter / n;
        if (s < ends[0]) {
            out.push_back({{lo.x + s, lo.y}, {0.0, -1.0}});
        } else if (s < ends[1]) {
            out.push_back({{hi.x, lo.y + (s - ends[0])}, {1.0, 0.0}});
        } else if (s < ends[2]) {
            out.push_back({{hi.x - (s - ends[1]), hi.y}, {0.0, 1.0}});
        } else {
            out.push_back({{lo.x, hi.y - (s - ends[2])}, {-1.0, 0.0}});
        }
    }
    return out;
}

std::vector<Vec2> CenterSet::corners() const {
    const auto* r = std::get_if<RectangleShape>(&shape_);
    if (r == nullptr) return {};
    const Vec2 lo = r->center - r->half_widths;
    const Vec2 hi = r->center + r->half_widths;
    return {lo, {hi.x, lo.y}, hi, {lo.x, hi.y}};
}

double nu_eps(double t, double eps) {
    if (!(eps > 0.0)) throw InvalidArgument("nu_eps needs eps > 0");
    if (std::abs(t) >= eps) return 0.0;
    const double t2 = t * t;
    return std::exp(t2 / (t2 - eps * eps));
}

double angular_cutoff_value(const AngularRange& range, double eps, double phi) {
    range.validate();
    if (!(eps > 0.0) || !(eps < 0.5 * range.width()))
        throw InvalidArgument("angular cutoff needs 0 < eps < (b - a) / 2");
    const double t = wrap_angle(phi, range.a);
    if (t > range.b) return 0.0;
    if (t < range.a + eps) return nu_eps(range.a + eps - t, eps);
    if (t > range.b - eps) return nu_eps(t - range.b + eps, eps);
    return 1.0;
}

Sinogram apply_angular_cutoff(const Sinogram& sino, const AngularRange& range, const Cutoff& cutoff) {
    range.validate();
    const auto& sg = sino.grid();
    Sinogram out = sino;
    const auto* smooth = std::get_if<SmoothCutoff>(&cutoff);
    if (smooth != nullptr) (void)angular_cutoff_value(range, smooth->eps, range.a);
    for (int i = 0; i < sg.nphi; ++i) {
        const double phi = sg.phi(i);
        const double w = smooth ? angular_cutoff_value(range, smooth->eps, phi) : (range.contains(phi) ? 1.0 : 0.0);
        if (w == 1.0) continue;
        for (double& v : out.row(i)) v *= w;
    }
    return out;
}

double center_cutoff_value(const CenterSet& k, double eps, Vec2 y) {
    check_eps(k, eps);
    if (const auto* r = std::get_if<RectangleShape>(&k.shape())) {
        const Vec2 d = y - r->center;
        return depth_ramp(r->half_widths.x - std::abs(d.x), eps) * depth_ramp(r->half_widths.y - std::abs(d.y), eps);
    }
    const auto& d = std::get<DiscShape>(k.shape());
    return depth_ramp(d.radius - norm(y - d.center), eps);
}

SonarData apply_center_cutoff(const SonarData& data, const CenterSet& k, const Cutoff& cutoff) {
    const auto& g = data.grid();
    SonarData out = data;
    const auto* smooth = std::get_if<SmoothCutoff>(&cutoff);
    if (smooth != nullptr) check_eps(k, smooth->eps);
    for (int i1 = 0; i1 < g.ny1; ++i1) {
        for (int i2 = 0; i2 < g.ny2; ++i2) {
            const Vec2 y = g.center(i1, i2);
            const double w = smooth ? center_cutoff_value(k, smooth->eps, y) : (k.contains(y) ? 1.0 : 0.0);
            if (w == 1.0) continue;
            for (double& v : out.profile(i1, i2)) v *= w;
        }
    }
    return out;
}

}  // namespace lvt
