#include "lvt/phantoms.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "lvt/error.hpp"

namespace lvt {

namespace {

bool finite(double v) { return std::isfinite(v); }

}  // namespace

DiscPhantom2D::DiscPhantom2D(std::vector<Disc> discs) : discs_(std::move(discs)) {
    for (std::size_t k = 0; k < discs_.size(); ++k) {
        const auto& d = discs_[k];
        if (!finite(d.center.x) || !finite(d.center.y) || !finite(d.radius) || !finite(d.amplitude))
            throw InvalidArgument("disc " + std::to_string(k) + " has non-finite parameters");
        if (!(d.radius > 0.0)) throw InvalidArgument("disc " + std::to_string(k) + " needs radius > 0");
        if (!(norm(d.center) + d.radius < 1.0))
            throw InvalidArgument("disc " + std::to_string(k) + " leaves the open unit disk");
    }
}

double DiscPhantom2D::value(Vec2 p) const {
    double v = 0.0;
    for (const auto& d : discs_)
        if (norm(p - d.center) <= d.radius) v += d.amplitude;
    return v;
}

BallPhantom3D::BallPhantom3D(std::vector<Ball> balls) : balls_(std::move(balls)) {
    for (std::size_t k = 0; k < balls_.size(); ++k) {
        const auto& b = balls_[k];
        if (!finite(b.center.x) || !finite(b.center.y) || !finite(b.center.z) || !finite(b.radius) ||
            !finite(b.amplitude))
            throw InvalidArgument("ball " + std::to_string(k) + " has non-finite parameters");
        if (!(b.radius > 0.0)) throw InvalidArgument("ball " + std::to_string(k) + " needs radius > 0");
        if (!(b.center.z - b.radius > 0.0))
            throw InvalidArgument("ball " + std::to_string(k) + " leaves the open upper half space");
    }
}

double BallPhantom3D::value(Vec3 p) const {
    double v = 0.0;
    for (const auto& b : balls_)
        if (norm(p - b.center) <= b.radius) v += b.amplitude;
    return v;
}

double BallPhantom3D::total_abs_amplitude() const {
    double s = 0.0;
    for (const auto& b : balls_) s += std::abs(b.amplitude);
    return s;
}

double circular_mean_disc(Vec2 c, double rho, double phi, double r) {
    const double d = norm(unit_circle_point(phi) - c);
    if (d + r <= rho) return 1.0;
    if (d >= r + rho || r >= d + rho) return 0.0;
    const double cb = std::clamp((d * d + r * r - rho * rho) / (2.0 * d * r), -1.0, 1.0);
    return std::acos(cb) / kPi;
}

double spherical_mean_ball(Vec3 c, double rho, Vec2 y, double r) {
    const double d = norm(on_surface(y) - c);
    if (d + r <= rho) return 1.0;
    if (d >= r + rho || r >= d + rho) return 0.0;
    const double ca = std::clamp((d * d + r * r - rho * rho) / (2.0 * d * r), -1.0, 1.0);
    return 0.5 * (1.0 - ca);
}

ScalarField2D rasterize(const DiscPhantom2D& phantom, const GridSpec2D& grid) {
    ScalarField2D out(grid);
    for (int j = 0; j < grid.ny; ++j)
        for (int i = 0; i < grid.nx; ++i) out.at(i, j) = phantom.value(grid.center(i, j));
    return out;
}

Sinogram analytic_circular_sinogram(const DiscPhantom2D& phantom, const SinogramGrid& grid) {
    Sinogram out(grid);
#pragma omp parallel for schedule(static)
    for (int i = 0; i < grid.nphi; ++i) {
        const double phi = grid.phi(i);
        for (int k = 0; k < grid.nr; ++k) {
            double g = 0.0;
            for (const auto& d : phantom.discs()) g += d.amplitude * circular_mean_disc(d.center, d.radius, phi, grid.r(k));
            out.at(i, k) = g;
        }
    }
    return out;
}

SonarData analytic_sonar_data(const BallPhantom3D& phantom, const SonarGrid& grid) {
    SonarData out(grid);
#pragma omp parallel for schedule(static)
    for (int i1 = 0; i1 < grid.ny1; ++i1) {
        for (int i2 = 0; i2 < grid.ny2; ++i2) {
            const Vec2 y = grid.center(i1, i2);
            for (int k = 0; k < grid.nr; ++k) {
                double g = 0.0;
                for (const auto& b : phantom.balls()) g += b.amplitude * spherical_mean_ball(b.center, b.radius, y, grid.r(k));
                out.at(i1, i2, k) = g;
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// JSON

namespace {

using nlohmann::json;

double number(const json& obj, const char* key, std::size_t index) {
    auto it = obj.find(key);
    if (it == obj.end()) throw FormatError("component " + std::to_string(index) + " lacks '" + key + "'");
    if (!it->is_number()) throw FormatError("component " + std::to_string(index) + ": '" + key + "' is not a number");
    return it->get<double>();
}

double amplitude(const json& obj, std::size_t index) {
    return obj.contains("amp") ? number(obj, "amp", index) : 1.0;
}

}  // namespace

Phantom parse_phantom_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw FormatError(std::string("phantom JSON: ") + e.what());
    }
    if (!doc.is_object()) throw FormatError("phantom JSON must be an object");
    const bool has_discs = doc.contains("discs");
    const bool has_balls = doc.contains("balls");
    if (has_discs == has_balls) throw FormatError("phantom JSON needs exactly one of 'discs' or 'balls'");

    const json& list = has_discs ? doc["discs"] : doc["balls"];
    if (!list.is_array()) throw FormatError("phantom components must be an array");
    if (has_discs) {
        std::vector<Disc> discs;
        for (std::size_t k = 0; k < list.size(); ++k) {
            const auto& o = list[k];
            if (!o.is_object()) throw FormatError("component " + std::to_string(k) + " is not an object");
            discs.push_back({{number(o, "cx", k), number(o, "cy", k)}, number(o, "rho", k), amplitude(o, k)});
        }
        return DiscPhantom2D(std::move(discs));
    }
    std::vector<Ball> balls;
    for (std::size_t k = 0; k < list.size(); ++k) {
        const auto& o = list[k];
        if (!o.is_object()) throw FormatError("component " + std::to_string(k) + " is not an object");
        balls.push_back(
            {{number(o, "cx", k), number(o, "cy", k), number(o, "cz", k)}, number(o, "rho", k), amplitude(o, k)});
    }
    return BallPhantom3D(std::move(balls));
}

Phantom load_phantom(const std::filesystem::path& path) {
    std::ifstream is(path);
    if (!is) throw IoError(path.string(), "cannot open phantom file");
    std::stringstream ss;
    ss << is.rdbuf();
    return parse_phantom_json(ss.str());
}

std::string phantom_to_json(const Phantom& phantom) {
    nlohmann::ordered_json doc;
    if (const auto* p = std::get_if<DiscPhantom2D>(&phantom)) {
        auto& arr = doc["discs"] = nlohmann::ordered_json::array();
        for (const auto& d : p->discs())
            arr.push_back({{"cx", d.center.x}, {"cy", d.center.y}, {"rho", d.radius}, {"amp", d.amplitude}});
    } else {
        auto& arr = doc["balls"] = nlohmann::ordered_json::array();
        for (const auto& b : std::get<BallPhantom3D>(phantom).balls())
            arr.push_back({{"cx", b.center.x},
                           {"cy", b.center.y},
                           {"cz", b.center.z},
                           {"rho", b.radius},
                           {"amp", b.amplitude}});
    }
    return doc.dump(2) + "\n";
}

void save_phantom(const Phantom& phantom, const std::filesystem::path& path) {
    std::ofstream os(path, std::ios::trunc);
    if (!os) throw IoError(path.string(), "cannot open for writing");
    os << phantom_to_json(phantom);
    if (!os) throw IoError(path.string(), "write failed");
}

}  // namespace lvt
