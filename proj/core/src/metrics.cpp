#include "lvt/metrics.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "lvt/error.hpp"
#include "lvt/io.hpp"

namespace lvt {

double band_rms(const ScalarField2D& field, const Mask2D& mask) {
    if (!(field.grid() == mask.grid())) throw InvalidArgument("field and mask live on different grids");
    const auto v = field.values();
    double acc = 0.0;
    std::size_t n = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!mask.at_index(i)) continue;
        acc += v[i] * v[i];
        ++n;
    }
    if (n == 0) throw InvalidArgument("band_rms needs a nonempty mask");
    return std::sqrt(acc / static_cast<double>(n));
}

double artifact_reduction_ratio(const ScalarField2D& hard, const ScalarField2D& smooth, const Mask2D& artifact_mask) {
    const double h = band_rms(hard, artifact_mask);
    const double s = band_rms(smooth, artifact_mask);
    if (s == 0.0) return h == 0.0 ? 1.0 : kMaxReductionRatio;
    return std::min(h / s, kMaxReductionRatio);
}

namespace {

double nearest_pixel(const ScalarField2D& f, Vec2 p) {
    const auto& g = f.grid();
    const double fx = (p.x - g.xmin) / g.dx();
    const double fy = (p.y - g.ymin) / g.dy();
    if (!(fx >= 0.0) || !(fy >= 0.0) || !(fx < g.nx) || !(fy < g.ny)) return 0.0;
    return f.at(static_cast<int>(fx), static_cast<int>(fy));
}

}  // namespace

std::vector<EdgeSample> edge_visibility_profile(const ScalarField2D& field, const DiscPhantom2D& phantom,
                                                const AngularRange& range, int n_samples) {
    if (n_samples < 16) throw InvalidArgument("edge_visibility_profile needs n_samples >= 16");
    const auto& g = field.grid();
    const double h = std::min(g.dx(), g.dy());
    std::vector<EdgeSample> out;
    out.reserve(phantom.discs().size() * static_cast<std::size_t>(n_samples));
    for (std::size_t k = 0; k < phantom.discs().size(); ++k) {
        const auto& d = phantom.discs()[k];
        for (int m = 0; m < n_samples; ++m) {
            const double beta = kTwoPi * m / n_samples;
            const Vec2 n = unit_circle_point(beta);
            const Vec2 x = d.center + d.radius * n;
            EdgeSample s;
            s.disc = static_cast<int>(k);
            s.boundary_angle = beta;
            s.visible = is_visible_circular({x, n}, range);
            s.gradient = std::abs(nearest_pixel(field, x + h * n) - nearest_pixel(field, x - h * n)) / (2.0 * h);
            out.push_back(s);
        }
    }
    return out;
}

double angular_distance_to_endpoints(double direction_angle, const AngularRange& range) {
    auto line_distance = [](double u, double v) {
        const double t = std::fmod(std::abs(u - v), kPi);
        return std::min(t, kPi - t);
    };
    return std::min(line_distance(direction_angle, range.a), line_distance(direction_angle, range.b));
}

double mean_visible_edge_gradient(const std::vector<EdgeSample>& profile, const AngularRange& range,
                                  double min_distance) {
    double acc = 0.0;
    std::size_t n = 0;
    for (const auto& s : profile) {
        if (!s.visible || angular_distance_to_endpoints(s.boundary_angle, range) <= min_distance) continue;
        acc += s.gradient;
        ++n;
    }
    return n == 0 ? std::numeric_limits<double>::quiet_NaN() : acc / static_cast<double>(n);
}

void write_metrics_csv(const MetricRows& rows, const std::filesystem::path& path) {
    std::ostringstream os;
    os << "metric,value\n";
    for (const auto& [name, value] : rows) os << name << ',' << format_real(value) << '\n';
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError(path.string(), "cannot open for writing");
    f << os.str();
    if (!f) throw IoError(path.string(), "write failed");
}

MetricRows read_metrics_csv(const std::filesystem::path& path) {
    std::ifstream f(path);
    if (!f) throw IoError(path.string(), "cannot open for reading");
    std::string line;
    if (!std::getline(f, line) || line != "metric,value") throw FormatError(path.string() + ": bad metrics header");
    MetricRows rows;
    while (std::getline(f, line)) {
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) throw FormatError(path.string() + ": malformed metrics row");
        const std::string value = line.substr(comma + 1);
        double v = 0.0;
        if (value == "nan") {
            v = std::numeric_limits<double>::quiet_NaN();
        } else {
            try {
                std::size_t used = 0;
                v = std::stod(value, &used);
                if (used != value.size()) throw FormatError(path.string() + ": bad metric value");
            } catch (const std::logic_error&) {
                throw FormatError(path.string() + ": bad metric value");
            }
        }
        rows.emplace_back(line.substr(0, comma), v);
    }
    return rows;
}

void write_edge_profile_csv(const std::vector<EdgeSample>& profile, const std::filesystem::path& path) {
    std::ostringstream os;
    os << "disc,boundary_angle,visible,gradient\n";
    for (const auto& s : profile)
        os << s.disc << ',' << format_real(s.boundary_angle) << ',' << (s.visible ? 1 : 0) << ','
           << format_real(s.gradient) << '\n';
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError(path.string(), "cannot open for writing");
    f << os.str();
    if (!f) throw IoError(path.string(), "write failed");
}

}  // namespace lvt
