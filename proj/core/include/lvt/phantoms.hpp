#pragma once

#include <filesystem>
#include <string>
#include <variant>
#include <vector>

#include "lvt/field.hpp"
#include "lvt/geometry.hpp"
#include "lvt/sonar_data.hpp"

namespace lvt {

struct Disc {
    Vec2 center;
    double radius = 0.0;
    double amplitude = 1.0;
};

/// Weighted sum of disc indicators supported in the open unit disk.
class DiscPhantom2D {
public:
    DiscPhantom2D() = default;
    /// Throws InvalidArgument unless every disc has radius > 0 and |c| + radius < 1.
    explicit DiscPhantom2D(std::vector<Disc> discs);

    const std::vector<Disc>& discs() const { return discs_; }
    bool empty() const { return discs_.empty(); }
    /// Sum of amplitudes of the discs containing p.
    double value(Vec2 p) const;

private:
    std::vector<Disc> discs_;
};

struct Ball {
    Vec3 center;
    double radius = 0.0;
    double amplitude = 1.0;
};

/// Weighted sum of ball indicators supported in the open upper half space.
class BallPhantom3D {
public:
    BallPhantom3D() = default;
    /// Throws InvalidArgument unless every ball has radius > 0 and c3 - radius > 0.
    explicit BallPhantom3D(std::vector<Ball> balls);

    const std::vector<Ball>& balls() const { return balls_; }
    bool empty() const { return balls_.empty(); }
    double value(Vec3 p) const;
    double total_abs_amplitude() const;

private:
    std::vector<Ball> balls_;
};

/// Mean of the indicator of the disc (c, rho) over the circle of radius r
/// centred at the detector theta(phi): the arc fraction inside the disc.
double circular_mean_disc(Vec2 c, double rho, double phi, double r);

/// Mean of the indicator of the ball (c, rho) over the sphere S(y, r)
/// centred at (y, 0): the spherical-cap area fraction.
double spherical_mean_ball(Vec3 c, double rho, Vec2 y, double r);

/// Point-sampled raster of the phantom at pixel centers.
ScalarField2D rasterize(const DiscPhantom2D& phantom, const GridSpec2D& grid);

Sinogram analytic_circular_sinogram(const DiscPhantom2D& phantom, const SinogramGrid& grid);
SonarData analytic_sonar_data(const BallPhantom3D& phantom, const SonarGrid& grid);

using Phantom = std::variant<DiscPhantom2D, BallPhantom3D>;

/// Parse `{"discs": [{cx,cy,rho,amp}, ...]}` or `{"balls": [{cx,cy,cz,rho,amp}, ...]}`.
/// Malformed documents throw FormatError; invariant violations throw InvalidArgument.
Phantom parse_phantom_json(const std::string& text);
Phantom load_phantom(const std::filesystem::path& path);
std::string phantom_to_json(const Phantom& phantom);
void save_phantom(const Phantom& phantom, const std::filesystem::path& path);

}  // namespace lvt
