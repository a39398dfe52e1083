#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "lvt/error.hpp"
#include "lvt/metrics.hpp"
#include "oracles.hpp"

using namespace lvt;

namespace {

Mask2D some_mask(const GridSpec2D& grid) {
    Mask2D m(grid);
    for (int j = 0; j < grid.ny; j += 2)
        for (int i = j % 3; i < grid.nx; i += 3) m.set(i, j);
    return m;
}

}  // namespace

TEST(BandRms, Examples) {
    const auto grid = GridSpec2D::square(12);
    const auto mask = some_mask(grid);
    EXPECT_EQ(band_rms(ScalarField2D(grid, std::vector<double>(grid.size(), 1.0)), mask), 1.0);
    EXPECT_EQ(band_rms(ScalarField2D(grid), mask), 0.0);
    ScalarField2D three(grid);
    for (int j = 0; j < grid.ny; ++j)
        for (int i = 0; i < grid.nx; ++i)
            if (mask.at(i, j)) three.at(i, j) = 3.0;
    EXPECT_DOUBLE_EQ(band_rms(three, mask), 3.0);
    EXPECT_THROW(band_rms(three, Mask2D(grid)), InvalidArgument);
    EXPECT_THROW(band_rms(three, Mask2D(GridSpec2D::square(4))), InvalidArgument);
}

TEST(BandRms, ScaleEquivariant) {
    const auto grid = GridSpec2D::square(16);
    std::mt19937_64 rng(2);
    std::normal_distribution<double> g(0.0, 1.0);
    ScalarField2D f(grid), sf(grid);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        f.values()[i] = g(rng);
        sf.values()[i] = -2.5 * f.values()[i];
    }
    EXPECT_NEAR(band_rms(sf, some_mask(grid)), 2.5 * band_rms(f, some_mask(grid)), 1e-12);
}

TEST(ReductionRatio, IdentityCapAndZero) {
    const auto grid = GridSpec2D::square(8);
    const auto mask = some_mask(grid);
    ScalarField2D f(grid, std::vector<double>(grid.size(), 0.7));
    EXPECT_EQ(artifact_reduction_ratio(f, f, mask), 1.0);
    EXPECT_EQ(artifact_reduction_ratio(f, ScalarField2D(grid), mask), kMaxReductionRatio);
    EXPECT_EQ(artifact_reduction_ratio(ScalarField2D(grid), ScalarField2D(grid), mask), 1.0);
    EXPECT_THROW(artifact_reduction_ratio(f, f, Mask2D(grid)), InvalidArgument);
}

TEST(EdgeProfile, ZeroFieldAndFlags) {
    const DiscPhantom2D p({{{0.0, 0.0}, 0.5, 1.0}});
    const auto grid = GridSpec2D::square(64);
    const auto zero = edge_visibility_profile(ScalarField2D(grid), p, {0.0, kTwoPi}, 32);
    ASSERT_EQ(zero.size(), 32u);
    for (const auto& s : zero) {
        EXPECT_EQ(s.gradient, 0.0);
        EXPECT_TRUE(s.visible);
    }
    const AngularRange quarter{0.5 * kPi, kPi};
    const auto prof = edge_visibility_profile(ScalarField2D(grid), p, quarter, 16);
    EXPECT_EQ(prof[0].boundary_angle, 0.0);
    EXPECT_TRUE(prof[0].visible);
    EXPECT_THROW(edge_visibility_profile(ScalarField2D(grid), p, quarter, 15), InvalidArgument);
}

TEST(EdgeProfile, FlagsIgnoreTheField) {
    const DiscPhantom2D p({{{0.1, 0.0}, 0.4, 1.0}, {{-0.3, 0.2}, 0.2, 1.0}});
    const auto grid = GridSpec2D::square(32);
    std::mt19937_64 rng(4);
    std::normal_distribution<double> g(0.0, 1.0);
    ScalarField2D f(grid);
    for (auto& v : f.values()) v = g(rng);
    const AngularRange range{0.3, 1.9};
    const auto a = edge_visibility_profile(ScalarField2D(grid), p, range, 64);
    const auto b = edge_visibility_profile(f, p, range, 64);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].visible, b[i].visible);
        EXPECT_EQ(a[i].disc, b[i].disc);
    }
}

TEST(EdgeProfile, GradientOfALinearRamp) {
    const auto grid = GridSpec2D::square(200);
    ScalarField2D f(grid);
    for (int j = 0; j < grid.ny; ++j)
        for (int i = 0; i < grid.nx; ++i) f.at(i, j) = 3.0 * grid.x_center(i);
    const auto prof = edge_visibility_profile(f, DiscPhantom2D({{{0.0, 0.0}, 0.5037, 1.0}}), {0.0, kTwoPi}, 16);
    EXPECT_NEAR(prof[0].gradient, 3.0, 1e-9);
    EXPECT_NEAR(prof[8].gradient, 3.0, 1e-9);
}

TEST(EdgeProfile, EndpointDistanceAndMean) {
    const AngularRange range{0.0, kPi};
    EXPECT_NEAR(angular_distance_to_endpoints(0.5 * kPi, range), 0.5 * kPi, 1e-15);
    EXPECT_NEAR(angular_distance_to_endpoints(kPi + 0.1, range), 0.1, 1e-12);
    EXPECT_NEAR(angular_distance_to_endpoints(-0.2, range), 0.2, 1e-12);
    const std::vector<EdgeSample> prof{{0, 0.0, true, 5.0}, {0, 0.5 * kPi, true, 2.0}, {0, 0.5 * kPi, false, 9.0}};
    EXPECT_EQ(mean_visible_edge_gradient(prof, range, 0.2), 2.0);
    EXPECT_TRUE(std::isnan(mean_visible_edge_gradient(prof, range, 2.0)));
}

TEST(MetricsCsv, RoundTrip) {
    const auto dir = oracle::scratch_dir("metrics");
    const MetricRows rows{{"a", 1.5}, {"b", -0.1}, {"c", std::nan("")}};
    write_metrics_csv(rows, dir / "m.csv");
    EXPECT_EQ(oracle::slurp(dir / "m.csv").rfind("metric,value\n", 0), 0u);
    const auto back = read_metrics_csv(dir / "m.csv");
    ASSERT_EQ(back.size(), 3u);
    EXPECT_EQ(back[0], rows[0]);
    EXPECT_EQ(back[1], rows[1]);
    EXPECT_TRUE(std::isnan(back[2].second));
    write_edge_profile_csv({{0, 0.25, true, 1.0}}, dir / "e.csv");
    EXPECT_EQ(oracle::slurp(dir / "e.csv").rfind("disc,boundary_angle,visible,gradient\n", 0), 0u);
    std::filesystem::remove_all(dir);
}
