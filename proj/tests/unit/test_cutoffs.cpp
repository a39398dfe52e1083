#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "lvt/cutoffs.hpp"
#include "lvt/error.hpp"

using namespace lvt;

TEST(NuEps, ExactValues) {
    for (double eps : {0.1, 0.5, 1.0, kPi / 10.0}) {
        EXPECT_EQ(nu_eps(0.0, eps), 1.0);
        EXPECT_EQ(nu_eps(eps, eps), 0.0);
        EXPECT_EQ(nu_eps(-eps, eps), 0.0);
        EXPECT_EQ(nu_eps(2.0 * eps, eps), 0.0);
        EXPECT_NEAR(nu_eps(0.5 * eps, eps), std::exp(-1.0 / 3.0), 1e-12);
    }
    EXPECT_NEAR(nu_eps(0.5, 1.0), 0.7165313, 1e-7);
    EXPECT_THROW(nu_eps(0.0, 0.0), InvalidArgument);
}

TEST(NuEps, EvenAndDecreasing) {
    double prev = 1.0;
    for (int k = 0; k <= 1000; ++k) {
        const double t = 0.3 * k / 1000.0;
        const double v = nu_eps(t, 0.3);
        EXPECT_EQ(v, nu_eps(-t, 0.3));
        EXPECT_LE(v, prev);
        prev = v;
    }
}

TEST(AngularCutoff, Examples) {
    const AngularRange r{0.0, kPi};
    EXPECT_EQ(angular_cutoff_value(r, kPi / 4.0, kPi / 2.0), 1.0);
    EXPECT_EQ(angular_cutoff_value(r, kPi / 4.0, 0.0), 0.0);
    EXPECT_NEAR(angular_cutoff_value(r, kPi / 4.0, kPi / 8.0), std::exp(-1.0 / 3.0), 1e-12);
    EXPECT_EQ(angular_cutoff_value(r, kPi / 4.0, 1.5 * kPi), 0.0);
    EXPECT_THROW(angular_cutoff_value(r, kPi / 2.0, 1.0), InvalidArgument);
    EXPECT_THROW(angular_cutoff_value(r, 0.0, 1.0), InvalidArgument);
}

TEST(AngularCutoff, SweepIsBoundedSmoothAndBelowHard) {
    const AngularRange r{deg_to_rad(25.0), deg_to_rad(155.0)};
    const double eps = deg_to_rad(18.0);
    const int n = 10000;
    const double h = kTwoPi / n;
    double prev = angular_cutoff_value(r, eps, 0.0);
    double max_step = 0.0;
    for (int k = 0; k <= n; ++k) {
        const double phi = k * h;
        const double v = angular_cutoff_value(r, eps, phi);
        EXPECT_GE(v, 0.0);
        EXPECT_LE(v, r.contains(phi) ? 1.0 : 0.0);
        max_step = std::max(max_step, std::abs(v - prev) / h);
        prev = v;
    }
    EXPECT_LE(max_step, 10.0 / eps);
}

TEST(AngularRange, ContainsModuloTurn) {
    const AngularRange r{-0.5, 0.5};
    EXPECT_TRUE(r.contains(kTwoPi - 0.25));
    EXPECT_TRUE(r.contains(0.5));
    EXPECT_FALSE(r.contains(0.6));
    EXPECT_TRUE((AngularRange{0.0, kTwoPi}.is_full()));
    EXPECT_THROW((AngularRange{1.0, 1.0}.validate()), InvalidArgument);
    EXPECT_THROW((AngularRange{0.0, 7.0}.validate()), InvalidArgument);
}

TEST(ApplyAngularCutoff, HardModes) {
    const SinogramGrid g{0.0, kPi, 19, 2.0, 5};
    std::vector<double> v(g.size());
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (auto& x : v) x = u(rng);
    const Sinogram s(g, v);
    const auto same = apply_angular_cutoff(s, {0.0, kPi}, HardCutoff{});
    EXPECT_TRUE(std::equal(v.begin(), v.end(), same.values().begin()));
    for (double x : apply_angular_cutoff(s, {4.0, 5.0}, HardCutoff{}).values()) EXPECT_EQ(x, 0.0);
    const auto twice = apply_angular_cutoff(apply_angular_cutoff(s, {0.5, 2.0}, HardCutoff{}), {0.5, 2.0}, HardCutoff{});
    const auto once = apply_angular_cutoff(s, {0.5, 2.0}, HardCutoff{});
    EXPECT_TRUE(std::equal(once.values().begin(), once.values().end(), twice.values().begin()));
}

TEST(ApplyAngularCutoff, SmoothPlateauUnchanged) {
    const SinogramGrid g{0.0, kPi, 181, 2.0, 4};
    Sinogram s(g, std::vector<double>(g.size(), 2.0));
    const double eps = 0.05;
    const auto out = apply_angular_cutoff(s, {0.0, kPi}, SmoothCutoff{eps});
    for (int i = 0; i < g.nphi; ++i) {
        const double phi = g.phi(i);
        if (phi >= eps && phi <= kPi - eps) {
            for (int k = 0; k < g.nr; ++k) EXPECT_EQ(out.at(i, k), 2.0);
        }
    }
    EXPECT_EQ(out.at(0, 0), 0.0);
}

TEST(CenterSet, ShapesAndQueries) {
    const auto rect = CenterSet::rectangle({1.0, -1.0}, {2.0, 3.0});
    EXPECT_TRUE(rect.contains({3.0, 2.0}));
    EXPECT_FALSE(rect.contains({3.1, 0.0}));
    EXPECT_DOUBLE_EQ(rect.area(), 24.0);
    EXPECT_DOUBLE_EQ(rect.inner_size(), 2.0);
    EXPECT_EQ(rect.corners().size(), 4u);
    const auto disc = CenterSet::disc({0.0, 0.0}, 2.0);
    EXPECT_TRUE(disc.corners().empty());
    EXPECT_NEAR(disc.area(), 4.0 * kPi, 1e-12);
    EXPECT_THROW(CenterSet::disc({0.0, 0.0}, 0.0), InvalidArgument);
    EXPECT_THROW(CenterSet::rectangle({0.0, 0.0}, {1.0, -1.0}), InvalidArgument);
}

TEST(CenterSet, BoundarySamplesLieOnBoundaryWithOutwardNormals) {
    for (const auto& k : {CenterSet::rectangle({0.5, 0.0}, {3.0, 2.0}), CenterSet::disc({0.5, -0.5}, 2.0)}) {
        const auto samples = k.boundary_samples(101);
        ASSERT_EQ(samples.size(), 101u);
        for (const auto& s : samples) {
            EXPECT_NEAR(norm(s.normal), 1.0, 1e-14);
            EXPECT_TRUE(k.contains(s.point - 1e-6 * s.normal));
            EXPECT_FALSE(k.contains(s.point + 1e-6 * s.normal));
        }
    }
}

TEST(CenterCutoff, Examples) {
    const double R = 3.0;
    const double eps = 0.5;
    const auto disc = CenterSet::disc({1.0, 1.0}, R);
    EXPECT_EQ(center_cutoff_value(disc, eps, {1.0, 1.0}), 1.0);
    EXPECT_EQ(center_cutoff_value(disc, eps, {5.0, 1.0}), 0.0);
    EXPECT_NEAR(center_cutoff_value(disc, eps, {1.0 + R - eps / 2.0, 1.0}), std::exp(-1.0 / 3.0), 1e-12);
    const auto rect = CenterSet::rectangle({0.0, 0.0}, {3.0, 3.0});
    EXPECT_EQ(center_cutoff_value(rect, 0.75, {0.0, 0.0}), 1.0);
    EXPECT_EQ(center_cutoff_value(rect, 0.75, {2.25, -2.25}), 1.0);
    EXPECT_NEAR(center_cutoff_value(rect, 0.75, {2.625, 2.625}), std::exp(-2.0 / 3.0), 1e-12);
    EXPECT_EQ(center_cutoff_value(rect, 0.75, {3.5, 0.0}), 0.0);
    EXPECT_THROW(center_cutoff_value(rect, 1.5, {0.0, 0.0}), InvalidArgument);
}

TEST(CenterCutoff, RangeAndBelowHard) {
    const auto rect = CenterSet::rectangle({0.0, 0.0}, {3.0, 2.0});
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> u(-4.0, 4.0);
    for (int k = 0; k < 10000; ++k) {
        const Vec2 y{u(rng), u(rng)};
        const double v = center_cutoff_value(rect, 0.6, y);
        EXPECT_GE(v, 0.0);
        EXPECT_LE(v, rect.contains(y) ? 1.0 : 0.0);
    }
}

TEST(ApplyCenterCutoff, HardAndSmooth) {
    const SonarGrid g{-3.0, 3.0, -3.0, 3.0, 13, 13, 6.0, 4};
    SonarData d(g, std::vector<double>(g.size(), 1.5));
    const auto all = apply_center_cutoff(d, CenterSet::rectangle({0.0, 0.0}, {3.0, 3.0}), HardCutoff{});
    for (double v : all.values()) EXPECT_EQ(v, 1.5);
    const auto none = apply_center_cutoff(d, CenterSet::disc({10.0, 10.0}, 1.0), HardCutoff{});
    for (double v : none.values()) EXPECT_EQ(v, 0.0);
    const auto k = CenterSet::rectangle({0.0, 0.0}, {3.0, 3.0});
    const auto smooth = apply_center_cutoff(d, k, SmoothCutoff{0.75});
    for (int a = 0; a < g.ny1; ++a)
        for (int b = 0; b < g.ny2; ++b) {
            const Vec2 y = g.center(a, b);
            const double expect = (std::abs(y.x) <= 2.25 && std::abs(y.y) <= 2.25) ? 1.5 : 1.5 * center_cutoff_value(k, 0.75, y);
            EXPECT_EQ(smooth.at(a, b, 0), expect);
        }
}
