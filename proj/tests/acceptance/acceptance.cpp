// Acceptance suite: one PASS/FAIL line per criterion.
//
//   lvt_acceptance            run every criterion
//   lvt_acceptance --only N   run criterion N
//
// Exit status is 0 only when every selected criterion passes.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cli.hpp"
#include "lvt/circular.hpp"
#include "lvt/cutoffs.hpp"
#include "lvt/experiments.hpp"
#include "lvt/microlocal.hpp"
#include "lvt/phantoms.hpp"
#include "oracles.hpp"

using namespace lvt;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

const DiscPhantom2D& centred_disc() {
    static const DiscPhantom2D p({{{0.0, 0.0}, 0.5, 1.0}});
    return p;
}

Outcome numeric_vs_analytic() {
    const SinogramGrid sg{0.0, kTwoPi * 179.0 / 180.0, 180, 2.0, 256};
    const auto num_s = forward_circular_numeric(rasterize(centred_disc(), GridSpec2D::square(512)), sg, 2048);
    const auto ana = analytic_circular_sinogram(centred_disc(), sg);
    double s2 = 0.0, sup = 0.0;
    for (std::size_t i = 0; i < ana.values().size(); ++i) {
        const double e = std::abs(num_s.values()[i] - ana.values()[i]);
        s2 += e * e;
        sup = std::max(sup, e);
    }
    const double rms = std::sqrt(s2 / static_cast<double>(ana.values().size()));
    return {rms < 1e-3 && sup < 5e-3, "rms=" + num(rms) + " (< 1e-3) sup=" + num(sup) + " (< 5e-3)"};
}

Outcome adjoint_identity() {
    std::mt19937_64 rng(20240611);
    const auto grid = GridSpec2D::square(256);
    const SinogramGrid sg{0.0, kTwoPi, 361, 2.0, 256};
    const auto w = sg.angular_weights();
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        const auto f = oracle::GaussianSum::random(rng, 1 + trial % 4);
        ScalarField2D fr(grid);
        for (int j = 0; j < grid.ny; ++j)
            for (int i = 0; i < grid.nx; ++i) fr.at(i, j) = f(grid.x_center(i), grid.y_center(j));

        struct Term {
            double r0, s, a, phase, amp;
        };
        std::vector<Term> terms;
        for (int k = 0; k < 3; ++k)
            terms.push_back({0.3 + 1.4 * u(rng), 0.1 + 0.2 * u(rng), u(rng), kTwoPi * u(rng), 0.5 + u(rng)});
        Sinogram g(sg);
        for (int i = 0; i < sg.nphi; ++i)
            for (int k = 0; k < sg.nr; ++k) {
                double v = 0.0;
                for (const auto& t : terms) {
                    const double d = sg.r(k) - t.r0;
                    v += t.amp * std::exp(-d * d / (2.0 * t.s * t.s)) * (1.0 + t.a * std::cos(sg.phi(i) - t.phase));
                }
                g.at(i, k) = v;
            }

        const auto mf = forward_circular_numeric(fr, sg, 512);
        const auto mg = backproject_circular(g, grid);
        double lhs = 0.0, nmf = 0.0, ng = 0.0, rhs = 0.0;
        for (int i = 0; i < sg.nphi; ++i)
            for (int k = 0; k < sg.nr; ++k) {
                const double m = w[i] * sg.dr();
                lhs += mf.at(i, k) * g.at(i, k) * m;
                nmf += mf.at(i, k) * mf.at(i, k) * m;
                ng += g.at(i, k) * g.at(i, k) * m;
            }
        for (std::size_t i = 0; i < grid.size(); ++i) rhs += fr.values()[i] * mg.values()[i];
        rhs *= grid.pixel_area();
        worst = std::max(worst, std::abs(lhs - rhs) / std::sqrt(nmf * ng));
    }
    return {worst < 0.01, "worst relative mismatch over 20 pairs=" + num(worst) + " (< 0.01)"};
}

Outcome cutoff_exactness() {
    bool ok = true;
    int violations = 0;
    for (double eps : {0.05, 0.3, deg_to_rad(18.0), 1.0}) {
        ok &= nu_eps(0.0, eps) == 1.0;
        ok &= nu_eps(eps, eps) == 0.0 && nu_eps(-eps, eps) == 0.0;
        ok &= std::abs(nu_eps(0.5 * eps, eps) - std::exp(-1.0 / 3.0)) <= 1e-12;
    }
    const std::vector<std::pair<AngularRange, double>> cases{
        {{deg_to_rad(25.0), deg_to_rad(155.0)}, deg_to_rad(18.0)},
        {{0.0, kPi}, deg_to_rad(18.0)},
        {{0.0, kPi}, kPi / 4.0},
        {{-1.0, 2.5}, 0.4}};
    const int n = 10000;
    for (const auto& [range, eps] : cases) {
        for (int k = 0; k < n; ++k) {
            const double phi = kTwoPi * k / n;
            const double v = angular_cutoff_value(range, eps, phi);
            const double t = wrap_angle(phi, range.a) - range.a;
            const double width = range.b - range.a;
            bool good = true;
            if (t > width)
                good = v == 0.0;
            else if (t >= eps && t <= width - eps)
                good = v == 1.0;
            else
                good = v >= 0.0 && v <= 1.0;
            if (t == 0.0 || t == width) good = v == 0.0;
            if (!good) ++violations;
        }
    }
    ok &= violations == 0;
    return {ok, "nu_eps exact at 0, +-eps, eps/2; plateau/support violations over 4 x 1e4 samples=" +
                    std::to_string(violations)};
}

Outcome canonical_round_trip() {
    std::mt19937_64 rng(7001);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    double worst_x = 0.0, worst_xi = 0.0, worst_circle = 0.0;
    int used = 0;
    while (used < 10000) {
        const Covector3D cv{{4.0 * u(rng), 4.0 * u(rng), 0.01 + 3.0 * (u(rng) + 1.0)}, {u(rng), u(rng), u(rng)}};
        if (!(std::abs(cv.xi.z) > 1e-3)) continue;
        ++used;
        const auto d = sonar_cov_to_data(cv);
        const auto back = sonar_data_to_cov(d.y, d.r, d.alpha * d.omega.horizontal(), d.alpha);
        worst_x = std::max(worst_x, norm(back.x - cv.x));
        worst_xi = std::max(worst_xi, norm(back.xi / norm(back.xi) - cv.xi / norm(cv.xi)));
    }
    for (int k = 0; k < 10000; ++k) {
        const double q = std::sqrt(0.5 * (u(rng) + 1.0)) * 0.9999;
        const double t = kPi * u(rng);
        const Covector2D cv{{q * std::cos(t), q * std::sin(t)}, {u(rng), u(rng) + 1e-3}};
        const auto [p1, p2] = ray_circle_angles(cv);
        const Vec2 dir = cv.xi / norm(cv.xi);
        for (double p : {p1, p2}) {
            const Vec2 th = unit_circle_point(p);
            // foot of the line point nearest theta, then its distance from S^1
            const Vec2 foot = cv.x + dot(th - cv.x, dir) * dir;
            worst_circle = std::max(worst_circle, std::abs(norm(foot) - 1.0));
        }
    }
    const bool ok = worst_x <= 1e-10 && worst_xi <= 1e-10 && worst_circle <= 1e-12;
    return {ok, "x err=" + num(worst_x) + " xi direction err=" + num(worst_xi) + " (<= 1e-10); S^1 err=" +
                    num(worst_circle) + " (<= 1e-12)"};
}

PatArtifactConfig pat_config() {
    PatArtifactConfig c;
    c.phantom = centred_disc();
    c.range = {0.0, kPi};
    c.nphi = 750;
    c.nr = 256;
    c.rmax = 2.0;
    c.eps = deg_to_rad(18.0);
    c.order = RadialFilterOrder::second;
    c.grid = GridSpec2D::square(256);
    c.tube = 1.5 * c.grid.dx();
    c.edge_exclusion = 0.1;
    return c;
}

const PatArtifactReport& pat_report() {
    static const PatArtifactReport rep = run_pat_artifact_experiment(pat_config());
    return rep;
}

Outcome pat_localization() {
    const auto& rep = pat_report();
    bool circles_ok = rep.curves.count_circles() == 4 && rep.curves.curves.size() == 4;
    for (const auto& c : rep.curves.curves) {
        const auto& ci = std::get<ArtifactCircle2D>(c);
        circles_ok &= std::abs(std::abs(ci.center.x) - 1.0) < 1e-12 && std::abs(ci.center.y) < 1e-12;
        circles_ok &= std::abs(ci.radius - 0.5) < 1e-12 || std::abs(ci.radius - 1.5) < 1e-12;
    }
    const bool ok = circles_ok && rep.localization_ratio >= 3.0;
    return {ok, "circles=" + std::to_string(rep.curves.count_circles()) + (circles_ok ? " (centres +-1, radii 0.5/1.5)" : " (wrong)") +
                    " artifact/control rms=" + num(rep.localization_ratio) + " (>= 3)"};
}

Outcome pat_reduction() {
    const auto& rep = pat_report();
    const double edge = rep.smooth_edge_gradient / rep.hard_edge_gradient;
    const bool ok = rep.reduction_ratio >= 2.0 && std::abs(edge - 1.0) <= 0.25;
    return {ok, "reduction=" + num(rep.reduction_ratio) + " (>= 2) visible-edge gradient smooth/hard=" + num(edge) +
                    " (within 0.75..1.25)"};
}

double equal_area_disc_radius(const CenterSet& square) { return std::sqrt(square.area() / kPi); }

Outcome sonar_localization() {
    const auto rep = run_sonar_artifact_experiment(desk_sonar_config(CenterSet::rectangle({0.0, 0.0}, {3.0, 3.0})));
    const bool ok = rep.localization_ratio >= 2.0 && rep.reduction_ratio >= 2.0;
    return {ok, "artifact/control rms=" + num(rep.localization_ratio) + " (>= 2) reduction=" + num(rep.reduction_ratio) +
                    " (>= 2)"};
}

Outcome corner_vs_smooth() {
    const auto square = CenterSet::rectangle({0.0, 0.0}, {3.0, 3.0});
    const auto disc = CenterSet::disc({0.0, 0.0}, equal_area_disc_radius(square));
    const auto a = run_sonar_artifact_experiment(desk_sonar_config(square));
    const auto b = run_sonar_artifact_experiment(desk_sonar_config(disc));
    const double ratio = static_cast<double>(a.predicted_area) / static_cast<double>(b.predicted_area);
    const bool ok = a.curves.count_hemispheres() > 0 && b.curves.count_hemispheres() == 0 && ratio >= 1.5;
    return {ok, "hemispheres square=" + std::to_string(a.curves.count_hemispheres()) +
                    " disc=" + std::to_string(b.curves.count_hemispheres()) + " area square/disc=" +
                    std::to_string(a.predicted_area) + "/" + std::to_string(b.predicted_area) + "=" + num(ratio) +
                    " (>= 1.5)"};
}

Outcome cap_oracle() {
    std::mt19937_64 rng(424242);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    int within = 0;
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
        const double rho = 0.2 + 1.3 * u(rng);
        const double c[3] = {4.0 * u(rng) - 2.0, 4.0 * u(rng) - 2.0, rho + 0.05 + 3.0 * u(rng)};
        const Vec2 y{4.0 * u(rng) - 2.0, 4.0 * u(rng) - 2.0};
        const double d = norm(Vec3{c[0], c[1], c[2]} - on_surface(y));
        const double r = std::max(1e-3, d + rho * (1.8 * u(rng) - 0.9));
        const double exact = spherical_mean_ball({c[0], c[1], c[2]}, rho, y, r);
        const auto mc = oracle::sphere_fraction_in_ball(c, rho, y.x, y.y, r, 1000000, rng);
        const double z = std::abs(exact - mc.mean) / mc.stderr_;
        worst = std::max(worst, z);
        if (z <= 3.0) ++within;
    }
    const double a = spherical_mean_ball({0.0, 0.0, 3.0}, 1.0, {0.0, 0.0}, 3.0);
    const double b = spherical_mean_ball({0.0, 1.0, 4.0}, 1.0, {0.0, 1.0}, 4.0);
    const bool reference = std::abs(a - 1.0 / 36.0) < 1e-12 && std::abs(b - 1.0 / 64.0) < 1e-12;
    return {within == 100 && reference, "within 3 SE: " + std::to_string(within) + "/100 (worst " + num(worst) +
                                           " SE); reference balls " + num(a) + ", " + num(b) + " (1/36, 1/64)"};
}

Outcome demo_determinism() {
    const auto root = oracle::scratch_dir("accept_det");
    const auto a = root / "a";
    const auto b = root / "b";
    const int ca = cli::run({"demo", "fig3", "--out", a.string()});
    const int cb = cli::run({"demo", "fig3", "--out", b.string()});
    int files = 0, differ = 0;
    if (ca == 0 && cb == 0) {
        for (const auto& e : std::filesystem::directory_iterator(a)) {
            const auto name = e.path().filename();
            const auto ext = name.extension().string();
            if (ext != ".lvtf" && ext != ".csv") continue;
            ++files;
            if (oracle::slurp(e.path()) != oracle::slurp(b / name)) ++differ;
        }
    }
    std::filesystem::remove_all(root);
    const bool ok = ca == 0 && cb == 0 && files > 0 && differ == 0;
    return {ok, "exit codes " + std::to_string(ca) + "," + std::to_string(cb) + "; " + std::to_string(files) +
                    " LVTF1/CSV files, " + std::to_string(differ) + " differ"};
}

struct Criterion {
    int id;
    const char* title;
    std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Acceptance criteria"};
    int only = 0;
    app.add_option("--only", only, "Run a single criterion (1-10)")->check(CLI::Range(1, 10));
    CLI11_PARSE(app, argc, argv);

    const std::vector<Criterion> all{
        {1, "numeric circular means match the analytic oracle", numeric_vs_analytic},
        {2, "circular backprojection is the adjoint", adjoint_identity},
        {3, "cutoff functions are exact", cutoff_exactness},
        {4, "canonical maps round trip", canonical_round_trip},
        {5, "PAT artifacts sit on the predicted circles", pat_localization},
        {6, "smooth cutoff removes PAT artifacts, keeps edges", pat_reduction},
        {7, "sonar artifacts localised and reduced", sonar_localization},
        {8, "corners of K spread artifacts over hemispheres", corner_vs_smooth},
        {9, "spherical cap formula matches Monte Carlo", cap_oracle},
        {10, "demo fig3 is byte-for-byte reproducible", demo_determinism},
    };

    bool all_pass = true;
    for (const auto& c : all) {
        if (only != 0 && c.id != only) continue;
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("CRITERION %2d %s  %s: %s [%.1f s]\n", c.id, o.pass ? "PASS" : "FAIL", c.title, o.detail.c_str(),
                    secs);
        std::fflush(stdout);
        all_pass &= o.pass;
    }
    return all_pass ? 0 : 1;
}
