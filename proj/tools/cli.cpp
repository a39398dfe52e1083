#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>

#include <CLI11.hpp>

#include "lvt/circular.hpp"
#include "lvt/error.hpp"
#include "lvt/experiments.hpp"
#include "lvt/io.hpp"
#include "lvt/metrics.hpp"
#include "lvt/microlocal.hpp"
#include "lvt/parallel.hpp"
#include "lvt/phantoms.hpp"
#include "lvt/reconstruct.hpp"
#include "lvt/spherical.hpp"

namespace lvt::cli {

namespace {

namespace fs = std::filesystem;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

double parse_number(const std::string& text, const std::string& what) {
    double v = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [p, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || p != last || !std::isfinite(v)) throw UsageError("bad number '" + text + "' in " + what);
    return v;
}

std::vector<double> split_numbers(const std::string& text, std::size_t expected, const std::string& what) {
    std::vector<double> out;
    std::size_t start = 0;
    while (true) {
        const auto colon = text.find(':', start);
        out.push_back(parse_number(text.substr(start, colon - start), what));
        if (colon == std::string::npos) break;
        start = colon + 1;
    }
    if (out.size() != expected) throw UsageError(what + " expects " + std::to_string(expected) + " values separated by ':'");
    return out;
}

/// "a:b" in degrees.
AngularRange parse_range(const std::string& text) {
    const auto v = split_numbers(text, 2, "--range");
    AngularRange r{deg_to_rad(v[0]), deg_to_rad(v[1])};
    if (!(r.b > r.a) || r.b - r.a > kTwoPi * (1.0 + 1e-12)) throw UsageError("--range needs a < b and b - a <= 360");
    return r;
}

std::string format_degrees(const AngularRange& r) {
    return format_real(rad_to_deg(r.a)) + ":" + format_real(rad_to_deg(r.b));
}

DiscPhantom2D demo_disc_phantom() { return DiscPhantom2D({{{0.0, 0.0}, 0.5, 1.0}}); }

std::pair<double, double> symmetric_window(const ScalarField2D& f) {
    double m = 0.0;
    for (double v : f.values()) m = std::max(m, std::abs(v));
    if (m == 0.0) m = 1.0;
    return {-m, m};
}

std::pair<double, double> positive_window(const ScalarField2D& f) {
    double m = 0.0;
    for (double v : f.values()) m = std::max(m, v);
    if (m <= 0.0) m = 1.0;
    return {0.0, m};
}

void write_text(const fs::path& path, const std::string& text) {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw IoError(path.string(), "cannot open for writing");
    os << text;
    if (!os) throw IoError(path.string(), "write failed");
}

CenterSet make_centers(const std::string& shape, double half) {
    if (shape == "rect") return CenterSet::rectangle({0.0, 0.0}, {half, half});
    if (shape == "disc") return CenterSet::disc({0.0, 0.0}, half);
    throw UsageError("--centers must be rect or disc");
}

GridSpec2D slice_grid_from(const std::string& extent, int size) {
    const auto v = split_numbers(extent, 4, "--slice-extent");
    GridSpec2D g{size, size, v[0], v[1], v[2], v[3]};
    if (!(g.xmax > g.xmin) || !(g.ymax > g.ymin) || size < 2) throw UsageError("degenerate --slice-extent or --size");
    return g;
}

const SonarPreset& sonar_defaults() {
    static const SonarPreset p = sonar_preset();
    return p;
}

std::string default_slice_extent() {
    const auto& g = sonar_defaults().slice_grid;
    return format_real(g.xmin) + ":" + format_real(g.xmax) + ":" + format_real(g.ymin) + ":" + format_real(g.ymax);
}

// ---------------------------------------------------------------------------

struct PhantomArgs {
    std::string file;
    std::string out;
    std::string raster;
    int size = 256;
};

void run_phantom(const PhantomArgs& a) {
    const Phantom ph = load_phantom(a.file);
    if (const auto* d = std::get_if<DiscPhantom2D>(&ph)) {
        std::cerr << "disc phantom: " << d->discs().size() << " component(s)\n";
        for (const auto& c : d->discs())
            std::cerr << "  centre (" << format_real(c.center.x) << ", " << format_real(c.center.y)
                      << ") radius " << format_real(c.radius) << " amplitude " << format_real(c.amplitude) << "\n";
        if (!a.raster.empty()) write_field(rasterize(*d, GridSpec2D::square(a.size)), a.raster);
    } else {
        const auto& b = std::get<BallPhantom3D>(ph);
        std::cerr << "ball phantom: " << b.balls().size() << " component(s)\n";
        for (const auto& c : b.balls())
            std::cerr << "  centre (" << format_real(c.center.x) << ", " << format_real(c.center.y) << ", "
                      << format_real(c.center.z) << ") radius " << format_real(c.radius) << " amplitude "
                      << format_real(c.amplitude) << "\n";
        if (!a.raster.empty()) throw UsageError("--raster applies to disc phantoms only");
    }
    if (!a.out.empty()) save_phantom(ph, a.out);
}

struct ForwardArgs {
    std::string phantom;
    std::string out;
    std::string mode = "analytic";
    std::string preset;
    std::string range = "0:360";
    int nphi = 360;
    int nr = 256;
    double rmax = 2.0;
    int n_arc = 2048;
    int size = 512;
    std::string centers = "rect";
    double k_half = 3.0;
    int n_centers = 33;
    int n_sph = 4096;
    CLI::App* cmd = nullptr;
};

void run_forward(ForwardArgs a) {
    if (a.mode != "analytic" && a.mode != "numeric") throw UsageError("--mode must be analytic or numeric");
    const Phantom ph = load_phantom(a.phantom);
    auto given = [&](const char* name) { return a.cmd->count(name) > 0; };
    if (const auto* d = std::get_if<DiscPhantom2D>(&ph)) {
        if (!a.preset.empty()) {
            if (a.preset == "sonar") throw UsageError("preset sonar needs a ball phantom");
            const auto p = circular_preset(a.preset);
            if (!given("--range")) a.range = format_degrees(p.range);
            if (!given("--nphi")) a.nphi = p.nphi;
            if (!given("--nr")) a.nr = p.nr;
            if (!given("--rmax")) a.rmax = p.rmax;
            if (!given("--size")) a.size = p.grid_n;
        }
        const AngularRange r = parse_range(a.range);
        const SinogramGrid sg{r.a, r.b, a.nphi, a.rmax, a.nr};
        sg.validate();
        const Sinogram s = a.mode == "analytic"
                               ? analytic_circular_sinogram(*d, sg)
                               : forward_circular_numeric(rasterize(*d, GridSpec2D::square(a.size)), sg, a.n_arc);
        write_sinogram(s, a.out);
        return;
    }
    const auto& b = std::get<BallPhantom3D>(ph);
    if (!a.preset.empty() && a.preset != "sonar") throw UsageError("ball phantoms take preset sonar");
    if (!a.preset.empty()) {
        const auto& g = sonar_defaults().data_grid;
        if (!given("--n-centers")) a.n_centers = g.ny1;
        if (!given("--nr")) a.nr = g.nr;
        if (!given("--rmax")) a.rmax = g.rmax;
        if (!given("--k-half")) a.k_half = g.y1max;
    } else if (!given("--nr") && !given("--rmax")) {
        a.nr = 128;
        a.rmax = 6.0;
    }
    const auto [lo, hi] = make_centers(a.centers, a.k_half).bounding_box();
    const SonarGrid sg{lo.x, hi.x, lo.y, hi.y, a.n_centers, a.n_centers, a.rmax, a.nr};
    sg.validate();
    const SonarData s = a.mode == "analytic" ? analytic_sonar_data(b, sg) : forward_spherical_numeric(b, sg, a.n_sph);
    write_sonar(s, a.out);
}

struct ReconstructArgs {
    std::string in;
    std::string out;
    std::string pgm;
    std::string preset;
    std::string range;
    std::string cutoff = "hard";
    double eps = 18.0;
    int order = 2;
    bool pressure = false;
    int size = 256;
    std::string centers = "rect";
    double k_half = 0.0;
    int slice_axis = 1;
    double slice_offset = 0.125;
    std::string slice_extent;
    CLI::App* cmd = nullptr;
};

Cutoff make_cutoff(const std::string& name, double eps) {
    if (name == "hard") return HardCutoff{};
    if (name == "smooth") return SmoothCutoff{eps};
    throw UsageError("--cutoff must be hard or smooth");
}

void run_reconstruct(ReconstructArgs a) {
    auto given = [&](const char* name) { return a.cmd->count(name) > 0; };
    ScalarField2D img;
    if (peek_kind(a.in) == LvtfKind::sinogram) {
        const Sinogram s = read_sinogram(a.in);
        AngularRange r{s.grid().phi0, s.grid().phi1};
        if (!a.preset.empty()) {
            if (a.preset == "sonar") throw UsageError("preset sonar needs sonar data");
            const auto p = circular_preset(a.preset);
            r = p.range;
            if (!given("--eps")) a.eps = rad_to_deg(p.eps);
            if (!given("--order")) a.order = static_cast<int>(p.order);
            if (!given("--size")) a.size = p.grid_n;
        }
        if (given("--range")) r = parse_range(a.range);
        CircularReconstructionOptions opts;
        opts.range = r;
        opts.cutoff = make_cutoff(a.cutoff, deg_to_rad(a.eps));
        opts.order = radial_filter_order(a.order);
        opts.pressure_mode = a.pressure;
        img = reconstruct_circular(s, opts, GridSpec2D::square(a.size));
    } else if (peek_kind(a.in) == LvtfKind::sonar) {
        const SonarData s = read_sonar(a.in);
        const auto& p = sonar_defaults();
        if (!a.preset.empty() && a.preset != "sonar") throw UsageError("sonar data take preset sonar");
        if (!given("--eps")) a.eps = p.eps;
        if (!given("--size")) a.size = p.slice_grid.nx;
        if (a.slice_extent.empty()) a.slice_extent = default_slice_extent();
        const double half = a.k_half > 0.0 ? a.k_half : 0.5 * (s.grid().y1max - s.grid().y1min);
        SonarReconstructionOptions opts;
        opts.centers = make_centers(a.centers, half);
        opts.cutoff = make_cutoff(a.cutoff, a.eps);
        opts.order = radial_filter_order(a.order);
        const SlicePlane plane{a.slice_axis, a.slice_offset};
        img = reconstruct_sonar(s, opts, plane, slice_grid_from(a.slice_extent, a.size));
    } else {
        throw UsageError("--in must hold a sinogram or sonar data, not a field");
    }
    write_field(img, a.out);
    if (!a.pgm.empty()) export_pgm(img, symmetric_window(img), a.pgm);
}

struct PredictArgs {
    std::string phantom;
    std::string out;
    std::string mask;
    std::string preset;
    std::string range = "0:180";
    double tube = 0.0;
    int size = 256;
    std::string centers = "rect";
    double k_half = 3.0;
    int n_boundary = 1024;
    int arc_samples = kDefaultArcSamples;
    bool points = false;
    int slice_axis = 1;
    double slice_offset = 0.125;
    std::string slice_extent;
    CLI::App* cmd = nullptr;
};

void run_predict(PredictArgs a) {
    auto given = [&](const char* name) { return a.cmd->count(name) > 0; };
    const Phantom ph = load_phantom(a.phantom);
    if (const auto* d = std::get_if<DiscPhantom2D>(&ph)) {
        if (!a.preset.empty()) {
            const auto p = circular_preset(a.preset);
            if (!given("--range")) a.range = format_degrees(p.range);
            if (!given("--size")) a.size = p.grid_n;
        }
        const auto curves = predicted_artifact_circles(*d, parse_range(a.range));
        write_text(a.out, curves_to_json(curves));
        if (!a.mask.empty()) {
            const auto grid = GridSpec2D::square(a.size);
            const double tube = a.tube > 0.0 ? a.tube : 1.5 * grid.dx();
            write_field(rasterize_mask(curves, grid, tube).to_field(), a.mask);
        }
        return;
    }
    const auto& b = std::get<BallPhantom3D>(ph);
    if (!given("--size")) a.size = sonar_defaults().slice_grid.nx;
    if (a.slice_extent.empty()) a.slice_extent = default_slice_extent();
    const auto curves = predicted_artifact_curves_sonar(b, make_centers(a.centers, a.k_half), a.n_boundary, a.arc_samples);
    write_text(a.out, curves_to_json(curves, a.points));
    if (!a.mask.empty()) {
        const auto grid = slice_grid_from(a.slice_extent, a.size);
        const double tube = a.tube > 0.0 ? a.tube : 1.5 * std::max(grid.dx(), grid.dy());
        write_field(rasterize_mask(curves, grid, tube, SlicePlane{a.slice_axis, a.slice_offset}).to_field(), a.mask);
    }
}

struct MetricsArgs {
    std::string hard;
    std::string smooth;
    std::string mask;
    std::string control;
    std::string out;
};

void run_metrics(const MetricsArgs& a) {
    const ScalarField2D hard = read_field(a.hard);
    const Mask2D mask = Mask2D::from_field(read_field(a.mask));
    MetricRows rows{{"artifact_rms", band_rms(hard, mask)}};
    if (!a.control.empty()) {
        const Mask2D control = Mask2D::from_field(read_field(a.control));
        const double c = band_rms(hard, control);
        rows.emplace_back("control_rms", c);
        rows.emplace_back("localization_ratio", c == 0.0 ? kMaxReductionRatio : band_rms(hard, mask) / c);
    }
    if (!a.smooth.empty()) {
        const ScalarField2D smooth = read_field(a.smooth);
        rows.emplace_back("smooth_rms", band_rms(smooth, mask));
        rows.emplace_back("artifact_reduction_ratio", artifact_reduction_ratio(hard, smooth, mask));
    }
    write_metrics_csv(rows, a.out);
}

struct DemoArgs {
    std::string name;
    std::string out;
    int size = 0;
};

void run_pat_demo(const DemoArgs& a) {
    const auto p = circular_preset(a.name);
    PatArtifactConfig c;
    c.phantom = demo_disc_phantom();
    c.range = p.range;
    c.nphi = p.nphi;
    c.nr = p.nr;
    c.rmax = p.rmax;
    c.eps = p.eps;
    c.order = p.order;
    c.grid = GridSpec2D::square(a.size > 0 ? a.size : p.grid_n);
    c.tube = 1.5 * c.grid.dx();
    const auto rep = run_pat_artifact_experiment(c);

    const fs::path dir(a.out);
    save_phantom(c.phantom, dir / "phantom.json");
    write_field(rep.phantom_image, dir / "phantom.lvtf");
    write_sinogram(rep.data, dir / "data.lvtf");
    write_field(rep.hard, dir / "hard.lvtf");
    write_field(rep.smooth, dir / "smooth.lvtf");
    write_field(rep.artifact_mask.to_field(), dir / "artifact_mask.lvtf");
    write_field(rep.control_mask.to_field(), dir / "control_mask.lvtf");
    write_text(dir / "curves.json", curves_to_json(rep.curves));
    write_metrics_csv(rep.metrics(), dir / "metrics.csv");
    write_edge_profile_csv(rep.hard_profile, dir / "edge_profile_hard.csv");
    write_edge_profile_csv(rep.smooth_profile, dir / "edge_profile_smooth.csv");
    const auto window = symmetric_window(rep.hard);
    export_pgm(rep.phantom_image, positive_window(rep.phantom_image), dir / "phantom.pgm");
    export_pgm(rep.hard, window, dir / "hard.pgm");
    export_pgm(rep.smooth, window, dir / "smooth.pgm");
}

void run_sonar_demo(const DemoArgs& a) {
    const double half = sonar_defaults().centers.inner_size();
    const CenterSet k = a.name == "sonar-corner" ? CenterSet::rectangle({0.0, 0.0}, {half, half})
                                                 : CenterSet::disc({0.0, 0.0}, 2.0 * half / std::sqrt(kPi));
    SonarArtifactConfig c = desk_sonar_config(k);
    if (a.size > 0) {
        c.slice_grid.nx = a.size;
        c.slice_grid.ny = a.size;
    }
    const auto rep = run_sonar_artifact_experiment(c);

    const fs::path dir(a.out);
    save_phantom(c.phantom, dir / "phantom.json");
    write_sonar(rep.data, dir / "data.lvtf");
    write_field(rep.hard, dir / "hard.lvtf");
    write_field(rep.smooth, dir / "smooth.lvtf");
    write_field(rep.predicted_mask.to_field(), dir / "predicted_mask.lvtf");
    write_field(rep.artifact_mask.to_field(), dir / "artifact_mask.lvtf");
    write_field(rep.control_mask.to_field(), dir / "control_mask.lvtf");
    write_text(dir / "curves.json", curves_to_json(rep.curves, false));
    write_metrics_csv(rep.metrics(), dir / "metrics.csv");
    const auto window = symmetric_window(rep.hard);
    export_pgm(rep.hard, window, dir / "hard.pgm");
    export_pgm(rep.smooth, window, dir / "smooth.pgm");
}

void run_demo(const DemoArgs& a) {
    std::error_code ec;
    fs::create_directories(a.out, ec);
    if (ec) throw IoError(a.out, "cannot create output directory: " + ec.message());
    if (a.name == "fig1" || a.name == "fig3")
        run_pat_demo(a);
    else
        run_sonar_demo(a);
}

void add_sonar_slice_options(CLI::App* cmd, int& axis, double& offset, std::string& extent) {
    cmd->add_option("--slice-axis", axis, "Slice normal axis (1 or 2)")->check(CLI::IsMember({1, 2}));
    cmd->add_option("--slice-offset", offset, "Slice position along its axis");
    cmd->add_option("--slice-extent", extent, "Slice raster u0:u1:z0:z1 (z is depth, must stay > 0)");
}

}  // namespace

int run(const std::vector<std::string>& args) {
    CLI::App app{"lvt: limited-view circular and spherical mean tomography"};
    app.name("lvt");
    app.require_subcommand(1);
    int threads = 0;
    app.add_option("--threads", threads, "Maximum worker threads (0 = default)")->check(CLI::NonNegativeNumber);

    PhantomArgs pa;
    auto* phantom = app.add_subcommand("phantom", "Validate and describe a phantom file");
    phantom->add_option("file", pa.file, "Phantom JSON")->required()->check(CLI::ExistingFile);
    phantom->add_option("--out", pa.out, "Write the normalised phantom JSON");
    phantom->add_option("--raster", pa.raster, "Write a point-sampled raster over [-1,1]^2 (discs only)");
    phantom->add_option("--size", pa.size, "Raster size")->check(CLI::Range(2, 1 << 14));

    ForwardArgs fa;
    auto* forward = app.add_subcommand("forward", "Generate circular or spherical mean data");
    fa.cmd = forward;
    forward->add_option("--phantom", fa.phantom, "Phantom JSON")->required()->check(CLI::ExistingFile);
    forward->add_option("--out", fa.out, "Output LVTF1 file")->required();
    forward->add_option("--mode", fa.mode, "analytic or numeric")->check(CLI::IsMember({"analytic", "numeric"}));
    forward->add_option("--preset", fa.preset, "fig1, fig3 or sonar")->check(CLI::IsMember({"fig1", "fig3", "sonar"}));
    forward->add_option("--range", fa.range, "Detector angles a:b in degrees");
    forward->add_option("--nphi", fa.nphi, "Number of detector angles")->check(CLI::Range(2, 1 << 20));
    forward->add_option("--nr", fa.nr, "Number of radii")->check(CLI::Range(3, 1 << 20));
    forward->add_option("--rmax", fa.rmax, "Largest radius")->check(CLI::PositiveNumber);
    forward->add_option("--n-arc", fa.n_arc, "Quadrature points per circle (numeric mode)")->check(CLI::Range(8, 1 << 24));
    forward->add_option("--size", fa.size, "Raster size for numeric circular data")->check(CLI::Range(2, 1 << 14));
    forward->add_option("--centers", fa.centers, "Centre set shape: rect or disc")->check(CLI::IsMember({"rect", "disc"}));
    forward->add_option("--k-half", fa.k_half, "Half-width (rect) or radius (disc) of the centre set")->check(CLI::PositiveNumber);
    forward->add_option("--n-centers", fa.n_centers, "Centres per axis over the bounding box")->check(CLI::Range(2, 1 << 12));
    forward->add_option("--n-sph", fa.n_sph, "Sphere quadrature points (numeric mode)")->check(CLI::Range(16, 1 << 24));

    ReconstructArgs ra;
    auto* recon = app.add_subcommand("reconstruct", "Lambda-type reconstruction with a hard or smooth cutoff");
    ra.cmd = recon;
    recon->add_option("--in", ra.in, "Sinogram or sonar data (LVTF1)")->required()->check(CLI::ExistingFile);
    recon->add_option("--out", ra.out, "Output field (LVTF1)")->required();
    recon->add_option("--pgm", ra.pgm, "Also write a PGM preview");
    recon->add_option("--preset", ra.preset, "fig1, fig3 or sonar")->check(CLI::IsMember({"fig1", "fig3", "sonar"}));
    recon->add_option("--range", ra.range, "Kept detector angles a:b in degrees");
    recon->add_option("--cutoff", ra.cutoff, "hard or smooth")->check(CLI::IsMember({"hard", "smooth"}));
    recon->add_option("--eps", ra.eps, "Smooth cutoff width: degrees (circular) or scene units (sonar)")
        ->check(CLI::PositiveNumber);
    recon->add_option("--order", ra.order, "Radial filter: 1 = d/dr, 2 = -d^2/dr^2")->check(CLI::IsMember({1, 2}));
    recon->add_flag("--pressure", ra.pressure, "Input holds pressure data 1/2 d/dr M f (order 1 only)");
    recon->add_option("--size", ra.size, "Output raster size")->check(CLI::Range(2, 1 << 14));
    recon->add_option("--centers", ra.centers, "Centre set shape: rect or disc")->check(CLI::IsMember({"rect", "disc"}));
    recon->add_option("--k-half", ra.k_half, "Half-width or radius of the centre set (default: data extent)")
        ->check(CLI::PositiveNumber);
    add_sonar_slice_options(recon, ra.slice_axis, ra.slice_offset, ra.slice_extent);

    PredictArgs pr;
    auto* predict = app.add_subcommand(
        "predict",
        "Predicted artifact curves (JSON) and tube masks. Sonar arcs are sampled with --arc-samples points; "
        "keep the sample spacing below the tube width");
    pr.cmd = predict;
    predict->add_option("--phantom", pr.phantom, "Phantom JSON")->required()->check(CLI::ExistingFile);
    predict->add_option("--out", pr.out, "Curve set JSON")->required();
    predict->add_option("--mask", pr.mask, "Also write the tube mask (LVTF1, 0/1)");
    predict->add_option("--preset", pr.preset, "fig1 or fig3")->check(CLI::IsMember({"fig1", "fig3"}));
    predict->add_option("--range", pr.range, "Detector angles a:b in degrees");
    predict->add_option("--tube", pr.tube, "Tube half-width (default 1.5 pixels)")->check(CLI::PositiveNumber);
    predict->add_option("--size", pr.size, "Mask raster size")->check(CLI::Range(2, 1 << 14));
    predict->add_option("--centers", pr.centers, "Centre set shape: rect or disc")->check(CLI::IsMember({"rect", "disc"}));
    predict->add_option("--k-half", pr.k_half, "Half-width or radius of the centre set")->check(CLI::PositiveNumber);
    predict->add_option("--n-boundary", pr.n_boundary, "Boundary samples of the centre set")->check(CLI::Range(8, 1 << 20));
    predict->add_option("--arc-samples", pr.arc_samples, "Points per semicircle")->check(CLI::Range(2, 1 << 20));
    predict->add_flag("--points", pr.points, "Include arc polylines in the JSON");
    add_sonar_slice_options(predict, pr.slice_axis, pr.slice_offset, pr.slice_extent);

    MetricsArgs ma;
    auto* metrics = app.add_subcommand("metrics", "Tube RMS, localisation and reduction ratios");
    metrics->add_option("--hard", ma.hard, "Hard-cutoff reconstruction")->required()->check(CLI::ExistingFile);
    metrics->add_option("--mask", ma.mask, "Artifact mask")->required()->check(CLI::ExistingFile);
    metrics->add_option("--smooth", ma.smooth, "Smooth-cutoff reconstruction")->check(CLI::ExistingFile);
    metrics->add_option("--control", ma.control, "Control mask")->check(CLI::ExistingFile);
    metrics->add_option("--out", ma.out, "Metrics CSV")->required();

    DemoArgs da;
    auto* demo = app.add_subcommand("demo", "Figure-style experiments with fixed parameters");
    demo->add_option("name", da.name, "fig1, fig3, sonar-corner or sonar-smooth")
        ->required()
        ->check(CLI::IsMember({"fig1", "fig3", "sonar-corner", "sonar-smooth"}));
    demo->add_option("--out", da.out, "Output directory")->required();
    demo->add_option("--size", da.size, "Override the raster size")->check(CLI::Range(2, 1 << 14));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, std::cout, std::cerr);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, std::cout, std::cerr);
    } catch (const CLI::ParseError& e) {
        app.exit(e, std::cout, std::cerr);
        return 2;
    }

    try {
        set_thread_count(threads);
        if (*phantom) run_phantom(pa);
        if (*forward) run_forward(fa);
        if (*recon) run_reconstruct(ra);
        if (*predict) run_predict(pr);
        if (*metrics) run_metrics(ma);
        if (*demo) run_demo(da);
    } catch (const UsageError& e) {
        std::cerr << "lvt: " << e.what() << "\nRun with --help for more information.\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "lvt: error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace lvt::cli
