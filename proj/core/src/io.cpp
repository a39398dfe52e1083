#include "lvt/io.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string_view>
#include <vector>

#include "lvt/error.hpp"

namespace lvt {

std::string format_real(double v) {
    std::array<char, 64> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    if (ec != std::errc{}) throw Error("cannot format real value");
    return std::string(buf.data(), end);
}

namespace {

constexpr std::string_view kSinogramTag = "sinogram ";
constexpr std::string_view kSonarTag = "sonar ";

struct Header {
    int nx = 0;
    int ny = 0;
    double xmin = 0.0;
    double xmax = 0.0;
    double ymin = 0.0;
    double ymax = 0.0;
};

std::string dims_line(const Header& h) {
    std::string s;
    s += "nx=" + std::to_string(h.nx);
    s += " ny=" + std::to_string(h.ny);
    s += " xmin=" + format_real(h.xmin);
    s += " xmax=" + format_real(h.xmax);
    s += " ymin=" + format_real(h.ymin);
    s += " ymax=" + format_real(h.ymax);
    s += '\n';
    return s;
}

void append_le(std::string& out, std::span<const double> values) {
    out.reserve(out.size() + values.size() * 8);
    for (double v : values) {
        auto bits = std::bit_cast<std::uint64_t>(v);
        for (int b = 0; b < 8; ++b) out.push_back(static_cast<char>((bits >> (8 * b)) & 0xFFu));
    }
}

void write_bytes(const std::filesystem::path& path, const std::string& bytes) {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw IoError(path.string(), "cannot open for writing");
    os.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    os.flush();
    if (!os) throw IoError(path.string(), "write failed");
}

std::string read_bytes(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw IoError(path.string(), "cannot open for reading");
    std::string data((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
    if (is.bad()) throw IoError(path.string(), "read failed");
    return data;
}

void write_container(const std::filesystem::path& path, const Header& h, const std::string& kind_line,
                     std::span<const double> values) {
    std::string out(kLvtfMagic);
    out += dims_line(h);
    out += kind_line;
    append_le(out, values);
    write_bytes(path, out);
}

/// Cursor over the raw file contents.
class Reader {
public:
    Reader(std::string data, std::string path) : data_(std::move(data)), path_(std::move(path)) {}

    void expect_magic() {
        if (data_.compare(0, kLvtfMagic.size(), kLvtfMagic) != 0)
            throw FormatError(path_ + ": bad magic, not an LVTF1 file");
        pos_ = kLvtfMagic.size();
    }

    bool next_starts_with(std::string_view tag) const { return data_.compare(pos_, tag.size(), tag) == 0; }

    std::string_view line() {
        const auto nl = data_.find('\n', pos_);
        if (nl == std::string::npos) throw FormatError(path_ + ": truncated header");
        std::string_view s(data_.data() + pos_, nl - pos_);
        pos_ = nl + 1;
        return s;
    }

    std::size_t remaining() const { return data_.size() - pos_; }

    std::vector<double> payload(std::size_t count) {
        if (remaining() != count * 8)
            throw LengthMismatchError(path_ + ": payload holds " + std::to_string(remaining()) +
                                      " bytes, header announces " + std::to_string(count * 8));
        std::vector<double> v(count);
        const auto* p = reinterpret_cast<const unsigned char*>(data_.data() + pos_);
        for (std::size_t i = 0; i < count; ++i) {
            std::uint64_t bits = 0;
            for (int b = 0; b < 8; ++b) bits |= static_cast<std::uint64_t>(p[8 * i + b]) << (8 * b);
            v[i] = std::bit_cast<double>(bits);
            if (!std::isfinite(v[i]))
                throw NonFiniteError(path_ + ": non-finite value at sample " + std::to_string(i));
        }
        pos_ = data_.size();
        return v;
    }

    const std::string& path() const { return path_; }

private:
    std::string data_;
    std::string path_;
    std::size_t pos_ = 0;
};

/// Parses "k1=v1 k2=v2 ..." after an optional leading tag, insisting on key order.
class KeyValues {
public:
    KeyValues(std::string_view text, std::string path) : path_(std::move(path)) {
        std::size_t i = 0;
        while (i < text.size()) {
            while (i < text.size() && text[i] == ' ') ++i;
            if (i >= text.size()) break;
            auto end = text.find(' ', i);
            if (end == std::string_view::npos) end = text.size();
            auto tok = text.substr(i, end - i);
            auto eq = tok.find('=');
            if (eq == std::string_view::npos) throw FormatError(path_ + ": malformed header token '" + std::string(tok) + "'");
            items_.emplace_back(tok.substr(0, eq), tok.substr(eq + 1));
            i = end;
        }
    }

    double real(std::string_view key) {
        auto v = take(key);
        double out = 0.0;
        auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
        if (ec != std::errc{} || p != v.data() + v.size())
            throw FormatError(path_ + ": bad value for " + std::string(key));
        return out;
    }

    int integer(std::string_view key) {
        auto v = take(key);
        int out = 0;
        auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
        if (ec != std::errc{} || p != v.data() + v.size())
            throw FormatError(path_ + ": bad value for " + std::string(key));
        return out;
    }

    void finish() const {
        if (next_ != items_.size()) throw FormatError(path_ + ": unexpected header key " + std::string(items_[next_].first));
    }

private:
    std::string_view take(std::string_view key) {
        if (next_ >= items_.size() || items_[next_].first != key)
            throw FormatError(path_ + ": expected header key " + std::string(key));
        return items_[next_++].second;
    }

    std::string path_;
    std::vector<std::pair<std::string_view, std::string_view>> items_;
    std::size_t next_ = 0;
};

Header parse_dims(Reader& r) {
    KeyValues kv(r.line(), r.path());
    Header h;
    h.nx = kv.integer("nx");
    h.ny = kv.integer("ny");
    h.xmin = kv.real("xmin");
    h.xmax = kv.real("xmax");
    h.ymin = kv.real("ymin");
    h.ymax = kv.real("ymax");
    kv.finish();
    if (h.nx <= 0 || h.ny <= 0) throw FormatError(r.path() + ": non-positive dimensions");
    return h;
}

std::string sinogram_line(const SinogramGrid& g) {
    return std::string(kSinogramTag) + "phi0=" + format_real(g.phi0) + " phi1=" + format_real(g.phi1) +
           " nphi=" + std::to_string(g.nphi) + " rmax=" + format_real(g.rmax) + " nr=" + std::to_string(g.nr) + "\n";
}

std::string sonar_line(const SonarGrid& g) {
    return std::string(kSonarTag) + "y1min=" + format_real(g.y1min) + " y1max=" + format_real(g.y1max) +
           " y2min=" + format_real(g.y2min) + " y2max=" + format_real(g.y2max) + " ny1=" + std::to_string(g.ny1) +
           " ny2=" + std::to_string(g.ny2) + " rmax=" + format_real(g.rmax) + " nr=" + std::to_string(g.nr) + "\n";
}

std::size_t checked_count(const Header& h, const std::string& path) {
    const auto n = static_cast<std::size_t>(h.nx) * static_cast<std::size_t>(h.ny);
    if (n > (std::size_t{1} << 34)) throw FormatError(path + ": dimensions too large");
    return n;
}

}  // namespace

void write_field(const ScalarField2D& field, const std::filesystem::path& path) {
    const auto& g = field.grid();
    write_container(path, {g.nx, g.ny, g.xmin, g.xmax, g.ymin, g.ymax}, "", field.values());
}

ScalarField2D read_field(const std::filesystem::path& path) {
    Reader r(read_bytes(path), path.string());
    r.expect_magic();
    Header h = parse_dims(r);
    if (r.next_starts_with(kSinogramTag) || r.next_starts_with(kSonarTag))
        throw FormatError(r.path() + ": file holds sinogram or sonar data, not a field");
    auto values = r.payload(checked_count(h, r.path()));
    GridSpec2D grid{h.nx, h.ny, h.xmin, h.xmax, h.ymin, h.ymax};
    try {
        return ScalarField2D(grid, std::move(values));
    } catch (const InvalidArgument& e) {
        throw FormatError(r.path() + ": " + e.what());
    }
}

void write_sinogram(const Sinogram& sino, const std::filesystem::path& path) {
    const auto& g = sino.grid();
    Header h{g.nr, g.nphi, g.dr(), g.rmax, g.phi0, g.phi1};
    write_container(path, h, sinogram_line(g), sino.values());
}

Sinogram read_sinogram(const std::filesystem::path& path) {
    Reader r(read_bytes(path), path.string());
    r.expect_magic();
    Header h = parse_dims(r);
    if (!r.next_starts_with(kSinogramTag)) throw FormatError(r.path() + ": missing sinogram metadata line");
    auto line = r.line().substr(kSinogramTag.size());
    KeyValues kv(line, r.path());
    SinogramGrid g;
    g.phi0 = kv.real("phi0");
    g.phi1 = kv.real("phi1");
    g.nphi = kv.integer("nphi");
    g.rmax = kv.real("rmax");
    g.nr = kv.integer("nr");
    kv.finish();
    if (g.nphi != h.ny || g.nr != h.nx) throw FormatError(r.path() + ": sinogram metadata disagrees with dimensions");
    auto values = r.payload(checked_count(h, r.path()));
    try {
        return Sinogram(g, std::move(values));
    } catch (const InvalidArgument& e) {
        throw FormatError(r.path() + ": " + e.what());
    }
}

void write_sonar(const SonarData& data, const std::filesystem::path& path) {
    const auto& g = data.grid();
    const int ncent = g.ny1 * g.ny2;
    Header h{g.nr, ncent, g.dr(), g.rmax, 0.0, static_cast<double>(ncent - 1)};
    write_container(path, h, sonar_line(g), data.values());
}

SonarData read_sonar(const std::filesystem::path& path) {
    Reader r(read_bytes(path), path.string());
    r.expect_magic();
    Header h = parse_dims(r);
    if (!r.next_starts_with(kSonarTag)) throw FormatError(r.path() + ": missing sonar metadata line");
    auto line = r.line().substr(kSonarTag.size());
    KeyValues kv(line, r.path());
    SonarGrid g;
    g.y1min = kv.real("y1min");
    g.y1max = kv.real("y1max");
    g.y2min = kv.real("y2min");
    g.y2max = kv.real("y2max");
    g.ny1 = kv.integer("ny1");
    g.ny2 = kv.integer("ny2");
    g.rmax = kv.real("rmax");
    g.nr = kv.integer("nr");
    kv.finish();
    if (g.nr != h.nx || static_cast<long long>(g.ny1) * g.ny2 != h.ny)
        throw FormatError(r.path() + ": sonar metadata disagrees with dimensions");
    auto values = r.payload(checked_count(h, r.path()));
    try {
        return SonarData(g, std::move(values));
    } catch (const InvalidArgument& e) {
        throw FormatError(r.path() + ": " + e.what());
    }
}

LvtfKind peek_kind(const std::filesystem::path& path) {
    Reader r(read_bytes(path), path.string());
    r.expect_magic();
    (void)parse_dims(r);
    if (r.next_starts_with(kSinogramTag)) return LvtfKind::sinogram;
    if (r.next_starts_with(kSonarTag)) return LvtfKind::sonar;
    return LvtfKind::field;
}

unsigned char pgm_level(double v, double lo, double hi) {
    double t = (v - lo) / (hi - lo);
    t = std::clamp(t, 0.0, 1.0);
    return static_cast<unsigned char>(std::floor(255.0 * t + 0.5));
}

void export_pgm(const ScalarField2D& field, std::pair<double, double> window, const std::filesystem::path& path) {
    const auto [lo, hi] = window;
    if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) throw InvalidArgument("PGM window needs lo < hi");
    const auto& g = field.grid();
    std::string out = "P5\n" + std::to_string(g.nx) + " " + std::to_string(g.ny) + "\n255\n";
    out.reserve(out.size() + g.size());
    for (int j = g.ny - 1; j >= 0; --j)
        for (int i = 0; i < g.nx; ++i) out.push_back(static_cast<char>(pgm_level(field.at(i, j), lo, hi)));
    write_bytes(path, out);
}

}  // namespace lvt
