#pragma once

// LVTF1 container:
//
//   "LVTF1\n"
//   "nx=<int> ny=<int> xmin=<g> xmax=<g> ymin=<g> ymax=<g>\n"
//   [one kind line for sinograms / sonar data]
//   nx * ny little-endian IEEE-754 binary64 values, row-major
//
// Reals in header lines use the shortest round-trip decimal form, so equal
// inputs always produce byte-identical files.

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>

#include "lvt/field.hpp"
#include "lvt/sonar_data.hpp"

namespace lvt {

inline constexpr std::string_view kLvtfMagic = "LVTF1\n";

enum class LvtfKind { field, sinogram, sonar };

void write_field(const ScalarField2D& field, const std::filesystem::path& path);
ScalarField2D read_field(const std::filesystem::path& path);

void write_sinogram(const Sinogram& sino, const std::filesystem::path& path);
Sinogram read_sinogram(const std::filesystem::path& path);

void write_sonar(const SonarData& data, const std::filesystem::path& path);
SonarData read_sonar(const std::filesystem::path& path);

/// Which payload an LVTF1 file carries, judged from its header.
LvtfKind peek_kind(const std::filesystem::path& path);

/// Binary 8-bit PGM (P5). v maps to round(255 * clamp((v - lo) / (hi - lo), 0, 1))
/// with halves rounded up; the first file row is the largest-y raster row.
void export_pgm(const ScalarField2D& field, std::pair<double, double> window, const std::filesystem::path& path);

/// Gray level used by export_pgm.
unsigned char pgm_level(double v, double lo, double hi);

/// Shortest round-trip decimal text of a double.
std::string format_real(double v);

}  // namespace lvt
