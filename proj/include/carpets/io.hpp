#pragma once

#include <cstdint>
#include <string>
#include <vector>

// Deterministic file emission. All text output uses 12 significant digits,
// '.' decimal separator and LF line endings regardless of locale. Every
// writer goes to a temp file first and renames into place, so a failed run
// leaves no partial output.

namespace carpets::io {

// 12-significant-digit, locale-independent float formatting.
std::string format_g12(double v);

struct Csv {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

void write_csv(const std::string& path, const Csv& csv);

// Verifies the directory of `path` accepts a new file; throws otherwise.
void check_writable(const std::string& path);

// Grayscale raster, row-major from the top, maxval 255 (binary P5).
struct Pgm {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;
};

void write_pgm(const std::string& path, const Pgm& img);

struct SvgSeries {
    std::string name;
    std::vector<std::pair<double, double>> points;
};

// Minimal plot: one polyline per series inside a 1000x700 viewBox with axes,
// ticks and a small legend.
void write_svg_curves(const std::string& path, const std::string& title,
                      const std::string& x_label, const std::string& y_label,
                      const std::vector<SvgSeries>& series);

}  // namespace carpets::io
