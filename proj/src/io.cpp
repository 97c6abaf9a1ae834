#include "carpets/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <stdexcept>

namespace carpets::io {

namespace fs = std::filesystem;

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::runtime_error(msg); }

std::string temp_path_for(const std::string& path) {
    return path + ".tmp";
}

void commit(const std::string& tmp, const std::string& path) {
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {
        fs::remove(tmp);
        fail("rename to '" + path + "' failed: " + ec.message());
    }
}

}  // namespace

std::string format_g12(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    // snprintf honors the C locale set by the CLI entry point; normalize a
    // stray comma anyway so library callers cannot produce locale CSVs
    for (char& c : buf) {
        if (c == '\0') break;
        if (c == ',') c = '.';
    }
    return buf;
}

void check_writable(const std::string& path) {
    fs::path p(path);
    fs::path dir = p.parent_path();
    if (dir.empty()) dir = ".";
    std::error_code ec;
    if (!fs::exists(dir, ec)) fail("output directory '" + dir.string() + "' does not exist");
    std::string probe = temp_path_for(path);
    std::ofstream f(probe, std::ios::binary);
    if (!f) fail("output path '" + path + "' is not writable");
    f.close();
    fs::remove(probe, ec);
}

void write_csv(const std::string& path, const Csv& csv) {
    std::string tmp = temp_path_for(path);
    {
        std::ofstream f(tmp, std::ios::binary);
        if (!f) fail("cannot open '" + tmp + "' for writing");
        for (std::size_t k = 0; k < csv.header.size(); ++k) {
            if (k) f << ',';
            f << csv.header[k];
        }
        f << '\n';
        for (const auto& row : csv.rows) {
            for (std::size_t k = 0; k < row.size(); ++k) {
                if (k) f << ',';
                f << row[k];
            }
            f << '\n';
        }
        if (!f) fail("write to '" + tmp + "' failed");
    }
    commit(tmp, path);
}

void write_pgm(const std::string& path, const Pgm& img) {
    if (img.width <= 0 || img.height <= 0 ||
        img.pixels.size() != static_cast<std::size_t>(img.width) * img.height)
        fail("pgm: inconsistent dimensions");
    std::string tmp = temp_path_for(path);
    {
        std::ofstream f(tmp, std::ios::binary);
        if (!f) fail("cannot open '" + tmp + "' for writing");
        f << "P5\n" << img.width << " " << img.height << "\n255\n";
        f.write(reinterpret_cast<const char*>(img.pixels.data()),
                static_cast<std::streamsize>(img.pixels.size()));
        if (!f) fail("write to '" + tmp + "' failed");
    }
    commit(tmp, path);
}

void write_svg_curves(const std::string& path, const std::string& title,
                      const std::string& x_label, const std::string& y_label,
                      const std::vector<SvgSeries>& series) {
    constexpr double W = 1000, H = 700;
    constexpr double ml = 90, mr = 30, mt = 50, mb = 70;  // margins

    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    for (const auto& s : series)
        for (auto [x, y] : s.points) {
            xmin = std::min(xmin, x); xmax = std::max(xmax, x);
            ymin = std::min(ymin, y); ymax = std::max(ymax, y);
        }
    if (!(xmax > xmin)) { xmax = xmin + 1; }
    if (!(ymax > ymin)) { ymax = ymin + 1; }
    double xpad = 0.02 * (xmax - xmin), ypad = 0.05 * (ymax - ymin);
    xmin -= xpad; xmax += xpad; ymin -= ypad; ymax += ypad;

    auto px = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * (W - ml - mr); };
    auto py = [&](double y) { return H - mb - (y - ymin) / (ymax - ymin) * (H - mt - mb); };

    static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};

    std::string tmp = temp_path_for(path);
    {
        std::ofstream f(tmp, std::ios::binary);
        if (!f) fail("cannot open '" + tmp + "' for writing");
        f << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 1000 700\">\n";
        f << "<rect width=\"1000\" height=\"700\" fill=\"white\"/>\n";
        f << "<text x=\"500\" y=\"28\" text-anchor=\"middle\" font-size=\"20\">" << title
          << "</text>\n";
        // axes
        f << "<line x1=\"" << ml << "\" y1=\"" << H - mb << "\" x2=\"" << W - mr << "\" y2=\""
          << H - mb << "\" stroke=\"black\"/>\n";
        f << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\"" << H - mb
          << "\" stroke=\"black\"/>\n";
        for (int t = 0; t <= 5; ++t) {
            double xv = xmin + (xmax - xmin) * t / 5.0;
            double yv = ymin + (ymax - ymin) * t / 5.0;
            f << "<line x1=\"" << px(xv) << "\" y1=\"" << H - mb << "\" x2=\"" << px(xv)
              << "\" y2=\"" << H - mb + 6 << "\" stroke=\"black\"/>\n";
            f << "<text x=\"" << px(xv) << "\" y=\"" << H - mb + 24
              << "\" text-anchor=\"middle\" font-size=\"13\">" << format_g12(xv).substr(0, 8)
              << "</text>\n";
            f << "<line x1=\"" << ml - 6 << "\" y1=\"" << py(yv) << "\" x2=\"" << ml << "\" y2=\""
              << py(yv) << "\" stroke=\"black\"/>\n";
            f << "<text x=\"" << ml - 10 << "\" y=\"" << py(yv) + 4
              << "\" text-anchor=\"end\" font-size=\"13\">" << format_g12(yv).substr(0, 8)
              << "</text>\n";
        }
        f << "<text x=\"" << (ml + W - mr) / 2 << "\" y=\"" << H - 18
          << "\" text-anchor=\"middle\" font-size=\"15\">" << x_label << "</text>\n";
        f << "<text x=\"22\" y=\"" << (mt + H - mb) / 2
          << "\" text-anchor=\"middle\" font-size=\"15\" transform=\"rotate(-90 22 "
          << (mt + H - mb) / 2 << ")\">" << y_label << "</text>\n";
        // one polyline per curve
        for (std::size_t s = 0; s < series.size(); ++s) {
            f << "<polyline fill=\"none\" stroke=\"" << colors[s % 5]
              << "\" stroke-width=\"2\" points=\"";
            for (auto [x, y] : series[s].points) f << px(x) << "," << py(y) << " ";
            f << "\"/>\n";
            f << "<text x=\"" << W - mr - 8 << "\" y=\"" << mt + 20 * (s + 1)
              << "\" text-anchor=\"end\" font-size=\"14\" fill=\"" << colors[s % 5] << "\">"
              << series[s].name << "</text>\n";
        }
        f << "</svg>\n";
        if (!f) fail("write to '" + tmp + "' failed");
    }
    commit(tmp, path);
}

}  // namespace carpets::io
