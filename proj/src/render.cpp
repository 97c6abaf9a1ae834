#include "carpets/render.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace carpets {

namespace {

struct Raster {
    io::Pgm* img;
    int W, H;

    bool all_marked(int px0, int px1, int py0, int py1) const {
        for (int py = py0; py <= py1; ++py)
            for (int px = px0; px <= px1; ++px)
                if (img->pixels[static_cast<std::size_t>(H - 1 - py) * W + px] != 0)
                    return false;
        return true;
    }
    void mark(int px0, int px1, int py0, int py1) {
        for (int py = py0; py <= py1; ++py)
            for (int px = px0; px <= px1; ++px)
                img->pixels[static_cast<std::size_t>(H - 1 - py) * W + px] = 0;
    }
};

void descend(const CarpetSpec& c, Raster& r, long k, long S, long N, double x, double y,
             double w, double h) {
    int px0 = std::max(0, static_cast<int>(std::floor(x * r.W)));
    int px1 = std::min(r.W - 1, static_cast<int>(std::ceil((x + w) * r.W) - 1));
    int py0 = std::max(0, static_cast<int>(std::floor(y * r.H)));
    int py1 = std::min(r.H - 1, static_cast<int>(std::ceil((y + h) * r.H) - 1));
    if (k == N) {
        r.mark(px0, px1, py0, py1);
        return;
    }
    if (r.all_marked(px0, px1, py0, py1)) return;  // nothing new below this cell
    if (k < S) {
        for (const Digit& d : c.digits)
            descend(c, r, k + 1, S, N, x + d.j * w / c.n, y + d.i * h / c.m, w / c.n, h / c.m);
    } else {
        for (int i = 0; i < c.m; ++i) {
            if (c.row_counts[static_cast<std::size_t>(i)] == 0) continue;
            descend(c, r, k + 1, S, N, x, y + i * h / c.m, w, h / c.m);
        }
    }
}

}  // namespace

io::Pgm render_attractor(const CarpetSpec& carpet, int size) {
    if (size < 16 || size > 4096)
        throw std::invalid_argument("render: size must lie in [16, 4096]");
    long N = 1;
    while (std::pow(static_cast<double>(carpet.m), static_cast<double>(N)) < size && N < 24)
        ++N;
    long S = ceil_sigma(carpet, N);

    io::Pgm img;
    img.width = size;
    img.height = size;
    img.pixels.assign(static_cast<std::size_t>(size) * size, 255);
    Raster r{&img, size, size};
    descend(carpet, r, 0, S, N, 0.0, 0.0, 1.0, 1.0);
    return img;
}

}  // namespace carpets
