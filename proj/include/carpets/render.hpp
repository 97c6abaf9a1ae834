#pragma once

#include "carpets/carpet.hpp"
#include "carpets/io.hpp"

namespace carpets {

// Square raster of the attractor: ink (0) on white (255). Marks every pixel
// whose cell intersects a level-N approximate square, N chosen so that
// m^-N <= 1/size. Row 0 of the carpet sits at the bottom of the image.
io::Pgm render_attractor(const CarpetSpec& carpet, int size);

}  // namespace carpets
