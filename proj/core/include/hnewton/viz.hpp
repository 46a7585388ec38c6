#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "hnewton/harmonic_map.hpp"
#include "hnewton/search.hpp"

namespace hnewton {

struct RGB {
  std::uint8_t r = 0, g = 0, b = 0;
  bool operator==(const RGB&) const = default;
};

// 8-bit RGB raster; row-major with the TOP row at y_max (image convention).
// pixel (i, j) is sampled at its center:
//   x = x_min + (j + 0.5) * (x_max - x_min) / width
//   y = y_max - (i + 0.5) * (y_max - y_min) / height
struct RasterImage {
  int width = 0, height = 0;
  double x_min = 0, x_max = 0, y_min = 0, y_max = 0;
  std::vector<RGB> pixels;

  RGB& at(int i, int j) { return pixels[std::size_t(i) * width + j]; }
  const RGB& at(int i, int j) const { return pixels[std::size_t(i) * width + j]; }
};

// domain coloring by phase: hue = arg(w)/2pi with red at arg 0, full
// saturation and value; non-finite -> white, |w| <= zero_threshold -> black
RGB phase_color(cplx w, double zero_threshold = 0.0);

RasterImage render_phase(const HarmonicMap& map, int width, int height,
                         std::array<double, 4> window);

// basin image from a labeling: base hue per zero via golden-angle stepping
// from palette_seed, darkened by max(0.25, 1 - iters/max_shade_iters);
// label -1 -> black.  max_shade_iters <= 0 means "use the labeling max".
RasterImage render_basins(const BasinLabeling& labeling,
                          std::uint32_t palette_seed = 0,
                          int max_shade_iters = 0);

RGB palette_color(std::uint32_t palette_seed, int index);

// filled dot of pixel radius r at the image point nearest z (markers for
// zeros and poles on phase plots); silently clips outside the window
void draw_disk(RasterImage& img, cplx z, int radius_px, RGB color);

// binary PPM (P6); the bit-exact golden format
void write_ppm(const RasterImage& img, const std::string& path);

// PNG via zlib; returns false when the library was built without zlib
bool write_png(const RasterImage& img, const std::string& path);
bool png_supported();

}  // namespace hnewton
