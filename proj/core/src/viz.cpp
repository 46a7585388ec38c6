#include "hnewton/viz.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "hnewton/parallel.hpp"

#if defined(HN_HAVE_ZLIB)
#include <zlib.h>
#endif

namespace hnewton {

namespace {

RGB hsv_to_rgb(double h, double s, double v) {
  h -= std::floor(h);
  const double h6 = h * 6.0;
  const int sector = std::min(5, int(h6));
  const double f = h6 - sector;
  const double p = v * (1.0 - s);
  const double q = v * (1.0 - s * f);
  const double t = v * (1.0 - s * (1.0 - f));
  double r = 0, g = 0, b = 0;
  switch (sector) {
    case 0: r = v; g = t; b = p; break;
    case 1: r = q; g = v; b = p; break;
    case 2: r = p; g = v; b = t; break;
    case 3: r = p; g = q; b = v; break;
    case 4: r = t; g = p; b = v; break;
    case 5: r = v; g = p; b = q; break;
  }
  auto to8 = [](double x) {
    return std::uint8_t(std::lround(std::clamp(x, 0.0, 1.0) * 255.0));
  };
  return {to8(r), to8(g), to8(b)};
}

}  // namespace

RGB phase_color(cplx w, double zero_threshold) {
  if (!is_finite(w)) return {255, 255, 255};
  if (std::abs(w) <= zero_threshold) return {0, 0, 0};
  double hue = std::arg(w) / (2.0 * pi);
  hue -= std::floor(hue);
  return hsv_to_rgb(hue, 1.0, 1.0);
}

RasterImage render_phase(const HarmonicMap& map, int width, int height,
                         std::array<double, 4> window) {
  if (width < 1 || height < 1)
    throw std::invalid_argument("render_phase: dimensions must be positive");
  RasterImage img;
  img.width = width;
  img.height = height;
  img.x_min = window[0];
  img.x_max = window[1];
  img.y_min = window[2];
  img.y_max = window[3];
  img.pixels.resize(std::size_t(width) * height);
  const double px = (img.x_max - img.x_min) / width;
  const double py = (img.y_max - img.y_min) / height;
  parallel_for(std::size_t(height), [&](std::size_t r0, std::size_t r1) {
    for (std::size_t i = r0; i < r1; ++i) {
      const double y = img.y_max - (double(i) + 0.5) * py;
      for (int j = 0; j < width; ++j) {
        const double x = img.x_min + (double(j) + 0.5) * px;
        cplx w;
        try {
          w = map.eval_f(cplx(x, y));
        } catch (...) {
          w = cplx(std::nan(""), std::nan(""));
        }
        img.at(int(i), j) = phase_color(w);
      }
    }
  });
  return img;
}

RGB palette_color(std::uint32_t palette_seed, int index) {
  // golden-angle hue stepping keeps neighboring basins distinguishable
  const double hue = (double(palette_seed) + index) * 0.618033988749895;
  return hsv_to_rgb(hue - std::floor(hue), 0.85, 1.0);
}

RasterImage render_basins(const BasinLabeling& labeling,
                          std::uint32_t palette_seed, int max_shade_iters) {
  const int nx = labeling.spec.nx(), ny = labeling.spec.ny();
  if (labeling.labels.size() != std::size_t(nx) * ny ||
      labeling.iteration_counts.size() != labeling.labels.size())
    throw std::invalid_argument("render_basins: labeling does not match grid");

  int shade = max_shade_iters;
  if (shade <= 0)
    for (int c : labeling.iteration_counts) shade = std::max(shade, c);
  if (shade <= 0) shade = 1;

  RasterImage img;
  img.width = nx;
  img.height = ny;
  img.x_min = labeling.spec.x_min;
  img.x_max = labeling.spec.x_max;
  img.y_min = labeling.spec.y_min;
  img.y_max = labeling.spec.y_max;
  img.pixels.resize(std::size_t(nx) * ny);
  for (int i = 0; i < ny; ++i) {
    const std::size_t grid_row = std::size_t(ny - 1 - i) * nx;  // flip: top = y_max
    for (int j = 0; j < nx; ++j) {
      const int label = labeling.labels[grid_row + j];
      if (label < 0) {
        img.at(i, j) = {0, 0, 0};
        continue;
      }
      const RGB base = palette_color(palette_seed, label);
      const double factor = std::max(
          0.25, 1.0 - double(labeling.iteration_counts[grid_row + j]) / shade);
      img.at(i, j) = {std::uint8_t(std::lround(base.r * factor)),
                      std::uint8_t(std::lround(base.g * factor)),
                      std::uint8_t(std::lround(base.b * factor))};
    }
  }
  return img;
}

void draw_disk(RasterImage& img, cplx z, int radius_px, RGB color) {
  if (img.width < 1 || img.height < 1) return;
  const double px = (img.x_max - img.x_min) / img.width;
  const double py = (img.y_max - img.y_min) / img.height;
  const double jc = (z.real() - img.x_min) / px - 0.5;
  const double ic = (img.y_max - z.imag()) / py - 0.5;
  const int j0 = int(std::lround(jc)), i0 = int(std::lround(ic));
  for (int i = i0 - radius_px; i <= i0 + radius_px; ++i) {
    if (i < 0 || i >= img.height) continue;
    for (int j = j0 - radius_px; j <= j0 + radius_px; ++j) {
      if (j < 0 || j >= img.width) continue;
      const long di = i - i0, dj = j - j0;
      if (di * di + dj * dj <= long(radius_px) * radius_px) img.at(i, j) = color;
    }
  }
}

void write_ppm(const RasterImage& img, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << "P6\n" << img.width << ' ' << img.height << "\n255\n";
  out.write(reinterpret_cast<const char*>(img.pixels.data()),
            std::streamsize(img.pixels.size() * sizeof(RGB)));
  if (!out) throw std::runtime_error("short write: " + path);
}

bool png_supported() {
#if defined(HN_HAVE_ZLIB)
  return true;
#else
  return false;
#endif
}

#if defined(HN_HAVE_ZLIB)

namespace {

void be32(std::vector<unsigned char>& v, std::uint32_t x) {
  v.push_back((x >> 24) & 0xff);
  v.push_back((x >> 16) & 0xff);
  v.push_back((x >> 8) & 0xff);
  v.push_back(x & 0xff);
}

void write_chunk(std::ofstream& out, const char type[4],
                 const std::vector<unsigned char>& data) {
  std::vector<unsigned char> head;
  be32(head, std::uint32_t(data.size()));
  out.write(reinterpret_cast<const char*>(head.data()), 4);
  out.write(type, 4);
  if (!data.empty())
    out.write(reinterpret_cast<const char*>(data.data()),
              std::streamsize(data.size()));
  uLong crc = crc32(0L, Z_NULL, 0);
  crc = crc32(crc, reinterpret_cast<const Bytef*>(type), 4);
  if (!data.empty()) crc = crc32(crc, data.data(), uInt(data.size()));
  std::vector<unsigned char> tail;
  be32(tail, std::uint32_t(crc));
  out.write(reinterpret_cast<const char*>(tail.data()), 4);
}

}  // namespace

bool write_png(const RasterImage& img, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  static const unsigned char sig[8] = {137, 80, 78, 71, 13, 10, 26, 10};
  out.write(reinterpret_cast<const char*>(sig), 8);

  std::vector<unsigned char> ihdr;
  be32(ihdr, std::uint32_t(img.width));
  be32(ihdr, std::uint32_t(img.height));
  ihdr.push_back(8);   // bit depth
  ihdr.push_back(2);   // truecolor
  ihdr.push_back(0);   // compression
  ihdr.push_back(0);   // filter
  ihdr.push_back(0);   // no interlace
  write_chunk(out, "IHDR", ihdr);

  // filter byte 0 before every row
  std::vector<unsigned char> raw;
  raw.reserve(std::size_t(img.height) * (1 + std::size_t(img.width) * 3));
  for (int i = 0; i < img.height; ++i) {
    raw.push_back(0);
    const unsigned char* row =
        reinterpret_cast<const unsigned char*>(&img.pixels[std::size_t(i) * img.width]);
    raw.insert(raw.end(), row, row + std::size_t(img.width) * 3);
  }
  uLongf bound = compressBound(uLong(raw.size()));
  std::vector<unsigned char> idat(bound);
  if (compress2(idat.data(), &bound, raw.data(), uLong(raw.size()), 9) != Z_OK)
    throw std::runtime_error("zlib compression failed for " + path);
  idat.resize(bound);
  write_chunk(out, "IDAT", idat);
  write_chunk(out, "IEND", {});
  if (!out) throw std::runtime_error("short write: " + path);
  return true;
}

#else

bool write_png(const RasterImage&, const std::string&) { return false; }

#endif

}  // namespace hnewton
