#pragma once

#include <string>
#include <vector>

#include "phynes/math.hpp"

namespace phynes {

// Linear-light RGB image, row-major, origin at the top-left.
struct Image {
  int width = 0, height = 0;
  std::vector<Vec3> pixels;

  Image() = default;
  Image(int w, int h, const Vec3& fill = {0, 0, 0}) : width(w), height(h) {
    pixels.assign(size_t(w) * h, fill);
  }
  Vec3& at(int x, int y) { return pixels[size_t(y) * width + x]; }
  const Vec3& at(int x, int y) const { return pixels[size_t(y) * width + x]; }
};

struct MaskImage {
  int width = 0, height = 0;
  std::vector<uint8_t> values;  // > 127 = foreground

  bool foreground(int x, int y) const { return values[size_t(y) * width + x] > 127; }
};

// PFM, little-endian f32, bottom-to-top rows ("PF" color / "Pf" gray).
void write_pfm(const Image& img, const std::string& path);
Image read_pfm(const std::string& path);
void write_pfm_gray(const std::vector<double>& values, int width, int height,
                    const std::string& path);

// 8-bit PNG. Color writes apply exposure then gamma 2.2; masks are written raw.
void write_png(const Image& img, const std::string& path, double exposure = 1.0,
               double gamma = 2.2);
void write_png_mask(const MaskImage& mask, const std::string& path);
MaskImage read_png_mask(const std::string& path);
Image read_png(const std::string& path, double gamma = 2.2);

}  // namespace phynes
