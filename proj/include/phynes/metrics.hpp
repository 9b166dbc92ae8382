#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "phynes/image.hpp"
#include "phynes/math.hpp"

namespace phynes {

double mse(const Image& a, const Image& b);
// 10·log10(peak²/MSE), capped at 99 dB when the images are identical.
double psnr(const Image& a, const Image& b, double peak = 1.0);
// Windowed SSIM on grayscale, 11x11 Gaussian (sigma 1.5), k1=0.01, k2=0.03.
double ssim(const Image& a, const Image& b);

struct ChamferResult {
  double cd = 0;   // symmetric mean closest-point distance, meters
  double p2s = 0;  // mean distance from pred samples to the gt surface
};
// Area-weighted seeded surface sampling, n_samples per direction.
ChamferResult chamfer_p2s(const std::vector<Vec3>& pred_vertices,
                          const std::vector<std::array<int, 3>>& pred_faces,
                          const std::vector<Vec3>& gt_vertices,
                          const std::vector<std::array<int, 3>>& gt_faces,
                          int n_samples = 10000, uint64_t seed = 0);

struct ScaleAlignResult {
  Vec3 factors{1, 1, 1};
  Image aligned;
  bool zero_channel_warning = false;
};
// Per-channel least squares k_c = sum(pred*gt)/sum(pred^2) over the foreground
// (all pixels when mask is null); an all-zero pred channel keeps factor 1.
ScaleAlignResult scale_align(const Image& pred, const Image& gt,
                             const MaskImage* mask = nullptr);

}  // namespace phynes
