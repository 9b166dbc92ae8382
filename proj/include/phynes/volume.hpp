#pragma once

#include <random>

#include "phynes/body.hpp"
#include "phynes/fields.hpp"
#include "phynes/raster.hpp"

namespace phynes {

struct DensityConfig {
  double beta = 0.05;  // sharpness scale, meters, learnable
  static constexpr double beta_min = 1e-4;

  double clamped_beta() const { return std::max(beta, beta_min); }
};

// sigma(s) = (1/beta) * logistic(-s/beta): positive, strictly decreasing,
// 1/(2 beta) at the surface, saturating at 1/beta inside.
double density(double s, const DensityConfig& cfg);
// d sigma / d s and d sigma / d beta.
void density_grad(double s, const DensityConfig& cfg, double& d_s, double& d_beta);

// One ray's quadrature: sample distances, segment lengths, and the surface
// projection of every sample point.
struct RaySampleSet {
  std::vector<double> t;       // sorted sample distances
  std::vector<double> delta;   // t_{k+1} - t_k, last = far residual
  std::vector<double> h;       // signed distance to the posed base surface
  std::vector<Vec2> uv;        // projected texel coordinate
  std::vector<uint8_t> active; // inside the thin shell |h| <= shell
  bool hit = false;
  double t_hit = 0, near = 0, far = 0;

  size_t size() const { return t.size(); }
};

// Stage-1 scene: posed base mesh (LBS only, no offsets) with its BVH.
struct Stage1Scene {
  const BodyModel* body = nullptr;
  PoseParams pose;
  std::vector<Vec3> posed_base;
  SpatialIndex bvh;
  DensityConfig density_cfg;
  double offset_cap = 0.10;
  Vec3 background{0, 0, 0};
  int n_base = 128, n_extra = 16;

  double shell() const { return 4.0 * offset_cap; }

  static Stage1Scene build(const BodyModel& body, const PoseParams& pose);
};

double convert_signed_distance(double h, double l);

// 128 stratified samples in [near, far] (midpoints when rng == nullptr), plus
// 16 samples around the first mesh intersection when the ray hits. near/far
// come from the posed mesh bounding box inflated by the thin-shell margin.
// Returns false (empty set) when the ray misses the inflated box.
bool sample_ray(const Stage1Scene& scene, const Ray& ray, RaySampleSet& out,
                std::mt19937_64* rng = nullptr);

// Volumetric compositing C(r) = sum_k T_k (1 - e^{-sigma_k delta_k}) c_k.
void composite(std::span<const double> sigma, std::span<const double> delta,
               std::span<const Vec3> color, Vec3& out_color, double& out_opacity);
// Reverse-mode: given dL/dC and dL/dA, fills dL/dsigma and dL/dcolor.
void composite_backward(std::span<const double> sigma, std::span<const double> delta,
                        std::span<const Vec3> color, const Vec3& d_color, double d_opacity,
                        std::span<double> d_sigma, std::span<Vec3> d_color_out);

// Retained state for a forward pass over a ray batch.
struct Stage1Trace {
  std::vector<RaySampleSet> rays;
  std::vector<size_t> flat_ray;     // flattened active sample -> ray index
  std::vector<size_t> flat_sample;  // flattened active sample -> sample index
  BatchTrace geo_trace, dtx_trace;
  std::vector<std::vector<double>> sigma;  // per ray, per sample (0 when inactive)
  std::vector<Vec3> colors;
  std::vector<double> opacity;
};

// Differentiable stage-1 forward over a ray batch; all rays share the scene pose.
void stage1_forward(const Stage1Scene& scene, const NeuralMap& geo, const NeuralMap& dtx,
                    std::span<const Ray> rays, Stage1Trace& trace,
                    std::mt19937_64* jitter_rng = nullptr);
// Accumulates parameter gradients into geo/dtx and the density beta gradient.
void stage1_backward(const Stage1Scene& scene, NeuralMap& geo, NeuralMap& dtx,
                     const Stage1Trace& trace, std::span<const Vec3> d_color,
                     std::span<const double> d_opacity, double& beta_grad);

// Single-pixel convenience wrapper (deterministic midpoint sampling).
Vec3 render_pixel_stage1(const Stage1Scene& scene, const NeuralMap& geo, const NeuralMap& dtx,
                         const CameraModel& camera, int x, int y, double* opacity = nullptr);

}  // namespace phynes
