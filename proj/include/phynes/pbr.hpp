#pragma once

#include <functional>
#include <string>

#include "phynes/raster.hpp"

namespace phynes {

// Directions and radiances of the light-probe sphere. Directions follow the
// canonical Fibonacci layout unless loaded explicitly; every probe carries the
// equal solid-angle weight 4*pi/N.
struct LightProbeArray {
  std::vector<Vec3> directions;  // unit
  std::vector<Vec3> radiance;    // linear RGB, >= 0

  size_t size() const { return directions.size(); }
  double delta_omega() const { return 4.0 * M_PI / double(size()); }

  static LightProbeArray uniform(size_t count, const Vec3& radiance);
};

std::vector<Vec3> fibonacci_sphere(size_t count);

// Probe JSON: {"directions": optional [[x,y,z]...], "radiances": [[r,g,b]...]}.
LightProbeArray load_probes(const std::string& path);
void save_probes(const LightProbeArray& probes, const std::string& path);

struct ShadingPoint {
  Vec3 position;
  Vec3 normal;  // unit
  Vec2 uv;
  Vec3 omega_o;  // unit, surface -> camera
};

struct BRDFParams {
  Vec3 albedo{0.5, 0.5, 0.5};   // (0,1)
  double roughness = 0.5;       // (r_min, 1)
  double k_d = 1.0, k_s = 1.0;  // fixed to 1
  double f0 = 0.04;             // Schlick Fresnel base
};

// Lambert + Cook-Torrance (GGX D with alpha = roughness^2, height-correlated
// Smith G, Schlick F). Returns 0 when either direction is below the surface.
Vec3 brdf_eval(const BRDFParams& params, const Vec3& omega_i, const Vec3& omega_o, const Vec3& n);
// Also fills d(f_r)/d(roughness) and notes that d(f_r)/d(albedo) is 1/pi on
// the diagonal whenever the lobe is active (returned as a scalar mask).
Vec3 brdf_eval_grad(const BRDFParams& params, const Vec3& omega_i, const Vec3& omega_o,
                    const Vec3& n, Vec3& d_roughness, double& d_albedo_diag);

// Discrete rendering equation: sum_i L_i * f_r * V_i * max(0, w_i . n) * dw.
Vec3 shade(const ShadingPoint& point, const BRDFParams& params, const LightProbeArray& probes,
           std::span<const double> vis);

struct ShadeGrad {
  Vec3 d_albedo;              // dL_c/dalbedo_c (diagonal)
  Vec3 d_roughness;           // dL/droughness per channel
  std::vector<Vec3> d_probe;  // dL_c/dL_{i,c} per probe (diagonal factor)
};
Vec3 shade_grad(const ShadingPoint& point, const BRDFParams& params, const LightProbeArray& probes,
                std::span<const double> vis, ShadeGrad& grad);

// Batched material lookup: uv list in, per-pixel albedo + roughness out.
struct MaterialBatch {
  std::vector<Vec3> albedo;
  std::vector<double> roughness;
};
using MaterialFn = std::function<MaterialBatch(std::span<const Vec2>)>;

struct PbrImages {
  UVImage uv_image;
  std::vector<Vec3> radiance;   // per pixel, linear
  std::vector<Vec3> albedo;
  std::vector<double> roughness;
  std::vector<double> vis_mean;
  std::vector<Vec3> normal;
};

// Rasterize, query materials once per covered pixel, evaluate per-probe
// visibility and shade. Geometry and visibility are constants for training.
PbrImages render_pbr(const DeformedMesh& mesh, std::span<const std::array<Vec2, 3>> uvs,
                     const CameraModel& camera, const MaterialFn& material,
                     const LightProbeArray& probes, double f0 = 0.04,
                     const Vec3& background = {0, 0, 0}, double k_s = 1.0);

}  // namespace phynes
