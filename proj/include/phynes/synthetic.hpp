#pragma once

#include <functional>
#include <string>
#include <vector>

#include "phynes/body.hpp"
#include "phynes/pbr.hpp"
#include "phynes/raster.hpp"

namespace phynes {

struct FrameRecord {
  CameraModel camera;
  PoseParams pose;
  std::string image_path;  // PFM radiance
  std::string mask_path;   // 8-bit PNG, >127 = foreground
};

// Analytic ground truth for the desk-scale round-trip datasets. Material and
// offset fields are closed-form in uv so the generator stays a fixed point of
// the renderer.
struct SyntheticScene {
  std::string preset;
  uint64_t seed = 0;
  BodyModel body;
  LightProbeArray probes;
  LightProbeArray heldout_probes;
  std::vector<CameraModel> cameras;
  std::vector<PoseParams> poses;
  double f0 = 0.04;
  double k_s = 1.0;  // 0 for the pure-Lambert furnace preset
  Vec3 background{0, 0, 0};

  std::function<double(double, double)> offset;     // meters, |.| <= offset cap
  std::function<Vec3(double, double)> albedo;       // in (0,1)
  std::function<double(double, double)> roughness;  // in (r_min, 1)

  // Offset field sampled at the canonical vertex uvs.
  std::vector<double> vertex_offsets() const;
  DeformedMesh deformed(const PoseParams& pose) const;
  MaterialFn material() const;
};

// Presets: capsule-lambert (white albedo, isotropic unit light, pure Lambert),
// capsule-specular (textured albedo/roughness, directional probes, Fresnel on),
// capsule-bumpy (sinusoidal offset field, textured albedo, soft light).
SyntheticScene make_synthetic_scene(uint64_t seed, const std::string& preset);

struct Dataset {
  std::string root;
  std::string preset;
  uint64_t seed = 0;
  double f0 = 0.04;
  double k_s = 1.0;
  Vec3 background{0, 0, 0};
  std::vector<FrameRecord> frames;  // image/mask paths joined with root
};

// Renders the scene with the forward PBR path and writes manifest.json,
// images/, masks/ and gt/ (body + per-pose meshes, baked textures, probes).
Dataset generate_synthetic(uint64_t seed, const std::string& preset,
                           const std::string& out_dir);

Dataset load_dataset(const std::string& root);
void save_manifest(const Dataset& dataset);

}  // namespace phynes
