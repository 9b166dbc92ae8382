#pragma once

#include <optional>
#include <string>
#include <vector>

#include "phynes/body.hpp"
#include "phynes/fields.hpp"
#include "phynes/image.hpp"
#include "phynes/pbr.hpp"
#include "phynes/synthetic.hpp"
#include "phynes/volume.hpp"

namespace phynes {

struct LossWeights {
  double w_edge = 1.0;
  double w_normal_smooth = 0.01;
  double w_laplace = 0.1;
  double w_entropy = 1e-3;
  double w_alb_smooth = 1e-3;
  double w_rgh_smooth = 1e-3;
  double jitter_mu = 0.0;
  double jitter_var = 0.02;
  double w_background = 0.1;  // BCE on out-of-mask opacity
};

struct TrainConfig {
  std::string stage = "stage1";
  int batch_size = 1024;  // rays (stage 1) or pixels (stage 2)
  int steps = 4000;
  double lr_hash = 5e-3;
  double lr_dense = 5e-4;
  double lr_probes = 1e-2;
  uint64_t seed = 0;
  int checkpoint_every = 1000;
  bool freeze_probes = false;
  EncodingKind encoding = EncodingKind::HashGrid;  // positional for the ablation baseline
  LossWeights weights;
  std::string out_dir;
};

double mse_loss(std::span<const Vec3> pred, std::span<const Vec3> target);

// Edge + normal-smoothness + uniform-Laplacian regularizer on the deformed
// mesh; optionally fills dLoss/d(posed vertex).
double mesh_loss(const DeformedMesh& mesh, const MeshTopology& topology,
                 const LossWeights& weights, std::vector<Vec3>* d_vertices = nullptr);

// Sum over rays of the L2 norm of the RGB residual; optionally dLoss/dpred.
double material_loss(std::span<const Vec3> pred, std::span<const Vec3> gt,
                     std::vector<Vec3>* d_pred = nullptr);

// 0.5*ln(2*pi*e*(channel sample variance + 1e-4)) averaged over RGB; when
// weight != 0 the scaled gradient is accumulated into the map.
double entropy_reg(NeuralMap& alb, std::span<const Vec2> uvs, std::span<const double> pose,
                   double grad_weight = 0.0);

// Sum over the batch of ||map(uv) - map(uv + jitter)||_2 with seeded Gaussian
// jitter clamped to [0,1]^2; gradient accumulation as entropy_reg.
double smooth_reg(NeuralMap& map, std::span<const Vec2> uvs, std::span<const double> pose,
                  const LossWeights& weights, std::mt19937_64& rng, double grad_weight = 0.0);

struct TrainResult {
  std::vector<double> loss_history;  // one entry per step
  std::vector<double> mse_history;     // photometric term only (stage 1)
  std::vector<double> seconds_history; // elapsed wall time at each step
  std::string checkpoint_path;
  bool aborted_nan = false;
  int steps_run = 0;
};

// Optimizes geo/dtx/beta on masked ray batches; writes checkpoints and a run
// manifest under cfg.out_dir.
TrainResult train_stage1(const Dataset& dataset, const BodyModel& body, const TrainConfig& cfg);

// Optimizes alb/rgh/probe radiances with the stage-1 geometry frozen; the
// checkpoint is self-contained (stage-1 sections are copied through).
TrainResult train_stage2(const Dataset& dataset, const std::string& stage1_checkpoint,
                         const LightProbeArray& probes, const TrainConfig& cfg);

CheckpointSection probes_to_section(const LightProbeArray& probes);
LightProbeArray probes_from_section(const CheckpointSection& section);

// Full stage-1 volumetric render of one view (deterministic midpoint sampling).
Image render_stage1_image(const Stage1Scene& scene, const NeuralMap& geo, const NeuralMap& dtx,
                          const CameraModel& camera);

// Pose-conditioned material closure over the alb/rgh maps.
MaterialFn material_from_maps(const NeuralMap& alb, const NeuralMap& rgh,
                              std::vector<double> theta);

// Loads every section of a checkpoint into engine objects.
struct LoadedCheckpoint {
  std::optional<NeuralMap> geo, dtx, alb, rgh;
  DensityConfig density;
  std::optional<LightProbeArray> probes;
};
LoadedCheckpoint load_full_checkpoint(const std::string& path);

}  // namespace phynes
