#pragma once

#include <Eigen/Dense>
#include <atomic>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "phynes/math.hpp"

namespace phynes {

enum class MapKind : uint32_t { Geo = 0, Dtx = 1, Alb = 2, Rgh = 3 };

enum class EncodingKind : uint32_t { HashGrid = 0, Positional = 1 };

struct HashGridConfig {
  int levels = 8;
  int base_resolution = 16;
  int max_resolution = 512;
  int table_size = 1 << 14;
  int features_per_entry = 2;

  int resolution(int level) const;  // geometric from base to max
  int encoded_dim() const { return levels * features_per_entry; }
};

struct MapConfig {
  MapKind kind = MapKind::Geo;
  EncodingKind encoding = EncodingKind::HashGrid;
  HashGridConfig grid;
  int pe_frequencies = 8;  // positional-encoding ablation variant
  int pose_dim = 0;        // length of theta (3J + 3)
  int pose_embed_dim = 8;
  int hidden_width = 64;
  double offset_cap = 0.10;
  double roughness_floor = 0.04;

  int hidden_layers() const { return kind == MapKind::Geo ? 3 : 5; }
  int output_dim() const { return (kind == MapKind::Geo || kind == MapKind::Rgh) ? 1 : 3; }
  int encoded_dim() const {
    return encoding == EncodingKind::HashGrid ? grid.encoded_dim() : 4 * pe_frequencies;
  }
  int input_dim() const { return encoded_dim() + pose_embed_dim; }
};

// Forward activations retained for one batch, consumed by backward().
struct BatchTrace {
  Eigen::MatrixXd input;                  // input_dim x B (encoded uv ++ pose embed)
  std::vector<Eigen::MatrixXd> pre;       // per hidden layer, width x B, pre-activation
  std::vector<Eigen::MatrixXd> post;      // per hidden layer, width x B
  Eigen::MatrixXd out_pre;                // output_dim x B, before the range transform
  Eigen::MatrixXd output;                 // output_dim x B
  std::vector<Vec2> uvs;                  // clamped query positions
  Eigen::VectorXd pose;                   // theta used for the batch
  // hash-grid interpolation footprint: per sample, per level, 4 (index, weight)
  std::vector<int32_t> corner_index;
  std::vector<double> corner_weight;
};

struct AdamState {
  Eigen::VectorXd m, v;
  int64_t step = 0;
  size_t skipped_nan_steps = 0;
};

// Standard Adam with bias correction; zeroes the gradient after the step.
// A NaN/inf gradient skips the update and counts the incident.
void adam_step(Eigen::VectorXd& params, Eigen::VectorXd& grads, AdamState& state, double lr,
               double beta1 = 0.9, double beta2 = 0.999, double eps = 1e-8);
// Variant applying different rates to [0, split) and [split, n).
void adam_step_grouped(Eigen::VectorXd& params, Eigen::VectorXd& grads, AdamState& state,
                       size_t split, double lr_head, double lr_tail, double beta1 = 0.9,
                       double beta2 = 0.999, double eps = 1e-8);

// Pose-conditioned 2D neural map: multiresolution hash encoding of uv,
// a linear pose embedding, an MLP trunk and a range-constrained head.
// Gradients are hand-derived reverse mode over the flat parameter vector.
class NeuralMap {
 public:
  explicit NeuralMap(const MapConfig& config, uint64_t seed = 1);
  NeuralMap(NeuralMap&& o) noexcept { *this = std::move(o); }
  NeuralMap& operator=(NeuralMap&& o) noexcept {
    cfg_ = o.cfg_;
    table_count_ = o.table_count_;
    layer_w_ = std::move(o.layer_w_);
    layer_b_ = std::move(o.layer_b_);
    pose_w_ = o.pose_w_; pose_b_ = o.pose_b_; head_w_ = o.head_w_; head_b_ = o.head_b_;
    res_w_ = o.res_w_;
    params_ = std::move(o.params_);
    grads_ = std::move(o.grads_);
    clamp_warnings_ = o.clamp_warnings_.load();
    return *this;
  }

  const MapConfig& config() const { return cfg_; }
  Eigen::VectorXd& params() { return params_; }
  const Eigen::VectorXd& params() const { return params_; }
  Eigen::VectorXd& grads() { return grads_; }
  size_t param_count() const { return static_cast<size_t>(params_.size()); }
  // dense parameters (everything after the hash table) start here
  size_t dense_offset() const { return table_count_; }

  // Encoded uv features only (no pose, no trunk).
  Eigen::VectorXd encode(const Vec2& uv) const;

  Eigen::VectorXd query(const Vec2& uv, std::span<const double> pose) const;
  // Outputs output_dim x B; element-wise identical to per-sample query.
  Eigen::MatrixXd query_batch(std::span<const Vec2> uvs, std::span<const double> pose) const;
  // As query_batch but retains activations for backward.
  Eigen::MatrixXd forward(std::span<const Vec2> uvs, std::span<const double> pose,
                          BatchTrace& trace) const;
  // Accumulates dLoss/dParam into grads() given dLoss/dOutput (output_dim x B).
  void backward(const BatchTrace& trace, const Eigen::MatrixXd& upstream);

  size_t clamp_warnings() const { return clamp_warnings_.load(); }

  void zero_grad() { grads_.setZero(); }

 private:
  void encode_into(const Vec2& uv, double* out, int32_t* corner_index, double* corner_weight) const;
  double out_transform(double pre, int row) const;
  double out_transform_grad(double pre, int row) const;

  MapConfig cfg_;
  size_t table_count_ = 0;  // hash table parameter count (0 for positional)
  std::vector<size_t> layer_w_, layer_b_;  // trunk offsets
  size_t pose_w_ = 0, pose_b_ = 0, head_w_ = 0, head_b_ = 0, res_w_ = 0;
  Eigen::VectorXd params_, grads_;
  mutable std::atomic<size_t> clamp_warnings_{0};
};

// ---- checkpoint file: "PHYN" magic, version, sections, trailing CRC32 ------

enum class SectionKind : uint32_t {
  GeoMap = 0,
  DtxMap = 1,
  AlbMap = 2,
  RghMap = 3,
  DensityBeta = 4,
  ProbeRadiance = 5,
};

struct CheckpointSection {
  SectionKind kind;
  std::vector<uint32_t> dims;
  std::vector<float> data;  // little-endian f32 payload
};

void save_checkpoint(const std::string& path, const std::vector<CheckpointSection>& sections);
std::vector<CheckpointSection> load_checkpoint(const std::string& path);

CheckpointSection map_to_section(const NeuralMap& map);
// Rebuilds a map from its section; pose_dim etc. come from the stored dims.
NeuralMap map_from_section(const CheckpointSection& section);

uint32_t crc32(const uint8_t* data, size_t n, uint32_t seed = 0);

}  // namespace phynes
