#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "phynes/math.hpp"

namespace phynes {

// Rest-pose skinned body: triangle mesh, per-corner UV atlas, skeleton and
// per-vertex skinning weights. Immutable after construction.
struct BodyModel {
  std::vector<Vec3> vertices;
  std::vector<std::array<int, 3>> faces;
  std::vector<std::array<Vec2, 3>> uv_per_corner;  // one uv triple per face
  std::vector<Vec3> joint_positions;
  std::vector<int> joint_parents;  // -1 for root
  std::vector<std::vector<double>> skin_weights;  // [vertex][joint], rows sum to 1
  std::vector<Vec3> vertex_normals;  // unit, area-weighted rest normals

  size_t joint_count() const { return joint_positions.size(); }
  // Canonical uv of a vertex: the uv of its first corner occurrence
  // (lowest face index). Seam vertices take the uv of that face's chart.
  Vec2 vertex_uv(int v) const;
  AABB bounds() const;
};

struct PoseParams {
  std::vector<double> theta;  // 3 per joint, axis-angle
  Vec3 root_translation;

  static PoseParams identity(size_t joints) { return {std::vector<double>(3 * joints, 0.0), {}}; }
  Vec3 joint_rotation(size_t j) const { return {theta[3 * j], theta[3 * j + 1], theta[3 * j + 2]}; }
};

struct DeformedMesh {
  std::vector<Vec3> posed_vertices;
  std::vector<double> offsets;  // signed offset l per vertex, meters
  const std::vector<std::array<int, 3>>* faces = nullptr;  // shared with the body
  std::vector<Vec3> vertex_normals;
  std::vector<Vec3> face_normals;
};

struct SurfaceProjection {
  Vec2 uv;
  int face_id = -1;
  Vec3 barycentrics;
  double h = 0;  // signed distance, positive outside
  Vec3 point;    // closest surface point
};

// Shared mesh connectivity, built once per topology.
struct MeshTopology {
  std::vector<std::array<int, 2>> edges;            // unique, v0 < v1
  std::vector<std::array<int, 2>> edge_faces;       // faces sharing each edge (closed: both >= 0)
  std::vector<std::vector<int>> vertex_neighbors;   // one-ring, sorted
  bool closed_manifold = false;

  static MeshTopology build(size_t vertex_count, std::span<const std::array<int, 3>> faces);
};

struct BodyValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

BodyModel load_body(const std::string& path);
void save_body(const BodyModel& body, const std::string& path);
// Validates all BodyModel invariants; throws BodyValidationError.
void validate_body(const BodyModel& body);

std::vector<Vec3> lbs_pose(const BodyModel& body, const PoseParams& pose);
// Per-joint skinning matrices (posed global * inverse rest global).
std::vector<Mat4> skinning_transforms(const BodyModel& body, const PoseParams& pose);

// Posed vertices displaced by per-vertex offsets along the LBS-mesh normals.
// Offsets are clamped to [-offset_cap, offset_cap]. The displacement normals
// are the posed base-mesh normals, so d(vertex)/d(offset) is exactly that
// normal; output normals are recomputed on the displaced mesh.
DeformedMesh deform(const BodyModel& body, const PoseParams& pose,
                    std::span<const double> vertex_offsets, double offset_cap = 0.10);

// Brute-force closest point over every triangle; the oracle path and the
// fallback when no BVH is available. Ties broken by lowest face index.
SurfaceProjection project_to_surface_exhaustive(const Vec3& point, std::span<const Vec3> vertices,
                                                std::span<const std::array<int, 3>> faces,
                                                std::span<const std::array<Vec2, 3>> uvs);

// 1-to-4 midpoint subdivision; new vertex uv/skin weights are edge-endpoint
// averages. Requires a closed manifold mesh.
BodyModel subdivide_midpoint(const BodyModel& body);

// Closest point on a triangle to p, as barycentrics.
Vec3 closest_point_triangle(const Vec3& p, const Vec3& a, const Vec3& b, const Vec3& c);

std::vector<Vec3> face_normals_of(std::span<const Vec3> vertices,
                                  std::span<const std::array<int, 3>> faces);
std::vector<Vec3> vertex_normals_of(std::span<const Vec3> vertices,
                                    std::span<const std::array<int, 3>> faces);

// Synthetic capsule body: 482 vertices, 960 faces, 2 joints, cylindrical uv atlas.
BodyModel make_capsule_body();
// Ring-parameterized sphere (rings*segments + 2 vertices, 2*rings*segments faces), 1 joint.
BodyModel make_ring_sphere(int rings, int segments, double radius);
// Smallest closed mesh, for edge-case tests.
BodyModel make_tetrahedron_body();

}  // namespace phynes
