#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "phynes/body.hpp"
#include "phynes/math.hpp"

namespace phynes {

struct Ray {
  Vec3 origin;
  Vec3 dir;  // unit
};

struct CameraModel {
  double fx = 0, fy = 0, cx = 0, cy = 0;
  int width = 0, height = 0;
  Mat4 world_to_camera = Mat4::identity();  // rigid; camera looks along +z, y down

  Vec3 position() const;  // camera center in world space
  // Ray through the center of pixel (x, y).
  Ray pixel_ray(int x, int y) const;
  // Projects a world point; returns false when behind the near plane.
  bool project(const Vec3& p, double& sx, double& sy, double& depth) const;
};

// Simple look-at constructor (camera at eye, looking at target, up vector).
CameraModel make_lookat_camera(const Vec3& eye, const Vec3& target, const Vec3& up, double fov_y_rad,
                               int width, int height);

struct Hit {
  double t = 0;
  int face_id = -1;
  Vec3 barycentrics;
};

// Median-split BVH over mesh triangles, leaves <= 4 triangles. Immutable after
// build; all queries reentrant.
class SpatialIndex {
 public:
  SpatialIndex() = default;
  SpatialIndex(std::span<const Vec3> vertices, std::span<const std::array<int, 3>> faces);

  std::optional<Hit> closest_hit(const Ray& ray, double t_min = 1e-6,
                                 double t_max = std::numeric_limits<double>::infinity()) const;
  bool occluded(const Vec3& origin, const Vec3& dir, double t_max) const;
  // Globally closest surface point (face, barycentrics); ties by lowest face index.
  SurfaceProjection closest_point(const Vec3& point,
                                  std::span<const std::array<Vec2, 3>> uvs = {}) const;

  const AABB& bounds() const { return nodes_.empty() ? empty_bounds_ : nodes_[0].box; }
  size_t degenerate_triangles() const { return degenerate_; }
  size_t triangle_count() const { return faces_.size(); }

 private:
  struct Node {
    AABB box;
    int left = -1, right = -1;  // internal children
    int first = 0, count = 0;   // leaf triangle range into order_
  };
  int build(std::vector<int>& tris, const std::vector<Vec3>& centroids);
  void closest_point_rec(int node, const Vec3& p, double& best_d2, SurfaceProjection& best) const;

  std::vector<Vec3> vertices_;
  std::vector<std::array<int, 3>> faces_;
  std::vector<Node> nodes_;
  std::vector<int> order_;
  size_t degenerate_ = 0;
  AABB empty_bounds_;
};

// Möller-Trumbore; returns true with t and barycentrics (u for v1, v in bary.z for v2).
bool intersect_triangle(const Ray& ray, const Vec3& a, const Vec3& b, const Vec3& c, double t_min,
                        double t_max, double& t, Vec3& bary);

struct UVImage {
  int width = 0, height = 0;
  std::vector<int> face_id;     // -1 where uncovered
  std::vector<Vec3> barycentrics;
  std::vector<Vec2> uv;
  std::vector<double> depth;    // camera-space z, meters
  std::vector<Vec3> normal;     // unit shading normal
  std::vector<uint8_t> mask;

  bool covered(int x, int y) const { return mask[y * width + x] != 0; }
  size_t covered_count() const;
};

// Z-buffered rasterization of the deformed mesh at pixel centers, front faces
// only, perspective-correct uv/normal interpolation. Equivalent to first-hit
// ray casting away from silhouettes.
UVImage rasterize(const DeformedMesh& mesh, std::span<const std::array<Vec2, 3>> uvs,
                  const CameraModel& camera);

// BVH-accelerated closest-surface projection with signed distance.
SurfaceProjection project_to_surface(const Vec3& point, const SpatialIndex& bvh,
                                     std::span<const std::array<Vec2, 3>> uvs = {});

struct LightProbeArray;  // pbr.hpp

// Per-probe binary visibility at a surface point: 0 for backfacing directions
// or occluded shadow rays, else 1. The cosine term is applied in shading.
std::vector<double> visibility(const Vec3& point, const Vec3& normal,
                               std::span<const Vec3> probe_dirs, const SpatialIndex& bvh,
                               double epsilon_scale = 1e-4);

}  // namespace phynes
