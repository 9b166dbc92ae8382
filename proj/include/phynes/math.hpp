#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>

namespace phynes {

struct Vec2 {
  double x = 0, y = 0;
  Vec2() = default;
  Vec2(double x_, double y_) : x(x_), y(y_) {}
  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
};

struct Vec3 {
  double x = 0, y = 0, z = 0;
  Vec3() = default;
  Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}
  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator-() const { return {-x, -y, -z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
  Vec3& operator+=(const Vec3& o) {
    x += o.x; y += o.y; z += o.z;
    return *this;
  }
  Vec3 cwise(const Vec3& o) const { return {x * o.x, y * o.y, z * o.z}; }
  double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }
inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }
inline double norm2(const Vec3& v) { return dot(v, v); }
inline Vec3 normalized(const Vec3& v) {
  double n = norm(v);
  return n > 0 ? v / n : Vec3{0, 0, 0};
}
inline double norm(const Vec2& v) { return std::sqrt(v.x * v.x + v.y * v.y); }

// Column-major-free 4x4 rigid transform helper; m[r][c].
struct Mat4 {
  std::array<std::array<double, 4>, 4> m{};
  static Mat4 identity() {
    Mat4 r;
    for (int i = 0; i < 4; ++i) r.m[i][i] = 1;
    return r;
  }
  static Mat4 translation(const Vec3& t) {
    Mat4 r = identity();
    r.m[0][3] = t.x; r.m[1][3] = t.y; r.m[2][3] = t.z;
    return r;
  }
  // Rodrigues rotation from an axis-angle vector.
  static Mat4 rotation(const Vec3& aa) {
    double angle = norm(aa);
    Mat4 r = identity();
    if (angle < 1e-12) {
      // second-order small-angle fallback keeps the map smooth at 0
      r.m[0][1] = -aa.z; r.m[0][2] = aa.y;
      r.m[1][0] = aa.z;  r.m[1][2] = -aa.x;
      r.m[2][0] = -aa.y; r.m[2][1] = aa.x;
      return r;
    }
    Vec3 k = aa / angle;
    double c = std::cos(angle), s = std::sin(angle), t = 1 - c;
    r.m[0][0] = c + k.x * k.x * t;
    r.m[0][1] = k.x * k.y * t - k.z * s;
    r.m[0][2] = k.x * k.z * t + k.y * s;
    r.m[1][0] = k.y * k.x * t + k.z * s;
    r.m[1][1] = c + k.y * k.y * t;
    r.m[1][2] = k.y * k.z * t - k.x * s;
    r.m[2][0] = k.z * k.x * t - k.y * s;
    r.m[2][1] = k.z * k.y * t + k.x * s;
    r.m[2][2] = c + k.z * k.z * t;
    return r;
  }
  Mat4 operator*(const Mat4& o) const {
    Mat4 r;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        double s = 0;
        for (int k = 0; k < 4; ++k) s += m[i][k] * o.m[k][j];
        r.m[i][j] = s;
      }
    return r;
  }
  Vec3 transform_point(const Vec3& p) const {
    return {m[0][0] * p.x + m[0][1] * p.y + m[0][2] * p.z + m[0][3],
            m[1][0] * p.x + m[1][1] * p.y + m[1][2] * p.z + m[1][3],
            m[2][0] * p.x + m[2][1] * p.y + m[2][2] * p.z + m[2][3]};
  }
  Vec3 transform_dir(const Vec3& d) const {
    return {m[0][0] * d.x + m[0][1] * d.y + m[0][2] * d.z,
            m[1][0] * d.x + m[1][1] * d.y + m[1][2] * d.z,
            m[2][0] * d.x + m[2][1] * d.y + m[2][2] * d.z};
  }
};

struct AABB {
  Vec3 lo{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity(),
          std::numeric_limits<double>::infinity()};
  Vec3 hi{-std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity(),
          -std::numeric_limits<double>::infinity()};
  void grow(const Vec3& p) {
    lo = {std::min(lo.x, p.x), std::min(lo.y, p.y), std::min(lo.z, p.z)};
    hi = {std::max(hi.x, p.x), std::max(hi.y, p.y), std::max(hi.z, p.z)};
  }
  void grow(const AABB& b) {
    grow(b.lo);
    grow(b.hi);
  }
  Vec3 center() const { return (lo + hi) * 0.5; }
  double diagonal() const { return norm(hi - lo); }
  AABB inflated(double r) const {
    AABB b = *this;
    b.lo = b.lo - Vec3{r, r, r};
    b.hi = b.hi + Vec3{r, r, r};
    return b;
  }
  // squared distance from a point to the box (0 inside)
  double dist2(const Vec3& p) const {
    double d = 0;
    for (int i = 0; i < 3; ++i) {
      double lo_i = i == 0 ? lo.x : (i == 1 ? lo.y : lo.z);
      double hi_i = i == 0 ? hi.x : (i == 1 ? hi.y : hi.z);
      double v = p[i];
      if (v < lo_i) d += (lo_i - v) * (lo_i - v);
      if (v > hi_i) d += (v - hi_i) * (v - hi_i);
    }
    return d;
  }
  // slab test; returns [t0,t1] clipped to [tmin,tmax], empty if t0>t1
  bool intersect(const Vec3& o, const Vec3& inv_d, double tmin, double tmax, double& t0,
                 double& t1) const {
    t0 = tmin;
    t1 = tmax;
    for (int i = 0; i < 3; ++i) {
      double lo_i = i == 0 ? lo.x : (i == 1 ? lo.y : lo.z);
      double hi_i = i == 0 ? hi.x : (i == 1 ? hi.y : hi.z);
      double a = (lo_i - o[i]) * (i == 0 ? inv_d.x : (i == 1 ? inv_d.y : inv_d.z));
      double b = (hi_i - o[i]) * (i == 0 ? inv_d.x : (i == 1 ? inv_d.y : inv_d.z));
      if (a > b) std::swap(a, b);
      t0 = std::max(t0, a);
      t1 = std::min(t1, b);
      if (t0 > t1) return false;
    }
    return true;
  }
};

inline double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

inline double softplus(double x) { return x > 30 ? x : std::log1p(std::exp(x)); }
inline double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

}  // namespace phynes
