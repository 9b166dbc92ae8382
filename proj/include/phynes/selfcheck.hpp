#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace phynes {

struct CheckResult {
  std::string name;
  bool passed = false;
  double worst = 0;  // worst relative error / disagreement rate, path-specific
  std::string detail;
};

// Exact-formula checks: signed-distance conversion, mesh split counts,
// default loss weights, per-ray sample counts.
std::vector<CheckResult> run_formula_suite(uint64_t seed);

// Central finite differences vs the hand-derived gradients on every
// differentiable path; relative error < 1e-3 on >= 100 parameters per path.
std::vector<CheckResult> run_gradient_suite(uint64_t seed);

// Fast path vs oracle: rasterizer vs ray caster, BVH vs exhaustive
// intersection, visibility vs brute-force shadow rays, projection vs
// exhaustive closest point.
std::vector<CheckResult> run_oracle_suite(uint64_t seed);

// Physical sanity: compositing weights, BRDF reciprocity, Lambert furnace
// quadrature, shade linearity in the probe radiances.
std::vector<CheckResult> run_physics_suite(uint64_t seed);

// All four suites in order.
std::vector<CheckResult> run_all_checks(uint64_t seed);

}  // namespace phynes
