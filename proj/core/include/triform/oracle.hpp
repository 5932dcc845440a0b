#pragma once

#include "triform/geometry.hpp"

namespace triform {

/// Smallest circle containing three points (coincident or collinear inputs
/// allowed): the diameter circle of some pair, or the circumcircle.
Circle min_enclosing_circle_3(Point a, Point b, Point c);

struct OracleGrid {
  int theta_cells = 360;
  int scale_cells = 200;
  /// Refinement stops once one stencil step moves no destination by more
  /// than this distance.
  double refine_tol = 1e-8;
  /// Hard cap on refinement iterations per variant; 0 disables refinement.
  int max_refine_iterations = 10000;
  /// Widen the scale window while the best cell sits on its boundary.
  bool expand_window = true;
};

/// Best placement found by brute-force search over similarity transforms.
/// Robot i is sent to scale * Rot(theta) * V(pattern[assignment[i]]) +
/// translation, where V reflects across the x axis when `mirrored`.
struct OracleResult {
  double d_star_approx = 0.0;
  double theta = 0.0;
  double scale = 1.0;
  Point translation;
  Permutation3 assignment;
  bool mirrored = false;

  Triangle destinations(const Triangle& pattern) const;
};

/// Approximates the optimal min-max travel without using the geometric
/// construction. For each of the 12 assignment/reflection variants the
/// translation is eliminated in closed form (smallest circle enclosing
/// r_i - s Rot(theta) p_i), the (theta, log s) plane is scanned on a grid
/// and the best cell is refined by a shrinking compass search.
///
/// Deterministic: ties go to the earliest variant and lowest cell index.
OracleResult oracle_minmax(const Triangle& robots, const Triangle& pattern, const OracleGrid& grid = {});

/// Max distance any robot travels under the transform stored in `result`.
double realized_travel(const Triangle& robots, const Triangle& pattern, const OracleResult& result);

}  // namespace triform
