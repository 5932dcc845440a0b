#pragma once

#include <array>

#include "triform/geometry.hpp"

namespace triform {

/// Result of the geometric construction for one fixed assignment and
/// orientation. Index i always refers to robot i of the configuration that
/// was passed in.
struct RigidSolution {
  Triangle destinations;        // Q
  std::array<Point, 3> targets;  // t_i, the replication point robot i heads to
  double travel = 0.0;           // common distance every robot moves
  /// d(r_i, t_i) * d(p_{i+1}, p_{i-1}) on the unit-perimeter pattern; the
  /// three entries agree up to rounding.
  std::array<double, 3> per_robot{};
  Orientation orientation = Orientation::kPreserve;
};

/// Point that every robot moves directly toward or away from.
struct FocalPoint {
  enum class Kind { kFinite, kAtInfinity, kUndefined };

  Kind kind = Kind::kUndefined;
  Point point;  // meaningful only for kFinite
  /// Largest distance between the pairwise intersections of the motion lines.
  double spread = 0.0;

  bool finite() const { return kind == Kind::kFinite; }
};

struct Solution {
  double d_star = 0.0;
  /// Robot i forms pattern vertex assignment[i].
  Permutation3 assignment;
  bool mirrored = false;
  RigidSolution rigid;
  FocalPoint focal;
};

/// Travel values at or below this fraction of the configuration's scale are
/// reported as exactly zero (the configuration already forms the pattern).
inline constexpr double kZeroTravelRelTol = 1e-13;

/// Lines whose directions differ by less than this angle are parallel.
inline constexpr double kParallelAngleTol = 1e-9;

/// Optimal formation of `pattern` by `robots` when robot i must take pattern
/// vertex i and the copy must have the requested orientation.
///
/// The pattern is rescaled to unit perimeter. For each robot i the target
/// t_i is the replication point of (p_{i+1}, p_{i-1}, p_i) on
/// (r_{i+1}, r_{i-1}); every robot then moves the common distance
/// r = d(r_i, t_i) * d(p_{i+1}, p_{i-1}) straight toward its target.
///
/// Throws DegenerateTriangle, or CoincidentTarget if a target coincides
/// with its robot while r > 0.
RigidSolution rigid_solve(const Triangle& robots, const Triangle& pattern,
                          Orientation orientation = Orientation::kPreserve);

/// Globally optimal min-max formation over assignments and reflections.
///
/// Both triangles are put in canonical side order, the construction runs
/// for both orientations, and the cheaper one is returned in the caller's
/// robot order. Orientation ties within 1e-12 resolve to kPreserve.
Solution solve(const Triangle& robots, const Triangle& pattern);

/// Common intersection of the lines r_i -> q_i.
/// Throws NoMovement when no robot moves.
FocalPoint focal_point(const Triangle& robots, const Triangle& destinations);

Point centroid(const Triangle& t);

}  // namespace triform
