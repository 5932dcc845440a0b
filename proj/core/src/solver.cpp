#include "triform/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "triform/replication.hpp"

namespace triform {
namespace {

constexpr double kOrientationTieTol = 1e-12;

std::optional<Point> line_intersection(Point a, Point da, Point b, Point db) {
  const double denom = cross(da, db);
  if (std::abs(denom) <= kParallelAngleTol * norm(da) * norm(db)) return std::nullopt;
  const double s = cross(b - a, db) / denom;
  return a + da * s;
}

}  // namespace

RigidSolution rigid_solve(const Triangle& robots, const Triangle& pattern, Orientation orientation) {
  require_nondegenerate(robots, "robots");
  const Triangle unit = perimeter_normalize(pattern);

  RigidSolution sol;
  sol.orientation = orientation;
  for (std::size_t i = 0; i < 3; ++i) {
    const std::size_t next = (i + 1) % 3;
    const std::size_t prev = (i + 2) % 3;
    const Triangle rotated(unit[next], unit[prev], unit[i]);
    sol.targets[i] = replication_point(rotated, robots[next], robots[prev], orientation);
    sol.per_robot[i] = distance(robots[i], sol.targets[i]) * distance(unit[next], unit[prev]);
  }
  double r = *std::max_element(sol.per_robot.begin(), sol.per_robot.end());
  if (r <= kZeroTravelRelTol * scale_of(robots)) r = 0.0;
  sol.travel = r;

  for (std::size_t i = 0; i < 3; ++i) {
    if (r == 0.0) {
      sol.destinations[i] = robots[i];
      continue;
    }
    const Point dir = sol.targets[i] - robots[i];
    const double len = norm(dir);
    if (len == 0.0) {
      throw CoincidentTarget("rigid_solve: target coincides with robot while travel is positive");
    }
    sol.destinations[i] = robots[i] + dir * (r / len);
  }
  return sol;
}

Solution solve(const Triangle& robots, const Triangle& pattern) {
  require_nondegenerate(robots, "robots");
  require_nondegenerate(pattern, "pattern");

  const Permutation3 robot_order = canonical_permutation(robots);
  const Permutation3 pattern_order = canonical_permutation(pattern);
  const Triangle r_sorted = robots.permuted(robot_order);
  const Triangle p_sorted = pattern.permuted(pattern_order);

  const RigidSolution keep = rigid_solve(r_sorted, p_sorted, Orientation::kPreserve);
  const RigidSolution flip = rigid_solve(r_sorted, p_sorted, Orientation::kMirror);
  const RigidSolution& best = (flip.travel < keep.travel - kOrientationTieTol) ? flip : keep;

  // Sorted slot k belongs to robot robot_order[k]; scatter back.
  Solution out;
  std::array<int, 3> assignment{};
  out.rigid.travel = best.travel;
  out.rigid.orientation = best.orientation;
  for (std::size_t k = 0; k < 3; ++k) {
    const auto robot = static_cast<std::size_t>(robot_order[k]);
    assignment[robot] = pattern_order[k];
    out.rigid.destinations[robot] = best.destinations[k];
    out.rigid.targets[robot] = best.targets[k];
    out.rigid.per_robot[robot] = best.per_robot[k];
  }
  out.assignment = Permutation3(assignment);
  out.d_star = best.travel;
  out.mirrored = best.orientation == Orientation::kMirror;
  if (out.d_star > 0.0) out.focal = focal_point(robots, out.rigid.destinations);
  return out;
}

FocalPoint focal_point(const Triangle& robots, const Triangle& destinations) {
  std::array<Point, 3> dir{};
  bool moved = false;
  for (std::size_t i = 0; i < 3; ++i) {
    dir[i] = destinations[i] - robots[i];
    moved = moved || norm(dir[i]) > 0.0;
  }
  if (!moved) throw NoMovement("focal_point: no robot moves, every point qualifies");

  std::array<std::optional<Point>, 3> hits;
  std::array<double, 3> sine{};
  for (std::size_t i = 0; i < 3; ++i) {
    const std::size_t j = (i + 1) % 3;
    // A robot that does not move still pins its line through r_i, but the
    // direction is free; it cannot constrain the intersection.
    if (norm(dir[i]) == 0.0 || norm(dir[j]) == 0.0) continue;
    hits[i] = line_intersection(robots[i], dir[i], robots[j], dir[j]);
    sine[i] = std::abs(cross(dir[i], dir[j])) / (norm(dir[i]) * norm(dir[j]));
  }

  FocalPoint fp;
  if (std::none_of(hits.begin(), hits.end(), [](const auto& h) { return h.has_value(); })) {
    fp.kind = FocalPoint::Kind::kAtInfinity;
    return fp;
  }
  std::size_t best = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    if (hits[i] && (!hits[best] || sine[i] > sine[best])) best = i;
  }
  fp.kind = FocalPoint::Kind::kFinite;
  fp.point = *hits[best];
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      if (hits[i] && hits[j]) fp.spread = std::max(fp.spread, distance(*hits[i], *hits[j]));
    }
  }
  // One parallel pair among otherwise intersecting lines means the lines
  // cannot share a point.
  const auto count = std::count_if(hits.begin(), hits.end(), [](const auto& h) { return h.has_value(); });
  if (count == 2) fp.spread = std::numeric_limits<double>::infinity();
  return fp;
}

Point centroid(const Triangle& t) { return (t[0] + t[1] + t[2]) / 3.0; }

}  // namespace triform
