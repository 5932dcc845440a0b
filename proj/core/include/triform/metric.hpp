#pragma once

#include <array>

#include "triform/geometry.hpp"

namespace triform {

/// Interior angles sorted ascending: 0 < a0 <= a1 <= a2 < pi, summing to pi.
struct AngleTriple {
  double a0 = 0.0;
  double a1 = 0.0;
  double a2 = 0.0;

  /// Throws InvalidAngles if ordering, range or the angle sum is violated.
  void validate() const;
};

AngleTriple angles_of(const Triangle& t);

/// Shape distance between two triangles: the distance between their
/// replication points when both, vertices ordered by ascending angle, are
/// replicated counter-clockwise onto ((0,0), (1,0)).
///
/// Zero exactly for similar triangles, symmetric, and a metric on similarity
/// classes. Values lie in [0, 1]: the replication point sits inside the
/// unit disk at polar angle a0 <= pi/3. The upper end is approached by a
/// needle against the equilateral triangle.
double tau(const Triangle& a, const Triangle& b);

/// Same value from the sorted angle triples. Throws InvalidAngles.
double tau_from_angles(const AngleTriple& alpha, const AngleTriple& beta);

/// Replication point of the triangle with angles `angles` on
/// ((0,0), (1,0)): the point at polar angle a0 and radius sin(a1)/sin(a2).
Point unit_replication_point(const AngleTriple& angles);

}  // namespace triform
