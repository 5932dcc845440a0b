#pragma once

#include "triform/geometry.hpp"

namespace triform {

/// The copy of a pattern whose first two vertices are pinned to a pair of
/// anchors. Its third vertex is the replication point.
struct TrivialReplication {
  Triangle triangle;

  Point first_anchor() const { return triangle[0]; }
  Point second_anchor() const { return triangle[1]; }
  Point replication_point() const { return triangle[2]; }
};

/// Builds the copy T of `pattern` with t0 == u and t1 == v exactly.
/// kPreserve keeps the pattern's winding, kMirror reverses it.
///
/// In complex coordinates t2 = u + w (v - u) with
/// w = (p2 - p0) / (p1 - p0), conjugated for kMirror.
///
/// Throws DegenerateTriangle for a degenerate pattern and CoincidentAnchors
/// when u == v.
TrivialReplication trivial_replication(const Triangle& pattern, Point u, Point v,
                                       Orientation orientation = Orientation::kPreserve);

/// Convenience: just the replication point.
Point replication_point(const Triangle& pattern, Point u, Point v,
                        Orientation orientation = Orientation::kPreserve);

/// Circle traced by the replication point when u stays fixed and the second
/// anchor moves on C(v, r): centered at c = replication point, radius
/// r * d(u, c) / d(u, v).
Circle machine_circle(const Triangle& pattern, Point u, Point v, double r,
                      Orientation orientation = Orientation::kPreserve);

/// Smallest circle enclosing every replication point obtained when u moves
/// on C(u, r) and v moves on C(v, r): centered at c, radius
/// r * (d(u, c) + d(v, c)) / d(u, v).
Circle spanner_circle(const Triangle& pattern, Point u, Point v, double r,
                      Orientation orientation = Orientation::kPreserve);

struct ReplicationCircleSet {
  TrivialReplication base;
  double r = 0.0;
  Circle machine;
  Circle spanner;
};

ReplicationCircleSet replication_circles(const Triangle& pattern, Point u, Point v, double r,
                                         Orientation orientation = Orientation::kPreserve);

}  // namespace triform
