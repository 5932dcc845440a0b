#include "triform/replication.hpp"

#include <stdexcept>

namespace triform {
namespace {

void check_radius(double r) {
  if (!(r >= 0.0) || !std::isfinite(r)) {
    throw std::invalid_argument("replication radius must be finite and non-negative");
  }
}

}  // namespace

TrivialReplication trivial_replication(const Triangle& pattern, Point u, Point v,
                                       Orientation orientation) {
  require_nondegenerate(pattern, "pattern");
  if (!is_finite(u) || !is_finite(v) || u == v) {
    throw CoincidentAnchors("trivial_replication: anchors must be distinct finite points");
  }
  const std::complex<double> p0 = to_complex(pattern[0]);
  std::complex<double> w = (to_complex(pattern[2]) - p0) / (to_complex(pattern[1]) - p0);
  if (orientation == Orientation::kMirror) w = std::conj(w);

  const std::complex<double> cu = to_complex(u);
  const Point t2 = to_point(cu + w * (to_complex(v) - cu));
  return TrivialReplication{Triangle(u, v, t2)};
}

Point replication_point(const Triangle& pattern, Point u, Point v, Orientation orientation) {
  return trivial_replication(pattern, u, v, orientation).replication_point();
}

Circle machine_circle(const Triangle& pattern, Point u, Point v, double r, Orientation orientation) {
  check_radius(r);
  const Point c = replication_point(pattern, u, v, orientation);
  return Circle{c, r * distance(u, c) / distance(u, v)};
}

Circle spanner_circle(const Triangle& pattern, Point u, Point v, double r, Orientation orientation) {
  check_radius(r);
  const Point c = replication_point(pattern, u, v, orientation);
  return Circle{c, r * (distance(u, c) + distance(v, c)) / distance(u, v)};
}

ReplicationCircleSet replication_circles(const Triangle& pattern, Point u, Point v, double r,
                                         Orientation orientation) {
  ReplicationCircleSet set;
  set.base = trivial_replication(pattern, u, v, orientation);
  set.r = r;
  set.machine = machine_circle(pattern, u, v, r, orientation);
  set.spanner = spanner_circle(pattern, u, v, r, orientation);
  return set;
}

}  // namespace triform
