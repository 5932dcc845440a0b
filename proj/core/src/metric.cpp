#include "triform/metric.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace triform {
namespace {

constexpr double kAngleSumTol = 1e-12;

}  // namespace

void AngleTriple::validate() const {
  const bool finite = std::isfinite(a0) && std::isfinite(a1) && std::isfinite(a2);
  if (!finite || !(a0 > 0.0) || a0 > a1 || a1 > a2 || !(a2 < std::numbers::pi)) {
    throw InvalidAngles("angle triple must satisfy 0 < a0 <= a1 <= a2 < pi");
  }
  if (std::abs(a0 + a1 + a2 - std::numbers::pi) > kAngleSumTol) {
    throw InvalidAngles("angle triple must sum to pi");
  }
}

AngleTriple angles_of(const Triangle& t) {
  auto a = interior_angles(t);
  std::sort(a.begin(), a.end());
  return AngleTriple{a[0], a[1], a[2]};
}

Point unit_replication_point(const AngleTriple& angles) {
  const double len = std::sin(angles.a1) / std::sin(angles.a2);
  return Point{len * std::cos(angles.a0), len * std::sin(angles.a0)};
}

double tau_from_angles(const AngleTriple& alpha, const AngleTriple& beta) {
  alpha.validate();
  beta.validate();
  // x, y are the distances from the origin to each replication point and
  // a0 - b0 the angle between them. Law of cosines, written as
  // (x - y)^2 + 4xy sin^2(d/2) to avoid cancellation near zero.
  const double x = std::sin(alpha.a1) / std::sin(alpha.a2);
  const double y = std::sin(beta.a1) / std::sin(beta.a2);
  const double h = std::sin(0.5 * (alpha.a0 - beta.a0));
  const double diff = x - y;
  return std::sqrt(diff * diff + 4.0 * x * y * h * h);
}

double tau(const Triangle& a, const Triangle& b) { return tau_from_angles(angles_of(a), angles_of(b)); }

}  // namespace triform
