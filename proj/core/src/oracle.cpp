#include "triform/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace triform {
namespace {

using Complex = std::complex<double>;

constexpr double kWindowFactor = 4.0;
constexpr double kWindowGrowth = 16.0;
constexpr int kMaxWindowExpansions = 8;

struct Variant {
  Permutation3 assignment;
  bool mirrored = false;
  std::array<Complex, 3> shape{};  // centered pattern, assigned and reflected
};

struct Probe {
  double value = 0.0;
  double theta = 0.0;
  double log_scale = 0.0;
};

class Objective {
 public:
  Objective(const Triangle& robots, const Variant& variant) : variant_(variant) {
    for (std::size_t i = 0; i < 3; ++i) robots_[i] = to_complex(robots[i]);
  }

  Circle circle(double theta, double log_scale) const { return circle(std::polar(std::exp(log_scale), theta)); }

  Circle circle(Complex a) const {
    const Complex e0 = robots_[0] - a * variant_.shape[0];
    const Complex e1 = robots_[1] - a * variant_.shape[1];
    const Complex e2 = robots_[2] - a * variant_.shape[2];
    return min_enclosing_circle_3(to_point(e0), to_point(e1), to_point(e2));
  }

  double operator()(double theta, double log_scale) const { return circle(theta, log_scale).radius; }
  double operator()(Complex a) const { return circle(a).radius; }

 private:
  std::array<Complex, 3> robots_{};
  const Variant& variant_;
};

double wrap_angle(double theta) {
  const double two_pi = 2.0 * std::numbers::pi;
  theta = std::fmod(theta, two_pi);
  return theta < 0.0 ? theta + two_pi : theta;
}

double diameter(const Triangle& t) { return t.longest_side(); }

Probe scan(const Objective& f, const OracleGrid& grid, double& lo, double& hi) {
  const double dtheta = 2.0 * std::numbers::pi / grid.theta_cells;
  for (int expansion = 0;; ++expansion) {
    const double ds = (hi - lo) / grid.scale_cells;
    Probe best{f(0.0, lo), 0.0, lo};
    int best_k = 0;
    for (int j = 0; j < grid.theta_cells; ++j) {
      const double theta = j * dtheta;
      for (int k = 0; k <= grid.scale_cells; ++k) {
        const double ls = lo + k * ds;
        const double v = f(theta, ls);
        if (v < best.value) {
          best = {v, theta, ls};
          best_k = k;
        }
      }
    }
    if (!grid.expand_window || expansion == kMaxWindowExpansions) return best;
    const double grow = std::log(kWindowGrowth);
    if (best_k == 0) {
      lo -= grow;
    } else if (best_k == grid.scale_cells) {
      hi += grow;
    } else {
      return best;
    }
  }
}

struct Incumbent {
  double value = 0.0;
  Complex a;  // scale * e^{i theta}
};

// Compass search over a = s e^{i theta} in Cartesian form, where the
// objective is convex. The stencil has kDirections evenly spread unit
// directions and is rotated by an irrational fraction of a slot every time
// the step halves, so a narrow descent cone at a kink is eventually hit. `radius` is the largest
// |p_i| of the centered shape: a step h moves no destination by more than
// h * radius.
constexpr int kDirections = 16;
constexpr double kGoldenFraction = 0.6180339887498949;

Incumbent refine(const Objective& f, const OracleGrid& grid, Incumbent at, double step, double radius) {
  const double slot = 2.0 * std::numbers::pi / kDirections;
  double phase = 0.0;
  for (int it = 0; it < grid.max_refine_iterations; ++it) {
    if (step * radius < grid.refine_tol) break;
    Incumbent next = at;
    for (int d = 0; d < kDirections; ++d) {
      const Complex a = at.a + std::polar(step, phase + d * slot);
      const double v = f(a);
      if (v < next.value) next = {v, a};
    }
    if (next.value < at.value) {
      at = next;
    } else {
      step *= 0.5;
      phase += kGoldenFraction * slot;
    }
  }
  return at;
}

}  // namespace

Circle min_enclosing_circle_3(Point a, Point b, Point c) {
  const double ab = dot(b - a, b - a);
  const double bc = dot(c - b, c - b);
  const double ca = dot(a - c, a - c);

  // Longest side opposite a non-acute angle: its diameter circle wins.
  if (ab >= bc && ab >= ca && ab >= bc + ca) return Circle{(a + b) * 0.5, 0.5 * std::sqrt(ab)};
  if (bc >= ab && bc >= ca && bc >= ab + ca) return Circle{(b + c) * 0.5, 0.5 * std::sqrt(bc)};
  if (ca >= ab && ca >= bc && ca >= ab + bc) return Circle{(c + a) * 0.5, 0.5 * std::sqrt(ca)};

  const Point u = b - a;
  const Point v = c - a;
  const double d = 2.0 * cross(u, v);
  const double uu = dot(u, u);
  const double vv = dot(v, v);
  const Point offset{(v.y * uu - u.y * vv) / d, (u.x * vv - v.x * uu) / d};
  const Point center = a + offset;
  const double radius = std::max({norm(offset), distance(center, b), distance(center, c)});
  return Circle{center, radius};
}

Triangle OracleResult::destinations(const Triangle& pattern) const {
  const Complex a = std::polar(scale, theta);
  Triangle q;
  for (std::size_t i = 0; i < 3; ++i) {
    Complex p = to_complex(pattern[assignment[i]]);
    if (mirrored) p = std::conj(p);
    q[i] = to_point(a * p) + translation;
  }
  return q;
}

double realized_travel(const Triangle& robots, const Triangle& pattern, const OracleResult& result) {
  const Triangle q = result.destinations(pattern);
  double worst = 0.0;
  for (std::size_t i = 0; i < 3; ++i) worst = std::max(worst, distance(robots[i], q[i]));
  return worst;
}

OracleResult oracle_minmax(const Triangle& robots, const Triangle& pattern, const OracleGrid& grid) {
  require_nondegenerate(robots, "robots");
  require_nondegenerate(pattern, "pattern");
  if (grid.theta_cells <= 0 || grid.scale_cells <= 0 || !(grid.refine_tol > 0.0)) {
    throw std::invalid_argument("oracle_minmax: grid resolution must be positive");
  }

  const double center_scale = std::log(diameter(robots) / diameter(pattern));
  const double dtheta = 2.0 * std::numbers::pi / grid.theta_cells;

  OracleResult best;
  bool have_best = false;
  for (const Permutation3& perm : Permutation3::all()) {
    for (const bool mirrored : {false, true}) {
      Variant variant{perm, mirrored, {}};
      Complex mean{};
      for (std::size_t i = 0; i < 3; ++i) {
        Complex p = to_complex(pattern[perm[i]]);
        if (mirrored) p = std::conj(p);
        variant.shape[i] = p;
        mean += p / 3.0;
      }
      double radius = 0.0;
      for (auto& p : variant.shape) {
        p -= mean;
        radius = std::max(radius, std::abs(p));
      }

      const Objective f(robots, variant);
      double lo = center_scale - std::log(kWindowFactor);
      double hi = center_scale + std::log(kWindowFactor);
      const Probe coarse = scan(f, grid, lo, hi);
      const double s0 = std::exp(coarse.log_scale);
      // One coarse cell, measured in the a plane.
      const double step = s0 * std::max(dtheta, std::expm1((hi - lo) / grid.scale_cells));
      const Incumbent fine = refine(f, grid, {coarse.value, std::polar(s0, coarse.theta)}, step, radius);

      if (have_best && !(fine.value < best.d_star_approx)) continue;
      // Undo the centering: Q = a (V(p) - mean) + b = a V(p) + (b - a mean).
      const Circle c = f.circle(fine.a);
      best.assignment = perm;
      best.mirrored = mirrored;
      best.theta = wrap_angle(std::arg(fine.a));
      best.scale = std::abs(fine.a);
      best.translation = c.center - to_point(fine.a * mean);
      best.d_star_approx = fine.value;
      have_best = true;
    }
  }
  best.d_star_approx = realized_travel(robots, pattern, best);
  return best;
}

}  // namespace triform
