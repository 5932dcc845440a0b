#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <iosfwd>

#include "triform/errors.hpp"

namespace triform {

/// A location in the shared global frame.
struct Point {
  double x = 0.0;
  double y = 0.0;

  constexpr Point& operator+=(Point o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  constexpr Point& operator-=(Point o) {
    x -= o.x;
    y -= o.y;
    return *this;
  }
  constexpr Point& operator*=(double k) {
    x *= k;
    y *= k;
    return *this;
  }

  friend constexpr Point operator+(Point a, Point b) { return a += b; }
  friend constexpr Point operator-(Point a, Point b) { return a -= b; }
  friend constexpr Point operator-(Point a) { return {-a.x, -a.y}; }
  friend constexpr Point operator*(Point a, double k) { return a *= k; }
  friend constexpr Point operator*(double k, Point a) { return a *= k; }
  friend constexpr Point operator/(Point a, double k) { return {a.x / k, a.y / k}; }
  friend constexpr bool operator==(Point, Point) = default;
};

std::ostream& operator<<(std::ostream& os, Point p);

constexpr double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }

inline std::complex<double> to_complex(Point p) { return {p.x, p.y}; }
inline Point to_point(std::complex<double> z) { return {z.real(), z.imag()}; }

bool is_finite(Point p);

struct Circle {
  Point center;
  double radius = 0.0;
};

/// Orientation of a copy relative to its source: kPreserve keeps the
/// winding (rigid similarity), kMirror reflects it.
enum class Orientation { kPreserve, kMirror };

constexpr Orientation flipped(Orientation o) {
  return o == Orientation::kPreserve ? Orientation::kMirror : Orientation::kPreserve;
}

const char* to_string(Orientation o);

/// Bijection on {0,1,2}. Applying it to a triangle T yields the triangle
/// whose i-th vertex is T[map[i]].
class Permutation3 {
 public:
  constexpr Permutation3() : map_{0, 1, 2} {}
  /// Throws std::invalid_argument unless `map` is a bijection on {0,1,2}.
  explicit Permutation3(std::array<int, 3> map);

  static constexpr Permutation3 identity() { return {}; }
  /// All six permutations in lexicographic order.
  static std::array<Permutation3, 6> all();

  constexpr int operator[](std::size_t i) const { return map_[i]; }
  constexpr const std::array<int, 3>& map() const { return map_; }

  Permutation3 inverse() const;
  /// (a.then(b))[i] == a[b[i]]: reorder by `a`, then reorder the result by `b`.
  Permutation3 then(const Permutation3& b) const;

  friend constexpr bool operator==(const Permutation3&, const Permutation3&) = default;

 private:
  std::array<int, 3> map_;
};

std::ostream& operator<<(std::ostream& os, const Permutation3& p);

/// Three ordered vertices. Doubles as a robot configuration and a pattern.
/// Construction does not validate; operations that need a proper triangle
/// call require_nondegenerate().
class Triangle {
 public:
  constexpr Triangle() = default;
  constexpr Triangle(Point a, Point b, Point c) : v_{a, b, c} {}
  explicit constexpr Triangle(std::array<Point, 3> v) : v_(v) {}

  constexpr const Point& operator[](std::size_t i) const { return v_[i]; }
  constexpr Point& operator[](std::size_t i) { return v_[i]; }
  constexpr const std::array<Point, 3>& vertices() const { return v_; }

  auto begin() const { return v_.begin(); }
  auto end() const { return v_.end(); }

  /// Length of the side between vertex i and vertex (i+1) mod 3.
  double side(std::size_t i) const;
  double perimeter() const;
  double longest_side() const;
  /// Twice the signed area; positive for counter-clockwise winding.
  double signed_area2() const;
  /// +1 for counter-clockwise, -1 for clockwise, 0 if exactly collinear.
  int orientation_sign() const;

  Triangle permuted(const Permutation3& p) const;
  /// Reflection across the x axis (winding reversed, same vertex order).
  Triangle mirrored() const;
  Triangle oriented(Orientation o) const { return o == Orientation::kMirror ? mirrored() : *this; }

  friend constexpr bool operator==(const Triangle&, const Triangle&) = default;

 private:
  std::array<Point, 3> v_{};
};

std::ostream& operator<<(std::ostream& os, const Triangle& t);

/// Sides shorter than, or heights below, this fraction of the longest side
/// mark a triangle as degenerate.
inline constexpr double kDegenerateRelTol = 1e-9;
inline constexpr double kDefaultSimilarityTol = 1e-9;

bool is_degenerate(const Triangle& t);
/// Throws DegenerateTriangle (with `what` naming the triangle) if degenerate
/// or non-finite.
void require_nondegenerate(const Triangle& t, const char* what = "triangle");

double distance(Point u, Point v);

/// Interior angle at vertex i in slot i, radians.
std::array<double, 3> interior_angles(const Triangle& t);

/// Permutation that orders the triangle so that
/// d(t0,t1) <= d(t1,t2) <= d(t2,t0); ties resolved toward the
/// lexicographically smallest permutation.
Permutation3 canonical_permutation(const Triangle& t);

/// True iff the sorted interior angles agree pairwise within `tol` radians.
/// Covers translation, rotation, scaling, reflection and relabelling.
bool is_similar(const Triangle& a, const Triangle& b, double tol = kDefaultSimilarityTol);

/// Scales about the centroid so the perimeter becomes 1.
Triangle perimeter_normalize(const Triangle& p);

/// Largest absolute coordinate or side length; used to scale tolerances.
double scale_of(const Triangle& t);

}  // namespace triform
