#include "triform/geometry.hpp"

#include <algorithm>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <string>

namespace triform {

std::ostream& operator<<(std::ostream& os, Point p) {
  return os << '(' << p.x << ", " << p.y << ')';
}

bool is_finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

const char* to_string(Orientation o) {
  return o == Orientation::kPreserve ? "preserve" : "mirror";
}

Permutation3::Permutation3(std::array<int, 3> map) : map_(map) {
  std::array<bool, 3> seen{};
  for (int v : map_) {
    if (v < 0 || v > 2 || seen[v]) {
      throw std::invalid_argument("Permutation3: not a bijection on {0,1,2}");
    }
    seen[v] = true;
  }
}

std::array<Permutation3, 6> Permutation3::all() {
  return {Permutation3({0, 1, 2}), Permutation3({0, 2, 1}), Permutation3({1, 0, 2}),
          Permutation3({1, 2, 0}), Permutation3({2, 0, 1}), Permutation3({2, 1, 0})};
}

Permutation3 Permutation3::inverse() const {
  std::array<int, 3> inv{};
  for (int i = 0; i < 3; ++i) inv[map_[i]] = i;
  return Permutation3(inv);
}

Permutation3 Permutation3::then(const Permutation3& b) const {
  return Permutation3({map_[b[0]], map_[b[1]], map_[b[2]]});
}

std::ostream& operator<<(std::ostream& os, const Permutation3& p) {
  return os << '[' << p[0] << ' ' << p[1] << ' ' << p[2] << ']';
}

double Triangle::side(std::size_t i) const { return distance(v_[i], v_[(i + 1) % 3]); }

double Triangle::perimeter() const { return side(0) + side(1) + side(2); }

double Triangle::longest_side() const { return std::max({side(0), side(1), side(2)}); }

double Triangle::signed_area2() const { return cross(v_[1] - v_[0], v_[2] - v_[0]); }

int Triangle::orientation_sign() const {
  const double a = signed_area2();
  return (a > 0) - (a < 0);
}

Triangle Triangle::permuted(const Permutation3& p) const {
  return Triangle(v_[p[0]], v_[p[1]], v_[p[2]]);
}

Triangle Triangle::mirrored() const {
  return Triangle(Point{v_[0].x, -v_[0].y}, Point{v_[1].x, -v_[1].y}, Point{v_[2].x, -v_[2].y});
}

std::ostream& operator<<(std::ostream& os, const Triangle& t) {
  return os << '[' << t[0] << ", " << t[1] << ", " << t[2] << ']';
}

bool is_degenerate(const Triangle& t) {
  for (const Point& p : t) {
    if (!is_finite(p)) return true;
  }
  const double longest = t.longest_side();
  if (!(longest > 0.0)) return true;
  const double eps = kDegenerateRelTol * longest;
  for (std::size_t i = 0; i < 3; ++i) {
    if (t.side(i) <= eps) return true;
  }
  // Height over the longest side.
  return std::abs(t.signed_area2()) / longest <= eps;
}

void require_nondegenerate(const Triangle& t, const char* what) {
  if (is_degenerate(t)) {
    throw DegenerateTriangle(std::string(what) + " is degenerate (collinear, coincident or non-finite vertices)");
  }
}

double distance(Point u, Point v) { return norm(u - v); }

std::array<double, 3> interior_angles(const Triangle& t) {
  require_nondegenerate(t);
  std::array<double, 3> a{};
  for (std::size_t i = 0; i < 3; ++i) {
    const Point e1 = t[(i + 1) % 3] - t[i];
    const Point e2 = t[(i + 2) % 3] - t[i];
    a[i] = std::atan2(std::abs(cross(e1, e2)), dot(e1, e2));
  }
  // atan2 is accurate per angle; push the rounding residue into the largest
  // angle so the triple sums to pi.
  const std::size_t big = static_cast<std::size_t>(std::max_element(a.begin(), a.end()) - a.begin());
  a[big] = std::numbers::pi - (a[(big + 1) % 3] + a[(big + 2) % 3]);
  return a;
}

Permutation3 canonical_permutation(const Triangle& t) {
  require_nondegenerate(t);
  for (const Permutation3& p : Permutation3::all()) {
    const Triangle q = t.permuted(p);
    if (q.side(0) <= q.side(1) && q.side(1) <= q.side(2)) return p;
  }
  // Unreachable for finite input: sorting the sides always yields a chain.
  throw DegenerateTriangle("canonical_permutation: no ordering satisfies the side chain");
}

bool is_similar(const Triangle& a, const Triangle& b, double tol) {
  auto sa = interior_angles(a);
  auto sb = interior_angles(b);
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  for (std::size_t i = 0; i < 3; ++i) {
    if (std::abs(sa[i] - sb[i]) > tol) return false;
  }
  return true;
}

Triangle perimeter_normalize(const Triangle& p) {
  require_nondegenerate(p);
  const Point c = (p[0] + p[1] + p[2]) / 3.0;
  const double k = 1.0 / p.perimeter();
  return Triangle(c + (p[0] - c) * k, c + (p[1] - c) * k, c + (p[2] - c) * k);
}

double scale_of(const Triangle& t) {
  double s = t.longest_side();
  for (const Point& p : t) s = std::max({s, std::abs(p.x), std::abs(p.y)});
  return s;
}

}  // namespace triform
