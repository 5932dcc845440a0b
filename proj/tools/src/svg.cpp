#include "triform_cli/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <string>

#include "triform/replication.hpp"

namespace triform::cli {
namespace {

constexpr double kSize = 800.0;
constexpr double kMargin = 40.0;
constexpr double kInset = 170.0;

const char* const kRobotColor[3] = {"#d62728", "#1f77b4", "#2ca02c"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

struct Box {
  double x0 = std::numeric_limits<double>::infinity();
  double y0 = x0;
  double x1 = -x0;
  double y1 = -x0;
  void add(Point p) {
    x0 = std::min(x0, p.x);
    y0 = std::min(y0, p.y);
    x1 = std::max(x1, p.x);
    y1 = std::max(y1, p.y);
  }
  double extent() const { return std::max(x1 - x0, y1 - y0); }
};

// World to canvas, y up, aspect preserved, fitted into a square of side `size`.
struct View {
  Box box;
  double ox = 0.0;
  double oy = 0.0;
  double size = kSize;
  double k() const { return size / std::max(box.extent(), 1e-12); }
  double x(Point p) const { return ox + (p.x - box.x0) * k(); }
  double y(Point p) const { return oy + size - (p.y - box.y0) * k(); }
  std::string xy(Point p) const { return num(x(p)) + "," + num(y(p)); }
};

std::string polygon(const View& v, const Triangle& t, const std::string& style) {
  return "<polygon points=\"" + v.xy(t[0]) + " " + v.xy(t[1]) + " " + v.xy(t[2]) + "\" " + style + "/>\n";
}

}  // namespace

void write_svg(std::ostream& os, const Triangle& pattern, const Solution& s, const SimTrace& trace) {
  const Triangle& robots = trace.records.front().positions;

  // Spanner circle for robot i: the i-th replication with both anchors free
  // to move by d*. q_i must lie inside it.
  std::array<Circle, 3> spanner{};
  const bool moves = s.d_star > 0.0;
  if (moves) {
    const Triangle assigned = perimeter_normalize(pattern.permuted(s.assignment));
    for (std::size_t i = 0; i < 3; ++i) {
      const std::size_t next = (i + 1) % 3;
      const std::size_t prev = (i + 2) % 3;
      const Triangle rotated(assigned[next], assigned[prev], assigned[i]);
      spanner[i] = spanner_circle(rotated, robots[next], robots[prev], s.d_star, s.rigid.orientation);
    }
  }

  View v;
  for (const SimRecord& r : trace.records) {
    for (const Point& p : r.positions) v.box.add(p);
  }
  for (const Point& q : s.rigid.destinations) v.box.add(q);
  const double base = v.box.extent();
  const auto near = [&](Point p) {
    return std::abs(p.x - v.box.x0) < 2 * base && std::abs(p.y - v.box.y0) < 2 * base;
  };
  if (s.focal.finite() && near(s.focal.point)) v.box.add(s.focal.point);
  for (const Circle& c : spanner) {
    if (c.radius > 0.0 && c.radius < base) {
      v.box.add(c.center - Point{c.radius, c.radius});
      v.box.add(c.center + Point{c.radius, c.radius});
    }
  }
  v.ox = v.oy = kMargin;
  v.size = kSize - 2 * kMargin;

  const std::string side = num(kSize);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << side << "\" height=\"" << side
     << "\" viewBox=\"0 0 " << side << ' ' << side << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  for (std::size_t i = 0; i < 3 && moves; ++i) {
    const Circle& c = spanner[i];
    os << "<circle cx=\"" << num(v.x(c.center)) << "\" cy=\"" << num(v.y(c.center)) << "\" r=\""
       << num(c.radius * v.k()) << "\" fill=\"none\" stroke=\"" << kRobotColor[i]
       << "\" stroke-opacity=\"0.35\" stroke-dasharray=\"4 3\"/>\n";
  }

  os << polygon(v, robots, "fill=\"#888\" fill-opacity=\"0.15\" stroke=\"#444\" stroke-width=\"1.5\"");
  os << polygon(v, s.rigid.destinations,
                "fill=\"#ff7f0e\" fill-opacity=\"0.15\" stroke=\"#ff7f0e\" stroke-width=\"1.5\"");

  for (std::size_t i = 0; i < 3; ++i) {
    os << "<polyline fill=\"none\" stroke=\"" << kRobotColor[i] << "\" stroke-width=\"1\" points=\"";
    for (const SimRecord& r : trace.records) os << v.xy(r.positions[i]) << ' ';
    os << "\"/>\n";
    os << "<circle cx=\"" << num(v.x(robots[i])) << "\" cy=\"" << num(v.y(robots[i])) << "\" r=\"4\" fill=\""
       << kRobotColor[i] << "\"/>\n";
    const Point q = s.rigid.destinations[i];
    os << "<circle cx=\"" << num(v.x(q)) << "\" cy=\"" << num(v.y(q)) << "\" r=\"4\" fill=\"white\" stroke=\""
       << kRobotColor[i] << "\"/>\n";
  }

  if (s.focal.finite() && near(s.focal.point)) {
    const Point f = s.focal.point;
    os << "<g stroke=\"black\"><line x1=\"" << num(v.x(f) - 6) << "\" y1=\"" << num(v.y(f) - 6) << "\" x2=\""
       << num(v.x(f) + 6) << "\" y2=\"" << num(v.y(f) + 6) << "\"/><line x1=\"" << num(v.x(f) - 6) << "\" y1=\""
       << num(v.y(f) + 6) << "\" x2=\"" << num(v.x(f) + 6) << "\" y2=\"" << num(v.y(f) - 6) << "\"/></g>\n";
  }

  // Pattern inset, top right.
  View inset;
  for (const Point& p : pattern) inset.box.add(p);
  inset.size = kInset - 44.0;
  inset.ox = kSize - kInset + 18.0;
  inset.oy = 24.0;
  os << "<rect x=\"" << num(kSize - kInset) << "\" y=\"0\" width=\"" << num(kInset) << "\" height=\""
     << num(kInset) << "\" fill=\"white\" stroke=\"#aaa\"/>\n";
  os << polygon(inset, pattern, "fill=\"#9467bd\" fill-opacity=\"0.2\" stroke=\"#9467bd\"");
  for (std::size_t j = 0; j < 3; ++j) {
    os << "<text x=\"" << num(inset.x(pattern[j]) + 3) << "\" y=\"" << num(inset.y(pattern[j]) - 3)
       << "\" font-family=\"sans-serif\" font-size=\"11\">p" << j << "</text>\n";
  }

  char caption[96];
  std::snprintf(caption, sizeof caption, "d* = %.6g, %zu cycles", s.d_star, trace.cycles());
  os << "<text x=\"10\" y=\"20\" font-family=\"sans-serif\" font-size=\"14\">" << caption << "</text>\n";
  os << "<text x=\"10\" y=\"" << num(kSize - 10) << "\" font-family=\"sans-serif\" font-size=\"11\" fill=\"#555\">"
     << "grey: R, orange: Q, lines: trajectories, dashed: spanner circles, x: focal point, inset: P</text>\n";
  os << "</svg>\n";
}

}  // namespace triform::cli
