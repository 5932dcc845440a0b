#include "triform/simulator.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>

#include "triform/solver.hpp"

namespace triform {
namespace {

Point advance(Point from, Point to, double step) {
  const Point d = to - from;
  const double remaining = norm(d);
  if (remaining <= step) return to;
  return from + d * (step / remaining);
}

double max_remaining(const SimRecord& r) {
  double m = 0.0;
  for (std::size_t i = 0; i < 3; ++i) m = std::max(m, distance(r.positions[i], r.destinations[i]));
  return m;
}

std::string fmt12(double v) {
  if (v == 0.0) v = 0.0;  // drop the sign of negative zero
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

void SimConfig::validate() const {
  if (!(step > 0.0) || !std::isfinite(step)) throw std::invalid_argument("SimConfig: step must be positive");
  if (max_cycles == 0) throw std::invalid_argument("SimConfig: max_cycles must be positive");
  if (!(similarity_tol > 0.0)) throw std::invalid_argument("SimConfig: similarity_tol must be positive");
}

StepResult sim_step(const Triangle& positions, const Triangle& pattern, double step) {
  const Solution s = solve(positions, pattern);
  StepResult out;
  out.destinations = s.rigid.destinations;
  out.travel = s.d_star;
  for (std::size_t i = 0; i < 3; ++i) out.positions[i] = advance(positions[i], out.destinations[i], step);
  return out;
}

bool SimTrace::any_frozen() const {
  return std::any_of(records.begin(), records.end(), [](const SimRecord& r) { return r.frozen; });
}

SimRecord next_record(const SimRecord& last, const Triangle& pattern, double step) {
  SimRecord next;
  for (std::size_t i = 0; i < 3; ++i) next.positions[i] = advance(last.positions[i], last.destinations[i], step);

  if (is_degenerate(next.positions)) {
    next.destinations = last.destinations;
    double travel = 0.0;
    for (std::size_t i = 0; i < 3; ++i) travel = std::max(travel, distance(next.positions[i], next.destinations[i]));
    next.travel = travel;
    next.frozen = true;
  } else {
    const Solution s = solve(next.positions, pattern);
    next.destinations = s.rigid.destinations;
    next.travel = s.d_star;
  }
  return next;
}

SimTrace run(const Triangle& robots, const Triangle& pattern, const SimConfig& cfg) {
  cfg.validate();
  require_nondegenerate(pattern, "pattern");
  const double arrived = cfg.arrival_tol * std::max(1.0, scale_of(robots));

  SimTrace trace;
  {
    const Solution s = solve(robots, pattern);
    trace.records.push_back({robots, s.rigid.destinations, s.d_star, false});
  }

  while (max_remaining(trace.records.back()) > arrived) {
    if (trace.cycles() >= cfg.max_cycles) {
      throw CycleLimitExceeded("simulation did not converge within " + std::to_string(cfg.max_cycles) + " cycles");
    }
    trace.records.push_back(next_record(trace.records.back(), pattern, cfg.step));
  }
  return trace;
}

void write_trace_csv(const SimTrace& trace, std::ostream& os) {
  os << "cycle,robot_index,x,y,dest_x,dest_y,remaining\n";
  for (std::size_t c = 0; c < trace.records.size(); ++c) {
    const SimRecord& r = trace.records[c];
    for (std::size_t i = 0; i < 3; ++i) {
      os << c << ',' << i << ',' << fmt12(r.positions[i].x) << ',' << fmt12(r.positions[i].y) << ','
         << fmt12(r.destinations[i].x) << ',' << fmt12(r.destinations[i].y) << ','
         << fmt12(distance(r.positions[i], r.destinations[i])) << '\n';
    }
  }
}

}  // namespace triform
