#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "triform/geometry.hpp"

namespace triform {

struct SimConfig {
  /// Maximum distance a robot moves per look-compute-move cycle.
  double step = 0.01;
  std::size_t max_cycles = 1'000'000;
  double similarity_tol = 1e-9;
  /// A robot closer than arrival_tol * max(1, scale) to its destination has
  /// arrived.
  double arrival_tol = 1e-12;

  /// Throws std::invalid_argument on non-positive step or zero max_cycles.
  void validate() const;
};

struct StepResult {
  Triangle positions;     // after moving
  Triangle destinations;  // Q^t computed from the positions before moving
  double travel = 0.0;    // d* computed from the positions before moving
};

/// One synchronous cycle: every robot observes the configuration, solves
/// for the optimal formation and moves min(step, remaining) straight toward
/// its own destination, landing on it exactly when it arrives.
///
/// Throws DegenerateTriangle when `positions` is degenerate.
StepResult sim_step(const Triangle& positions, const Triangle& pattern, double step);

struct SimRecord {
  Triangle positions;
  Triangle destinations;  // recomputed from `positions`
  double travel = 0.0;
  /// Destinations were carried over because `positions` was too close to
  /// collinear to solve.
  bool frozen = false;
};

/// Record 0 is the initial configuration; record k is the state after k
/// movement cycles.
struct SimTrace {
  std::vector<SimRecord> records;

  std::size_t cycles() const { return records.empty() ? 0 : records.size() - 1; }
  bool any_frozen() const;
  const SimRecord& final_record() const { return records.back(); }
};

/// One cycle of run(): moves from `last` toward last.destinations, then
/// recomputes destinations. If the new positions are too close to collinear
/// to solve, the previous destinations are carried over and the record is
/// flagged. Optimal straight-line motion never gets thinner than its two
/// endpoints, so this only guards against rounding.
SimRecord next_record(const SimRecord& last, const Triangle& pattern, double step);

/// Runs cycles until every robot has arrived.
/// Throws CycleLimitExceeded after cfg.max_cycles cycles and
/// DegenerateTriangle if the initial configuration or the pattern is
/// degenerate.
SimTrace run(const Triangle& robots, const Triangle& pattern, const SimConfig& cfg);

/// CSV with header `cycle,robot_index,x,y,dest_x,dest_y,remaining`; one row
/// per robot per record, numbers at 12 significant digits.
void write_trace_csv(const SimTrace& trace, std::ostream& os);

}  // namespace triform
