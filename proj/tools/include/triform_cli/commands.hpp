#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "triform/oracle.hpp"
#include "triform/solver.hpp"

namespace triform::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kDegenerate = 3,
  kCycleLimit = 4,
  kVerifyFailed = 5,
};

// Relative agreement |solver - oracle| / (1 + d*) promised by `solve` and
// enforced by `verify`.
inline constexpr double kDefaultTolerance = 1e-6;
inline constexpr double kEqualTravelRelTol = 1e-12;

// Rounds to 12 significant digits; values below 1e-12 * scale become 0.
double round12(double v, double scale = 1.0);

// Pretty-printed solution document. Deterministic for identical inputs.
std::string solution_json(const Triangle& robots, const Solution& s, double tolerance);

struct VerifyOptions {
  std::size_t instances = 100;
  std::uint64_t seed = 1;
  double tolerance = kDefaultTolerance;
  OracleGrid grid;
};

struct VerifyReport {
  std::size_t instances = 0;
  std::uint64_t seed = 0;
  double tolerance = 0.0;
  double max_relative_discrepancy = 0.0;
  std::size_t discrepancy_violations = 0;
  std::size_t equal_travel_violations = 0;
  std::size_t similarity_violations = 0;
  bool passed() const {
    return discrepancy_violations == 0 && equal_travel_violations == 0 && similarity_violations == 0;
  }
};

// Seeded random instances; solver against the brute-force oracle.
VerifyReport verify(const VerifyOptions& opt);
std::string report_json(const VerifyReport& r);

// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace triform::cli
