#pragma once

#include <iosfwd>

#include "triform/simulator.hpp"
#include "triform/solver.hpp"

namespace triform::cli {

// Static figure: R, Q, each robot's trajectory, the focal point, the spanner
// circle around every target t_i and an inset with the pattern.
void write_svg(std::ostream& os, const Triangle& pattern, const Solution& s, const SimTrace& trace);

}  // namespace triform::cli
