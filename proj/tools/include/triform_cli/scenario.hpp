#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "triform/geometry.hpp"
#include "triform/simulator.hpp"

namespace triform::cli {

// Malformed file, bad JSON or wrong shape. Maps to exit code 2.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Scenario {
  Triangle robots;
  Triangle pattern;
  std::optional<std::uint64_t> seed;
  std::optional<SimConfig> sim;
};

// Both triangles are checked for degeneracy after parsing; DegenerateTriangle
// names the offending one ("robots" or "pattern").
Scenario parse_scenario(const std::string& json_text);
Scenario load_scenario(const std::string& path);

// Accepts either a bare [[x,y],[x,y],[x,y]] array or {"triangle": [...]}.
Triangle parse_triangle(const std::string& json_text, const char* what = "triangle");
Triangle load_triangle(const std::string& path);

std::string read_file(const std::string& path);

}  // namespace triform::cli
