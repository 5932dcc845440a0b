#include "triform_cli/scenario.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace triform::cli {
namespace {

using nlohmann::json;

Point parse_point(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw ParseError("expected a point [x, y], got " + j.dump());
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

Triangle triangle_from(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 3) {
    throw ParseError(std::string(what) + ": expected three points [[x,y],[x,y],[x,y]]");
  }
  const Triangle t(parse_point(j[0]), parse_point(j[1]), parse_point(j[2]));
  if (!is_finite(t[0]) || !is_finite(t[1]) || !is_finite(t[2])) {
    throw ParseError(std::string(what) + ": coordinates must be finite");
  }
  return t;
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

SimConfig sim_from(const json& j) {
  if (!j.is_object()) throw ParseError("sim: expected an object");
  SimConfig cfg;
  try {
    if (j.contains("step")) cfg.step = j.at("step").get<double>();
    if (j.contains("max_cycles")) cfg.max_cycles = j.at("max_cycles").get<std::size_t>();
    if (j.contains("similarity_tol")) cfg.similarity_tol = j.at("similarity_tol").get<double>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("sim: ") + e.what());
  }
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  return cfg;
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Scenario parse_scenario(const std::string& json_text) {
  const json j = parse_json(json_text);
  if (!j.is_object()) throw ParseError("scenario: expected a JSON object");
  if (!j.contains("robots")) throw ParseError("scenario: missing \"robots\"");
  if (!j.contains("pattern")) throw ParseError("scenario: missing \"pattern\"");

  Scenario s;
  s.robots = triangle_from(j["robots"], "robots");
  s.pattern = triangle_from(j["pattern"], "pattern");
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned()) throw ParseError("seed: expected a non-negative integer");
    s.seed = j["seed"].get<std::uint64_t>();
  }
  if (j.contains("sim")) s.sim = sim_from(j["sim"]);

  require_nondegenerate(s.robots, "robots");
  require_nondegenerate(s.pattern, "pattern");
  return s;
}

Scenario load_scenario(const std::string& path) { return parse_scenario(read_file(path)); }

Triangle parse_triangle(const std::string& json_text, const char* what) {
  const json j = parse_json(json_text);
  const json& body = (j.is_object() && j.contains("triangle")) ? j["triangle"] : j;
  const Triangle t = triangle_from(body, what);
  require_nondegenerate(t, what);
  return t;
}

Triangle load_triangle(const std::string& path) { return parse_triangle(read_file(path), path.c_str()); }

}  // namespace triform::cli
