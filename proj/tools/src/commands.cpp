#include "triform_cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "triform/metric.hpp"
#include "triform/sampling.hpp"
#include "triform/simulator.hpp"
#include "triform_cli/scenario.hpp"
#include "triform_cli/svg.hpp"

namespace triform::cli {
namespace {

using ojson = nlohmann::ordered_json;

ojson point_json(Point p, double scale) { return ojson::array({round12(p.x, scale), round12(p.y, scale)}); }

ojson points_json(const Triangle& t, double scale) {
  ojson a = ojson::array();
  for (const Point& p : t) a.push_back(point_json(p, scale));
  return a;
}

// One key per line, values compact: points stay on a single line.
std::string dump_flat(const ojson& doc) {
  std::string out = "{\n";
  std::size_t k = 0;
  for (const auto& [key, value] : doc.items()) {
    out += "  " + ojson(key).dump() + ": " + value.dump();
    out += ++k == doc.size() ? "\n" : ",\n";
  }
  return out + "}";
}

std::ofstream open_out(const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ParseError("cannot write " + path);
  return f;
}

struct Options {
  std::optional<double> tolerance;

  std::string scenario_file;

  std::string metric_a;
  std::string metric_b;

  std::optional<double> step;
  std::optional<std::size_t> max_cycles;
  std::string csv_file;
  std::string svg_file;

  std::size_t instances = 0;
  std::uint64_t seed = 1;
};

int cmd_solve(const Options& o, std::ostream& out) {
  const Scenario sc = load_scenario(o.scenario_file);
  const Solution s = solve(sc.robots, sc.pattern);
  out << solution_json(sc.robots, s, o.tolerance.value_or(kDefaultTolerance)) << '\n';
  return kOk;
}

int cmd_metric(const Options& o, std::ostream& out) {
  const Triangle a = load_triangle(o.metric_a);
  const Triangle b = load_triangle(o.metric_b);
  double t = tau(a, b);
  if (o.tolerance && t < *o.tolerance) t = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12f", t);
  out << buf << '\n';
  return kOk;
}

int cmd_simulate(const Options& o, std::ostream& out, std::ostream& err) {
  const Scenario sc = load_scenario(o.scenario_file);
  SimConfig cfg = sc.sim.value_or(SimConfig{});
  if (o.step) {
    cfg.step = *o.step;
  } else if (!sc.sim) {
    throw ParseError("simulate: --step is required when the scenario has no \"sim\" block");
  }
  if (o.max_cycles) cfg.max_cycles = *o.max_cycles;
  if (o.tolerance) cfg.similarity_tol = *o.tolerance;
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }

  const SimTrace trace = run(sc.robots, sc.pattern, cfg);
  const bool formed = is_similar(trace.final_record().positions, sc.pattern, cfg.similarity_tol);

  if (o.csv_file.empty()) {
    write_trace_csv(trace, out);
  } else {
    std::ofstream f = open_out(o.csv_file);
    write_trace_csv(trace, f);
  }
  if (!o.svg_file.empty()) {
    std::ofstream f = open_out(o.svg_file);
    write_svg(f, sc.pattern, solve(sc.robots, sc.pattern), trace);
  }
  std::ostream& summary = o.csv_file.empty() ? err : out;
  summary << "cycles " << trace.cycles() << (formed ? ", pattern formed" : ", pattern NOT formed")
          << (trace.any_frozen() ? ", destinations frozen at a collinear crossing" : "") << '\n';
  return formed ? kOk : kVerifyFailed;
}

int cmd_verify(const Options& o, std::ostream& out) {
  VerifyOptions v;
  v.instances = o.instances;
  v.seed = o.seed;
  v.tolerance = o.tolerance.value_or(kDefaultTolerance);
  const VerifyReport r = verify(v);
  out << report_json(r) << '\n';
  return r.passed() ? kOk : kVerifyFailed;
}

}  // namespace

double round12(double v, double scale) {
  if (!std::isfinite(v)) return v;
  if (std::abs(v) <= 1e-12 * scale) return 0.0;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.11e", v);
  return std::strtod(buf, nullptr);
}

std::string solution_json(const Triangle& robots, const Solution& s, double tolerance) {
  const double scale = scale_of(robots);
  ojson doc;
  doc["d_star"] = round12(s.d_star, scale);
  doc["permutation"] = s.assignment.map();
  doc["mirrored"] = s.mirrored;
  doc["destinations"] = points_json(s.rigid.destinations, scale);
  doc["targets"] = points_json(Triangle(s.rigid.targets), scale);
  switch (s.focal.kind) {
    case FocalPoint::Kind::kFinite:
      doc["focal"] = point_json(s.focal.point, scale);
      break;
    case FocalPoint::Kind::kAtInfinity:
      doc["focal"] = "infinity";
      break;
    case FocalPoint::Kind::kUndefined:
      doc["focal"] = nullptr;
      break;
  }
  ojson travel = ojson::array();
  for (std::size_t i = 0; i < 3; ++i) {
    travel.push_back(round12(distance(robots[i], s.rigid.destinations[i]), scale));
  }
  doc["travel_per_robot"] = travel;
  doc["tolerance"] = tolerance;
  return dump_flat(doc);
}

VerifyReport verify(const VerifyOptions& opt) {
  VerifyReport r;
  r.instances = opt.instances;
  r.seed = opt.seed;
  r.tolerance = opt.tolerance;

  Rng rng(opt.seed);
  for (std::size_t n = 0; n < opt.instances; ++n) {
    const Instance in = random_instance(rng);
    const Solution s = solve(in.robots, in.pattern);
    const OracleResult o = oracle_minmax(in.robots, in.pattern, opt.grid);

    const double rel = std::abs(s.d_star - o.d_star_approx) / (1.0 + s.d_star);
    r.max_relative_discrepancy = std::max(r.max_relative_discrepancy, rel);
    if (!(rel <= opt.tolerance)) ++r.discrepancy_violations;

    const auto& t = s.rigid.per_robot;
    const auto [lo, hi] = std::minmax_element(t.begin(), t.end());
    if (*hi - *lo > kEqualTravelRelTol * *hi) ++r.equal_travel_violations;

    if (!is_similar(s.rigid.destinations, in.pattern, kDefaultSimilarityTol)) ++r.similarity_violations;
  }
  return r;
}

std::string report_json(const VerifyReport& r) {
  ojson doc;
  doc["instances"] = r.instances;
  doc["seed"] = r.seed;
  doc["tolerance"] = r.tolerance;
  doc["max_relative_discrepancy"] = round12(r.max_relative_discrepancy, 0.0);
  doc["discrepancy_violations"] = r.discrepancy_violations;
  doc["equal_travel_violations"] = r.equal_travel_violations;
  doc["similarity_violations"] = r.similarity_violations;
  doc["passed"] = r.passed();
  return dump_flat(doc);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Optimal min-max formation of a triangular pattern by three robots", "triform"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--tolerance", o.tolerance,
                 "solve: printed agreement bound; simulate: similarity tolerance; "
                 "verify: allowed relative discrepancy; metric: values below it print as 0")
      ->check(CLI::PositiveNumber);

  CLI::App* solve_cmd = app.add_subcommand("solve", "Optimal destinations for a scenario");
  solve_cmd->add_option("file", o.scenario_file, "Scenario JSON")->required();

  CLI::App* metric_cmd = app.add_subcommand("metric", "Shape distance tau between two triangles");
  metric_cmd->add_option("a", o.metric_a, "Triangle JSON")->required();
  metric_cmd->add_option("b", o.metric_b, "Triangle JSON")->required();

  CLI::App* sim_cmd = app.add_subcommand("simulate", "Run synchronous look-compute-move cycles");
  sim_cmd->add_option("file", o.scenario_file, "Scenario JSON")->required();
  sim_cmd->add_option("--step", o.step, "Max distance per cycle")->check(CLI::PositiveNumber);
  sim_cmd->add_option("--max-cycles", o.max_cycles, "Cycle limit")->check(CLI::PositiveNumber);
  sim_cmd->add_option("--csv", o.csv_file, "Trace CSV (default: stdout)");
  sim_cmd->add_option("--svg", o.svg_file, "Figure");

  CLI::App* verify_cmd = app.add_subcommand("verify", "Solver against brute-force search on random instances");
  verify_cmd->add_option("--instances", o.instances, "Number of instances")->required()->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", o.seed, "RNG seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  try {
    if (solve_cmd->parsed()) return cmd_solve(o, out);
    if (metric_cmd->parsed()) return cmd_metric(o, out);
    if (sim_cmd->parsed()) return cmd_simulate(o, out, err);
    return cmd_verify(o, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const CycleLimitExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kCycleLimit;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kDegenerate;
  }
}

}  // namespace triform::cli
