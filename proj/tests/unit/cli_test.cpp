#include <gtest/gtest.h>

#include <sys/wait.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "triform/oracle.hpp"
#include "triform/solver.hpp"
#include "triform_cli/commands.hpp"
#include "triform_cli/scenario.hpp"

namespace triform::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::string data(const std::string& name) { return std::string(TRIFORM_TEST_DATA_DIR) + "/" + name; }

struct Result {
  int code = -1;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "triform");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Result r;
  r.code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "triform_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Triangle triangle_of(const json& j) {
  return Triangle({j[0][0].get<double>(), j[0][1].get<double>()}, {j[1][0].get<double>(), j[1][1].get<double>()},
                  {j[2][0].get<double>(), j[2][1].get<double>()});
}

TEST(Round12, KeepsTwelveSignificantDigits) {
  EXPECT_EQ(round12(0.36748247262412576), 0.367482472624);
  EXPECT_EQ(round12(-1234567.891234567), -1234567.89123);
  EXPECT_EQ(round12(3e-13), 0.0);
  EXPECT_EQ(round12(3e-13, 1e-3), 3e-13);
  EXPECT_EQ(round12(0.0), 0.0);
}

TEST(Scenario, ParsesOptionalFields) {
  const Scenario s = load_scenario(data("basic.json"));
  EXPECT_EQ(s.robots, Triangle({0, 0}, {4, 0}, {1, 3}));
  ASSERT_TRUE(s.seed.has_value());
  EXPECT_EQ(*s.seed, 7u);
  ASSERT_TRUE(s.sim.has_value());
  EXPECT_EQ(s.sim->step, 0.01);
  EXPECT_EQ(s.sim->max_cycles, 100000u);

  const Scenario bare = load_scenario(data("no_sim.json"));
  EXPECT_FALSE(bare.seed.has_value());
  EXPECT_FALSE(bare.sim.has_value());
}

TEST(Scenario, RejectsBadInput) {
  EXPECT_THROW(load_scenario(data("malformed.json")), ParseError);
  EXPECT_THROW(load_scenario(data("truncated.json")), ParseError);
  EXPECT_THROW(load_scenario(data("does_not_exist.json")), ParseError);
  EXPECT_THROW(parse_scenario(R"({"robots": [[0,0],[1,0],[0,1]], "pattern": [[0,0],[1,0],[0,"x"]]})"), ParseError);
  EXPECT_THROW(parse_scenario(R"({"robots": [[0,0],[1,0],[0,1]], "pattern": [[0,0],[1,0],[0,1]],
                                  "sim": {"step": -1}})"),
               ParseError);
  EXPECT_THROW(load_scenario(data("degenerate_robots.json")), DegenerateTriangle);
}

TEST(Scenario, TriangleFileForms) {
  EXPECT_EQ(load_triangle(data("right_isoceles.json")), Triangle({0, 0}, {1, 0}, {0, 1}));
  EXPECT_EQ(load_triangle(data("equilateral.json"))[1], (Point{1, 0}));
  EXPECT_THROW(load_triangle(data("collinear.json")), DegenerateTriangle);
}

TEST(Solve, DocumentShape) {
  const Result r = invoke({"solve", data("basic.json")});
  ASSERT_EQ(r.code, kOk) << r.err;
  const json doc = json::parse(r.out);
  std::vector<std::string> keys;
  for (const auto& [k, v] : doc.items()) keys.push_back(k);
  // Parsed into a sorted map, so compare as a set.
  EXPECT_EQ(keys, (std::vector<std::string>{"d_star", "destinations", "focal", "mirrored", "permutation", "targets",
                                            "tolerance", "travel_per_robot"}));
  EXPECT_EQ(doc["d_star"].get<double>(), 0.367482472624);
  // Any cyclic relabelling of the equilateral pattern is equally optimal.
  auto perm = doc["permutation"].get<std::vector<int>>();
  std::sort(perm.begin(), perm.end());
  EXPECT_EQ(perm, (std::vector<int>{0, 1, 2}));
  EXPECT_FALSE(doc["mirrored"].get<bool>());
  EXPECT_TRUE(doc["focal"].is_array());
  for (const auto& t : doc["travel_per_robot"]) EXPECT_EQ(t.get<double>(), 0.367482472624);
  // Fields come out in the documented order.
  EXPECT_LT(r.out.find("\"d_star\""), r.out.find("\"permutation\""));
  EXPECT_LT(r.out.find("\"focal\""), r.out.find("\"travel_per_robot\""));
}

TEST(Solve, SimilarScenarioPrintsZero) {
  const Result r = invoke({"solve", data("similar.json")});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_NE(r.out.find("\"d_star\": 0.0,"), std::string::npos) << r.out;
  EXPECT_TRUE(json::parse(r.out)["focal"].is_null());
}

TEST(Solve, Deterministic) {
  EXPECT_EQ(invoke({"solve", data("no_sim.json")}).out, invoke({"solve", data("no_sim.json")}).out);
}

TEST(Solve, RoundTripDestinationsAreSimilar) {
  for (const char* f : {"basic.json", "no_sim.json", "similar.json"}) {
    const Result r = invoke({"solve", data(f)});
    ASSERT_EQ(r.code, kOk);
    const Triangle q = triangle_of(json::parse(r.out)["destinations"]);
    EXPECT_TRUE(is_similar(q, load_scenario(data(f)).pattern, 1e-9)) << f;
  }
}

TEST(Solve, AgreesWithOracleWithinPrintedTolerance) {
  const Result r = invoke({"solve", data("no_sim.json")});
  const json doc = json::parse(r.out);
  const Scenario s = load_scenario(data("no_sim.json"));
  const double d = doc["d_star"].get<double>();
  const double oracle = oracle_minmax(s.robots, s.pattern).d_star_approx;
  EXPECT_LE(std::abs(d - oracle), doc["tolerance"].get<double>() * (1.0 + d));

  const Result custom = invoke({"--tolerance", "1e-4", "solve", data("no_sim.json")});
  EXPECT_EQ(json::parse(custom.out)["tolerance"].get<double>(), 1e-4);
}

TEST(Solve, ExitCodes) {
  const Result deg_r = invoke({"solve", data("degenerate_robots.json")});
  EXPECT_EQ(deg_r.code, kDegenerate);
  EXPECT_NE(deg_r.err.find("robots"), std::string::npos);
  const Result deg_p = invoke({"solve", data("degenerate_pattern.json")});
  EXPECT_EQ(deg_p.code, kDegenerate);
  EXPECT_NE(deg_p.err.find("pattern"), std::string::npos);

  EXPECT_EQ(invoke({"solve", data("malformed.json")}).code, kUsage);
  EXPECT_EQ(invoke({"solve", data("truncated.json")}).code, kUsage);
  EXPECT_EQ(invoke({"solve", data("missing.json")}).code, kUsage);
  EXPECT_EQ(invoke({"solve"}).code, kUsage);
  EXPECT_EQ(invoke({}).code, kUsage);
  EXPECT_EQ(invoke({"frobnicate"}).code, kUsage);
  EXPECT_EQ(invoke({"--tolerance", "-1", "solve", data("basic.json")}).code, kUsage);
  EXPECT_EQ(invoke({"--help"}).code, kOk);
}

TEST(Metric, Values) {
  const Result eq_ri = invoke({"metric", data("equilateral.json"), data("right_isoceles.json")});
  ASSERT_EQ(eq_ri.code, kOk) << eq_ri.err;
  EXPECT_EQ(eq_ri.out, "0.366025403784\n");
  EXPECT_EQ(invoke({"metric", data("right_isoceles.json"), data("equilateral.json")}).out, eq_ri.out);
  EXPECT_EQ(invoke({"metric", data("equilateral.json"), data("equilateral.json")}).out, "0.000000000000\n");
  EXPECT_EQ(invoke({"--tolerance", "0.5", "metric", data("equilateral.json"), data("right_isoceles.json")}).out,
            "0.000000000000\n");
}

TEST(Metric, ExitCodes) {
  EXPECT_EQ(invoke({"metric", data("equilateral.json"), data("collinear.json")}).code, kDegenerate);
  EXPECT_EQ(invoke({"metric", data("equilateral.json")}).code, kUsage);
  EXPECT_EQ(invoke({"metric", data("equilateral.json"), data("truncated.json")}).code, kUsage);
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream is(text);
  std::string line;
  std::getline(is, line);
  while (std::getline(is, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string c;
    while (std::getline(ls, c, ',')) cells.push_back(c);
    rows.push_back(cells);
  }
  return rows;
}

TEST(Simulate, CsvMatchesTrace) {
  const Result r = invoke({"simulate", data("basic.json"), "--step", "0.05"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "cycle,robot_index,x,y,dest_x,dest_y,remaining");
  const auto rows = csv_rows(r.out);
  const std::size_t cycles = std::stoul(rows.back()[0]);
  EXPECT_EQ(cycles, 8u);  // ceil(0.3675 / 0.05)
  EXPECT_EQ(rows.size(), 3 * (cycles + 1));

  Triangle last;
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& row = rows[rows.size() - 3 + i];
    last[i] = {std::stod(row[2]), std::stod(row[3])};
  }
  EXPECT_TRUE(is_similar(last, load_scenario(data("basic.json")).pattern, 1e-9));
}

TEST(Simulate, LargeStepIsOneCycle) {
  const Result r = invoke({"simulate", data("no_sim.json"), "--step", "100"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(csv_rows(r.out).size(), 6u);
}

TEST(Simulate, StepFromScenario) {
  const Result r = invoke({"simulate", data("basic.json")});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(csv_rows(r.out).size(), 3u * (37 + 1));
  EXPECT_EQ(invoke({"simulate", data("no_sim.json")}).code, kUsage);
}

TEST(Simulate, WritesFiles) {
  const fs::path csv = scratch("trace.csv");
  const fs::path svg = scratch("figure.svg");
  const Result r = invoke({"simulate", data("basic.json"), "--step", "0.02", "--csv", csv.string(), "--svg",
                           svg.string()});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_NE(r.out.find("pattern formed"), std::string::npos);
  EXPECT_EQ(slurp(csv), invoke({"simulate", data("basic.json"), "--step", "0.02"}).out);
  const std::string figure = slurp(svg);
  EXPECT_EQ(figure.rfind("<svg", 0), 0u);
  EXPECT_NE(figure.find("</svg>"), std::string::npos);
  EXPECT_EQ(std::count(figure.begin(), figure.end(), '\n') > 10, true);
}

TEST(Simulate, ExitCodes) {
  EXPECT_EQ(invoke({"simulate", data("basic.json"), "--step", "0.001", "--max-cycles", "3"}).code, kCycleLimit);
  EXPECT_EQ(invoke({"simulate", data("basic.json"), "--step", "0"}).code, kUsage);
  EXPECT_EQ(invoke({"simulate", data("degenerate_pattern.json"), "--step", "0.1"}).code, kDegenerate);
}

TEST(Verify, ReportAndExitCodes) {
  const Result r = invoke({"verify", "--instances", "5", "--seed", "42"});
  ASSERT_EQ(r.code, kOk) << r.out << r.err;
  const json doc = json::parse(r.out);
  EXPECT_EQ(doc["instances"].get<int>(), 5);
  EXPECT_LE(doc["max_relative_discrepancy"].get<double>(), 1e-6);
  EXPECT_EQ(doc["equal_travel_violations"].get<int>(), 0);
  EXPECT_EQ(doc["similarity_violations"].get<int>(), 0);
  EXPECT_TRUE(doc["passed"].get<bool>());
  EXPECT_EQ(invoke({"verify", "--instances", "5", "--seed", "42"}).out, r.out);

  // An impossible bound still prints the report.
  const Result strict = invoke({"--tolerance", "1e-300", "verify", "--instances", "2", "--seed", "42"});
  EXPECT_EQ(strict.code, kVerifyFailed);
  EXPECT_FALSE(json::parse(strict.out)["passed"].get<bool>());

  EXPECT_EQ(invoke({"verify", "--instances", "0"}).code, kUsage);
  EXPECT_EQ(invoke({"verify"}).code, kUsage);
}

int shell(const std::string& cmd) {
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

TEST(Executable, ExitCodesAndByteIdenticalOutput) {
  const std::string exe = TRIFORM_CLI_PATH;
  const fs::path a = scratch("a.json");
  const fs::path b = scratch("b.json");
  EXPECT_EQ(shell(exe + " solve " + data("basic.json") + " > " + a.string()), 0);
  EXPECT_EQ(shell(exe + " solve " + data("basic.json") + " > " + b.string()), 0);
  EXPECT_EQ(slurp(a), slurp(b));
  EXPECT_EQ(slurp(a), invoke({"solve", data("basic.json")}).out);

  EXPECT_EQ(shell(exe + " solve " + data("degenerate_robots.json") + " 2> /dev/null"), kDegenerate);
  EXPECT_EQ(shell(exe + " verify --instances 0 2> /dev/null"), kUsage);
}

}  // namespace
}  // namespace triform::cli
