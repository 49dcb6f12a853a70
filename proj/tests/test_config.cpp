#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "hyct/config.hpp"
#include "hyct/csv.hpp"

using namespace hyct;

namespace {

const char* kCalibrationConfig = R"(# calibration fixture
[system]
n = 2
k = 1
m = 1
lambda1 = 1.0
lambda2 = 1.0
coupling = u
S_mp = [0.0]
S_pp = [0.0]
B = [1.0]

[grid]
nx = 400
cfl = 0.9

[hum]
eps = 1e-6
cg_tol = 1e-8
cg_maxit = 500

[run]
T = 2.4
seed = 42
out = out
mode = null
)";

}  // namespace

TEST_CASE("minimal config parses into the calibration system") {
  const ParsedConfig pc = parse_config(kCalibrationConfig);
  REQUIRE(pc.ok());
  CHECK(pc.system.n() == 2);
  CHECK(pc.system.k() == 1);
  CHECK(pc.system.coupling.form == CouplingForm::UForm);
  CHECK(pc.system.boundary.at(0, 0) == 1.0);
  CHECK(pc.run.grid.nx == 400);
  CHECK(pc.run.grid.cfl == 0.9);
  CHECK(pc.run.horizon == 2.4);
  CHECK(pc.run.seed == 42);
  CHECK(pc.run.hum.eps == 1e-6);
  CHECK(pc.run.mode == "null");
  CHECK(validate(pc.system).empty());
}

TEST_CASE("inconsistent family counts are named in the error") {
  const ParsedConfig pc = parse_config("[system]\nn = 4\nk = 1\nm = 1\nB = [1.0]\n");
  REQUIRE_FALSE(pc.ok());
  bool found = false;
  for (const auto& e : pc.errors)
    found = found || (e.message.find("n=4") != std::string::npos &&
                      e.message.find("k=1") != std::string::npos &&
                      e.message.find("m=1") != std::string::npos);
  CHECK(found);
}

TEST_CASE("structural zero violations surface as parse errors") {
  std::string text = kCalibrationConfig;
  const auto pos = text.find("S_pp = [0.0]");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 12, "S_pp = [0.5]");
  const ParsedConfig pc = parse_config(text);
  REQUIRE_FALSE(pc.ok());
  bool found = false;
  for (const auto& e : pc.errors)
    found = found || e.message.find("structural-zero") != std::string::npos;
  CHECK(found);
}

TEST_CASE("unknown keys and malformed lines carry their line numbers") {
  const std::string text = "[system]\nn = 2\nk = 1\nm = 1\nlambda1 = 1\nlambda2 = 1\n"
                           "B = [1.0]\nwhatever = 3\n";
  const ParsedConfig pc = parse_config(text);
  REQUIRE_FALSE(pc.ok());
  bool found = false;
  for (const auto& e : pc.errors)
    found = found || (e.line == 8 && e.message.find("whatever") != std::string::npos);
  CHECK(found);

  const ParsedConfig bad = parse_config("[system\nn = 2\n");
  REQUIRE_FALSE(bad.ok());
  CHECK(bad.errors.front().line == 1);
}

TEST_CASE("matrix literals must match the declared dimensions") {
  std::string text = kCalibrationConfig;
  const auto pos = text.find("B = [1.0]");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 9, "B = [1.0, 2.0]");
  const ParsedConfig pc = parse_config(text);
  REQUIRE_FALSE(pc.ok());
  bool found = false;
  for (const auto& e : pc.errors) found = found || e.message.find("1x1") != std::string::npos;
  CHECK(found);
}

TEST_CASE("serialize / parse round trip is the identity") {
  const ParsedConfig pc = parse_config(kCalibrationConfig);
  REQUIRE(pc.ok());
  const std::string text = serialize_config(pc.run, pc.system);
  const ParsedConfig again = parse_config(text);
  REQUIRE(again.ok());
  CHECK(serialize_config(again.run, again.system) == text);

  // Sampled speeds survive the round trip too.
  HyperbolicSystem sys = fixtures::calibration();
  sys.speeds.lambda[0] = SampledFn(std::vector<double>{1.0, 1.25, 1.5});
  RunConfig run;
  const std::string text2 = serialize_config(run, sys);
  const ParsedConfig rt = parse_config(text2);
  REQUIRE(rt.ok());
  CHECK(serialize_config(rt.run, rt.system) == text2);
  CHECK(rt.system.speeds.lambda[0].samples() == sys.speeds.lambda[0].samples());
}

TEST_CASE("missing config files are reported, not thrown") {
  const ParsedConfig pc = parse_config_file("/nonexistent/path.cfg");
  REQUIRE_FALSE(pc.ok());
  CHECK(pc.errors.front().message.find("cannot open") != std::string::npos);
}

TEST_CASE("csv writers emit the documented headers at 17 significant digits") {
  const std::filesystem::path dir = std::filesystem::temp_directory_path() / "hyct_csv_test";
  std::filesystem::create_directories(dir);

  StateField s(2, 8);
  s.at(0, 0) = 1.0 / 3.0;
  write_state_csv(s, (dir / "state.csv").string());
  std::ifstream is(dir / "state.csv");
  std::string header, first;
  std::getline(is, header);
  std::getline(is, first);
  CHECK(header == "x,w1,w2");
  CHECK(first.find("0.33333333333333331") != std::string::npos);

  ControlSignal u(1, 4, 2.0);
  write_control_csv(u, (dir / "control.csv").string());
  std::ifstream uc(dir / "control.csv");
  std::getline(uc, header);
  CHECK(header == "t,W1");

  Trajectory tr;
  tr.frames.push_back(s);
  write_trajectory_csv(tr, (dir / "traj.csv").string());
  std::ifstream tc(dir / "traj.csv");
  std::getline(tc, header);
  CHECK(header == "t,x,component,value");

  std::filesystem::remove_all(dir);
}
