#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "app/commands.hpp"
#include "app/json_io.hpp"
#include "app/manifest.hpp"

namespace epcx::app {
namespace {

namespace fs = std::filesystem;

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("epcx_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path config(const json& j, const std::string& name = "config.json") {
    const fs::path p = dir_ / name;
    write_file(p, j.dump());
    return p;
  }

  int run_mode(Mode m, const json& j, const std::string& out = "out") {
    RunOptions o;
    o.mode = m;
    o.config = config(j);
    o.out = dir_ / out;
    log_.str("");
    err_.str("");
    return run(o, log_, err_);
  }

  json read_json(const std::string& rel) { return json::parse(read_file(dir_ / rel)); }

  fs::path dir_;
  std::ostringstream log_, err_;
};

const json kParams = {{"alpha", 2.0}, {"beta", 1.0}};

json transport_solve() {
  return {{"params", kParams},
          {"domain", {{"rect", {-1, -1, 1, 1}}}},
          {"h", 0.125},
          {"dt", 0.01},
          {"t_end", 0.2},
          {"exhaustion_levels", 3},
          {"synthesize", {{"A", {{"coeffs", {{1, 0}}}}}}},
          {"w0", {{"coeffs", {{0, 0}, {1, 0}}}}}};
}

TEST(Manifest, GitBlobHash) {
  EXPECT_EQ(git_blob_sha1(""), "e69de29bb2d1d6434b8b29ae775ad8c2e48c5391");
  EXPECT_EQ(git_blob_sha1("hello\n"), "ce013625030ba8dba906f756967f9e9ca394464a");
}

TEST(JsonIo, ScalarsRoundTrip) {
  const Scalar c = parse_scalar(json(2.5), "x");
  EXPECT_EQ(std::get<double>(c), 2.5);
  const Scalar p = parse_scalar(json::parse(R"({"terms": [[1, 0, 2.0], [0, 2, -1.5], [0, 0, 1]]})"), "x");
  const auto& b = std::get<BiPoly>(p);
  EXPECT_EQ(b(2.0, 3.0), 2.0 * 2.0 - 1.5 * 9.0 + 1.0);
  EXPECT_EQ(std::get<BiPoly>(parse_scalar(to_json(p), "x")), b);
  EXPECT_THROW((void)parse_scalar(json::parse(R"({"terms": [[-1, 0, 2.0]]})"), "x"), ConfigError);
  EXPECT_THROW((void)parse_scalar(json("1"), "x"), ConfigError);
}

TEST(JsonIo, UnknownKeysAreRejected) {
  EXPECT_THROW((void)parse_params(json::parse(R"({"alpha": 1, "beta": 0, "gamma": 2})")), ConfigError);
  EXPECT_THROW((void)parse_params(json::parse(R"({"alpha": 1})")), ConfigError);
  EXPECT_THROW((void)parse_real(json::parse(R"({"a13": 1})")), ConfigError);
  EXPECT_THROW((void)parse_domain(json::parse(R"({"rect": [0, 0, 1, 1], "disk": [0, 0, 1]})")), ConfigError);
}

TEST(JsonIo, CoefficientForms) {
  const AlgebraParams p{2, 1};
  EXPECT_TRUE(std::holds_alternative<GC>(parse_coefficient(json::parse("[1, 2]"), p, "c")));
  EXPECT_TRUE(std::holds_alternative<HoloPoly>(parse_coefficient(json::parse(R"({"coeffs": [[0, 0], [1, 0]]})"), p, "c")));
  EXPECT_TRUE(std::holds_alternative<PolyPair>(parse_coefficient(json::parse(R"({"re": {"terms": [[1, 0, 1]]}})"), p, "c")));
}

TEST(JsonIo, RealCoefficientsRoundTrip) {
  const json j = json::parse(R"({"a11": 1.5, "b22": {"terms": [[1, 1, -2]]}})");
  const RealCoeffs rc = parse_real(j);
  const json back = to_json(rc);
  EXPECT_EQ(back["a11"], 1.5);
  EXPECT_EQ(back["c3"], 0.0);
  EXPECT_EQ(back["b22"], j["b22"]);
}

TEST_F(Cli, VerifyEllipticPasses) {
  EXPECT_EQ(run_mode(Mode::verify, {{"params", kParams}, {"seed", 42}}), kOk) << log_.str() << err_.str();
  const json v = read_json("out/verify.json");
  EXPECT_TRUE(v["passed"].get<bool>());
  for (const json& s : v["suites"]) EXPECT_EQ(s["status"], "PASS") << s.dump();
  EXPECT_EQ(v["suites"].size(), 12u);
  const json m = read_json("out/manifest.json");
  EXPECT_EQ(m["seed"], 42);
  EXPECT_EQ(m["outputs"]["verify.json"], git_blob_sha1(read_file(dir_ / "out/verify.json")));
}

TEST_F(Cli, VerifyDegenerateSkipsEllipticSuites) {
  EXPECT_EQ(run_mode(Mode::verify, {{"params", {{"alpha", 1.0}, {"beta", 2.0}}}}), kOk) << log_.str();
  const json v = read_json("out/verify.json");
  int skipped = 0;
  for (const json& s : v["suites"]) {
    EXPECT_NE(s["status"], "FAIL") << s.dump();
    skipped += s["status"] == "SKIPPED";
  }
  EXPECT_EQ(skipped, 6);
  EXPECT_NE(log_.str().find("SKIPPED"), std::string::npos);
}

TEST_F(Cli, SynthesizeWithAlphaZeroIsInvalid) {
  EXPECT_EQ(run_mode(Mode::synthesize, {{"params", {{"alpha", 0.0}, {"beta", 1.0}}}}), kConfigInvalid);
  EXPECT_NE(err_.str().find("Lemma1Inadmissible"), std::string::npos);
}

TEST_F(Cli, SynthesizeEmitsCoefficients) {
  const json cfg = {{"params", kParams}, {"A", {{"coeffs", {{1, 0}}}}}, {"free", {{"a12", 0.5}}}};
  ASSERT_EQ(run_mode(Mode::synthesize, cfg), kOk) << err_.str();
  const json c = read_json("out/synthesize.json")["coefficients"];
  // a21 = -alpha A2 + a12, a22 = alpha A1 - alpha a11 - beta a12, b21 = A1 - beta A2 + b12.
  EXPECT_EQ(c["a21"], 0.5);
  EXPECT_EQ(c["a22"], 2.0 - 0.5);
  EXPECT_EQ(c["b21"], 1.0);
}

TEST_F(Cli, SchemaViolations) {
  EXPECT_EQ(run_mode(Mode::verify, {{"params", kParams}, {"bogus", 1}}), kConfigInvalid);
  EXPECT_EQ(run_mode(Mode::verify, {{"params", kParams}, {"mode", "solve"}}), kConfigInvalid);
  EXPECT_EQ(run_mode(Mode::verify, {{"seed", 1}}), kConfigInvalid);
  EXPECT_EQ(run_mode(Mode::verify, {{"params", kParams}, {"seed", -3}}), kConfigInvalid);
  json bad = transport_solve();
  bad["method"] = "euler";
  EXPECT_EQ(run_mode(Mode::solve, bad), kConfigInvalid);
  write_file(dir_ / "broken.json", "{not json");
  RunOptions o;
  o.config = dir_ / "broken.json";
  o.out = dir_ / "out";
  EXPECT_EQ(run(o, log_, err_), kConfigInvalid);
}

TEST_F(Cli, IoErrors) {
  RunOptions o;
  o.config = dir_ / "missing.json";
  EXPECT_EQ(run(o, log_, err_), kIoError);
  write_file(dir_ / "blocker", "x");
  EXPECT_EQ(run_mode(Mode::verify, {{"params", kParams}}, "blocker/out"), kIoError);
}

TEST_F(Cli, ParamsOverride) {
  RunOptions o;
  o.mode = Mode::verify;
  o.config = config({{"params", kParams}});
  o.out = dir_ / "out";
  o.params = AlgebraParams{1.0, 2.0};
  EXPECT_EQ(run(o, log_, err_), kOk);
  EXPECT_EQ(read_json("out/verify.json")["params"]["beta"], 2.0);
  EXPECT_EQ(read_json("out/manifest.json")["config"]["params"]["alpha"], 1.0);
}

TEST_F(Cli, CheckAssociated) {
  const json base = {{"params", kParams}, {"domain", {{"rect", {-1, -1, 1, 1}}}}, {"h", 0.0625}};
  json good = base;
  good["operator"] = {{"A", {{"coeffs", {{1, 0}, {0.5, 0}}}}}, {"C", {3, 1}}};
  EXPECT_EQ(run_mode(Mode::check_associated, good), kOk) << err_.str();
  EXPECT_TRUE(read_json("out/verdict.json")["associated"].get<bool>());

  json bad = base;
  bad["operator"] = {{"B", {1, 0}}};
  EXPECT_EQ(run_mode(Mode::check_associated, bad), kCheckFailed);
  const json v = read_json("out/verdict.json");
  EXPECT_EQ(v["violations"][0]["condition"], "B ≠ 0");
  EXPECT_NEAR(v["association_residual"].get<double>(), 4.0, 0.2);

  json real = base;
  real["coefficients"] = {{"a11", 1.0}};
  EXPECT_EQ(run_mode(Mode::check_associated, real), kCheckFailed);
  json both = good;
  both["coefficients"] = json::object();
  EXPECT_EQ(run_mode(Mode::check_associated, both), kConfigInvalid);
}

TEST_F(Cli, SolveWritesCsvAndManifest) {
  ASSERT_EQ(run_mode(Mode::solve, transport_solve()), kOk) << err_.str();
  const std::string csv = read_file(dir_ / "out/ivp.csv");
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "t,level_index,s_value,cr_residual_max,sup_norm_w,err_vs_series");
  const json d = read_json("out/diagnostics.json");
  EXPECT_TRUE(d["conical"]["monotone"].get<bool>());
  EXPECT_EQ(d["conical"]["levels"].size(), 3u);
  const json m = read_json("out/manifest.json");
  EXPECT_EQ(m["outputs"]["ivp.csv"], git_blob_sha1(csv));
  EXPECT_EQ(m["config"]["h"], 0.125);
  EXPECT_EQ(m["input_sha1"].get<std::string>().size(), 40u);
}

TEST_F(Cli, SolveIsDeterministic) {
  ASSERT_EQ(run_mode(Mode::solve, transport_solve(), "a"), kOk);
  ASSERT_EQ(run_mode(Mode::solve, transport_solve(), "b"), kOk);
  for (const char* f : {"ivp.csv", "diagnostics.json", "manifest.json"}) {
    EXPECT_EQ(read_file(dir_ / "a" / f), read_file(dir_ / "b" / f)) << f;
  }
}

TEST_F(Cli, SolveFailures) {
  json cfl = transport_solve();
  cfl["dt"] = 0.5;
  cfl["t_end"] = 1.0;
  EXPECT_EQ(run_mode(Mode::solve, cfl), kConfigInvalid);
  EXPECT_NE(err_.str().find("CflViolation"), std::string::npos);

  json blow = transport_solve();
  blow.erase("synthesize");
  blow["coefficients"] = {{"c1", 200.0}, {"d2", 200.0}};
  blow["t_end"] = 0.5;
  EXPECT_EQ(run_mode(Mode::solve, blow), kCheckFailed);
  EXPECT_NE(err_.str().find("NonFiniteState"), std::string::npos);
}

TEST_F(Cli, CauchyDemo) {
  const json cfg = {{"params", kParams}, {"function", {{"coeffs", {{0, 0}, {0, 0}, {-1, 0}}}}}};
  ASSERT_EQ(run_mode(Mode::cauchy_demo, cfg), kOk) << log_.str() << err_.str();
  const json d = read_json("out/cauchy_demo.json");
  EXPECT_EQ(d["rows"].size(), 6u);
  EXPECT_TRUE(d["monotone"].get<bool>());
  EXPECT_EQ(run_mode(Mode::cauchy_demo, {{"params", {{"alpha", -1}, {"beta", 0}}}, {"function", cfg["function"]}}),
            kConfigInvalid);
}

int shell(const std::string& cmd) {
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

TEST_F(Cli, BinaryExitCodes) {
  const std::string bin = EPCX_BINARY;
  const fs::path cfg = config({{"params", kParams}});
  const std::string quiet = " > /dev/null 2>&1";
  EXPECT_EQ(shell(bin + " verify --config " + cfg.string() + " --out " + (dir_ / "v").string() + " --seed 7" + quiet), 0);
  EXPECT_EQ(read_json("v/manifest.json")["seed"], 7);
  EXPECT_EQ(shell(bin + " synthesize --config " + cfg.string() + " --out " + (dir_ / "s").string() +
                  " --params 0,1" + quiet),
            2);
  EXPECT_EQ(shell(bin + " verify --config " + cfg.string() + " --params 2" + quiet), 2);
  EXPECT_EQ(shell(bin + " frobnicate --config " + cfg.string() + quiet), 2);
  EXPECT_EQ(shell(bin + " verify" + quiet), 2);
  EXPECT_EQ(shell(bin + " verify --config " + (dir_ / "nope.json").string() + quiet), 3);
}

TEST_F(Cli, ThreadCapDoesNotChangeOutput) {
  const std::string bin = EPCX_BINARY;
  const fs::path cfg = config(transport_solve());
  ASSERT_EQ(shell(bin + " solve --config " + cfg.string() + " --out " + (dir_ / "one").string() +
                  " > /dev/null 2>&1 && EPCX_THREADS=1 " + bin + " solve --config " + cfg.string() + " --out " +
                  (dir_ / "cap").string() + " > /dev/null 2>&1"),
            0);
  EXPECT_EQ(read_file(dir_ / "one/ivp.csv"), read_file(dir_ / "cap/ivp.csv"));
}

}  // namespace
}  // namespace epcx::app
