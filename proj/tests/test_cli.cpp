#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "flopdyn/commands.hpp"
#include "flopdyn/json_io.hpp"
#include "test_support.hpp"

namespace flopdyn {
namespace {

using testing::data_path;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "flopdyn");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("flopdyn_test_" + name)).string();
}

TEST(Cli, TableCsv) {
  const CliRun r = run({"table", "--config", data_path("i2.json")});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out,
            "n,C1·,C2·,mult_C1,mult_C2\n"
            "0,1,1,0,0\n"
            "1,3,-1,0,1\n"
            "2,5,-3,1,3\n"
            "3,7,-5,3,6\n");
}

TEST(Cli, TableJsonRoundTrips) {
  const CliRun r = run({"table", "--config", data_path("i2.json"), "--format", "json", "--n-max", "5"});
  ASSERT_EQ(r.code, kExitOk);
  const Json j = Json::parse(r.out);
  ASSERT_EQ(j["rows"].size(), 6u);
  const Json& last = j["rows"][5];
  EXPECT_EQ(vector_from_json(last["intersections"]), vec({11, -9}));
  EXPECT_EQ(vector_from_json(last["multiplicities"]), vec({10, 15}));
  EXPECT_EQ(dump(j), r.out);
}

TEST(Cli, ClosedFormCheck) {
  EXPECT_EQ(run({"table", "--config", data_path("i2.json"), "--n-max", "50", "--check-closed-form"}).code, kExitOk);
}

TEST(Cli, OutputIsByteStable) {
  const std::vector<std::string> args{"sigma", "--config", data_path("i2.json"), "--n-max", "12"};
  const CliRun a = run(args), b = run(args);
  EXPECT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, SigmaSingleCurve) {
  const CliRun r = run({"sigma", "--config", data_path("i2.json"), "--curve", "C1", "--n-max", "8"});
  ASSERT_EQ(r.code, kExitOk);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["curve"], "C1");
  EXPECT_EQ(j["classification"]["kind"], "Divergent");
  EXPECT_EQ(j["classification"]["degree"], 1);
  EXPECT_EQ(rational_from_json(j["values"][7]), Rational(7, 4));
}

TEST(Cli, SigmaStationaryFixture) {
  const CliRun r = run({"sigma", "--config", data_path("fixed.json"), "--curve", "C1"});
  ASSERT_EQ(r.code, kExitOk);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["classification"]["kind"], "ConvergentFinite");
  EXPECT_EQ(j["classification"]["limit"], "0");
}

TEST(Cli, UnknownCurveIsInputError) {
  const CliRun r = run({"sigma", "--config", data_path("i2.json"), "--curve", "C9"});
  EXPECT_EQ(r.code, kExitInputError);
  EXPECT_NE(r.err.find("IndexError"), std::string::npos);
}

TEST(Cli, MissingConfigIsInputError) {
  EXPECT_EQ(run({"table", "--config", "/nonexistent/flopdyn.json"}).code, kExitInputError);
  EXPECT_EQ(run({}).code, kExitInputError);
  EXPECT_EQ(run({"table"}).code, kExitInputError);
}

TEST(Cli, MalformedConfigIsInputError) {
  const std::string path = temp_path("bad.json");
  std::ofstream(path) << "{\"rank\": 2, \"curves\": [\"C1\"";
  EXPECT_EQ(run({"table", "--config", path}).code, kExitInputError);
  std::ofstream(path) << "{\"rank\": 2}";
  EXPECT_EQ(run({"table", "--config", path}).code, kExitInputError);
  std::filesystem::remove(path);
}

TEST(Cli, ChambersJsonAndSvg) {
  const std::string svg = temp_path("fan.svg");
  const CliRun r = run({"chambers", "--config", data_path("i2.json"), "--depth", "4", "--svg", svg});
  ASSERT_EQ(r.code, kExitOk);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["chambers"].size(), 5u);
  EXPECT_EQ(j["chambers"][4]["ray_a"], Json::parse("[5,-4]"));
  EXPECT_EQ(j["accumulation_ray"], Json::parse("[1,-1]"));
  std::ifstream in(svg);
  const std::string first((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  ASSERT_EQ(run({"chambers", "--config", data_path("i2.json"), "--depth", "4", "--svg", svg}).code, kExitOk);
  std::ifstream in2(svg);
  const std::string second((std::istreambuf_iterator<char>(in2)), std::istreambuf_iterator<char>());
  EXPECT_FALSE(first.empty());
  EXPECT_EQ(first, second);
  EXPECT_FALSE(std::filesystem::exists(svg + ".tmp"));
  std::filesystem::remove(svg);
}

TEST(Cli, LiftAssemble) {
  const CliRun r = run({"lift", "assemble", "--config", data_path("i2-lift.json")});
  ASSERT_EQ(r.code, kExitOk);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(matrix_from_json(j["psi"]), (Matrix{{2, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 1}, {1, 0, 1, 0}}));
}

TEST(Cli, LiftCollisionIsHypothesisViolation) {
  const CliRun r = run({"lift", "eigen", "--config", data_path("i2-lift.json"), "--lambda", "1", "--vector", "1,-1"});
  EXPECT_EQ(r.code, kExitHypothesisViolation);
  EXPECT_NE(r.err.find("SingularResolventError"), std::string::npos);
}

TEST(Cli, LiftEigenDiagonal) {
  const CliRun r = run({"lift", "eigen", "--config", data_path("synthetic-diag.json"), "--lambda", "2", "--vector", "1,0"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("\"-1\""), std::string::npos);
}

TEST(Cli, LiftZariskiHypothesis) {
  EXPECT_EQ(run({"lift", "zariski", "--config", data_path("i2-lift.json"), "--class", "-1,0"}).code, kExitOk);
  EXPECT_EQ(run({"lift", "zariski", "--config", data_path("i2-lift.json"), "--class", "1,-1"}).code,
            kExitHypothesisViolation);
}

TEST(Cli, DominantExactAndFloat) {
  const CliRun exact = run({"lift", "dominant", "--config", data_path("synthetic-diag.json")});
  ASSERT_EQ(exact.code, kExitOk);
  const Json j = Json::parse(exact.out);
  EXPECT_EQ(vector_from_json(j["d_psi"]), vec({1, 0, -1, 0}));
  EXPECT_EQ(j["agree"], true);

  const CliRun irr = run({"lift", "dominant", "--config", data_path("synthetic-golden.json")});
  EXPECT_EQ(irr.code, kExitHypothesisViolation);
  EXPECT_NE(irr.err.find("--float"), std::string::npos);
  const CliRun fl = run({"lift", "dominant", "--config", data_path("synthetic-golden.json"), "--float"});
  EXPECT_EQ(fl.code, kExitOk);
}

TEST(Cli, BadVectorArgument) {
  EXPECT_EQ(run({"lift", "eigen", "--config", data_path("i2-lift.json"), "--lambda", "2", "--vector", "1,x"}).code,
            kExitInputError);
  EXPECT_EQ(parse_vector_arg("1, -1/2 ,0"), (Vector{Rational(1), Rational(-1, 2), Rational(0)}));
}

}  // namespace
}  // namespace flopdyn
