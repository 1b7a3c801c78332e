#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "barnette/cli.hpp"
#include "barnette/gen.hpp"
#include "barnette/io.hpp"

using namespace barnette;

namespace {

struct CliRun {
  int code = -1;
  std::string out;
  Json last;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  CliRun r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  std::istringstream lines(r.out);
  std::string line;
  while (std::getline(lines, line))
    if (!line.empty()) r.last = Json::parse(line);
  return r;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("barnette_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const auto path = dir_ / name;
    std::ofstream(path) << text;
    return path.string();
  }
  std::string write(const std::string& name, const Json& j) { return write(name, j.dump()); }

  std::filesystem::path dir_;
};

Json cycle_doc(int n) {
  Json edges = Json::array();
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Json{{"n", n}, {"edges", edges}};
}

}  // namespace

TEST_F(CliTest, CheckEvenTriangulation) {
  const CliRun r = run({"check", write("oct.json", to_json(gen_bipyramid(2))), "--family", "even-tri"});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_EQ(r.last["status"], "pass");
  EXPECT_EQ(r.last["command"], "check");
  EXPECT_EQ(r.last["input_digest"].get<std::string>().size(), 16U);
}

TEST_F(CliTest, CheckSixCycleFailsWithWitness) {
  const CliRun r = run({"check", write("c6.json", cycle_doc(6)), "--family", "multi4"});
  EXPECT_EQ(r.code, kExitFail);
  bool witnessed = false;
  for (const Json& inv : r.last["invariants"])
    if (!inv["pass"].get<bool>()) witnessed = inv["witness"].size() == 6;
  EXPECT_TRUE(witnessed);
}

TEST_F(CliTest, MalformedInputIsAnError) {
  const CliRun r = run({"check", write("bad.json", std::string("{\"n\": 3, ")), "--family", "even-tri"});
  EXPECT_EQ(r.code, kExitError);
  EXPECT_EQ(r.last["error"], "ParseError");
  EXPECT_EQ(run({"check", (dir_ / "missing.json").string(), "--family", "multi4"}).code, kExitError);
}

TEST_F(CliTest, ColorEightCycle) {
  Json doc = cycle_doc(8);
  doc["a"] = {{"0", 1}, {"2", 2}, {"4", 1}, {"6", 2}};
  const CliRun r = run({"color", write("c8.json", doc), "--pin", "3=2"});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_EQ(r.last["result"]["b"]["3"], 2);
  EXPECT_EQ(r.last["result"]["b"].size(), 4U);
}

TEST_F(CliTest, ColorRejectsK34AndAlphaPins) {
  Json edges = Json::array();
  for (int u = 0; u < 3; ++u)
    for (int v = 3; v < 7; ++v) edges.push_back({u, v});
  Json k34{{"n", 7}, {"edges", edges}, {"a", {{"3", 1}, {"4", 1}, {"5", 2}, {"6", 2}}}};
  CliRun r = run({"color", write("k34.json", k34)});
  EXPECT_EQ(r.code, kExitError);
  EXPECT_EQ(r.last["error"], "NotInFamilyH");

  Json doc = cycle_doc(8);
  doc["a"] = {{"0", 1}, {"2", 2}, {"4", 1}, {"6", 2}};
  r = run({"color", write("c8.json", doc), "--pin", "2=1"});
  EXPECT_EQ(r.code, kExitError);
  EXPECT_EQ(r.last["error"], "ParseError");
}

TEST_F(CliTest, PartitionModes) {
  const std::string path = write("bp3.json", to_json(gen_bipyramid(3)));
  CliRun r = run({"partition", path});
  EXPECT_EQ(r.code, kExitPass);
  r = run({"partition", path, "--together", "6,0"});
  EXPECT_EQ(r.code, kExitPass);
}

TEST_F(CliTest, HamiltonAvoidEdgeAndFaceSparse) {
  CliRun r = run({"hamilton", write("bp3.json", to_json(gen_bipyramid(3))), "--avoid-edge", "6,0"});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_EQ(r.last["result"]["cycle"].size(), 12U);

  r = run({"hamilton", write("oct.json", to_json(gen_bipyramid(2))), "--face-sparse"});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_TRUE(r.last["result"]["report"].empty());

  r = run({"hamilton", write("c4.json", Json{{"n", 4}, {"rotation", {{1, 3}, {2, 0}, {3, 1}, {0, 2}}}}),
           "--face-sparse"});
  EXPECT_EQ(r.code, kExitError);
  EXPECT_EQ(r.last["error"], "NotEvenTriangulation");
}

TEST_F(CliTest, SurveysPassAndAreDeterministic) {
  const CliRun a = run({"survey", "--family", "even-tri", "--n-max", "10"});
  EXPECT_EQ(a.code, kExitPass);
  EXPECT_EQ(a.last["status"], "pass");
  const CliRun b = run({"survey", "--family", "even-tri", "--n-max", "10", "--jobs", "3"});
  EXPECT_EQ(a.out, b.out);
  const CliRun m = run({"survey", "--family", "multi4", "--count", "40", "--seed", "9"});
  EXPECT_EQ(m.code, kExitPass);
  EXPECT_EQ(m.last["passed"], 40);
  const CliRun t = run({"survey", "--family", "thm24-valid", "--n-max", "12"});
  EXPECT_EQ(t.code, kExitPass);
}

TEST_F(CliTest, GenEmitsCertifiedGraphs) {
  const CliRun r = run({"gen", "--family", "even-tri", "--n", "12"});
  EXPECT_EQ(r.code, kExitPass);
  int lines = 0;
  std::istringstream in(r.out);
  std::string line;
  while (std::getline(in, line)) {
    const Json j = Json::parse(line);
    if (!j.contains("rotation")) continue;
    ++lines;
    EXPECT_TRUE(is_even_triangulation(embedded_from_json(j)));
  }
  EXPECT_EQ(lines, 8);
}
