#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "odiam/cli.hpp"

namespace odiam {
namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(std::vector<std::string> args, const CliHooks& hooks = {}) {
  args.insert(args.begin(), "odiam");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err, hooks);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("odiam_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  void write(const std::string& name, const std::string& text) const { std::ofstream(path(name)) << text; }
  std::string read(const std::string& name) const {
    std::ifstream in(path(name));
    std::stringstream b;
    b << in.rdbuf();
    return b.str();
  }
  fs::path dir_;
};

bool contains(const std::string& s, const std::string& what) { return s.find(what) != std::string::npos; }

TEST_F(CliTest, AnalyzeNineCycle) {
  CliRun r = cli({"analyze", "cycle:9"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(contains(r.out, "d=4 g=9 g*=9"));
  EXPECT_TRUE(contains(r.out, "partition\n0 u\n1 v\n"));
}

TEST_F(CliTest, AnalyzeDoubledPath) {
  CliRun r = cli({"analyze", "doubled_path:5"});
  EXPECT_TRUE(contains(r.out, "d=4 g=2 g*=2"));
  EXPECT_FALSE(contains(r.out, "partition"));
}

TEST_F(CliTest, AnalyzePathIsNotBridgeless) {
  write("p.txt", "4 3\n0 1\n1 2\n2 3\n");
  CliRun r = cli({"analyze", path("p.txt")});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(contains(r.out, "bridgeless: false"));
}

TEST_F(CliTest, AnalyzeDisconnected) {
  write("d.txt", "4 4\n0 1\n0 1\n2 3\n2 3\n");
  CliRun r = cli({"analyze", path("d.txt")});
  EXPECT_EQ(r.code, kExitInput);
  EXPECT_TRUE(contains(r.err, "Disconnected"));
}

TEST_F(CliTest, AnalyzeGraph6File) {
  write("c5.g6", "Dhc\n");
  EXPECT_TRUE(contains(cli({"analyze", path("c5.g6")}).out, "n 5 m 5"));
  write("c5.txt", "Dhc\n");
  EXPECT_EQ(cli({"analyze", path("c5.txt"), "--format", "graph6"}).code, kExitOk);
}

TEST_F(CliTest, ParseErrorsExitFour) {
  write("bad.txt", "3 2\n0 1\n1 q\n");
  CliRun r = cli({"analyze", path("bad.txt")});
  EXPECT_EQ(r.code, kExitInput);
  EXPECT_TRUE(contains(r.err, "line 3"));
  EXPECT_EQ(cli({"analyze", "no_such_family:3"}).code, kExitInput);
  EXPECT_EQ(cli({}).code, kExitInput);
  EXPECT_EQ(cli({"analyze", "cycle:9", "--format", "dimacs"}).code, kExitInput);
  EXPECT_EQ(cli({"exact", "cycle:9", "--budget", "-3"}).code, kExitInput);
}

TEST_F(CliTest, OrientNineCycle) {
  CliRun r = cli({"orient", "cycle:9", path("o.txt"), "--dot", path("o.dot"), "--trace", path("o.trace")});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(contains(r.out, "diameter 8 <= bound 12"));
  EXPECT_EQ(read("o.txt").rfind("orientation 9 9\n", 0), 0u);
  EXPECT_EQ(read("o.dot").rfind("digraph G {", 0), 0u);
  EXPECT_FALSE(read("o.trace").empty());
}

TEST_F(CliTest, OrientDoubledPathMeetsBound) {
  CliRun r = cli({"orient", "doubled_path:5"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out.rfind("orientation 5 8\n", 0), 0u);
  EXPECT_TRUE(contains(r.err, "diameter 4 = bound 4"));
}

TEST_F(CliTest, OrientUnsupportedRegimes) {
  CliRun theta = cli({"orient", "theta:2,3,4"});
  EXPECT_EQ(theta.code, kExitUnsupported);
  EXPECT_TRUE(contains(theta.out, "d=3"));
  for (const char* spec : {"random:12,4", "random:12,5"}) {
    CliRun r = cli({"orient", spec});
    EXPECT_EQ(r.code, kExitUnsupported);
    EXPECT_TRUE(contains(r.err, "open regime"));
  }
}

TEST_F(CliTest, OrientRejectsBridges) {
  write("p.txt", "3 2\n0 1\n1 2\n");
  EXPECT_EQ(cli({"orient", path("p.txt")}).code, kExitInput);
}

TEST_F(CliTest, ForcedPipelineFailsOnWrongInput) {
  CliRun r = cli({"orient", "cycle:9", "--force-pipeline", "g678"});
  EXPECT_EQ(r.code, kExitViolation);
  EXPECT_TRUE(contains(r.err, "PreconditionGstar"));
  EXPECT_EQ(cli({"orient", "cycle:9", "--force-pipeline", "g5"}).code, kExitInput);
}

TEST_F(CliTest, VerifyPipelineOutput) {
  ASSERT_EQ(cli({"orient", "random:20,7", "--seed", "2", path("o.txt")}).code, kExitOk);
  CliRun r = cli({"verify", "random:20,7", path("o.txt"), "--seed", "2"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(contains(r.out, "PASS"));
}

TEST_F(CliTest, VerifyNamesTheViolation) {
  write("rev.txt", "orientation 9 9\n0 1 0\n1 2 1\n2 3 2\n3 4 3\n4 5 4\n5 6 5\n6 7 6\n7 8 7\n8 0 8\n");
  CliRun r = cli({"verify", "cycle:9", path("rev.txt")});
  EXPECT_EQ(r.code, kExitViolation);
  EXPECT_TRUE(contains(r.out, "VIOLATED"));
  EXPECT_TRUE(contains(r.out, "FAIL"));
}

TEST_F(CliTest, VerifyNotStrong) {
  write("ns.txt", "orientation 9 9\n0 1 0\n1 1 2\n2 2 3\n3 3 4\n4 4 5\n5 5 6\n6 6 7\n7 7 8\n8 8 0\n");
  CliRun r = cli({"verify", "cycle:9", path("ns.txt")});
  EXPECT_EQ(r.code, kExitViolation);
  EXPECT_TRUE(contains(r.out, "NOT STRONG"));
}

TEST_F(CliTest, VerifyIncompleteFile) {
  write("inc.txt", "orientation 3 3\n0 0 1\n");
  EXPECT_EQ(cli({"verify", "cycle:3", path("inc.txt")}).code, kExitInput);
}

TEST_F(CliTest, ExactWithDot) {
  CliRun r = cli({"exact", "cycle:9", "--dot", path("w.dot")});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out.rfind("optimal 8\nproven yes\n", 0), 0u);
  EXPECT_TRUE(contains(read("w.dot"), "->"));
  EXPECT_TRUE(contains(cli({"exact", "complete:4", "--jobs", "2"}).out, "optimal 3\n"));
}

TEST_F(CliTest, ExactBudgetExceeded) {
  CliRun r = cli({"exact", "random:24,6", "--seed", "1", "--budget", "1000"});
  EXPECT_EQ(r.code, kExitBudget);
  EXPECT_TRUE(contains(r.out, "proven no"));
}

TEST_F(CliTest, GenerateFormats) {
  EXPECT_EQ(cli({"generate", "complete:4", "--format", "graph6"}).out, "C~\n");
  EXPECT_EQ(cli({"generate", "cycle:3"}).out, "3 3\n0 1\n0 2\n1 2\n");
  EXPECT_EQ(cli({"generate", "doubled_path:3", "--format", "graph6"}).code, kExitUnsupported);
  EXPECT_EQ(cli({"generate", "random:18,9", "--seed", "4"}).out, cli({"generate", "random:18,9", "--seed", "4"}).out);
}

TEST_F(CliTest, ExportColoursPartition) {
  CliRun r = cli({"export", "cycle:9", "--dot", path("g.dot")});
  EXPECT_EQ(r.code, kExitOk);
  std::string dot = read("g.dot");
  EXPECT_EQ(dot.rfind("graph G {", 0), 0u);
  EXPECT_TRUE(contains(dot, "fillcolor"));
  EXPECT_FALSE(contains(cli({"export", "complete:4"}).out, "fillcolor"));
}

TEST_F(CliTest, ReproduceWritesSummaryAndCorpus) {
  CliHooks hooks;
  hooks.only = {1, 7};
  CliRun r = cli({"reproduce", "--paper-results", path("res")}, hooks);
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(contains(read("res/summary.txt"), "PASS 1 "));
  EXPECT_TRUE(contains(read("res/summary.txt"), "PASS 7 "));
}

TEST_F(CliTest, ReproduceCorruptedConstructionFails) {
  CliHooks hooks;
  hooks.only = {4};
  hooks.corrupt_constructions = true;
  CliRun r = cli({"reproduce", "--paper-results", path("res")}, hooks);
  EXPECT_EQ(r.code, kExitViolation);
  EXPECT_TRUE(contains(r.out, "FAIL 4 "));
  // The manifest written on the first run is reused by the second.
  EXPECT_TRUE(fs::exists(path("res/corpus/g9.manifest")));
  hooks.corrupt_constructions = false;
  CliRun again = cli({"reproduce", "--paper-results", path("res")}, hooks);
  EXPECT_EQ(again.code, kExitOk);
  EXPECT_TRUE(contains(again.err, "corpus: loaded"));
}

}  // namespace
}  // namespace odiam
