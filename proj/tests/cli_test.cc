// Copyright 2026 The Edgeouter Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "edgeouter/cli.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "edgeouter/io.h"

namespace edgeouter {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

std::string Data(const std::string& name) {
  return std::string(EDGEOUTER_DATA_DIR) + "/" + name;
}

Result Cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = RunCli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string Slurp(const fs::path& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("edgeouter_cli_" + std::string(::testing::UnitTest::GetInstance()
                                               ->current_test_info()
                                               ->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Write(const std::string& name, const std::string& text) {
    fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  fs::path dir_;
};

TEST_F(CliTest, CpOfK4) {
  Result r = Cli({"cp", Data("k4.g")});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "8\n");
}

TEST_F(CliTest, SrsOfThetaWithWitness) {
  Result r = Cli({"srs", Data("theta.g")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out.rfind("srs 6\n", 0), 0u);
  std::size_t at = r.out.find("walk closed");
  ASSERT_NE(at, std::string::npos);
  Walk w = ParseWalk(r.out.substr(at));
  EXPECT_EQ(w.length(), 6);
  std::string walk = Write("w.walk", r.out.substr(at));
  Result v = Cli({"verify-walk", Data("theta.g"), walk});
  EXPECT_EQ(v.code, kExitOk);
  EXPECT_NE(v.out.find("reporter_strand_walk yes"), std::string::npos);
}

TEST_F(CliTest, CprsOfThetaIsNone) {
  Result r = Cli({"cprs", Data("theta.g")});
  EXPECT_EQ(r.code, kExitFalse);
  EXPECT_EQ(r.out, "none\n");
}

TEST_F(CliTest, CprsOfK4RevalidatesEveryWalk) {
  Result r = Cli({"cprs", Data("k4.g")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out.rfind("cprs ", 0), 0u);
  std::size_t at = 0;
  int count = 0;
  while ((at = r.out.find("walk closed", at)) != std::string::npos) {
    std::size_t end = r.out.find("walk closed", at + 1);
    std::string walk = Write("w" + std::to_string(count) + ".walk",
                             r.out.substr(at, end - at));
    Result v = Cli({"verify-walk", Data("k4.g"), walk});
    EXPECT_EQ(v.code, kExitOk);
    EXPECT_NE(v.out.find("cprs yes"), std::string::npos);
    at = end;
    ++count;
  }
  EXPECT_GT(count, 0);
  EXPECT_EQ(r.out.rfind("cprs " + std::to_string(count) + "\n", 0), 0u);
}

TEST_F(CliTest, RswEmitsValidWalk) {
  Result r = Cli({"rsw", Data("petersen.g")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::size_t at = r.out.find("walk closed");
  ASSERT_NE(at, std::string::npos);
  std::string walk = Write("w.walk", r.out.substr(at));
  EXPECT_EQ(Cli({"verify-walk", Data("petersen.g"), walk}).code, kExitOk);
}

TEST_F(CliTest, FacesAndHamilton) {
  Result f = Cli({"faces", Data("k4.g")});
  EXPECT_EQ(f.code, kExitOk);
  EXPECT_NE(f.out.find("faces 4\ngenus 0\n"), std::string::npos);
  Result h = Cli({"hamilton", Data("k4.g")});
  EXPECT_EQ(h.code, kExitOk);
  EXPECT_EQ(h.out.rfind("cycle ", 0), 0u);
  Result none = Cli({"hamilton", Data("petersen.g")});
  EXPECT_EQ(none.code, kExitFalse);
  EXPECT_EQ(none.out, "none\n");
}

TEST_F(CliTest, InvalidInputs) {
  EXPECT_EQ(Cli({"cp", (dir_ / "missing.g").string()}).code, kExitInvalid);
  EXPECT_EQ(Cli({"frobnicate"}).code, kExitInvalid);
  EXPECT_EQ(Cli({}).code, kExitInvalid);
  std::string bad = Write("bad.g", "graph 2 1\nedge 0 0 1\nrot 0 0x0\nrot 1 0.1\n");
  Result r = Cli({"faces", bad});
  EXPECT_EQ(r.code, kExitInvalid);
  EXPECT_NE(r.err.find("line 3"), std::string::npos);
  EXPECT_EQ(Cli({"cprs", Data("petersen.g"), "--budget", "abc"}).code, kExitInvalid);
}

TEST_F(CliTest, BudgetExceeded) {
  Result r = Cli({"maxgenus", Data("petersen.g"), "--budget", "1"});
  EXPECT_EQ(r.code, kExitBudget);
  EXPECT_NE(r.err.find("budget"), std::string::npos);
  EXPECT_EQ(Cli({"srs", Data("petersen.g"), "--budget", "1"}).code, kExitBudget);
}

TEST_F(CliTest, GadgetWritesGraphAndMap) {
  std::string g = (dir_ / "p.g").string(), m = (dir_ / "p.map").string();
  Result r = Cli({"gadget", "p", Data("k4.g"), "--out", g, "--map", m});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("stage P: vertices 28 edges 42 cubic yes simple yes genus 0"),
            std::string::npos);
  GraphFile file = ParseGraph(Slurp(g));
  EXPECT_EQ(file.graph.vertex_count(), 28);
  EXPECT_TRUE(file.embedding.has_value());
  GadgetMap map = ParseGadgetMap(Slurp(m));
  EXPECT_EQ(map.vertex_names().size(), 28u);

  Result q = Cli({"gadget", "q", Data("k4.g"), "--out", g, "--map", m});
  EXPECT_EQ(q.code, kExitOk);
  EXPECT_NE(q.out.find("3-connected yes"), std::string::npos);
  EXPECT_EQ(Cli({"gadget", "r", Data("theta.g")}).code, kExitInvalid);
  EXPECT_EQ(Cli({"gadget", "x", Data("k4.g")}).code, kExitInvalid);
}

TEST_F(CliTest, ReduceDemo) {
  Result r = Cli({"reduce", Data("k4.g")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("P walk length 56"), std::string::npos);
  EXPECT_NE(r.out.find("R walk length 536 cprs yes"), std::string::npos);
  EXPECT_NE(r.out.find("recovered hamilton"), std::string::npos);
}

TEST_F(CliTest, Dot) {
  Result r = Cli({"dot", Data("k4.g")});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("graph"), std::string::npos);
  std::string walk = Write("w.walk", "walk closed 2\n0.0 1.1\n");
  Result d = Cli({"dot", Data("theta.g"), "--walk", walk});
  EXPECT_EQ(d.code, kExitOk);
  EXPECT_NE(d.out.find("dashed"), std::string::npos);
}

}  // namespace
}  // namespace edgeouter
