// Copyright 2026 The orient2 Authors
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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "orient2/cli.hpp"
#include "orient2/graph.hpp"
#include "test_graphs.hpp"

namespace orient2 {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out;
  std::ostringstream err;
  Result r;
  r.code = cli::run(args, in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

bool has_line(const std::string& text, const std::string& line) {
  std::istringstream s(text);
  for (std::string l; std::getline(s, l);)
    if (l == line) return true;
  return false;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("orient2_cli_test_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(CliTest, GenWritesGraphAndClasses) {
  Result r = run({"gen", "--c1", "2/5", "--c2", "2/5", "--m", "1", "--out", path("g.mg")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(has_line(r.out, "n=60"));
  EXPECT_TRUE(has_line(r.out, "min_degree=40"));
  MixedGraph g = parse_mg(slurp(path("g.mg")));
  EXPECT_EQ(g.order(), 60u);
  EXPECT_EQ(slurp(path("g.classes")).rfind("# extremal c1=2/5 c2=2/5 m=1\n", 0), 0u);
}

TEST_F(CliTest, GenToStdout) {
  Result r = run({"gen", "--c1", "2/5", "--c2", "2/5", "--m", "1"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(parse_mg(r.out).order(), 60u);
}

TEST_F(CliTest, GenNonIntegral) {
  Result r = run({"gen", "--c1", "1/4", "--c2", "1/4", "--m", "1"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.err.rfind("error: NON_INTEGRAL: X1=20/3", 0), 0u) << r.err;
  EXPECT_TRUE(r.out.empty());
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"gen", "--c1", "0.4", "--c2", "2/5", "--m", "1"}).code, 2);
  EXPECT_EQ(run({"gen", "--c1", "2/5", "--m", "1"}).code, 2);
  EXPECT_EQ(run({"orient", "--in", "-", "--tries", "0", "--seed", "1"}).code, 2);
  EXPECT_EQ(run({"oracle", "bogus", "--in", "-"}).code, 2);
  EXPECT_EQ(run({"bounds"}).code, 2);
}

TEST_F(CliTest, DomainErrors) {
  Result missing = run({"check", "--in", path("nope.mg")});
  EXPECT_EQ(missing.code, 1);
  Result bad = run({"check", "--in", "-"}, "mgraph 1\nn 2\nx 0 1\n");
  EXPECT_EQ(bad.code, 1);
  EXPECT_EQ(bad.err.rfind("error: SYNTAX_ERROR: line 3", 0), 0u) << bad.err;
  Result big = run({"oracle", "diam", "--in", "-", "--budget", "5"},
                   serialize_mg(testing::complete_graph(5)));
  EXPECT_EQ(big.code, 1);
  EXPECT_EQ(big.err.rfind("error: BUDGET_EXCEEDED", 0), 0u) << big.err;
}

TEST_F(CliTest, XiOnK30) {
  Result r = run({"xi", "--in", "-"}, serialize_mg(testing::complete_graph(30)));
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(has_line(r.out, "conclusive=true"));
  EXPECT_NE(r.out.find("xi=0.2762"), std::string::npos) << r.out;
}

TEST_F(CliTest, CheckAndRatio) {
  const std::string tri = serialize_mg(testing::mixed_triangle());
  Result c = run({"check", "--in", "-"}, tri);
  ASSERT_EQ(c.code, 0);
  EXPECT_TRUE(has_line(c.out, "mixed_diameter=2"));
  EXPECT_TRUE(has_line(c.out, "bridge=none"));
  Result m = run({"check", "--in", "-", "--bridge-mode", "mixed"}, tri);
  EXPECT_TRUE(has_line(m.out, "bridge=0,1")) << m.out;
  Result r = run({"ratio", "--in", "-"}, tri);
  EXPECT_TRUE(has_line(r.out, "c1=1/2"));
  EXPECT_TRUE(has_line(r.out, "c2=1/2"));
}

TEST_F(CliTest, OracleModes) {
  const std::string k3 = serialize_mg(testing::complete_graph(3));
  EXPECT_TRUE(has_line(run({"oracle", "diam", "--in", "-"}, k3).out, "oriented_diameter=2"));
  EXPECT_TRUE(has_line(run({"oracle", "failprob", "--in", "-"}, k3).out, "diam2_failure=3/4"));
  Result p = run({"oracle", "pairfail", "--in", "-", "--u", "0", "--v", "1"}, k3);
  EXPECT_TRUE(has_line(p.out, "pair_failure=3/4"));
  EXPECT_TRUE(has_line(p.out, "agree=true"));
  const std::string c4 = serialize_mg(testing::cycle_graph(4));
  EXPECT_TRUE(has_line(run({"oracle", "diam", "--in", "-"}, c4).out, "oriented_diameter=3"));
}

TEST_F(CliTest, ThresholdAndBounds) {
  Result t = run({"threshold", "--n", "60", "--c1", "2/5", "--c2", "2/5"});
  ASSERT_EQ(t.code, 0);
  EXPECT_TRUE(has_line(t.out, "vacuous=true"));
  Result b = run({"bounds", "--diameter", "3"});
  EXPECT_TRUE(has_line(b.out, "lower=15/2"));
  EXPECT_TRUE(has_line(b.out, "upper=35"));
}

TEST_F(CliTest, OrientWritesVerifiedOrientation) {
  const std::string k30 = serialize_mg(testing::complete_graph(30));
  Result r = run({"orient", "--in", "-", "--tries", "10", "--seed", "1", "--out", path("o.mg")}, k30);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(has_line(r.out, "success=true"));
  MixedGraph o = parse_mg(slurp(path("o.mg")));
  EXPECT_TRUE(o.undirected_edges().empty());
  EXPECT_EQ(o.arcs().size(), 435u);

  Result p3 = run({"orient", "--in", "-", "--tries", "4", "--seed", "1"},
                  serialize_mg(testing::path_graph(3)));
  EXPECT_EQ(p3.code, 1);
  EXPECT_EQ(p3.err.rfind("error: EXHAUSTED", 0), 0u) << p3.err;
}

TEST_F(CliTest, CertifyGeneratedInstance) {
  ASSERT_EQ(run({"gen", "--c1", "2/5", "--c2", "2/5", "--m", "1", "--out", path("g.mg")}).code, 0);
  Result r = run({"certify", "--in", path("g.mg"), "--orientation-seed", "7"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(has_line(r.out, "distance=3") || has_line(r.out, "distance=inf")) << r.out;
  Result many = run({"certify", "--in", path("g.mg"), "--orientation-seed", "0", "--samples", "50"});
  EXPECT_EQ(many.code, 0) << many.err;
}

TEST_F(CliTest, DeterministicAcrossJobs) {
  const std::string k24 = serialize_mg(testing::complete_graph(24));
  const std::vector<std::vector<std::string>> commands = {
      {"orient", "--in", "-", "--tries", "30", "--seed", "5"},
      {"sweep", "--n", "16,20", "--c1", "1/10", "--c2", "1/10", "--delta", "8,11", "--p", "0.8",
       "--q", "0.2", "--trials", "10", "--tries", "3", "--seed", "4"},
      {"oracle", "failprob", "--in", "-"},
  };
  for (const auto& base : commands) {
    const std::string input = base[0] == "oracle" ? serialize_mg(testing::complete_graph(5)) : k24;
    std::vector<std::string> args = base;
    args.insert(args.end(), {"--jobs", "1"});
    Result one = run(args, input);
    ASSERT_EQ(one.code, 0) << one.err;
    for (const char* jobs : {"2", "8"}) {
      args.back() = jobs;
      Result again = run(args, input);
      EXPECT_EQ(again.code, one.code);
      EXPECT_EQ(again.out, one.out) << base[0] << " jobs=" << jobs;
      EXPECT_EQ(again.err, one.err);
    }
  }
}

}  // namespace
}  // namespace orient2
