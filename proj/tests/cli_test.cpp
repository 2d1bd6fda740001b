// Copyright 2026 The priocover Authors.
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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "priocover/cli.hpp"
#include "priocover/generators.hpp"
#include "priocover/oracles.hpp"

namespace priocover {
namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult Cli(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = RunCommand(args, in, out, err);
  return {code, out.str(), err.str()};
}

SolutionDocument AsSolution(const std::string& text) {
  return ExpectKind<SolutionDocument>(ParseDocument(text), "solution");
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("priocover_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string Write(const std::string& name, const std::string& text) {
    const std::string path = (dir_ / name).string();
    std::ofstream(path) << text;
    return path;
  }
  std::string Path(const std::string& name) const { return (dir_ / name).string(); }

  std::filesystem::path dir_;
};

TEST_F(CliTest, GapLineExactSolve) {
  const RunResult gen = Cli({"generate", "gap-line", "--k", "5"});
  ASSERT_EQ(gen.code, 0) << gen.err;
  const RunResult sol = Cli({"solve", "plc-exact"}, gen.out);
  ASSERT_EQ(sol.code, 0) << sol.err;
  EXPECT_EQ(AsSolution(sol.out).cost, 3);
}

TEST_F(CliTest, PrimalDualCarriesDual) {
  const RunResult gen = Cli({"generate", "gap-line", "--k", "5"});
  const RunResult sol = Cli({"solve", "plc-pd"}, gen.out);
  ASSERT_EQ(sol.code, 0) << sol.err;
  const SolutionDocument s = AsSolution(sol.out);
  EXPECT_LE(s.cost, 5);
  ASSERT_TRUE(s.details.contains("dual"));
}

TEST_F(CliTest, SolveOutputsPassVerify) {
  const std::string line = Write("line.json", Cli({"generate", "gap-line", "--k", "7"}).out);
  for (const std::string algo : {"plc-exact", "plc-pd"}) {
    ASSERT_EQ(Cli({"solve", algo, "--in", line, "--out", Path(algo + ".json")}).code, 0);
    const RunResult v = Cli({"verify", "--in", line, "--solution", Path(algo + ".json")});
    EXPECT_EQ(v.code, 0) << algo << ": " << v.err;
  }
  setenv("PRIOCOVER_SEED", "31", 1);
  const std::string tree = Write("tree.json", Cli({"generate", "random-tree"}).out);
  const std::string ccip = Write("ccip.json", Cli({"generate", "random-ccip"}).out);
  unsetenv("PRIOCOVER_SEED");
  for (const std::string algo : {"ptc-2apx", "tree01"}) {
    const RunResult s = Cli({"solve", algo, "--in", tree});
    ASSERT_EQ(s.code, 0) << algo << ": " << s.err;
    const std::string sol = Write("sol-" + algo + ".json", s.out);
    if (algo == "ptc-2apx") EXPECT_EQ(Cli({"verify", "--in", tree, "--solution", sol}).code, 0);
  }
  Rng rng(31);
  const std::string bounded = Write("bounded.json", SerializeDocument(RandomBoundedSupplyCcip(rng)));
  for (const std::string algo : {"ccip", "ccip-nokc"}) {
    for (const std::string& inst : {ccip, bounded}) {
      if (algo == "ccip-nokc" && inst == ccip) continue;
      const RunResult s = Cli({"solve", algo, "--in", inst});
      ASSERT_EQ(s.code, 0) << algo << ": " << s.err;
      EXPECT_EQ(Cli({"verify", "--in", inst, "--solution", Write("sol-" + algo + ".json", s.out)}).code, 0) << algo;
    }
  }
}

TEST_F(CliTest, UnweightedTreeRounding) {
  const std::string graph = Write("g.json", R"({"kind":"graph","version":1,"num_vertices":3,"edges":[[0,1],[1,2]]})");
  const RunResult broom = Cli({"generate", "broom", "--graph", graph});
  ASSERT_EQ(broom.code, 0) << broom.err;
  const std::string tree = Write("broom.json", broom.out);
  const RunResult s = Cli({"solve", "ptc-unw6", "--in", tree, "--audit"});
  ASSERT_EQ(s.code, 0) << s.err;
  const SolutionDocument sol = AsSolution(s.out);
  EXPECT_TRUE(sol.details.contains("pieces"));
  EXPECT_EQ(Cli({"verify", "--in", tree, "--solution", Write("s.json", s.out)}).code, 0);
}

TEST_F(CliTest, ShortSolutionFailsVerify) {
  const std::string line = Write("line.json", Cli({"generate", "gap-line", "--k", "5"}).out);
  const size_t n = GenGapLine(5).segments.size();
  SolutionDocument empty{"manual", IntSolution(n, 0), 0, Json()};
  const std::string sol = Write("sol.json", SerializeDocument(empty));
  const RunResult v = Cli({"verify", "--in", line, "--solution", sol});
  EXPECT_EQ(v.code, 1);
  EXPECT_NE(v.err.find("uncovered"), std::string::npos);
  EXPECT_FALSE(ExpectKind<ReportDocument>(ParseDocument(v.out), "report").feasible);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(Cli({"frobnicate"}).code, 64);
  EXPECT_EQ(Cli({}).code, 64);
  EXPECT_EQ(Cli({"solve", "no-such-algorithm"}).code, 64);
  EXPECT_EQ(Cli({"--help"}).code, 0);
}

TEST_F(CliTest, InvalidInputs) {
  EXPECT_EQ(Cli({"solve", "plc-exact"}, R"({"kind":"line","version":2})").code, 2);
  const RunResult bad = Cli({"solve", "plc-exact"}, "{\n  \"kind\": ,\n}");
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("line 2"), std::string::npos) << bad.err;
  EXPECT_EQ(Cli({"solve", "plc-exact"}, Cli({"generate", "random-tree"}).out).code, 2);
  EXPECT_EQ(Cli({"lp", "alpha-relaxed", "--alpha", "x/y"}, Cli({"generate", "random-ccip"}).out).code, 2);
}

TEST_F(CliTest, VerifyHonoursDeclaredBoundScale) {
  const std::string inst = Write(
      "c.json", R"({"kind":"ccip","version":1,"matrix":[[1]],"b":[6],"c":[1],"d":[1],"s":[2]})");
  SolutionDocument sol{"manual", IntSolution{3}, 3, Json::object()};
  EXPECT_EQ(Cli({"verify", "--in", inst, "--solution", Write("a.json", SerializeDocument(sol))}).code, 1);
  sol.details["bound_scale"] = 10;
  const RunResult r = Cli({"verify", "--in", inst, "--solution", Write("b.json", SerializeDocument(sol))});
  EXPECT_EQ(r.code, 0) << r.err;
  sol.x = IntSolution{11};
  EXPECT_EQ(Cli({"verify", "--in", inst, "--solution", Write("c2.json", SerializeDocument(sol))}).code, 1);
}

TEST_F(CliTest, NoKcRejectsOversizedSupplies) {
  const std::string text =
      R"({"kind":"ccip","version":1,"matrix":[[1,1]],"b":[3],"c":[1,1],"d":[1,1],"s":[5,1]})";
  const RunResult r = Cli({"solve", "ccip-nokc"}, text);
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("(0,0)"), std::string::npos) << r.err;
  EXPECT_EQ(Cli({"solve", "ccip"}, text).code, 0);
}

TEST_F(CliTest, InfeasibleInstance) {
  const std::string text =
      R"({"kind":"line","version":1,"edges":[{"pi":3}],"segments":[{"l":1,"r":1,"s":1,"c":1}]})";
  EXPECT_EQ(Cli({"solve", "plc-exact"}, text).code, 1);
  EXPECT_EQ(Cli({"lp", "solve"}, text).code, 1);
}

TEST_F(CliTest, BudgetExceeded) {
  const std::string line = Cli({"generate", "gap-line", "--k", "9"}).out;
  EXPECT_EQ(Cli({"oracle", "brute", "--budget", "3"}, line).code, 3);
  const RunResult ok = Cli({"oracle", "brute"}, line);
  ASSERT_EQ(ok.code, 0) << ok.err;
  EXPECT_EQ(AsSolution(ok.out).cost, 5);
}

TEST_F(CliTest, LpSolveOnGapLine) {
  const RunResult r = Cli({"lp", "solve"}, Cli({"generate", "gap-line", "--k", "5"}).out);
  ASSERT_EQ(r.code, 0) << r.err;
  const SolutionDocument s = AsSolution(r.out);
  EXPECT_EQ(s.cost, Rational(7, 3));
  EXPECT_TRUE(std::holds_alternative<FracSolution>(s.x));
  EXPECT_TRUE(s.details.contains("duals"));
}

TEST_F(CliTest, AlphaRelaxed) {
  setenv("PRIOCOVER_SEED", "41", 1);
  const std::string ccip = Cli({"generate", "random-ccip"}).out;
  unsetenv("PRIOCOVER_SEED");
  const RunResult r = Cli({"lp", "alpha-relaxed", "--alpha", "1/4"}, ccip);
  ASSERT_EQ(r.code, 0) << r.err;
  const SolutionDocument s = AsSolution(r.out);
  EXPECT_EQ(s.algorithm, "alpha-relaxed");
  EXPECT_EQ(s.details["alpha"].dump(), R"({"num":1,"den":4})");
  // The bound includes knapsack-cover rows, so it may exceed the plain LP
  // value but never the integer optimum.
  const RunResult opt = Cli({"oracle", "brute"}, ccip);
  ASSERT_EQ(opt.code, 0) << opt.err;
  EXPECT_LE(s.cost, AsSolution(opt.out).cost);
}

TEST_F(CliTest, ReductionChainPreservesOptimum) {
  const std::string graph =
      Write("g.json", R"({"kind":"graph","version":1,"num_vertices":3,"edges":[[0,1],[1,2],[0,2]]})");
  const std::string tree = Cli({"generate", "broom", "--graph", graph}).out;
  const RunResult two = Cli({"reduce", "ptc-to-2plc"}, tree);
  ASSERT_EQ(two.code, 0) << two.err;
  EXPECT_STREQ(DocumentKind(ParseDocument(two.out)), "two_plc");
  const RunResult rect = Cli({"reduce", "2plc-to-rect"}, two.out);
  ASSERT_EQ(rect.code, 0) << rect.err;
  EXPECT_STREQ(DocumentKind(ParseDocument(rect.out)), "rect");
  for (const std::string* doc : {&tree, &two.out, &rect.out}) {
    const RunResult b = Cli({"oracle", "brute"}, *doc);
    ASSERT_EQ(b.code, 0) << b.err;
    EXPECT_EQ(AsSolution(b.out).cost, 5);
  }
  EXPECT_EQ(Cli({"reduce", "2plc-to-rect"}, tree).code, 2);
}

TEST_F(CliTest, Tree01ReportsLpValue) {
  const std::string graph = Write("g.json", R"({"kind":"graph","version":1,"num_vertices":2,"edges":[[0,1]]})");
  const RunResult r = Cli({"solve", "tree01"}, Cli({"generate", "broom", "--graph", graph}).out);
  ASSERT_EQ(r.code, 0) << r.err;
  const SolutionDocument s = AsSolution(r.out);
  EXPECT_EQ(JsonReader(s.details["lp_value"], "lp_value").Rat(), s.cost);
}

TEST_F(CliTest, AuditKeys) {
  setenv("PRIOCOVER_SEED", "51", 1);
  const std::string ccip = Cli({"generate", "random-ccip"}).out;
  const std::string tree = Cli({"generate", "random-tree"}).out;
  unsetenv("PRIOCOVER_SEED");
  const SolutionDocument plain = AsSolution(Cli({"solve", "ccip"}, ccip).out);
  EXPECT_FALSE(plain.details.contains("audit"));
  EXPECT_TRUE(plain.details.contains("lower_bound"));
  EXPECT_TRUE(AsSolution(Cli({"solve", "ccip", "--audit"}, ccip).out).details.contains("audit"));
  Rng rng(51);
  const std::string bounded = SerializeDocument(RandomBoundedSupplyCcip(rng));
  EXPECT_TRUE(AsSolution(Cli({"solve", "ccip-nokc", "--audit"}, bounded).out).details.contains("audit"));
  const SolutionDocument t = AsSolution(Cli({"solve", "ptc-2apx", "--audit"}, tree).out);
  EXPECT_TRUE(t.details.contains("chosen_pairs"));
  EXPECT_TRUE(t.details.contains("all_pairs"));
}

TEST_F(CliTest, OutputIsDeterministic) {
  setenv("PRIOCOVER_SEED", "61", 1);
  const std::string a = Cli({"generate", "random-line"}).out;
  const std::string b = Cli({"generate", "random-line"}).out;
  unsetenv("PRIOCOVER_SEED");
  EXPECT_EQ(a, b);
  for (const std::string algo : {"plc-exact", "plc-pd"}) {
    EXPECT_EQ(Cli({"solve", algo}, a).out, Cli({"solve", algo}, a).out);
  }
  EXPECT_EQ(Cli({"lp", "solve"}, a).out, Cli({"lp", "solve"}, a).out);
}

}  // namespace
}  // namespace priocover
