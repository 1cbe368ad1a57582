// Copyright 2026 The Authors.
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

#include <cstdlib>
#include <sstream>

#include "matint/oracle.h"
#include "matint/runner.h"
#include "test_util.h"

namespace matint {
namespace {

std::vector<std::string> Lines(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string line;
  while (std::getline(in, line)) out.push_back(line);
  return out;
}

// CSV text with the wall_ms column blanked out.
std::string WithoutTimes(const std::string& csv) {
  std::string out;
  const int col = 11;
  for (const auto& line : Lines(csv)) {
    std::stringstream in(line);
    std::string cell;
    int i = 0;
    while (std::getline(in, cell, ',')) {
      out += (i == col ? std::string("-") : cell) + ",";
      ++i;
    }
    out += "\n";
  }
  return out;
}

TEST(SolveWith, PathGadgetAllAlgorithms) {
  auto g = testing::PathGadget();
  SolveConfig cfg;
  cfg.eps = 0.5;
  for (const auto& algo : AlgorithmNames()) {
    const RunRecord r = SolveWith(*g.m1, *g.m2, algo, cfg);
    EXPECT_TRUE(g.m1->IsIndependent(r.solution) && g.m2->IsIndependent(r.solution));
    if (algo == "exact-indep" || algo == "exact-rank" || algo == "reference") {
      EXPECT_EQ(r.r_found, 3) << algo;
    } else {
      EXPECT_GE(r.r_found, 2) << algo;
    }
  }
  EXPECT_THROW(SolveWith(*g.m1, *g.m2, "simplex", cfg), std::invalid_argument);
}

TEST(SolveWith, CapabilityMismatch) {
  Instance inst = Generate({"bipartite-matching", 20, 1, {}});
  inst.oracle = "independence";
  EXPECT_THROW(SolveInstance(inst, "exact-rank", {}), CapabilityError);
  EXPECT_THROW(SolveInstance(inst, "approx-rank", {}), CapabilityError);
  EXPECT_NO_THROW(SolveInstance(inst, "exact-indep", {}));
}

TEST(SolveWith, ExactRankAgreesWithReferenceOnHundredSeeds) {
  for (uint64_t seed = 0; seed < 100; ++seed) {
    const Instance inst =
        Generate({testing::MainFamilies()[seed % 4], 10 + static_cast<int>(seed % 30), seed, {}});
    EXPECT_EQ(SolveInstance(inst, "exact-rank", {}).r_found,
              SolveInstance(inst, "reference", {}).r_found);
  }
}

TEST(RecordToJson, FieldsAndOptionalSolution) {
  auto g = testing::PathGadget();
  const RunRecord r = SolveWith(*g.m1, *g.m2, "exact-indep", {});
  const std::string j = RecordToJson(r, true);
  for (const char* key : {"\"algorithm\"", "\"n\"", "\"r_found\"", "\"phases\"",
                          "\"independence_calls\"", "\"rank_calls\"", "\"wall_ms\"",
                          "\"solution\""}) {
    EXPECT_NE(j.find(key), std::string::npos) << key;
  }
  EXPECT_EQ(RecordToJson(r, false).find("solution"), std::string::npos);
}

TEST(Bench, EmptyGridIsHeaderOnly) {
  BenchGrid grid;
  const BenchOutput out = RunBench(grid);
  EXPECT_EQ(out.csv,
            "family,n,seed,algorithm,eps,r_exact,r_found,phases,"
            "independence_calls,rank_calls,d_stop,wall_ms,status\n");
  EXPECT_EQ(out.cells, 0);
}

TEST(Bench, ReplayIsIdenticalExceptTimes) {
  BenchGrid grid;
  grid.families = {"bipartite-matching", "uniform-partition"};
  grid.sizes = {12, 30};
  grid.eps = {0.5, 0.2};
  grid.algorithms = AlgorithmNames();
  grid.seeds = {1, 2};
  const BenchOutput a = RunBench(grid);
  grid.threads = 1;
  const BenchOutput b = RunBench(grid);
  EXPECT_EQ(WithoutTimes(a.csv), WithoutTimes(b.csv));
  EXPECT_EQ(a.failed_cells, 0) << a.csv;
  // 2 families x 2 sizes x 2 seeds x (4 exact-style + 3 approx x 2 eps)
  EXPECT_EQ(a.cells, 8 * 10);
  EXPECT_EQ(static_cast<int>(Lines(a.csv).size()), 1 + a.cells);
  for (const auto& line : Lines(a.csv)) {
    if (line.rfind("family", 0) == 0) continue;
    EXPECT_NE(line.find(",ok"), std::string::npos) << line;
  }
  EXPECT_EQ(Lines(a.plot).front(), "x,y,series,family,seed");
}

TEST(Bench, FailuresAreFlaggedAndTheRunContinues) {
  BenchGrid grid;
  grid.families = {"no-such-family", "bipartite-matching"};
  grid.sizes = {10};
  grid.eps = {0.5};
  grid.algorithms = {"exact-indep"};
  grid.seeds = {1};
  const BenchOutput out = RunBench(grid);
  EXPECT_EQ(out.cells, 2);
  EXPECT_EQ(out.failed_cells, 1);
  EXPECT_NE(out.csv.find("failed: unknown family"), std::string::npos);
}

TEST(Bench, ExactIndepCallsGrowWithN) {
  BenchGrid grid;
  grid.families = {"bipartite-matching"};
  grid.sizes = {200, 400, 800};
  grid.algorithms = {"exact-indep"};
  grid.seeds = {3};
  const auto lines = Lines(RunBench(grid).csv);
  ASSERT_EQ(lines.size(), 4u);
  std::vector<long> calls;
  for (size_t i = 1; i < lines.size(); ++i) {
    std::stringstream in(lines[i]);
    std::string cell;
    for (int c = 0; c <= 8; ++c) std::getline(in, cell, ',');
    calls.push_back(std::stol(cell));
  }
  EXPECT_LT(calls[0], calls[1]);
  EXPECT_LT(calls[1], calls[2]);
}

TEST(BenchConfig, JsonAndEnvironmentOverrides) {
  BenchGrid g = GridFromJson(R"({"sizes": [5, 6], "eps": [0.25]})", DefaultGrid());
  EXPECT_EQ(g.sizes, (std::vector<int>{5, 6}));
  EXPECT_EQ(g.eps, (std::vector<double>{0.25}));
  EXPECT_EQ(g.families, DefaultGrid().families);
  EXPECT_THROW(GridFromJson("[1]", g), std::invalid_argument);
  EXPECT_THROW(GridFromJson(R"({"sizes": "x"})", g), std::invalid_argument);
  setenv("MATINT_SIZES", "7,8,9", 1);
  setenv("MATINT_ALGORITHMS", "greedy", 1);
  g = ApplyEnvOverrides(g);
  unsetenv("MATINT_SIZES");
  unsetenv("MATINT_ALGORITHMS");
  EXPECT_EQ(g.sizes, (std::vector<int>{7, 8, 9}));
  EXPECT_EQ(g.algorithms, (std::vector<std::string>{"greedy"}));
}

TEST(Verify, PathGadgetPassesEverything) {
  auto g = testing::PathGadget();
  for (const auto& r : Verify(*g.m1, *g.m2, {})) {
    EXPECT_TRUE(r.pass) << r.name << ": " << r.counterexample;
  }
}

TEST(Verify, CorruptedOracleFailsHereditaryWithWitness) {
  auto g = testing::PathGadget();
  SingletonDependentMatroid bad(ViewOf(*g.m1));
  bool found = false;
  for (const auto& r : Verify(bad, *g.m2, {})) {
    if (r.name == "M1 hereditary") {
      found = true;
      EXPECT_FALSE(r.pass);
      EXPECT_NE(r.counterexample.find("after removing"), std::string::npos);
    }
  }
  EXPECT_TRUE(found);
}

TEST(Verify, RandomTwelveElementInstances) {
  for (const auto& fam : testing::MainFamilies()) {
    auto b = testing::RandomInstance(fam, 12, 5);
    for (const auto& r : Verify(*b.m1, *b.m2, {})) {
      EXPECT_TRUE(r.pass) << fam << " " << r.name << ": " << r.counterexample;
      if (r.name == "exact solvers agree") {
        EXPECT_NE(r.detail.find("brute-force="), std::string::npos);
      }
    }
  }
}

}  // namespace
}  // namespace matint
