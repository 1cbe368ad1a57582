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

#include <cmath>
#include <random>

#include "matint/exchange.h"
#include "matint/families.h"
#include "matint/rank_solver.h"
#include "matint/reference.h"
#include "test_util.h"

namespace matint {
namespace {

using testing::RandomCommon;
using testing::RandomInstance;

TEST(GetDistancesRank, WorkedExamples) {
  auto g = testing::PathGadget();
  const int n = 6;
  const GroundSubset opt(n, {0, 2, 4});
  EXPECT_EQ(GetDistancesRank(*g.m1, *g.m2, opt).sink(), DistanceLabels::kInfinity);
  auto f1 = MakeMatroid(UniformParams{4, 4});
  auto f2 = MakeMatroid(UniformParams{4, 2});
  EXPECT_EQ(GetDistancesRank(*f1, *f2, GroundSubset(4)).sink(), 2);
  const auto d = GetDistancesRank(*g.m1, *g.m2, GroundSubset(n, {1, 4}));
  EXPECT_EQ(d.dist, (std::vector<int>{1, 2, 3, 3, 2, 1, 0, 4}));
}

TEST(GetDistancesRank, MatchesExplicitBfs) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    const auto& fam = testing::MainFamilies()[trial % 4];
    auto b = RandomInstance(fam, 12 + trial % 19, trial);
    const GroundSubset s = RandomCommon(*b.m1, *b.m2, rng);
    EXPECT_EQ(GetDistancesRank(*b.m1, *b.m2, s).dist,
              BuildExplicit(*b.m1, *b.m2, s).BfsDistances().dist)
        << fam << " S=" << s.ToString();
  }
}

TEST(BlockFlow, WorkedExamples) {
  auto g = testing::PathGadget();
  const GroundSubset opt(6, {0, 2, 4});
  EXPECT_EQ(BlockFlow(*g.m1, *g.m2, opt), opt);
  // Both length-4 paths share no vertex, but after 0-1-2 the second one is
  // no longer an augmenting path, so the phase ends at size 3.
  const GroundSubset next = BlockFlow(*g.m1, *g.m2, GroundSubset(6, {1, 4}));
  EXPECT_EQ(next.size(), 3);
  EXPECT_TRUE(g.m1->IsIndependent(next) && g.m2->IsIndependent(next));
  EXPECT_EQ(next.ToString(), "{0,2,4}");

  auto b = RandomInstance("bipartite-matching", 40, 3);
  const GroundSubset first = BlockFlow(*b.m1, *b.m2, GroundSubset(40));
  EXPECT_GE(first.size(), 1);
  const int dt = GetDistancesRank(*b.m1, *b.m2, first).sink();
  EXPECT_GT(dt, 2);
}

TEST(BlockFlow, SinkDistanceStrictlyIncreases) {
  for (int trial = 0; trial < 40; ++trial) {
    const auto& fam = testing::MainFamilies()[trial % 4];
    auto b = RandomInstance(fam, 40, 100 + trial);
    GroundSubset s(40);
    while (true) {
      const int before = GetDistancesRank(*b.m1, *b.m2, s).sink();
      const GroundSubset next = BlockFlow(*b.m1, *b.m2, s);
      if (next == s) {
        EXPECT_EQ(before, DistanceLabels::kInfinity);
        break;
      }
      EXPECT_GT(next.size(), s.size());
      EXPECT_GT(GetDistancesRank(*b.m1, *b.m2, next).sink(), before) << fam;
      s = next;
    }
  }
}

TEST(SolveExactRank, WorkedExamples) {
  auto z1 = MakeMatroid(UniformParams{5, 0});
  auto z2 = MakeMatroid(UniformParams{5, 0});
  EXPECT_TRUE(SolveExactRank(*z1, *z2).solution.empty());
  auto g = testing::PathGadget();
  const SolveResult r = SolveExactRank(*g.m1, *g.m2);
  EXPECT_EQ(r.solution.size(), 3);
  EXPECT_EQ(r.stats.independence_calls, 0);
  EXPECT_EQ(g.m1->counters().independence_calls, 0);
  EXPECT_GT(r.stats.rank_calls, 0);
}

TEST(SolveExactRank, MatchesBruteForce) {
  for (int trial = 0; trial < 40; ++trial) {
    const auto& fam = testing::MainFamilies()[trial % 4];
    auto b = RandomInstance(fam, 6 + trial % 9, 500 + trial);
    EXPECT_EQ(SolveExactRank(*b.m1, *b.m2).solution.size(),
              BruteForceMaxCommon(*b.m1, *b.m2).size())
        << fam;
  }
}

TEST(SolveExactRank, PhaseCountWithinSqrtBound) {
  for (int trial = 0; trial < 12; ++trial) {
    const auto& fam = testing::MainFamilies()[trial % 4];
    auto b = RandomInstance(fam, 150, trial);
    const SolveResult r = SolveExactRank(*b.m1, *b.m2);
    const double bound = 2 * std::sqrt(r.solution.size()) + 2;
    EXPECT_LE(r.phases, bound) << fam << " r=" << r.solution.size();
  }
}

TEST(SolveApproxRank, WorkedExamples) {
  auto g = testing::PathGadget();
  EXPECT_THROW(SolveApproxRank(*g.m1, *g.m2, 1.0), std::invalid_argument);
  EXPECT_THROW(SolveApproxRank(*g.m1, *g.m2, 0.0), std::invalid_argument);
  for (int trial = 0; trial < 20; ++trial) {
    auto b = RandomInstance(testing::MainFamilies()[trial % 4], 50, trial);
    const int r = SolveExactRank(*b.m1, *b.m2).solution.size();
    EXPECT_GE(2 * SolveApproxRank(*b.m1, *b.m2, 0.5).solution.size(), r);
  }
}

TEST(SolveApproxRank, TenPercentOnFiftyInstances) {
  for (int trial = 0; trial < 50; ++trial) {
    auto b = RandomInstance(testing::MainFamilies()[trial % 4], 60, 900 + trial);
    const int r = SolveExactRank(*b.m1, *b.m2).solution.size();
    const SolveResult a = SolveApproxRank(*b.m1, *b.m2, 0.1);
    EXPECT_GE(a.solution.size(), 0.9 * r);
    if (a.d_stop != kNoPath) {
      EXPECT_GE(a.d_stop * 0.1, 1.0 - 1e-12);
      EXPECT_LE(r - a.solution.size(), 2.0 * a.solution.size() / (a.d_stop - 1));
    } else {
      EXPECT_EQ(a.solution.size(), r);
    }
  }
}

TEST(Monotonicity, DistancesNeverDecreaseInsideBlockFlow) {
  for (int trial = 0; trial < 24; ++trial) {
    const auto& fam = testing::MainFamilies()[trial % 4];
    auto b = RandomInstance(fam, 20 + trial % 11, 40 + trial);
    int violations = 0;
    int augmentations = 0;
    SolveObserver obs;
    obs.on_augment = [&](const GroundSubset& before, const GroundSubset& after) {
      ++augmentations;
      const auto d0 = BuildExplicit(*b.m1, *b.m2, before).BfsDistances();
      const auto d1 = BuildExplicit(*b.m1, *b.m2, after).BfsDistances();
      for (int v = 0; v < d0.n() + 2; ++v) {
        if (d0[v] < d0.sink() && d1[v] < d0[v]) ++violations;
      }
    };
    SolveExactRank(*b.m1, *b.m2, &obs);
    EXPECT_GT(augmentations, 0);
    EXPECT_EQ(violations, 0) << fam;
  }
}

}  // namespace
}  // namespace matint
