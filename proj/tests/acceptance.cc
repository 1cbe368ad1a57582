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

// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "matint/augset.h"
#include "matint/exchange.h"
#include "matint/fractional.h"
#include "matint/indep_solver.h"
#include "matint/instance.h"
#include "matint/rank_solver.h"
#include "matint/reference.h"
#include "test_util.h"

namespace matint {
namespace {

using testing::MainFamilies;
using testing::RandomCommon;
using testing::RandomInstance;
using testing::RandomSubset;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Records the first few failures and keeps counting.
class Failures {
 public:
  void Add(const std::string& what) {
    if (count_++ < 3) first_ += (first_.empty() ? "" : "; ") + what;
  }
  int count() const { return count_; }
  std::string Summary() const {
    return std::to_string(count_) + " violations" +
           (first_.empty() ? "" : " [" + first_ + "]");
  }

 private:
  int count_ = 0;
  std::string first_;
};

std::string Fmt(double v, int digits = 3) {
  std::ostringstream out;
  out.precision(digits);
  out << v;
  return out.str();
}

Outcome ExhaustiveCorrectness() {
  Failures bad;
  int instances = 0;
  for (int trial = 0; trial < 420; ++trial) {
    const auto& fam = MainFamilies()[trial % 4];
    const int n = 1 + trial % 14;
    auto b = RandomInstance(fam, n, 10000 + trial);
    const int r = BruteForceMaxCommonParallel(*b.m1, *b.m2).size();
    const int rr = SolveExactRank(*b.m1, *b.m2).solution.size();
    const int ri = SolveExactIndep(*b.m1, *b.m2).solution.size();
    if (rr != r || ri != r) {
      bad.Add(fam + " n=" + std::to_string(n) + " seed=" + std::to_string(10000 + trial));
    }
    ++instances;
  }
  return {bad.count() == 0, std::to_string(instances) + " instances, " + bad.Summary()};
}

Outcome CrossSolverConsistency() {
  Failures bad;
  int instances = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto& fam = MainFamilies()[trial % 4];
    const int n = 15 + (trial * 53) % 136;
    auto b = RandomInstance(fam, n, 20000 + trial);
    const int rr = SolveExactRank(*b.m1, *b.m2).solution.size();
    const int ri = SolveExactIndep(*b.m1, *b.m2).solution.size();
    const int rf = SolveReference(*b.m1, *b.m2).solution.size();
    if (rr != ri || ri != rf) bad.Add(fam + " n=" + std::to_string(n));
    ++instances;
  }
  return {bad.count() == 0, std::to_string(instances) + " instances, " + bad.Summary()};
}

Outcome ApproximationGuarantees() {
  Failures bad;
  int runs = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const auto& fam = MainFamilies()[trial % 4];
    const int n = 20 + (trial * 29) % 131;
    auto b = RandomInstance(fam, n, 30000 + trial);
    const int r = SolveExactIndep(*b.m1, *b.m2).solution.size();
    for (double eps : {0.5, 0.2, 0.1}) {
      for (int algo = 0; algo < 2; ++algo) {
        const SolveResult res = algo == 0
                                    ? SolveApproxRank(*b.m1, *b.m2, eps)
                                    : SolveApproxAugset(*b.m1, *b.m2, eps).result;
        const int got = res.solution.size();
        const std::string tag = std::string(algo == 0 ? "approx-rank" : "approx-augset") +
                                " " + fam + " n=" + std::to_string(n) +
                                " eps=" + Fmt(eps);
        ++runs;
        if (!b.m1->IsIndependent(res.solution) || !b.m2->IsIndependent(res.solution)) {
          bad.Add(tag + " not common independent");
          continue;
        }
        if (got < (1 - 2 * eps) * r) bad.Add(tag + " below (1-2eps)r");
        if (res.d_stop == kNoPath) {
          if (got != r) bad.Add(tag + " stopped without a path but not optimal");
          continue;
        }
        if (res.d_stop * eps < 1 - 1e-12) bad.Add(tag + " stopped before 1/eps");
        // r - |S| <= 2|S| / (d_stop - 1), multiplied out.
        if (static_cast<int64_t>(r - got) * (res.d_stop - 1) > 2 * got) {
          bad.Add(tag + " violates the path-length bound");
        }
      }
    }
  }
  return {bad.count() == 0, std::to_string(runs) + " runs, " + bad.Summary()};
}

Outcome FrankWolfeBound() {
  Failures bad;
  // Analytic gradient against central differences.
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(0, 1);
  double worst = 0;
  for (int point = 0; point < 5; ++point) {
    std::vector<double> x(9), y(9);
    for (int i = 0; i < 9; ++i) {
      x[i] = u(rng);
      y[i] = u(rng);
    }
    const double eta = 0.5 + 4 * u(rng);
    const auto [gx, gy] = FwGradient(x, y, eta);
    for (int i = 0; i < 9; ++i) {
      for (int side = 0; side < 2; ++side) {
        auto p = std::make_pair(x, y), m = std::make_pair(x, y);
        (side == 0 ? p.first : p.second)[i] += 1e-5;
        (side == 0 ? m.first : m.second)[i] -= 1e-5;
        const double fd = (FwObjective(p.first, p.second, eta) -
                           FwObjective(m.first, m.second, eta)) / 2e-5;
        const double g = side == 0 ? gx[i] : gy[i];
        const double rel = std::abs(fd - g) / std::max(1.0, std::abs(g));
        worst = std::max(worst, rel);
      }
    }
  }
  if (worst > 1e-6) bad.Add("gradient mismatch " + Fmt(worst));

  int instances = 0;
  double min_slack = 1e300;
  for (int trial = 0; trial < 20; ++trial) {
    const auto& fam = MainFamilies()[trial % 4];
    const int n = 20 + (trial * 17) % 81;
    auto b = RandomInstance(fam, n, 40000 + trial);
    const int r = SolveExactIndep(*b.m1, *b.m2).solution.size();
    const auto fp = FrankWolfeFractional(*b.m1, *b.m2, 0.3);
    const double bound = r - std::sqrt(32.0 * n * r / (fp.iterations + 2));
    min_slack = std::min(min_slack, fp.SumZ() - bound);
    if (fp.SumZ() < bound) {
      bad.Add(fam + " n=" + std::to_string(n) + " sum z=" + Fmt(fp.SumZ(), 6) +
              " < " + Fmt(bound, 6));
    }
    ++instances;
  }
  return {bad.count() == 0, std::to_string(instances) + " instances, gradient rel err " +
                                Fmt(worst) + ", min slack " + Fmt(min_slack) + ", " +
                                bad.Summary()};
}

Outcome Monotonicity() {
  Failures bad;
  int64_t augmentations = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const auto& fam = MainFamilies()[trial % 4];
    const int n = 10 + trial % 21;
    auto b = RandomInstance(fam, n, 50000 + trial);
    std::string solver;
    SolveObserver obs;
    obs.on_augment = [&](const GroundSubset& before, const GroundSubset& after) {
      ++augmentations;
      const auto d0 = BuildExplicit(*b.m1, *b.m2, before).BfsDistances();
      const auto d1 = BuildExplicit(*b.m1, *b.m2, after).BfsDistances();
      for (int v = 0; v < n + 2; ++v) {
        if (d0[v] < d0.sink() && d1[v] < d0[v]) {
          bad.Add(solver + " " + fam + " S=" + before.ToString() + " v=" +
                  std::to_string(v));
        }
      }
    };
    solver = "exact-rank";
    SolveExactRank(*b.m1, *b.m2, &obs);
    solver = "approx-rank";
    SolveApproxRank(*b.m1, *b.m2, 0.2, &obs);
    solver = "exact-indep";
    SolveExactIndep(*b.m1, *b.m2, &obs);
    solver = "reference";
    SolveReference(*b.m1, *b.m2, &obs);
    solver = "approx-augset";
    AugsetOptions opt;
    opt.observer = &obs;
    opt.p = 1 + trial % 3;
    SolveApproxAugset(*b.m1, *b.m2, 0.1, opt);
  }
  return {bad.count() == 0,
          std::to_string(augmentations) + " augmentations checked, " + bad.Summary()};
}

Outcome AugmentingSetValidity() {
  Failures bad;
  int applied = 0;
  for (int trial = 0; trial < 80; ++trial) {
    const auto& fam = MainFamilies()[trial % 4];
    const int n = 20 + (trial * 13) % 181;
    auto b = RandomInstance(fam, n, 60000 + trial);
    AugsetOptions opt;
    opt.p = trial % 3 == 0 ? 1 : 0;
    opt.on_augmenting_set = [&](const GroundSubset& s, const Layers& layers,
                                const AugmentingSet& pi) {
      ++applied;
      const auto v = CheckAugmentingSet(*b.m1, *b.m2, s, layers, pi);
      if (!v.empty()) bad.Add(fam + " n=" + std::to_string(n) + ": " + v.front());
    };
    for (double eps : {0.2, 0.05}) SolveApproxAugset(*b.m1, *b.m2, eps, opt);
  }
  return {bad.count() == 0 && applied > 0,
          std::to_string(applied) + " augmenting sets applied, " + bad.Summary()};
}

Outcome WidthRatio() {
  Failures bad;
  std::mt19937_64 rng(7);
  int cases = 0;
  int64_t pairs = 0;
  for (int trial = 0; cases < 150 && trial < 5000; ++trial) {
    const auto& fam = MainFamilies()[trial % 4];
    const int n = 6 + trial % 9;
    auto b = RandomInstance(fam, n, 70000 + trial);
    const GroundSubset s = RandomCommon(*b.m1, *b.m2, rng);
    const auto d = BuildExplicit(*b.m1, *b.m2, s).BfsDistances();
    if (!DistanceLabels::Finite(d.sink())) continue;
    const Layers layers = Layers::FromDistances(d);
    if (layers.ell > 2) continue;
    const auto maximal =
        MaximalAugmentingSets(AllAugmentingSets(*b.m1, *b.m2, s, layers));
    for (const auto& x : maximal) {
      for (const auto& y : maximal) {
        ++pairs;
        if (x.width() > (2 * layers.ell + 4) * y.width()) {
          bad.Add(fam + " S=" + s.ToString() + " widths " + std::to_string(x.width()) +
                  "/" + std::to_string(y.width()));
        }
      }
    }
    ++cases;
  }
  return {bad.count() == 0 && cases >= 150,
          std::to_string(cases) + " (S, layers) cases, " + std::to_string(pairs) +
              " pairs, " + bad.Summary()};
}

Outcome QueryScaling() {
  const std::vector<int> sizes = {250, 500, 1000, 2000};
  std::vector<double> indep, rank, rs;
  for (int n : sizes) {
    auto b = Build(Generate({"bipartite-matching", n, 1, {}}));
    const SolveResult ri = SolveExactIndep(*b.m1, *b.m2);
    const SolveResult rr = SolveExactRank(*b.m1, *b.m2);
    indep.push_back(static_cast<double>(ri.stats.independence_calls));
    rank.push_back(static_cast<double>(rr.stats.rank_calls));
    rs.push_back(ri.solution.size());
  }
  auto indep_model = [&](size_t i) {
    return sizes[i] * rs[i] * std::log2(rs[i]);
  };
  auto rank_model = [&](size_t i) {
    return sizes[i] * std::sqrt(rs[i]) * std::log2(static_cast<double>(sizes[i]));
  };
  const double c = indep[0] / indep_model(0);
  const double c2 = rank[0] / rank_model(0);
  const size_t last = sizes.size() - 1;
  const double fit_i = indep[last] / (c * indep_model(last));
  const double fit_r = rank[last] / (c2 * rank_model(last));
  bool ok = fit_i <= 1.25 && fit_r <= 1.25;
  std::string ratios;
  for (size_t i = 0; i + 1 < sizes.size(); ++i) {
    const double gi = indep[i + 1] / indep[i];
    const double gr = rank[i + 1] / rank[i];
    ok = ok && gr < gi;
    ratios += " " + std::to_string(sizes[i + 1]) + ":rank x" + Fmt(gr) + " indep x" + Fmt(gi);
  }
  std::string rlist;
  for (double r : rs) rlist += (rlist.empty() ? "" : ",") + std::to_string(static_cast<int>(r));
  return {ok, "r=" + rlist + "; largest/fit indep " + Fmt(fit_i) + ", rank " + Fmt(fit_r) +
                  ";" + ratios};
}

Outcome Sparsification() {
  const int n = 400;
  const double eps = 0.2;
  int good = 0;
  double worst_ratio = 0;
  int max_kept = 0;
  double r_sum = 0;
  Failures bad;
  const int seeds = 50;
  for (int seed = 0; seed < seeds; ++seed) {
    auto b = Build(Generate({"bipartite-matching", n, static_cast<uint64_t>(80000 + seed),
                             {{"left", 60}, {"right", 100}}}));
    const int r = SolveExactIndep(*b.m1, *b.m2).solution.size();
    r_sum += r;
    const SparseResult res = SolveApproxSparse(*b.m1, *b.m2, eps, seed);
    const int kept = res.plan.kept.size();
    max_kept = std::max(max_kept, kept);
    const double limit = 40.0 * r / (eps * eps) * std::log(n);
    worst_ratio = std::max(worst_ratio, kept / limit);
    if (kept > limit) bad.Add("seed " + std::to_string(seed) + " kept " + std::to_string(kept));
    if (!b.m1->IsIndependent(res.result.solution) ||
        !b.m2->IsIndependent(res.result.solution)) {
      bad.Add("seed " + std::to_string(seed) + " dependent result");
    } else if (res.result.solution.size() >= (1 - 5 * eps) * r) {
      ++good;
    }
  }
  const bool ok = bad.count() == 0 && good * 10 >= seeds * 9;
  return {ok, "mean r=" + Fmt(r_sum / seeds) + ", max kept " + std::to_string(max_kept) +
                  " (" + Fmt(worst_ratio) + " of the size bound), " + std::to_string(good) +
                  "/" + std::to_string(seeds) + " seeds reach (1-5eps)r, " + bad.Summary()};
}

Outcome ExplorerEquivalence() {
  Failures bad;
  std::mt19937_64 rng(10);
  int pairs = 0;
  int64_t arc_queries = 0;
  for (int trial = 0; pairs < 100; ++trial) {
    const auto& fam = MainFamilies()[trial % 4];
    const int n = 5 + trial % 26;
    auto b = RandomInstance(fam, n, 90000 + trial);
    const GroundSubset s = RandomCommon(*b.m1, *b.m2, rng);
    const auto g = BuildExplicit(*b.m1, *b.m2, s);
    const auto truth = g.BfsDistances();
    const std::string tag = fam + " n=" + std::to_string(n) + " S=" + s.ToString();
    if (GetDistancesRank(*b.m1, *b.m2, s).dist != truth.dist) bad.Add(tag + " rank BFS");
    IndepDistanceOptions full;
    full.stop_at_sink = false;
    if (GetDistancesIndep(*b.m1, *b.m2, s, BaseLowerBounds(s), full).labels.dist !=
        truth.dist) {
      bad.Add(tag + " indep BFS");
    }
    for (int a = 0; a <= n; ++a) {
      for (int rep = 0; rep < 3; ++rep) {
        GroundSubset pool = RandomSubset(n, rng);
        if (a < n) pool.erase(a);
        const bool sink = rng() & 1;
        bool any = false;
        for (int w : g.OutArcs(a)) {
          any = any || (w < n && pool.contains(w)) || (w == SinkVertex(n) && sink);
        }
        const auto v = OutArc(*b.m1, *b.m2, s, a, pool, sink);
        ++arc_queries;
        if (v.has_value() != any || (v && !g.HasArc(a, *v))) {
          bad.Add(tag + " out_arc from " + std::to_string(a));
        }
      }
    }
    ++pairs;
  }
  return {bad.count() == 0, std::to_string(pairs) + " (instance, S) pairs, " +
                                std::to_string(arc_queries) + " out_arc queries, " +
                                bad.Summary()};
}

}  // namespace
}  // namespace matint

int main() {
  using Check = std::function<matint::Outcome()>;
  const std::vector<std::pair<std::string, Check>> criteria = {
      {"exhaustive correctness (n <= 14 vs brute force)", matint::ExhaustiveCorrectness},
      {"cross-solver consistency (n <= 150)", matint::CrossSolverConsistency},
      {"approximation guarantees (eps 0.5, 0.2, 0.1)", matint::ApproximationGuarantees},
      {"Frank-Wolfe bound and gradient", matint::FrankWolfeBound},
      {"distance monotonicity across augmentations", matint::Monotonicity},
      {"augmenting-set validity", matint::AugmentingSetValidity},
      {"width ratio of maximal augmenting sets", matint::WidthRatio},
      {"query scaling on bipartite matching", matint::QueryScaling},
      {"sparsification size and quality", matint::Sparsification},
      {"explorer equivalence with explicit BFS", matint::ExplorerEquivalence},
  };
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    matint::Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failed += !o.pass;
    std::printf("%s criterion %zu: %s -- %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
