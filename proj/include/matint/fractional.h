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

#ifndef MATINT_FRACTIONAL_H_
#define MATINT_FRACTIONAL_H_

#include <cstdint>
#include <utility>
#include <vector>

#include "matint/augset.h"
#include "matint/stats.h"

namespace matint {

// Weighted list of independent sets; the weights are nonnegative and sum
// to one.
using Certificate = std::vector<std::pair<GroundSubset, double>>;

struct FwTraceRow {
  int t = 0;
  double objective = 0;
  double sum_min = 0;
  double gap = 0;
};

struct FractionalPoint {
  std::vector<double> x;
  std::vector<double> y;
  Certificate cert_x;
  Certificate cert_y;
  int greedy_size = 0;
  int rbar = 0;
  int iterations = 0;
  double eta = 0;
  std::vector<FwTraceRow> trace;
  OracleStats stats;

  std::vector<double> z() const;  // componentwise min(x, y)
  double SumZ() const;
};

struct FwOptions {
  // 0 means the default ceil((32 / eps^2) (n / rbar)).
  int iterations = 0;
  bool record_trace = false;
  // Check after every step that the iterate lies in the truncated polytopes
  // (certificate sets independent, sizes at most rbar, weights valid).
  // Issues extra oracle calls.
  bool check_iterates = false;
};

// f(x, y) = -sum(x) + (eta / 2) |x - y|^2 and its gradient (df/dx, df/dy).
double FwObjective(const std::vector<double>& x, const std::vector<double>& y,
                   double eta);
std::pair<std::vector<double>, std::vector<double>> FwGradient(
    const std::vector<double>& x, const std::vector<double>& y, double eta);

// min(2 |greedy maximal common set|, n).
int EstimateRbar(const MatroidOracle& m1, const MatroidOracle& m2);

// Frank-Wolfe on {(x, y) : x in P(M1), y in P(M2), sum x <= rbar,
// sum y <= rbar} with step 2 / (t + 2), where the linear subproblems are
// solved by greedy on the truncated matroids. Throws std::invalid_argument
// unless 0 < eps < 1.
FractionalPoint FrankWolfeFractional(const MatroidOracle& m1,
                                     const MatroidOracle& m2, double eps,
                                     const FwOptions& options = {});

struct SparsifyPlan {
  double lambda = 0;
  double p = 0;
  std::vector<int64_t> copies;  // floor(x_i / lambda)
  std::vector<int64_t> counts;  // Binomial(copies_i, p) draws
  GroundSubset kept;            // {i : counts_i >= 1}
  uint64_t seed = 0;
};

// Keeps element i when a Binomial(floor(x_i / lambda), p) draw is positive,
// with lambda = eps rhat / (4 n^3) and
// p = min(1, p_factor lambda ln((n + 2) / eps) / eps^2).
SparsifyPlan Sparsify(const std::vector<double>& x, double eps, int rhat,
                      uint64_t seed, double p_factor = 36.0);

struct SparseResult {
  SolveResult result;
  FractionalPoint point;
  SparsifyPlan plan;
  int restricted_r = 0;
};

// Frank-Wolfe, sparsify min(x, y), solve the restricted instance with the
// augmenting-set solver and map the answer back.
SparseResult SolveApproxSparse(const MatroidOracle& m1, const MatroidOracle& m2,
                               double eps, uint64_t seed,
                               const AugsetOptions& augset_options = {},
                               double p_factor = 36.0);

}  // namespace matint

#endif  // MATINT_FRACTIONAL_H_
