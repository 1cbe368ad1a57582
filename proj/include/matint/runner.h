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

#ifndef MATINT_RUNNER_H_
#define MATINT_RUNNER_H_

#include <cstdint>
#include <string>
#include <vector>

#include "matint/instance.h"
#include "matint/stats.h"

namespace matint {

// exact-rank, approx-rank, exact-indep, approx-augset, approx-sparse,
// greedy, reference.
const std::vector<std::string>& AlgorithmNames();
bool IsApproximate(const std::string& algorithm);

struct SolveConfig {
  double eps = 0.1;
  uint64_t seed = 1;
  int p_override = 0;
  int cutoff = 0;
};

struct RunRecord {
  std::string algorithm;
  int n = 0;
  int r_found = 0;
  int phases = 0;
  int64_t independence_calls = 0;
  int64_t rank_calls = 0;
  double wall_ms = 0;
  int d_stop = kNoPath;
  double eps = 0;
  GroundSubset solution;
};

// Throws std::invalid_argument for an unknown algorithm and CapabilityError
// when a rank algorithm meets independence-only oracles.
RunRecord SolveWith(const MatroidOracle& m1, const MatroidOracle& m2,
                    const std::string& algorithm, const SolveConfig& config);
RunRecord SolveInstance(const Instance& inst, const std::string& algorithm,
                        const SolveConfig& config);
std::string RecordToJson(const RunRecord& record, bool with_solution);

struct BenchGrid {
  std::vector<std::string> families;
  std::vector<int> sizes;
  std::vector<double> eps;
  std::vector<std::string> algorithms;
  std::vector<uint64_t> seeds;
  int brute_force_cap = 14;
  int threads = 0;  // 0 lets OpenMP decide
};

BenchGrid DefaultGrid();
// Reads a JSON object with any of the BenchGrid fields (same names).
BenchGrid GridFromJson(const std::string& text, BenchGrid base);
// MATINT_FAMILIES, MATINT_SIZES, MATINT_EPS, MATINT_ALGORITHMS,
// MATINT_SEEDS (comma separated), MATINT_BRUTE_FORCE_CAP, MATINT_THREADS.
BenchGrid ApplyEnvOverrides(BenchGrid grid);

struct BenchOutput {
  std::string csv;
  std::string plot;
  int cells = 0;
  int failed_cells = 0;
};

// Column order of the bench CSV.
const std::vector<std::string>& BenchColumns();

// One instance per (family, size, seed); every algorithm runs on it, the
// approximate ones once per eps. Failed cells are flagged in the status
// column and the run continues. Rows come out in grid order regardless of
// threading; only wall_ms varies between runs.
BenchOutput RunBench(const BenchGrid& grid);

struct PropertyResult {
  std::string name;
  bool pass = true;
  std::string detail;
  std::string counterexample;
};

struct VerifyConfig {
  uint64_t seed = 1;
  int brute_force_cap = 14;
  int samples = 200;
};

std::vector<PropertyResult> Verify(const MatroidOracle& m1,
                                   const MatroidOracle& m2,
                                   const VerifyConfig& config);

// Test double that breaks the hereditary axiom: every single-element set is
// reported dependent while larger sets defer to the wrapped oracle.
class SingletonDependentMatroid : public MatroidOracle {
 public:
  explicit SingletonDependentMatroid(std::shared_ptr<const MatroidOracle> inner);
  std::unique_ptr<MatroidOracle> Clone() const override;
  std::string Describe() const override;

 protected:
  bool IsIndependentImpl(const GroundSubset& s) const override;
  int RankImpl(const GroundSubset& s) const override;

 private:
  std::shared_ptr<const MatroidOracle> inner_;
};

}  // namespace matint

#endif  // MATINT_RUNNER_H_
