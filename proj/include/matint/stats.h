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

#ifndef MATINT_STATS_H_
#define MATINT_STATS_H_

#include <chrono>
#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "matint/oracle.h"

namespace matint {

struct PhaseCalls {
  std::string label;
  int64_t independence_calls = 0;
  int64_t rank_calls = 0;
};

// Oracle usage of one solver run, summed over both matroids. The per-phase
// entries add up to the totals.
struct OracleStats {
  std::vector<PhaseCalls> phases;
  int64_t independence_calls = 0;
  int64_t rank_calls = 0;
  double wall_ms = 0;
};

// Measures oracle calls of a run by differencing the counters of the two
// input oracles.
class CallMeter {
 public:
  CallMeter(const MatroidOracle& m1, const MatroidOracle& m2);

  // Closes the current phase and attributes all calls since the previous
  // mark to it.
  void Mark(std::string label);
  const std::vector<PhaseCalls>& phases() const { return stats_.phases; }
  OracleStats Finish();

 private:
  OracleCounters Sum() const;

  const MatroidOracle& m1_;
  const MatroidOracle& m2_;
  OracleCounters start_;
  OracleCounters last_;
  std::chrono::steady_clock::time_point t0_;
  OracleStats stats_;
};

// Hooks invoked by the solvers. Used by tests and the verify command; they
// may issue their own oracle queries, so checks should use separate oracle
// instances if exact counts matter.
struct SolveObserver {
  std::function<void(const GroundSubset& before, const GroundSubset& after)>
      on_augment;
};

inline constexpr int kNoPath = std::numeric_limits<int>::max();

struct SolveResult {
  GroundSubset solution;
  OracleStats stats;
  int phases = 0;
  // Number of elements on a shortest augmenting path when the solver stopped
  // (a lower bound when the search was cut off); kNoPath if none exists.
  int d_stop = kNoPath;
  int64_t promotions = 0;
};

}  // namespace matint

#endif  // MATINT_STATS_H_
