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

#include "matint/stats.h"

#include <utility>

namespace matint {

CallMeter::CallMeter(const MatroidOracle& m1, const MatroidOracle& m2)
    : m1_(m1), m2_(m2), t0_(std::chrono::steady_clock::now()) {
  start_ = Sum();
  last_ = start_;
}

OracleCounters CallMeter::Sum() const {
  const OracleCounters a = m1_.counters();
  const OracleCounters b = m2_.counters();
  return {a.independence_calls + b.independence_calls,
          a.rank_calls + b.rank_calls};
}

void CallMeter::Mark(std::string label) {
  const OracleCounters now = Sum();
  stats_.phases.push_back({std::move(label),
                           now.independence_calls - last_.independence_calls,
                           now.rank_calls - last_.rank_calls});
  last_ = now;
}

OracleStats CallMeter::Finish() {
  const OracleCounters now = Sum();
  if (now.independence_calls != last_.independence_calls ||
      now.rank_calls != last_.rank_calls) {
    Mark("finish");
  }
  stats_.independence_calls = now.independence_calls - start_.independence_calls;
  stats_.rank_calls = now.rank_calls - start_.rank_calls;
  stats_.wall_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - t0_)
                       .count();
  return stats_;
}

}  // namespace matint
