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

#ifndef MATINT_INDEP_SOLVER_H_
#define MATINT_INDEP_SOLVER_H_

#include <cstdint>
#include <vector>

#include "matint/exchange.h"
#include "matint/stats.h"

namespace matint {

struct IndepDistanceOptions {
  // Distances above the cutoff are not settled; such vertices come back as
  // kUnresolved with a lower bound.
  int cutoff = DistanceLabels::kInfinity;
  // Stop as soon as the distance of the sink is known.
  bool stop_at_sink = true;
};

struct IndepDistances {
  DistanceLabels labels;
  // Size n + 2. Equal to the distance for settled vertices, kInfinity for
  // unreachable ones, and a proven lower bound otherwise.
  std::vector<int> lower;
  // Times a vertex failed its candidate layer and moved two layers up.
  int64_t promotions = 0;
};

// Starting bounds for a common independent set S: 1 outside S, 2 inside.
std::vector<int> BaseLowerBounds(const GroundSubset& s);

// Lower bounds for G(after) derived from the distances of G(before), where
// `after` is `before` augmented along shortest paths (or equal to it).
std::vector<int> CarryLowerBounds(const IndepDistances& prev,
                                  const GroundSubset& before,
                                  const GroundSubset& after);

// Layered BFS in G(S) with independence queries only. `lower_bounds` (size
// n) must be valid lower bounds on the distances with the parity of the
// element's side (odd outside S, even inside); kInfinity marks a vertex
// known to be unreachable.
IndepDistances GetDistancesIndep(const MatroidOracle& m1,
                                 const MatroidOracle& m2,
                                 const GroundSubset& s,
                                 const std::vector<int>& lower_bounds,
                                 const IndepDistanceOptions& options = {});

// Elements a_1, ..., a_{d-1} of a shortest augmenting path, found by walking
// back from the sink through the distance layers. Labels must be exact below
// the sink; throws std::logic_error otherwise.
std::vector<ElementId> OnePath(const MatroidOracle& m1, const MatroidOracle& m2,
                               const GroundSubset& s, const DistanceLabels& d);

SolveResult SolveExactIndep(const MatroidOracle& m1, const MatroidOracle& m2,
                            const SolveObserver* observer = nullptr);

}  // namespace matint

#endif  // MATINT_INDEP_SOLVER_H_
