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

#ifndef MATINT_RANK_SOLVER_H_
#define MATINT_RANK_SOLVER_H_

#include "matint/exchange.h"
#include "matint/stats.h"

namespace matint {

// Exact BFS distances in G(S) from the source, for every vertex, using
// OutArc. O(n log n) queries.
DistanceLabels GetDistancesRank(const MatroidOracle& m1,
                                const MatroidOracle& m2,
                                const GroundSubset& s);

// Augments S along a maximal collection of vertex-disjoint shortest
// augmenting paths, found by depth-first search in the distance layers with
// dead-end deletion. Returns S unchanged if the sink is unreachable.
GroundSubset BlockFlow(const MatroidOracle& m1, const MatroidOracle& m2,
                       const GroundSubset& s,
                       const SolveObserver* observer = nullptr);
// As above with the distances of G(S) already computed.
GroundSubset BlockFlow(const MatroidOracle& m1, const MatroidOracle& m2,
                       const GroundSubset& s, const DistanceLabels& d,
                       const SolveObserver* observer = nullptr);

// Both solvers issue rank queries only: independence tests are answered
// with one rank query each. Both matroids must support rank.
SolveResult SolveExactRank(const MatroidOracle& m1, const MatroidOracle& m2,
                           const SolveObserver* observer = nullptr);

// Stops once the shortest augmenting path has at least 1/eps elements, or
// after ceil(2/eps) + 1 phases. Throws std::invalid_argument unless
// 0 < eps < 1.
SolveResult SolveApproxRank(const MatroidOracle& m1, const MatroidOracle& m2,
                            double eps,
                            const SolveObserver* observer = nullptr);

}  // namespace matint

#endif  // MATINT_RANK_SOLVER_H_
