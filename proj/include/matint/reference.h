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

#ifndef MATINT_REFERENCE_H_
#define MATINT_REFERENCE_H_

#include "matint/stats.h"

namespace matint {

// Textbook solver: starting from the empty set, build the whole exchange
// graph, augment along one shortest path, repeat. Independence queries only.
SolveResult SolveReference(const MatroidOracle& m1, const MatroidOracle& m2,
                           const SolveObserver* observer = nullptr);

// Exhaustive search over all 2^n subsets (n <= 30). Returns the numerically
// smallest maximum common independent set, reading bit i as element i.
GroundSubset BruteForceMaxCommon(const MatroidOracle& m1,
                                 const MatroidOracle& m2);
// Same result, with the subsets split across OpenMP threads.
GroundSubset BruteForceMaxCommonParallel(const MatroidOracle& m1,
                                         const MatroidOracle& m2);

}  // namespace matint

#endif  // MATINT_REFERENCE_H_
