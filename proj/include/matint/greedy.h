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

#ifndef MATINT_GREEDY_H_
#define MATINT_GREEDY_H_

#include <limits>
#include <vector>

#include "matint/oracle.h"

namespace matint {

// Maximum-weight independent set of size at most cap. Elements are scanned by
// decreasing weight (ties by lower id); non-positive weights are skipped.
GroundSubset GreedyLinearOpt(const MatroidOracle& m,
                             const std::vector<double>& weights,
                             int cap = std::numeric_limits<int>::max());

// A maximal common independent set built by scanning ids in ascending order.
// Its size is at least half the maximum.
GroundSubset GreedyMaximalCommon(const MatroidOracle& m1,
                                 const MatroidOracle& m2);

}  // namespace matint

#endif  // MATINT_GREEDY_H_
