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

#include "matint/greedy.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace matint {

GroundSubset GreedyLinearOpt(const MatroidOracle& m,
                             const std::vector<double>& weights, int cap) {
  const int n = m.ground_size();
  if (static_cast<int>(weights.size()) != n) {
    throw std::invalid_argument("weight vector has the wrong length");
  }
  std::vector<ElementId> order;
  for (ElementId e = 0; e < n; ++e) {
    if (weights[e] > 0) order.push_back(e);
  }
  std::stable_sort(order.begin(), order.end(), [&](ElementId a, ElementId b) {
    return weights[a] > weights[b];
  });
  GroundSubset s(n);
  for (ElementId e : order) {
    if (s.size() >= cap) break;
    GroundSubset t = s.With(e);
    if (m.IsIndependent(t)) s = std::move(t);
  }
  return s;
}

GroundSubset GreedyMaximalCommon(const MatroidOracle& m1,
                                 const MatroidOracle& m2) {
  const int n = m1.ground_size();
  GroundSubset s(n);
  for (ElementId e = 0; e < n; ++e) {
    GroundSubset t = s.With(e);
    if (m1.IsIndependent(t) && m2.IsIndependent(t)) s = std::move(t);
  }
  return s;
}

}  // namespace matint
