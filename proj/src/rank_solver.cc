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

#include "matint/rank_solver.h"

#include <cassert>
#include <cmath>
#include <deque>
#include <stdexcept>
#include <string>

namespace matint {

DistanceLabels GetDistancesRank(const MatroidOracle& m1,
                                const MatroidOracle& m2,
                                const GroundSubset& s) {
  const int n = s.universe();
  DistanceLabels d;
  d.dist.assign(n + 2, DistanceLabels::kInfinity);
  GroundSubset pool = GroundSubset::Full(n);
  bool pool_has_sink = true;
  std::deque<int> queue;
  d.dist[SourceVertex(n)] = 0;
  queue.push_back(SourceVertex(n));
  while (!queue.empty()) {
    const int a = queue.front();
    queue.pop_front();
    while (auto v = OutArc(m1, m2, s, a, pool, pool_has_sink)) {
      d.dist[*v] = d.dist[a] + 1;
      if (*v == SinkVertex(n)) {
        pool_has_sink = false;
      } else {
        pool.erase(*v);
        queue.push_back(*v);
      }
    }
  }
  return d;
}

GroundSubset BlockFlow(const MatroidOracle& m1, const MatroidOracle& m2,
                       const GroundSubset& s, const SolveObserver* observer) {
  return BlockFlow(m1, m2, s, GetDistancesRank(m1, m2, s), observer);
}

GroundSubset BlockFlow(const MatroidOracle& m1, const MatroidOracle& m2,
                       const GroundSubset& s, const DistanceLabels& d,
                       const SolveObserver* observer) {
  const int n = s.universe();
  const int dt = d.sink();
  if (!DistanceLabels::Finite(dt)) return s;

  std::vector<GroundSubset> layer(dt, GroundSubset(n));
  for (ElementId e = 0; e < n; ++e) {
    if (d[e] >= 1 && d[e] < dt) layer[d[e]].insert(e);
  }
  const GroundSubset no_elements(n);
  GroundSubset cur = s;
  std::vector<int> path(dt + 1);
  path[0] = SourceVertex(n);
  int l = 0;
  while (l >= 0) {
    if (l < dt) {
      if (l > 0 && layer[l].empty()) return cur;
      const bool last = (l + 1 == dt);
      auto next = OutArc(m1, m2, cur, path[l], last ? no_elements : layer[l + 1],
                         last);
      if (!next) {
        // Dead end: nothing reachable from path[l] in the next layer now or
        // after later augmentations.
        if (l == 0) return cur;
        layer[l].erase(path[l]);
        --l;
      } else {
        path[++l] = *next;
      }
    } else {
      GroundSubset before = cur;
      for (int i = 1; i < dt; ++i) {
        if (cur.contains(path[i])) {
          cur.erase(path[i]);
        } else {
          cur.insert(path[i]);
        }
        layer[i].erase(path[i]);
      }
      assert(m1.IsIndependent(cur) && m2.IsIndependent(cur));
      if (observer && observer->on_augment) observer->on_augment(before, cur);
      l = 0;
    }
  }
  return cur;
}

namespace {

struct RankViews {
  RankViews(const MatroidOracle& m1, const MatroidOracle& m2)
      : r1(ViewOf(m1)), r2(ViewOf(m2)) {}
  RankBackedMatroid r1;
  RankBackedMatroid r2;
};

}  // namespace

SolveResult SolveExactRank(const MatroidOracle& m1, const MatroidOracle& m2,
                           const SolveObserver* observer) {
  RankViews v(m1, m2);
  CallMeter meter(m1, m2);
  SolveResult result;
  GroundSubset s(m1.ground_size());
  while (true) {
    const DistanceLabels d = GetDistancesRank(v.r1, v.r2, s);
    if (!DistanceLabels::Finite(d.sink())) break;
    s = BlockFlow(v.r1, v.r2, s, d, observer);
    ++result.phases;
    meter.Mark("phase " + std::to_string(result.phases));
  }
  result.solution = s;
  result.d_stop = kNoPath;
  result.stats = meter.Finish();
  return result;
}

SolveResult SolveApproxRank(const MatroidOracle& m1, const MatroidOracle& m2,
                            double eps, const SolveObserver* observer) {
  if (!(eps > 0 && eps < 1)) {
    throw std::invalid_argument("eps must lie in (0, 1)");
  }
  const int max_phases = static_cast<int>(std::ceil(2.0 / eps)) + 1;
  RankViews v(m1, m2);
  CallMeter meter(m1, m2);
  SolveResult result;
  GroundSubset s(m1.ground_size());
  while (true) {
    const DistanceLabels d = GetDistancesRank(v.r1, v.r2, s);
    if (!DistanceLabels::Finite(d.sink())) {
      result.d_stop = kNoPath;
      break;
    }
    const int elements = d.sink() - 1;
    if (elements * eps >= 1.0 - 1e-12 || result.phases == max_phases) {
      result.d_stop = elements;
      break;
    }
    s = BlockFlow(v.r1, v.r2, s, d, observer);
    ++result.phases;
    meter.Mark("phase " + std::to_string(result.phases));
  }
  result.solution = s;
  result.stats = meter.Finish();
  return result;
}

}  // namespace matint
