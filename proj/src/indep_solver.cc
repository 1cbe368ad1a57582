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

#include "matint/indep_solver.h"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <string>

#include "matint/greedy.h"

namespace matint {
namespace {

constexpr int kInf = DistanceLabels::kInfinity;

int FixParity(int x, bool in_s) {
  if (x >= DistanceLabels::kUnresolved) return x;
  x = std::max(x, in_s ? 2 : 1);
  const bool want_even = in_s;
  if ((x % 2 == 0) != want_even) ++x;
  return x;
}

}  // namespace

std::vector<int> BaseLowerBounds(const GroundSubset& s) {
  std::vector<int> lb(s.universe());
  for (ElementId e = 0; e < s.universe(); ++e) lb[e] = s.contains(e) ? 2 : 1;
  return lb;
}

std::vector<int> CarryLowerBounds(const IndepDistances& prev,
                                  const GroundSubset& before,
                                  const GroundSubset& after) {
  const int n = before.universe();
  std::vector<int> lb(n);
  const bool changed = !(before == after);
  const int dt = prev.labels.sink();
  if (changed && !DistanceLabels::Finite(dt)) {
    throw std::logic_error("augmentation without a path to the sink");
  }
  for (ElementId e = 0; e < n; ++e) {
    int x = prev.lower[e];
    if (changed) {
      // Vertices closer than the sink keep their distance (plus one if they
      // switched sides); every other vertex is at least as far as the sink.
      const int d = prev.labels[e];
      if (DistanceLabels::Finite(d) && d < dt) {
        x = d + (before.contains(e) != after.contains(e) ? 1 : 0);
      } else {
        x = dt;
      }
    }
    lb[e] = FixParity(x, after.contains(e));
  }
  return lb;
}

IndepDistances GetDistancesIndep(const MatroidOracle& m1,
                                 const MatroidOracle& m2,
                                 const GroundSubset& s,
                                 const std::vector<int>& lower_bounds,
                                 const IndepDistanceOptions& options) {
  const int n = s.universe();
  const int source = SourceVertex(n);
  const int sink = SinkVertex(n);
  IndepDistances out;
  out.labels.dist.assign(n + 2, kInf);
  out.lower.assign(n + 2, kInf);
  out.labels.dist[source] = 0;
  out.lower[source] = 0;

  // cand[l] holds the vertices whose current lower bound is l.
  std::vector<std::vector<ElementId>> cand(2 * n + 8);
  std::vector<int> at(n, kInf);
  auto push = [&](ElementId e, int l) {
    if (l >= static_cast<int>(cand.size())) cand.resize(l + 8);
    cand[l].push_back(e);
    at[e] = l;
  };
  for (ElementId e = 0; e < n; ++e) {
    const int lb = lower_bounds[e];
    if (lb >= DistanceLabels::kUnresolved) continue;
    if (lb < 1 || (lb % 2 == 0) != s.contains(e)) {
      throw std::invalid_argument("lower bound with the wrong parity");
    }
    push(e, lb);
  }

  bool sink_found = false;
  // How the search ended: unreachable leftovers or unresolved leftovers.
  bool leftovers_unresolved = false;
  std::vector<ElementId> prev_layer;  // D_{l-1}; empty stands for the source
  int l = 1;
  while (true) {
    if (l > options.cutoff) {
      leftovers_unresolved = true;
      break;
    }
    std::vector<ElementId> layer;
    std::vector<ElementId> pending;
    if (l < static_cast<int>(cand.size())) pending.swap(cand[l]);
    std::sort(pending.begin(), pending.end());
    if (l % 2 == 1) {
      const GroundSubset prev_set(n, prev_layer);
      for (ElementId b : pending) {
        const bool reached =
            (l == 1) ? m1.IsIndependent(s.With(b))
                     : FindExchange(m1, s, b, prev_set).has_value();
        if (reached) {
          out.labels.dist[b] = l;
          layer.push_back(b);
        } else {
          push(b, l + 2);
          ++out.promotions;
        }
      }
      if (layer.empty()) break;
      if (!sink_found) {
        for (ElementId b : layer) {
          if (m2.IsIndependent(s.With(b))) {
            out.labels.dist[sink] = l + 1;
            sink_found = true;
            break;
          }
        }
        if (sink_found && options.stop_at_sink) {
          leftovers_unresolved = true;
          l += 1;
          break;
        }
      }
    } else {
      GroundSubset q(n, pending);
      for (ElementId b : prev_layer) {
        while (!q.empty()) {
          auto a = FindExchange(m2, s, b, q);
          if (!a) break;
          out.labels.dist[*a] = l;
          layer.push_back(*a);
          q.erase(*a);
        }
      }
      q.ForEach([&](ElementId a) {
        push(a, l + 2);
        ++out.promotions;
      });
      if (layer.empty()) break;
    }
    prev_layer = std::move(layer);
    ++l;
  }

  for (ElementId e = 0; e < n; ++e) {
    if (DistanceLabels::Finite(out.labels.dist[e])) {
      out.lower[e] = out.labels.dist[e];
    } else if (leftovers_unresolved && at[e] != kInf) {
      out.labels.dist[e] = DistanceLabels::kUnresolved;
      out.lower[e] = at[e];
    }
  }
  if (sink_found) {
    out.lower[sink] = out.labels.dist[sink];
  } else if (leftovers_unresolved) {
    out.labels.dist[sink] = DistanceLabels::kUnresolved;
    out.lower[sink] = (l % 2 == 1) ? l + 1 : l + 2;
  }
  return out;
}

std::vector<ElementId> OnePath(const MatroidOracle& m1, const MatroidOracle& m2,
                               const GroundSubset& s, const DistanceLabels& d) {
  const int n = s.universe();
  const int dt = d.sink();
  if (!DistanceLabels::Finite(dt)) return {};
  std::vector<std::vector<ElementId>> layer(dt);
  for (ElementId e = 0; e < n; ++e) {
    if (d[e] >= 1 && d[e] < dt) layer[d[e]].push_back(e);
  }
  std::vector<ElementId> path(dt - 1);
  int next = SinkVertex(n);
  for (int l = dt - 1; l >= 1; --l) {
    bool found = false;
    for (ElementId b : layer[l]) {
      bool arc;
      if (next == SinkVertex(n)) {
        arc = m2.IsIndependent(s.With(b));
      } else if (s.contains(next)) {
        arc = m2.IsIndependent(s.Without(next).With(b));
      } else {
        arc = m1.IsIndependent(s.Without(b).With(next));
      }
      if (arc) {
        path[l - 1] = b;
        next = b;
        found = true;
        break;
      }
    }
    if (!found) {
      throw std::logic_error("no predecessor in layer " + std::to_string(l) +
                             "; distance labels are stale");
    }
  }
  return path;
}

SolveResult SolveExactIndep(const MatroidOracle& m1, const MatroidOracle& m2,
                            const SolveObserver* observer) {
  CallMeter meter(m1, m2);
  SolveResult result;
  GroundSubset s = GreedyMaximalCommon(m1, m2);
  meter.Mark("greedy");
  std::vector<int> lb = BaseLowerBounds(s);
  while (true) {
    IndepDistances dist = GetDistancesIndep(m1, m2, s, lb);
    result.promotions += dist.promotions;
    for (ElementId e = 0; e < s.universe(); ++e) {
      if (dist.lower[e] < lb[e]) {
        throw std::logic_error("distance label decreased for element " +
                               std::to_string(e));
      }
    }
    if (!DistanceLabels::Finite(dist.labels.sink())) break;
    const std::vector<ElementId> path = OnePath(m1, m2, s, dist.labels);
    GroundSubset next = s;
    for (ElementId e : path) {
      if (next.contains(e)) {
        next.erase(e);
      } else {
        next.insert(e);
      }
    }
    assert(m1.IsIndependent(next) && m2.IsIndependent(next));
    if (observer && observer->on_augment) observer->on_augment(s, next);
    lb = CarryLowerBounds(dist, s, next);
    s = std::move(next);
    ++result.phases;
    meter.Mark("augmentation " + std::to_string(result.phases));
  }
  result.solution = s;
  result.d_stop = kNoPath;
  result.stats = meter.Finish();
  return result;
}

}  // namespace matint
