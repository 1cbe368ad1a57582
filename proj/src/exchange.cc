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

#include "matint/exchange.h"

#include <algorithm>
#include <deque>
#include <span>

namespace matint {
namespace {

GroundSubset UnionWith(const GroundSubset& s, std::span<const ElementId> xs) {
  GroundSubset out = s;
  for (ElementId x : xs) out.insert(x);
  return out;
}

GroundSubset MinusPlus(const GroundSubset& s, std::span<const ElementId> xs,
                       ElementId b) {
  GroundSubset out = s;
  for (ElementId x : xs) out.erase(x);
  out.insert(b);
  return out;
}

// Arcs of G(S) entering or leaving the element b outside S, in a fixed order.
std::vector<std::pair<int, int>> ArcsAt(const MatroidOracle& m1,
                                        const MatroidOracle& m2,
                                        const GroundSubset& s,
                                        const std::vector<ElementId>& in_s,
                                        ElementId b) {
  const int n = s.universe();
  std::vector<std::pair<int, int>> arcs;
  const GroundSubset sb = s.With(b);
  if (m1.IsIndependent(sb)) arcs.emplace_back(SourceVertex(n), b);
  if (m2.IsIndependent(sb)) arcs.emplace_back(b, SinkVertex(n));
  for (ElementId a : in_s) {
    const GroundSubset swap = sb.Without(a);
    if (m1.IsIndependent(swap)) arcs.emplace_back(a, b);
    if (m2.IsIndependent(swap)) arcs.emplace_back(b, a);
  }
  return arcs;
}

}  // namespace

std::optional<ElementId> FindFree(const MatroidOracle& m, const GroundSubset& s,
                                  const GroundSubset& b) {
  std::vector<ElementId> cand = (b - s).members();
  if (cand.empty()) return std::nullopt;
  const int base = s.size();
  std::span<const ElementId> range(cand);
  if (m.Rank(UnionWith(s, range)) <= base) return std::nullopt;
  while (range.size() > 1) {
    const size_t half = (range.size() + 1) / 2;
    auto first = range.subspan(0, half);
    if (m.Rank(UnionWith(s, first)) > base) {
      range = first;
    } else {
      range = range.subspan(half);
    }
  }
  return range.front();
}

std::optional<ElementId> FindExchange(const MatroidOracle& m,
                                      const GroundSubset& s, ElementId b,
                                      const GroundSubset& a) {
  std::vector<ElementId> cand = (a & s).members();
  if (cand.empty()) return std::nullopt;
  std::span<const ElementId> range(cand);
  if (!m.IsIndependent(MinusPlus(s, range, b))) return std::nullopt;
  // If S + b is dependent it has a unique circuit C, and S - X + b is
  // independent exactly when X meets C. So when the first half misses C the
  // second half must meet it.
  while (range.size() > 1) {
    const size_t half = (range.size() + 1) / 2;
    auto first = range.subspan(0, half);
    if (m.IsIndependent(MinusPlus(s, first, b))) {
      range = first;
    } else {
      range = range.subspan(half);
    }
  }
  return range.front();
}

std::optional<int> OutArc(const MatroidOracle& m1, const MatroidOracle& m2,
                          const GroundSubset& s, int a,
                          const GroundSubset& pool, bool pool_has_sink) {
  const int n = s.universe();
  if (a == SinkVertex(n)) return std::nullopt;
  if (a == SourceVertex(n)) return FindFree(m1, s, pool - s);
  if (s.contains(a)) return FindFree(m1, s.Without(a), pool - s);
  if (pool_has_sink && m2.IsIndependent(s.With(a))) return SinkVertex(n);
  return FindExchange(m2, s, a, pool & s);
}

bool ExplicitExchangeGraph::HasArc(int u, int v) const {
  return std::binary_search(out_[u].begin(), out_[u].end(), v);
}

int64_t ExplicitExchangeGraph::arc_count() const {
  int64_t c = 0;
  for (const auto& adj : out_) c += static_cast<int64_t>(adj.size());
  return c;
}

void ExplicitExchangeGraph::Finalize() {
  for (auto& adj : out_) std::sort(adj.begin(), adj.end());
}

DistanceLabels ExplicitExchangeGraph::BfsDistances() const {
  DistanceLabels d;
  d.dist.assign(n_ + 2, DistanceLabels::kInfinity);
  std::deque<int> queue;
  d.dist[SourceVertex(n_)] = 0;
  queue.push_back(SourceVertex(n_));
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int v : out_[u]) {
      if (d.dist[v] == DistanceLabels::kInfinity) {
        d.dist[v] = d.dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return d;
}

std::vector<int> ExplicitExchangeGraph::ShortestPath() const {
  std::vector<int> parent(n_ + 2, -1);
  std::vector<bool> seen(n_ + 2, false);
  std::deque<int> queue;
  const int s = SourceVertex(n_);
  const int t = SinkVertex(n_);
  seen[s] = true;
  queue.push_back(s);
  while (!queue.empty() && !seen[t]) {
    const int u = queue.front();
    queue.pop_front();
    for (int v : out_[u]) {
      if (!seen[v]) {
        seen[v] = true;
        parent[v] = u;
        queue.push_back(v);
      }
    }
  }
  if (!seen[t]) return {};
  std::vector<int> path;
  for (int v = t; v != -1; v = parent[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

ExplicitExchangeGraph BuildExplicit(const MatroidOracle& m1,
                                    const MatroidOracle& m2,
                                    const GroundSubset& s) {
  const int n = s.universe();
  ExplicitExchangeGraph g(n);
  const std::vector<ElementId> in_s = s.members();
  for (ElementId b = 0; b < n; ++b) {
    if (s.contains(b)) continue;
    for (const auto& [u, v] : ArcsAt(m1, m2, s, in_s, b)) g.AddArc(u, v);
  }
  g.Finalize();
  return g;
}

ExplicitExchangeGraph BuildExplicitParallel(const MatroidOracle& m1,
                                            const MatroidOracle& m2,
                                            const GroundSubset& s) {
  const int n = s.universe();
  const std::vector<ElementId> in_s = s.members();
  std::vector<std::vector<std::pair<int, int>>> per_element(n);
#pragma omp parallel for schedule(dynamic, 4)
  for (ElementId b = 0; b < n; ++b) {
    if (!s.contains(b)) per_element[b] = ArcsAt(m1, m2, s, in_s, b);
  }
  ExplicitExchangeGraph g(n);
  for (const auto& arcs : per_element) {
    for (const auto& [u, v] : arcs) g.AddArc(u, v);
  }
  g.Finalize();
  return g;
}

}  // namespace matint
