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

#ifndef MATINT_EXCHANGE_H_
#define MATINT_EXCHANGE_H_

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "matint/oracle.h"

namespace matint {

// Vertices of the exchange graph G(S) are indexed 0..n+1: element e is
// vertex e, the source is vertex n and the sink is vertex n+1.
inline int SourceVertex(int n) { return n; }
inline int SinkVertex(int n) { return n + 1; }

struct DistanceLabels {
  // Proven unreachable from the source.
  static constexpr int kInfinity = std::numeric_limits<int>::max();
  // The search stopped before settling this vertex (cutoff or early stop at
  // the sink). The true distance is at least the reported lower bound.
  static constexpr int kUnresolved = std::numeric_limits<int>::max() - 1;

  std::vector<int> dist;  // size n + 2

  int n() const { return static_cast<int>(dist.size()) - 2; }
  int operator[](int v) const { return dist[v]; }
  int sink() const { return dist[dist.size() - 1]; }
  static bool Finite(int d) { return d < kUnresolved; }
};

// Some b in B with S + b independent, found by binary search with rank
// queries; nullopt if none. Requires S independent. Uses at most
// 1 + ceil(log2 |B|) rank calls.
std::optional<ElementId> FindFree(const MatroidOracle& m, const GroundSubset& s,
                                  const GroundSubset& b);

// Some a in A (a subset of S) with S - a + b independent, found by binary
// search with independence queries; nullopt if none. Requires S independent
// and b outside S. Uses at most 1 + ceil(log2 |A|) independence calls.
std::optional<ElementId> FindExchange(const MatroidOracle& m,
                                      const GroundSubset& s, ElementId b,
                                      const GroundSubset& a);

// A vertex v of the pool (elements in `pool`, plus the sink if
// `pool_has_sink`) such that (a, v) is an arc of G(S), or nullopt. The
// first matroid must support rank queries.
std::optional<int> OutArc(const MatroidOracle& m1, const MatroidOracle& m2,
                          const GroundSubset& s, int a,
                          const GroundSubset& pool, bool pool_has_sink);

// G(S) with every arc materialized; used as a reference in tests and by the
// textbook solver.
class ExplicitExchangeGraph {
 public:
  explicit ExplicitExchangeGraph(int n) : n_(n), out_(n + 2) {}

  int n() const { return n_; }
  const std::vector<int>& OutArcs(int v) const { return out_[v]; }
  bool HasArc(int u, int v) const;
  int64_t arc_count() const;

  DistanceLabels BfsDistances() const;
  // Vertex sequence source, e1, ..., ek, sink of a shortest path, preferring
  // lower ids; empty if the sink is unreachable.
  std::vector<int> ShortestPath() const;

  void AddArc(int u, int v) { out_[u].push_back(v); }
  void Finalize();
  bool operator==(const ExplicitExchangeGraph& other) const {
    return n_ == other.n_ && out_ == other.out_;
  }

 private:
  int n_;
  std::vector<std::vector<int>> out_;
};

ExplicitExchangeGraph BuildExplicit(const MatroidOracle& m1,
                                    const MatroidOracle& m2,
                                    const GroundSubset& s);
// Same result as BuildExplicit; the pair queries are spread over OpenMP
// threads.
ExplicitExchangeGraph BuildExplicitParallel(const MatroidOracle& m1,
                                            const MatroidOracle& m2,
                                            const GroundSubset& s);

}  // namespace matint

#endif  // MATINT_EXCHANGE_H_
