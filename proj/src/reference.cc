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

#include "matint/reference.h"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "matint/exchange.h"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace matint {
namespace {

constexpr int kBruteForceLimit = 30;

struct Best {
  int size = -1;
  uint64_t mask = 0;
};

// Scans masks in [lo, hi) and keeps the first mask of maximum size. Masks no
// larger than the current best are skipped without queries.
Best ScanRange(const MatroidOracle& m1, const MatroidOracle& m2, int n,
               uint64_t lo, uint64_t hi) {
  Best best;
  for (uint64_t mask = lo; mask < hi; ++mask) {
    const int c = std::popcount(mask);
    if (c <= best.size) continue;
    const GroundSubset s = GroundSubset::FromMask(n, mask);
    if (m1.IsIndependent(s) && m2.IsIndependent(s)) best = {c, mask};
  }
  return best;
}

void CheckSize(int n) {
  if (n > kBruteForceLimit) {
    throw std::invalid_argument("brute force limited to " +
                                std::to_string(kBruteForceLimit) +
                                " elements");
  }
}

}  // namespace

SolveResult SolveReference(const MatroidOracle& m1, const MatroidOracle& m2,
                           const SolveObserver* observer) {
  CallMeter meter(m1, m2);
  SolveResult result;
  GroundSubset s(m1.ground_size());
  while (true) {
    const ExplicitExchangeGraph g = BuildExplicit(m1, m2, s);
    const std::vector<int> path = g.ShortestPath();
    if (path.empty()) break;
    GroundSubset next = s;
    for (size_t i = 1; i + 1 < path.size(); ++i) {
      if (next.contains(path[i])) {
        next.erase(path[i]);
      } else {
        next.insert(path[i]);
      }
    }
    if (observer && observer->on_augment) observer->on_augment(s, next);
    s = std::move(next);
    ++result.phases;
    meter.Mark("augmentation " + std::to_string(result.phases));
  }
  result.solution = s;
  result.d_stop = kNoPath;
  result.stats = meter.Finish();
  return result;
}

GroundSubset BruteForceMaxCommon(const MatroidOracle& m1,
                                 const MatroidOracle& m2) {
  const int n = m1.ground_size();
  CheckSize(n);
  const Best best = ScanRange(m1, m2, n, 0, uint64_t{1} << n);
  return GroundSubset::FromMask(n, best.mask);
}

GroundSubset BruteForceMaxCommonParallel(const MatroidOracle& m1,
                                         const MatroidOracle& m2) {
  const int n = m1.ground_size();
  CheckSize(n);
  const uint64_t total = uint64_t{1} << n;
  const int64_t chunks = 64;
  std::vector<Best> part(chunks);
#pragma omp parallel for schedule(dynamic, 1)
  for (int64_t c = 0; c < chunks; ++c) {
    const uint64_t lo = total * c / chunks;
    const uint64_t hi = total * (c + 1) / chunks;
    part[c] = ScanRange(m1, m2, n, lo, hi);
  }
  Best best;
  for (const Best& b : part) {
    if (b.size > best.size) best = b;  // chunks are in mask order
  }
  return GroundSubset::FromMask(n, best.mask);
}

}  // namespace matint
