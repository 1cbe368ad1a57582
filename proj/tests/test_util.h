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

#ifndef MATINT_TESTS_TEST_UTIL_H_
#define MATINT_TESTS_TEST_UTIL_H_

#include <algorithm>
#include <atomic>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "matint/families.h"
#include "matint/ground_subset.h"
#include "matint/instance.h"
#include "matint/oracle.h"

namespace matint::testing {

// The 6-edge path e0 - e1 - ... - e5 as two partition matroids (left and
// right endpoints). The optimum is 3 and S = {1, 4} is a maximal matching
// of size 2 with two disjoint augmenting paths 0-1-2 and 5-4-3.
inline BuiltInstance PathGadget() {
  return Build(Generate({"bipartite-path", 6, 0, {}}));
}

// Two disjoint copies of the gadget on 12 elements; S = {1, 4, 7, 10}.
inline BuiltInstance DoubledPathGadget() {
  PartitionParams left;
  PartitionParams right;
  for (int copy = 0; copy < 2; ++copy) {
    const int o = 6 * copy;
    left.blocks.push_back({o + 0});
    left.blocks.push_back({o + 1, o + 2});
    left.blocks.push_back({o + 3, o + 4});
    left.blocks.push_back({o + 5});
    right.blocks.push_back({o + 0, o + 1});
    right.blocks.push_back({o + 2, o + 3});
    right.blocks.push_back({o + 4, o + 5});
  }
  left.caps.assign(left.blocks.size(), 1);
  right.caps.assign(right.blocks.size(), 1);
  BuiltInstance b;
  b.m1 = MakeMatroid(left);
  b.m2 = MakeMatroid(right);
  return b;
}

inline const std::vector<std::string>& MainFamilies() {
  static const std::vector<std::string> f = {
      "bipartite-matching", "graphic-partition", "linear-linear",
      "uniform-partition"};
  return f;
}

inline BuiltInstance RandomInstance(const std::string& family, int n,
                                    uint64_t seed) {
  return Build(Generate({family, n, seed, {}}));
}

inline GroundSubset RandomSubset(int n, std::mt19937_64& rng) {
  GroundSubset s(n);
  for (int e = 0; e < n; ++e) {
    if (rng() & 1) s.insert(e);
  }
  return s;
}

// Random common independent set: a random-order greedy that stops early.
inline GroundSubset RandomCommon(const MatroidOracle& m1,
                                 const MatroidOracle& m2,
                                 std::mt19937_64& rng) {
  const int n = m1.ground_size();
  std::vector<ElementId> ids(n);
  for (int i = 0; i < n; ++i) ids[i] = i;
  std::shuffle(ids.begin(), ids.end(), rng);
  const int stop = n == 0 ? 0 : static_cast<int>(rng() % (n + 1));
  GroundSubset s(n);
  for (int i = 0; i < stop; ++i) {
    GroundSubset t = s.With(ids[i]);
    if (m1.IsIndependent(t) && m2.IsIndependent(t)) s = t;
  }
  return s;
}

// Forwards to another oracle and keeps its own tally of forwarded calls,
// independent of the counters in the base class.
class TallyOracle : public MatroidOracle {
 public:
  explicit TallyOracle(std::shared_ptr<const MatroidOracle> inner)
      : MatroidOracle(inner->ground_size(), inner->supports_rank()),
        inner_(std::move(inner)) {}
  std::unique_ptr<MatroidOracle> Clone() const override {
    return std::make_unique<TallyOracle>(
        std::shared_ptr<const MatroidOracle>(inner_->Clone()));
  }
  std::string Describe() const override { return "tally"; }

  int64_t indep_seen() const { return indep_; }
  int64_t rank_seen() const { return rank_; }

 protected:
  bool IsIndependentImpl(const GroundSubset& s) const override {
    ++indep_;
    return inner_->IsIndependent(s);
  }
  int RankImpl(const GroundSubset& s) const override {
    ++rank_;
    return inner_->Rank(s);
  }

 private:
  std::shared_ptr<const MatroidOracle> inner_;
  mutable std::atomic<int64_t> indep_{0};
  mutable std::atomic<int64_t> rank_{0};
};

}  // namespace matint::testing

#endif  // MATINT_TESTS_TEST_UTIL_H_
