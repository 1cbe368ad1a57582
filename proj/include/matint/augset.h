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

// Augmenting sets: a collection of w vertex-disjoint shortest augmenting
// paths described layer by layer, without fixing which element of one layer
// pairs with which element of the next.
//
// For a common independent set S whose shortest augmenting path has 2l+1
// elements, D_j is the set of elements at distance j (1 <= j <= 2l+1).
// An augmenting set is Pi = (B_1, A_1, B_2, ..., A_l, B_{l+1}) with
// B_k in D_{2k-1}, A_k in D_{2k}, all of size w, and
//   S + B_1 in I1,  S + B_{l+1} in I2,
//   S - A_k + B_{k+1} in I1,  S - A_k + B_k in I2   (1 <= k <= l).
// A partial augmenting set relaxes the sizes to be non-increasing along the
// sequence and the last condition to rank2(S - A_k + B_k) = |S|.

#ifndef MATINT_AUGSET_H_
#define MATINT_AUGSET_H_

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "matint/indep_solver.h"
#include "matint/stats.h"

namespace matint {

struct Layers {
  int ell = 0;
  // d[j] for 1 <= j <= 2 ell + 1 in ascending id order; d[0] and
  // d[2 ell + 2] are empty.
  std::vector<std::vector<ElementId>> d;

  // Layers below the sink of exact labels with an even sink distance.
  static Layers FromDistances(const DistanceLabels& labels);
};

// Indexed directly: a[k] for 1 <= k <= ell, b[k] for 1 <= k <= ell + 1.
// a[0], a[ell + 1] and b[0] are always empty.
struct AugmentingSet {
  int ell = 0;
  std::vector<GroundSubset> a;
  std::vector<GroundSubset> b;

  static AugmentingSet Empty(int ell, int n);
  int width() const { return b.size() > 1 ? b[1].size() : 0; }
  GroundSubset Elements() const;
};

enum class ElementType : uint8_t { kFresh, kSelected, kRemoved };

// Types of the elements in the layers of one phase. Selected elements form
// the partial augmenting set; an element only ever moves from fresh to
// selected to removed.
class RefineState {
 public:
  // Starts with every element fresh and runs Refine1(0), so B_1 is a
  // maximal set that can be added to S in the first matroid.
  RefineState(const MatroidOracle& m1, const MatroidOracle& m2,
              const GroundSubset& s, Layers layers);

  int ell() const { return layers_.ell; }
  const Layers& layers() const { return layers_; }
  const GroundSubset& s() const { return s_; }
  ElementType type(ElementId e) const { return type_[e]; }

  GroundSubset D(int j) const;
  GroundSubset F(int j) const;
  GroundSubset R(int j) const;
  GroundSubset A(int k) const;  // selected part of D_{2k}
  GroundSubset B(int k) const;  // selected part of D_{2k-1}

  // Each returns the number of type changes it made.
  int64_t Refine1(int k);  // 0 <= k <= ell
  int64_t Refine2(int k);  // 1 <= k <= ell + 1
  // Refine1(k), Refine2(k + 1) for k = 0..ell, then Refine1(0).
  int64_t Refine();

  int Gap() const { return B(1).size() - B(ell() + 1).size(); }
  int64_t initial_changes() const { return initial_changes_; }
  AugmentingSet Selected() const;

 private:
  GroundSubset Typed(int j, ElementType t) const;

  const MatroidOracle& m1_;
  const MatroidOracle& m2_;
  GroundSubset s_;
  Layers layers_;
  std::vector<ElementType> type_;
  int64_t initial_changes_ = 0;
};

// Grows a partial augmenting set phi into an augmenting set of width
// |B_{ell+1}| containing `inner`, which must be an augmenting set contained
// in phi (pass AugmentingSet::Empty for none). O(n) independence calls.
AugmentingSet PartialToFull(const MatroidOracle& m1, const MatroidOracle& m2,
                            const GroundSubset& s, const AugmentingSet& phi,
                            const AugmentingSet& inner);

// S + (B_1 + ... + B_{ell+1}) - (A_1 + ... + A_ell). Always checks the
// result in both matroids (two calls) and throws std::logic_error if it is
// not common independent.
GroundSubset ApplyAugmentingSet(const MatroidOracle& m1,
                                const MatroidOracle& m2, const GroundSubset& s,
                                const AugmentingSet& pi);

// Splits an augmenting set into w shortest augmenting paths that can be
// applied one after another. Throws std::logic_error if the set is invalid.
std::vector<std::vector<ElementId>> PeelPaths(const MatroidOracle& m1,
                                              const MatroidOracle& m2,
                                              const GroundSubset& s,
                                              const AugmentingSet& pi);

// Violated conditions, empty if pi is an augmenting set for the layers. The
// last check is that S with pi applied is common independent.
std::vector<std::string> CheckAugmentingSet(const MatroidOracle& m1,
                                            const MatroidOracle& m2,
                                            const GroundSubset& s,
                                            const Layers& layers,
                                            const AugmentingSet& pi);
std::vector<std::string> CheckPartialAugmentingSet(const MatroidOracle& m1,
                                                   const MatroidOracle& m2,
                                                   const GroundSubset& s,
                                                   const Layers& layers,
                                                   const AugmentingSet& phi);
// The four invariants kept by Refine. The subset condition is tested on
// `samples` random sets drawn from rng.
std::vector<std::string> CheckRefineInvariants(const MatroidOracle& m1,
                                               const MatroidOracle& m2,
                                               const RefineState& state,
                                               std::mt19937_64& rng,
                                               int samples);

// Every augmenting set for the layers, by exhaustive search over subsets
// of each layer. Meant for tests on layers with at most a few dozen
// elements in total.
std::vector<AugmentingSet> AllAugmentingSets(const MatroidOracle& m1,
                                             const MatroidOracle& m2,
                                             const GroundSubset& s,
                                             const Layers& layers);
// Layerwise containment.
bool ContainedIn(const AugmentingSet& inner, const AugmentingSet& outer);
// The members of `sets` not strictly contained in another member.
std::vector<AugmentingSet> MaximalAugmentingSets(
    const std::vector<AugmentingSet>& sets);

struct PhaseTrace {
  int ell = 0;
  int refine_iterations = 0;
  int64_t type_changes = 0;
  int gap = 0;
  int width_applied = 0;
  int paths_after = 0;
  int64_t independence_calls = 0;
  int64_t rank_calls = 0;
};

struct AugsetOptions {
  // Gap threshold for leaving the refine loop; 0 picks the default
  // ceil(sqrt(n eps / log2(rhat + 2))).
  int p = 0;
  // Refine until no type changes instead of stopping at the gap threshold.
  bool refine_to_fixpoint = false;
  // Largest sink distance that is still searched; 0 derives it from eps.
  int cutoff = 0;
  const SolveObserver* observer = nullptr;
  std::function<void(const GroundSubset& s, const Layers& layers,
                     const AugmentingSet& pi)>
      on_augmenting_set;
};

struct HybridPhaseResult {
  GroundSubset s;
  std::vector<int> next_lower_bounds;
  PhaseTrace trace;
  int64_t promotions = 0;
};

// One phase: refine a partial augmenting set until its gap is at most p,
// apply its completion, then augment along single shortest paths until the
// sink distance grows. `dist` must hold exact labels of G(S) up to the sink.
HybridPhaseResult HybridPhase(const MatroidOracle& m1, const MatroidOracle& m2,
                              const GroundSubset& s, const IndepDistances& dist,
                              int p, const AugsetOptions& options);

int DefaultHybridP(int n, double eps, int greedy_size);

struct AugsetResult {
  SolveResult result;
  int p = 0;
  std::vector<PhaseTrace> trace;
};

// Runs phases until the shortest augmenting path has at least 1/eps
// elements. Throws std::invalid_argument unless 0 < eps < 1.
AugsetResult SolveApproxAugset(const MatroidOracle& m1,
                               const MatroidOracle& m2, double eps,
                               const AugsetOptions& options = {});

}  // namespace matint

#endif  // MATINT_AUGSET_H_
