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

#include "matint/augset.h"

#include <algorithm>
#include <cmath>
#include <optional>
#include <numeric>
#include <stdexcept>

#include "matint/greedy.h"

namespace matint {
namespace {

std::string K(int k) { return std::to_string(k); }

// Adds elements of `from` to base greedily (ascending ids) while base stays
// independent in m. Returns the elements added.
GroundSubset GreedyExtend(const MatroidOracle& m, GroundSubset& base,
                          const GroundSubset& from) {
  GroundSubset added(base.universe());
  from.ForEach([&](ElementId e) {
    if (base.contains(e)) return;
    GroundSubset t = base.With(e);
    if (m.IsIndependent(t)) {
      base = std::move(t);
      added.insert(e);
    }
  });
  return added;
}

}  // namespace

Layers Layers::FromDistances(const DistanceLabels& labels) {
  const int dt = labels.sink();
  if (!DistanceLabels::Finite(dt) || dt % 2 != 0 || dt < 2) {
    throw std::invalid_argument("layers need a finite even sink distance");
  }
  Layers layers;
  layers.ell = dt / 2 - 1;
  layers.d.assign(dt + 1, {});
  for (ElementId e = 0; e < labels.n(); ++e) {
    if (labels[e] >= 1 && labels[e] < dt) layers.d[labels[e]].push_back(e);
  }
  return layers;
}

AugmentingSet AugmentingSet::Empty(int ell, int n) {
  AugmentingSet pi;
  pi.ell = ell;
  pi.a.assign(ell + 2, GroundSubset(n));
  pi.b.assign(ell + 2, GroundSubset(n));
  return pi;
}

GroundSubset AugmentingSet::Elements() const {
  GroundSubset out(b.empty() ? 0 : b[0].universe());
  for (const auto& x : a) out |= x;
  for (const auto& x : b) out |= x;
  return out;
}

RefineState::RefineState(const MatroidOracle& m1, const MatroidOracle& m2,
                         const GroundSubset& s, Layers layers)
    : m1_(m1),
      m2_(m2),
      s_(s),
      layers_(std::move(layers)),
      type_(s.universe(), ElementType::kFresh) {
  initial_changes_ = Refine1(0);
}

GroundSubset RefineState::D(int j) const {
  if (j < 1 || j > 2 * ell() + 1) return GroundSubset(s_.universe());
  return GroundSubset(s_.universe(), layers_.d[j]);
}

GroundSubset RefineState::Typed(int j, ElementType t) const {
  GroundSubset out(s_.universe());
  if (j < 1 || j > 2 * ell() + 1) return out;
  for (ElementId e : layers_.d[j]) {
    if (type_[e] == t) out.insert(e);
  }
  return out;
}

GroundSubset RefineState::F(int j) const { return Typed(j, ElementType::kFresh); }
GroundSubset RefineState::R(int j) const {
  return Typed(j, ElementType::kRemoved);
}
GroundSubset RefineState::A(int k) const {
  return Typed(2 * k, ElementType::kSelected);
}
GroundSubset RefineState::B(int k) const {
  return Typed(2 * k - 1, ElementType::kSelected);
}

int64_t RefineState::Refine1(int k) {
  int64_t changes = 0;
  const GroundSubset a_k = A(k);
  GroundSubset base = (s_ - a_k) | B(k + 1);
  GroundSubset grown = GreedyExtend(m1_, base, F(2 * k + 1));
  grown.ForEach([&](ElementId e) { type_[e] = ElementType::kSelected; });
  changes += grown.size();
  if (k >= 1) {
    // Put back as much of A_k as the first matroid allows; those elements
    // are no longer needed as exchange partners.
    GroundSubset back = GreedyExtend(m1_, base, a_k);
    back.ForEach([&](ElementId e) { type_[e] = ElementType::kRemoved; });
    changes += back.size();
  }
  return changes;
}

int64_t RefineState::Refine2(int k) {
  int64_t changes = 0;
  const GroundSubset f = F(2 * k);
  GroundSubset base = s_ - A(k) - f;
  GroundSubset kept = GreedyExtend(m2_, base, B(k));
  (B(k) - kept).ForEach([&](ElementId e) {
    type_[e] = ElementType::kRemoved;
    ++changes;
  });
  if (k <= ell()) {
    GroundSubset stay = GreedyExtend(m2_, base, f);
    (f - stay).ForEach([&](ElementId e) {
      type_[e] = ElementType::kSelected;
      ++changes;
    });
  }
  return changes;
}

int64_t RefineState::Refine() {
  int64_t changes = 0;
  for (int k = 0; k <= ell(); ++k) {
    changes += Refine1(k);
    changes += Refine2(k + 1);
  }
  changes += Refine1(0);
  // With a single layer pair B_1 is also the last B, so it has to be pruned
  // against the second matroid again after growing.
  if (ell() == 0) changes += Refine2(1);
  return changes;
}

AugmentingSet RefineState::Selected() const {
  AugmentingSet phi = AugmentingSet::Empty(ell(), s_.universe());
  for (int k = 1; k <= ell(); ++k) phi.a[k] = A(k);
  for (int k = 1; k <= ell() + 1; ++k) phi.b[k] = B(k);
  return phi;
}

AugmentingSet PartialToFull(const MatroidOracle& m1, const MatroidOracle& m2,
                            const GroundSubset& s, const AugmentingSet& phi,
                            const AugmentingSet& inner) {
  const int ell = phi.ell;
  const int n = s.universe();
  AugmentingSet pi = AugmentingSet::Empty(ell, n);
  const int w = phi.b[ell + 1].size();
  pi.b[ell + 1] = phi.b[ell + 1];
  for (int k = ell; k >= 1; --k) {
    GroundSubset base = (s - phi.a[k]) | pi.b[k + 1];
    GroundSubset a_k = phi.a[k];
    (phi.a[k] - inner.a[k]).ForEach([&](ElementId e) {
      if (a_k.size() == w) return;
      GroundSubset t = base.With(e);
      if (m1.IsIndependent(t)) {
        base = std::move(t);
        a_k.erase(e);
      }
    });
    if (a_k.size() != w) {
      throw std::logic_error("completion failed at A_" + K(k));
    }
    pi.a[k] = a_k;

    GroundSubset base2 = (s - a_k) | inner.b[k];
    GroundSubset b_k = inner.b[k];
    (phi.b[k] - inner.b[k]).ForEach([&](ElementId e) {
      if (b_k.size() == w) return;
      GroundSubset t = base2.With(e);
      if (m2.IsIndependent(t)) {
        base2 = std::move(t);
        b_k.insert(e);
      }
    });
    if (b_k.size() != w) {
      throw std::logic_error("completion failed at B_" + K(k));
    }
    pi.b[k] = b_k;
  }
  return pi;
}

GroundSubset ApplyAugmentingSet(const MatroidOracle& m1,
                                const MatroidOracle& m2, const GroundSubset& s,
                                const AugmentingSet& pi) {
  GroundSubset out = s;
  for (const auto& b : pi.b) out |= b;
  for (const auto& a : pi.a) out -= a;
  if (!m1.IsIndependent(out) || !m2.IsIndependent(out)) {
    throw std::logic_error("augmenting set produced a dependent set");
  }
  return out;
}

std::vector<std::vector<ElementId>> PeelPaths(const MatroidOracle& m1,
                                              const MatroidOracle& m2,
                                              const GroundSubset& s,
                                              const AugmentingSet& pi) {
  const int ell = pi.ell;
  AugmentingSet rest = pi;
  GroundSubset cur = s;
  std::vector<std::vector<ElementId>> paths;
  const int w = pi.width();
  for (int i = 0; i < w; ++i) {
    std::vector<ElementId> path;
    ElementId b = rest.b[1].members().front();
    path.push_back(b);
    for (int k = 1; k <= ell; ++k) {
      std::optional<ElementId> a;
      rest.a[k].ForEach([&](ElementId x) {
        if (!a && m2.IsIndependent(cur.Without(x).With(b))) a = x;
      });
      if (!a) throw std::logic_error("no exchange partner in A_" + K(k));
      path.push_back(*a);
      std::optional<ElementId> next;
      rest.b[k + 1].ForEach([&](ElementId y) {
        if (!next && m1.IsIndependent(cur.Without(*a).With(y))) next = y;
      });
      if (!next) throw std::logic_error("no successor in B_" + K(k + 1));
      path.push_back(*next);
      b = *next;
    }
    for (size_t j = 0; j < path.size(); ++j) {
      const int k = static_cast<int>(j / 2) + 1;
      if (j % 2 == 0) {
        rest.b[k].erase(path[j]);
        cur.insert(path[j]);
      } else {
        rest.a[k].erase(path[j]);
        cur.erase(path[j]);
      }
    }
    if (!m1.IsIndependent(cur) || !m2.IsIndependent(cur)) {
      throw std::logic_error("peeled path produced a dependent set");
    }
    paths.push_back(std::move(path));
  }
  return paths;
}

std::vector<std::string> CheckAugmentingSet(const MatroidOracle& m1,
                                            const MatroidOracle& m2,
                                            const GroundSubset& s,
                                            const Layers& layers,
                                            const AugmentingSet& pi) {
  std::vector<std::string> bad;
  const int ell = layers.ell;
  const int n = s.universe();
  if (pi.ell != ell) return {"layer count mismatch"};
  const int w = pi.width();
  for (int k = 1; k <= ell + 1; ++k) {
    if (!pi.b[k].IsSubsetOf(GroundSubset(n, layers.d[2 * k - 1]))) {
      bad.push_back("(a) B_" + K(k) + " outside its layer");
    }
    if (pi.b[k].size() != w) bad.push_back("(b) |B_" + K(k) + "| != w");
  }
  for (int k = 1; k <= ell; ++k) {
    if (!pi.a[k].IsSubsetOf(GroundSubset(n, layers.d[2 * k]))) {
      bad.push_back("(a) A_" + K(k) + " outside its layer");
    }
    if (pi.a[k].size() != w) bad.push_back("(b) |A_" + K(k) + "| != w");
  }
  if (!m1.IsIndependent(s | pi.b[1])) bad.push_back("(c) S + B_1 not in I1");
  if (!m2.IsIndependent(s | pi.b[ell + 1])) {
    bad.push_back("(d) S + B_last not in I2");
  }
  for (int k = 1; k <= ell; ++k) {
    if (!m1.IsIndependent((s - pi.a[k]) | pi.b[k + 1])) {
      bad.push_back("(e) S - A_" + K(k) + " + B_" + K(k + 1) + " not in I1");
    }
    if (!m2.IsIndependent((s - pi.a[k]) | pi.b[k])) {
      bad.push_back("(f) S - A_" + K(k) + " + B_" + K(k) + " not in I2");
    }
  }
  GroundSubset applied = s;
  for (const auto& b : pi.b) applied |= b;
  for (const auto& a : pi.a) applied -= a;
  if (!m1.IsIndependent(applied) || !m2.IsIndependent(applied)) {
    bad.push_back("S with the set applied is not common independent");
  }
  return bad;
}

std::vector<std::string> CheckPartialAugmentingSet(const MatroidOracle& m1,
                                                   const MatroidOracle& m2,
                                                   const GroundSubset& s,
                                                   const Layers& layers,
                                                   const AugmentingSet& phi) {
  std::vector<std::string> bad;
  const int ell = layers.ell;
  const int n = s.universe();
  int prev = phi.b[1].size();
  for (int k = 1; k <= ell + 1; ++k) {
    if (!phi.b[k].IsSubsetOf(GroundSubset(n, layers.d[2 * k - 1]))) {
      bad.push_back("(a) B_" + K(k) + " outside its layer");
    }
    if (phi.b[k].size() > prev) bad.push_back("(b) sizes increase at B_" + K(k));
    prev = phi.b[k].size();
    if (k <= ell) {
      if (!phi.a[k].IsSubsetOf(GroundSubset(n, layers.d[2 * k]))) {
        bad.push_back("(a) A_" + K(k) + " outside its layer");
      }
      if (phi.a[k].size() > prev) {
        bad.push_back("(b) sizes increase at A_" + K(k));
      }
      prev = phi.a[k].size();
    }
  }
  if (!m1.IsIndependent(s | phi.b[1])) bad.push_back("(c) S + B_1 not in I1");
  if (!m2.IsIndependent(s | phi.b[ell + 1])) {
    bad.push_back("(d) S + B_last not in I2");
  }
  for (int k = 1; k <= ell; ++k) {
    if (!m1.IsIndependent((s - phi.a[k]) | phi.b[k + 1])) {
      bad.push_back("(e) S - A_" + K(k) + " + B_" + K(k + 1) + " not in I1");
    }
    GroundSubset base = s - phi.a[k];
    GreedyExtend(m2, base, phi.b[k]);
    if (base.size() != s.size()) {
      bad.push_back("(f) rank2(S - A_" + K(k) + " + B_" + K(k) + ") != |S|");
    }
  }
  return bad;
}

std::vector<std::string> CheckRefineInvariants(const MatroidOracle& m1,
                                               const MatroidOracle& m2,
                                               const RefineState& st,
                                               std::mt19937_64& rng,
                                               int samples) {
  std::vector<std::string> bad;
  const GroundSubset& s = st.s();
  const int ell = st.ell();
  for (int k = 1; k <= ell; ++k) {
    const GroundSubset a_k = st.A(k);
    if (!m1.IsIndependent((s - a_k) | st.B(k + 1))) {
      bad.push_back("(a) S - A_" + K(k) + " + B_" + K(k + 1) + " not in I1");
    }
    GroundSubset base = s - a_k;
    GroundSubset added = GreedyExtend(m2, base, st.B(k));
    if (added.size() < a_k.size()) {
      bad.push_back("(b) no exchange witness for A_" + K(k));
    }
    const std::vector<ElementId> pool =
        (st.B(k + 1) | st.F(2 * k + 1)).members();
    const GroundSubset wide = a_k | st.R(2 * k);
    for (int i = 0; i < samples; ++i) {
      GroundSubset x(s.universe());
      for (ElementId e : pool) {
        if (rng() & 1) x.insert(e);
      }
      if (m1.IsIndependent((s - wide) | x) && !m1.IsIndependent((s - a_k) | x)) {
        bad.push_back("(c) violated for k=" + K(k) + " X=" + x.ToString());
        break;
      }
    }
  }
  for (int k = 1; k <= ell + 1; ++k) {
    GroundSubset basis = s - (st.D(2 * k) - st.R(2 * k));
    GreedyExtend(m2, basis, st.B(k));
    st.R(2 * k - 1).ForEach([&](ElementId r) {
      if (m2.IsIndependent(basis.With(r))) {
        bad.push_back("(d) removed element " + K(r) + " not spanned");
      }
    });
  }
  return bad;
}

namespace {

// Subsets of `layer` with exactly w members, as GroundSubsets.
std::vector<GroundSubset> Choose(const std::vector<ElementId>& layer, int w,
                                 int n) {
  std::vector<GroundSubset> out;
  std::vector<int> idx(w);
  std::iota(idx.begin(), idx.end(), 0);
  const int m = static_cast<int>(layer.size());
  if (w > m) return out;
  while (true) {
    GroundSubset x(n);
    for (int i : idx) x.insert(layer[i]);
    out.push_back(std::move(x));
    int i = w - 1;
    while (i >= 0 && idx[i] == m - w + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < w; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

// Fills positions B_1, A_1, B_2, ..., B_{ell+1} in order, checking each
// condition as soon as its sets are fixed.
void Extend(const MatroidOracle& m1, const MatroidOracle& m2,
            const GroundSubset& s, const Layers& layers,
            const std::vector<std::vector<GroundSubset>>& options, int pos,
            AugmentingSet& cur, std::vector<AugmentingSet>& out) {
  const int ell = layers.ell;
  if (pos == 2 * ell + 1) {
    out.push_back(cur);
    return;
  }
  const int j = pos + 1;  // distance layer
  for (const GroundSubset& x : options[j]) {
    if (j % 2 == 1) {
      const int k = (j + 1) / 2;
      if (k == 1) {
        if (!m1.IsIndependent(s | x)) continue;
      } else if (!m1.IsIndependent((s - cur.a[k - 1]) | x)) {
        continue;
      }
      if (k == ell + 1 && !m2.IsIndependent(s | x)) continue;
      cur.b[k] = x;
    } else {
      const int k = j / 2;
      if (!m2.IsIndependent((s - x) | cur.b[k])) continue;
      cur.a[k] = x;
    }
    Extend(m1, m2, s, layers, options, pos + 1, cur, out);
  }
}

}  // namespace

std::vector<AugmentingSet> AllAugmentingSets(const MatroidOracle& m1,
                                             const MatroidOracle& m2,
                                             const GroundSubset& s,
                                             const Layers& layers) {
  const int n = s.universe();
  const int ell = layers.ell;
  size_t max_w = layers.d[1].size();
  for (int j = 1; j <= 2 * ell + 1; ++j) {
    max_w = std::min(max_w, layers.d[j].size());
  }
  std::vector<AugmentingSet> out;
  for (int w = 0; w <= static_cast<int>(max_w); ++w) {
    std::vector<std::vector<GroundSubset>> options(2 * ell + 2);
    for (int j = 1; j <= 2 * ell + 1; ++j) options[j] = Choose(layers.d[j], w, n);
    AugmentingSet cur = AugmentingSet::Empty(ell, n);
    Extend(m1, m2, s, layers, options, 0, cur, out);
  }
  return out;
}

bool ContainedIn(const AugmentingSet& inner, const AugmentingSet& outer) {
  if (inner.ell != outer.ell) return false;
  for (size_t k = 0; k < inner.b.size(); ++k) {
    if (!inner.b[k].IsSubsetOf(outer.b[k]) ||
        !inner.a[k].IsSubsetOf(outer.a[k])) {
      return false;
    }
  }
  return true;
}

std::vector<AugmentingSet> MaximalAugmentingSets(
    const std::vector<AugmentingSet>& sets) {
  std::vector<AugmentingSet> out;
  for (size_t i = 0; i < sets.size(); ++i) {
    bool maximal = true;
    for (size_t j = 0; j < sets.size() && maximal; ++j) {
      if (sets[j].width() > sets[i].width() && ContainedIn(sets[i], sets[j])) {
        maximal = false;
      }
    }
    if (maximal) out.push_back(sets[i]);
  }
  return out;
}

int DefaultHybridP(int n, double eps, int greedy_size) {
  const double rhat = 2.0 * greedy_size;
  const double p = std::ceil(std::sqrt(n * eps / std::log2(rhat + 2)));
  return std::max(1, static_cast<int>(p));
}

HybridPhaseResult HybridPhase(const MatroidOracle& m1, const MatroidOracle& m2,
                              const GroundSubset& s, const IndepDistances& dist,
                              int p, const AugsetOptions& options) {
  const int dt = dist.labels.sink();
  HybridPhaseResult out;
  Layers layers = Layers::FromDistances(dist.labels);
  out.trace.ell = layers.ell;

  RefineState state(m1, m2, s, layers);
  out.trace.type_changes = state.initial_changes();
  while (options.refine_to_fixpoint || state.Gap() > p) {
    const int64_t changes = state.Refine();
    ++out.trace.refine_iterations;
    out.trace.type_changes += changes;
    if (changes == 0) break;
  }
  // The initial state only grows B_1 in the first matroid. When B_1 is also
  // the last B and no refine pass ran, it still has to fit the second one.
  if (layers.ell == 0 && out.trace.refine_iterations == 0) {
    out.trace.type_changes += state.Refine2(1);
  }
  out.trace.gap = state.Gap();

  const AugmentingSet pi = PartialToFull(
      m1, m2, s, state.Selected(), AugmentingSet::Empty(layers.ell, s.universe()));
  out.trace.width_applied = pi.width();
  GroundSubset cur = s;
  if (pi.width() > 0) {
    if (options.on_augmenting_set) options.on_augmenting_set(s, layers, pi);
    cur = ApplyAugmentingSet(m1, m2, s, pi);
    if (options.observer && options.observer->on_augment) {
      options.observer->on_augment(s, cur);
    }
  }
  std::vector<int> lb = CarryLowerBounds(dist, s, cur);

  // Finish the phase with single paths of the same length.
  IndepDistanceOptions search;
  search.cutoff = dt;
  while (true) {
    IndepDistances d = GetDistancesIndep(m1, m2, cur, lb, search);
    out.promotions += d.promotions;
    if (d.labels.sink() != dt) {
      lb = CarryLowerBounds(d, cur, cur);
      break;
    }
    GroundSubset next = cur;
    for (ElementId e : OnePath(m1, m2, cur, d.labels)) {
      if (next.contains(e)) {
        next.erase(e);
      } else {
        next.insert(e);
      }
    }
    if (options.observer && options.observer->on_augment) {
      options.observer->on_augment(cur, next);
    }
    lb = CarryLowerBounds(d, cur, next);
    cur = std::move(next);
    ++out.trace.paths_after;
  }
  out.s = std::move(cur);
  out.next_lower_bounds = std::move(lb);
  return out;
}

AugsetResult SolveApproxAugset(const MatroidOracle& m1,
                               const MatroidOracle& m2, double eps,
                               const AugsetOptions& options) {
  if (!(eps > 0 && eps < 1)) {
    throw std::invalid_argument("eps must lie in (0, 1)");
  }
  const int n = m1.ground_size();
  CallMeter meter(m1, m2);
  AugsetResult out;
  GroundSubset s = GreedyMaximalCommon(m1, m2);
  meter.Mark("greedy");
  out.p = options.p > 0 ? options.p : DefaultHybridP(n, eps, s.size());

  // Largest even sink distance whose paths have fewer than 1/eps elements.
  int cutoff = 2;
  while ((cutoff + 1) * eps < 1.0 - 1e-12) cutoff += 2;
  if (options.cutoff > 0) cutoff = std::max(2, options.cutoff - options.cutoff % 2);

  std::vector<int> lb = BaseLowerBounds(s);
  IndepDistanceOptions search;
  search.cutoff = cutoff;
  while (true) {
    IndepDistances d = GetDistancesIndep(m1, m2, s, lb, search);
    out.result.promotions += d.promotions;
    const int dt = d.labels.sink();
    if (dt == DistanceLabels::kInfinity) {
      out.result.d_stop = kNoPath;
      break;
    }
    if (!DistanceLabels::Finite(dt) || dt > cutoff) {
      out.result.d_stop = d.lower[SinkVertex(n)] - 1;
      break;
    }
    HybridPhaseResult phase = HybridPhase(m1, m2, s, d, out.p, options);
    out.result.promotions += phase.promotions;
    s = std::move(phase.s);
    lb = std::move(phase.next_lower_bounds);
    ++out.result.phases;
    meter.Mark("phase " + std::to_string(out.result.phases));
    const PhaseCalls& calls = meter.phases().back();
    phase.trace.independence_calls = calls.independence_calls;
    phase.trace.rank_calls = calls.rank_calls;
    out.trace.push_back(phase.trace);
  }
  out.result.solution = s;
  out.result.stats = meter.Finish();
  return out;
}

}  // namespace matint
