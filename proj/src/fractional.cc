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

#include "matint/fractional.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <unordered_map>

#include "matint/greedy.h"

namespace matint {
namespace {

// Convex combination of sets, merged by identical set.
class Combination {
 public:
  explicit Combination(int n) { Add(GroundSubset(n), 1.0); }

  void Step(const GroundSubset& vertex, double gamma) {
    for (auto& [set, w] : items_) w *= 1 - gamma;
    Add(vertex, gamma);
  }

  Certificate Export() const {
    Certificate out;
    for (const auto& [set, w] : items_) {
      if (w > 0) out.emplace_back(set, w);
    }
    return out;
  }

 private:
  void Add(const GroundSubset& s, double w) {
    auto [it, fresh] = index_.try_emplace(s, items_.size());
    if (fresh) {
      items_.emplace_back(s, w);
    } else {
      items_[it->second].second += w;
    }
  }

  std::vector<std::pair<GroundSubset, double>> items_;
  std::unordered_map<GroundSubset, size_t, GroundSubsetHash> index_;
};

void CheckCertificate(const MatroidOracle& m, const Certificate& cert,
                      const std::vector<double>& point, int rbar) {
  double total = 0;
  std::vector<double> sum(point.size(), 0.0);
  for (const auto& [set, w] : cert) {
    if (w < 0) throw std::logic_error("negative certificate weight");
    if (set.size() > rbar || !m.IsIndependent(set)) {
      throw std::logic_error("certificate set outside the truncated matroid");
    }
    total += w;
    set.ForEach([&](ElementId e) { sum[e] += w; });
  }
  if (std::abs(total - 1) > 1e-9) {
    throw std::logic_error("certificate weights do not sum to one");
  }
  for (size_t i = 0; i < point.size(); ++i) {
    if (std::abs(sum[i] - point[i]) > 1e-9) {
      throw std::logic_error("certificate does not reproduce the iterate");
    }
  }
}

}  // namespace

std::vector<double> FractionalPoint::z() const {
  std::vector<double> out(x.size());
  for (size_t i = 0; i < x.size(); ++i) out[i] = std::min(x[i], y[i]);
  return out;
}

double FractionalPoint::SumZ() const {
  double s = 0;
  for (double v : z()) s += v;
  return s;
}

double FwObjective(const std::vector<double>& x, const std::vector<double>& y,
                   double eta) {
  double sum = 0;
  double sq = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    sum += x[i];
    sq += (x[i] - y[i]) * (x[i] - y[i]);
  }
  return -sum + eta / 2 * sq;
}

std::pair<std::vector<double>, std::vector<double>> FwGradient(
    const std::vector<double>& x, const std::vector<double>& y, double eta) {
  std::vector<double> gx(x.size());
  std::vector<double> gy(x.size());
  for (size_t i = 0; i < x.size(); ++i) {
    gx[i] = -1 + eta * (x[i] - y[i]);
    gy[i] = -eta * (x[i] - y[i]);
  }
  return {gx, gy};
}

int EstimateRbar(const MatroidOracle& m1, const MatroidOracle& m2) {
  return std::min(2 * GreedyMaximalCommon(m1, m2).size(), m1.ground_size());
}

FractionalPoint FrankWolfeFractional(const MatroidOracle& m1,
                                     const MatroidOracle& m2, double eps,
                                     const FwOptions& options) {
  if (!(eps > 0 && eps < 1)) {
    throw std::invalid_argument("eps must lie in (0, 1)");
  }
  const int n = m1.ground_size();
  CallMeter meter(m1, m2);
  FractionalPoint fp;
  fp.x.assign(n, 0.0);
  fp.y.assign(n, 0.0);
  fp.greedy_size = GreedyMaximalCommon(m1, m2).size();
  fp.rbar = std::min(2 * fp.greedy_size, n);
  meter.Mark("estimate rbar");
  if (fp.rbar == 0) {
    fp.cert_x = {{GroundSubset(n), 1.0}};
    fp.cert_y = fp.cert_x;
    fp.stats = meter.Finish();
    return fp;
  }
  const int k = options.iterations > 0
                    ? options.iterations
                    : static_cast<int>(std::ceil(32.0 / (eps * eps) * n /
                                                 fp.rbar));
  const double eta = std::sqrt(n * (k + 2.0) / (32.0 * fp.rbar));
  fp.iterations = k;
  fp.eta = eta;

  Combination cx(n);
  Combination cy(n);
  std::vector<double> wx(n);
  std::vector<double> wy(n);
  for (int t = 0; t < k; ++t) {
    for (int i = 0; i < n; ++i) {
      const double diff = eta * (fp.x[i] - fp.y[i]);
      wx[i] = 1 - diff;
      wy[i] = diff;
    }
    const GroundSubset u = GreedyLinearOpt(m1, wx, fp.rbar);
    const GroundSubset v = GreedyLinearOpt(m2, wy, fp.rbar);
    const double gamma = 2.0 / (t + 2);
    double gap = 0;
    for (int i = 0; i < n; ++i) {
      const double ui = u.contains(i) ? 1.0 : 0.0;
      const double vi = v.contains(i) ? 1.0 : 0.0;
      gap += wx[i] * (ui - fp.x[i]) + wy[i] * (vi - fp.y[i]);
      fp.x[i] = (1 - gamma) * fp.x[i] + gamma * ui;
      fp.y[i] = (1 - gamma) * fp.y[i] + gamma * vi;
    }
    cx.Step(u, gamma);
    cy.Step(v, gamma);
    if (options.record_trace) {
      double sum_min = 0;
      for (int i = 0; i < n; ++i) sum_min += std::min(fp.x[i], fp.y[i]);
      fp.trace.push_back({t, FwObjective(fp.x, fp.y, eta), sum_min, gap});
    }
    if (options.check_iterates) {
      CheckCertificate(m1, cx.Export(), fp.x, fp.rbar);
      CheckCertificate(m2, cy.Export(), fp.y, fp.rbar);
    }
  }
  fp.cert_x = cx.Export();
  fp.cert_y = cy.Export();
  meter.Mark("frank-wolfe");
  fp.stats = meter.Finish();
  return fp;
}

SparsifyPlan Sparsify(const std::vector<double>& x, double eps, int rhat,
                      uint64_t seed, double p_factor) {
  const int n = static_cast<int>(x.size());
  SparsifyPlan plan;
  plan.seed = seed;
  plan.kept = GroundSubset(n);
  plan.copies.assign(n, 0);
  plan.counts.assign(n, 0);
  if (rhat <= 0 || n == 0) return plan;
  const double nd = n;
  plan.lambda = eps * rhat / (4 * nd * nd * nd);
  plan.p = std::min(1.0, p_factor * plan.lambda * std::log((nd + 2) / eps) /
                             (eps * eps));
  std::mt19937_64 rng(seed);
  for (int i = 0; i < n; ++i) {
    const double c = std::floor(std::max(0.0, x[i]) / plan.lambda);
    plan.copies[i] = static_cast<int64_t>(std::min(c, 9e18));
    if (plan.copies[i] == 0) continue;
    std::binomial_distribution<int64_t> draw(plan.copies[i], plan.p);
    plan.counts[i] = draw(rng);
    if (plan.counts[i] >= 1) plan.kept.insert(i);
  }
  return plan;
}

SparseResult SolveApproxSparse(const MatroidOracle& m1, const MatroidOracle& m2,
                               double eps, uint64_t seed,
                               const AugsetOptions& augset_options,
                               double p_factor) {
  CallMeter meter(m1, m2);
  SparseResult out;
  out.point = FrankWolfeFractional(m1, m2, eps);
  meter.Mark("frank-wolfe");
  out.plan = Sparsify(out.point.z(), eps, out.point.greedy_size, seed, p_factor);

  RestrictedMatroid r1(ViewOf(m1), out.plan.kept);
  RestrictedMatroid r2(ViewOf(m2), out.plan.kept);
  AugsetOptions inner = augset_options;
  inner.observer = nullptr;
  inner.on_augmenting_set = nullptr;
  AugsetResult sub = SolveApproxAugset(r1, r2, eps, inner);
  out.restricted_r = sub.result.solution.size();
  out.result.solution = r1.LiftToParent(sub.result.solution);
  out.result.phases = sub.result.phases;
  out.result.d_stop = sub.result.d_stop;
  out.result.promotions = sub.result.promotions;
  meter.Mark("restricted solve");
  out.result.stats = meter.Finish();
  return out;
}

}  // namespace matint
