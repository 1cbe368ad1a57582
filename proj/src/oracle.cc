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

#include "matint/oracle.h"

#include <algorithm>
#include <utility>

namespace matint {

MatroidOracle::MatroidOracle(int ground_size, bool supports_rank)
    : n_(ground_size), supports_rank_(supports_rank) {
  if (ground_size < 0) throw std::invalid_argument("negative ground size");
}

bool MatroidOracle::IsIndependent(const GroundSubset& s) const {
  independence_calls_.fetch_add(1, std::memory_order_relaxed);
  return IsIndependentImpl(s);
}

int MatroidOracle::Rank(const GroundSubset& s) const {
  if (!supports_rank_) {
    throw CapabilityError("rank query on an independence-only oracle");
  }
  rank_calls_.fetch_add(1, std::memory_order_relaxed);
  return RankImpl(s);
}

int MatroidOracle::RankImpl(const GroundSubset&) const {
  throw CapabilityError("rank query on an independence-only oracle");
}

OracleCounters MatroidOracle::counters() const {
  return {independence_calls_.load(std::memory_order_relaxed),
          rank_calls_.load(std::memory_order_relaxed)};
}

void MatroidOracle::ResetCounters() const {
  independence_calls_.store(0);
  rank_calls_.store(0);
}

std::shared_ptr<const MatroidOracle> ViewOf(const MatroidOracle& m) {
  // Aliasing constructor with an empty owner: no ownership, no deleter.
  return std::shared_ptr<const MatroidOracle>(std::shared_ptr<void>(), &m);
}

TruncatedMatroid::TruncatedMatroid(std::shared_ptr<const MatroidOracle> inner,
                                   int cap)
    : MatroidOracle(inner->ground_size(), inner->supports_rank()),
      inner_(std::move(inner)),
      cap_(cap) {
  if (cap < 0) throw std::invalid_argument("negative truncation cap");
}

std::unique_ptr<MatroidOracle> TruncatedMatroid::Clone() const {
  return std::make_unique<TruncatedMatroid>(
      std::shared_ptr<const MatroidOracle>(inner_->Clone()), cap_);
}

std::string TruncatedMatroid::Describe() const {
  return "truncate(" + inner_->Describe() + ", " + std::to_string(cap_) + ")";
}

bool TruncatedMatroid::IsIndependentImpl(const GroundSubset& s) const {
  if (s.size() > cap_) return false;
  return inner_->IsIndependent(s);
}

int TruncatedMatroid::RankImpl(const GroundSubset& s) const {
  return std::min(inner_->Rank(s), cap_);
}

RestrictedMatroid::RestrictedMatroid(
    std::shared_ptr<const MatroidOracle> inner, const GroundSubset& keep)
    : MatroidOracle(keep.size(), inner->supports_rank()),
      inner_(std::move(inner)),
      to_parent_(keep.members()) {
  if (keep.universe() != inner_->ground_size()) {
    throw std::invalid_argument("restriction set has the wrong universe");
  }
}

std::unique_ptr<MatroidOracle> RestrictedMatroid::Clone() const {
  GroundSubset keep(inner_->ground_size(), to_parent_);
  return std::make_unique<RestrictedMatroid>(
      std::shared_ptr<const MatroidOracle>(inner_->Clone()), keep);
}

std::string RestrictedMatroid::Describe() const {
  return "restrict(" + inner_->Describe() + ", " +
         std::to_string(to_parent_.size()) + " elements)";
}

GroundSubset RestrictedMatroid::LiftToParent(const GroundSubset& local) const {
  GroundSubset out(inner_->ground_size());
  local.ForEach([&](ElementId e) { out.insert(to_parent_[e]); });
  return out;
}

bool RestrictedMatroid::IsIndependentImpl(const GroundSubset& s) const {
  return inner_->IsIndependent(LiftToParent(s));
}

int RestrictedMatroid::RankImpl(const GroundSubset& s) const {
  return inner_->Rank(LiftToParent(s));
}

IndependenceOnlyMatroid::IndependenceOnlyMatroid(
    std::shared_ptr<const MatroidOracle> inner)
    : MatroidOracle(inner->ground_size(), false), inner_(std::move(inner)) {}

std::unique_ptr<MatroidOracle> IndependenceOnlyMatroid::Clone() const {
  return std::make_unique<IndependenceOnlyMatroid>(
      std::shared_ptr<const MatroidOracle>(inner_->Clone()));
}

std::string IndependenceOnlyMatroid::Describe() const {
  return "independence-only(" + inner_->Describe() + ")";
}

bool IndependenceOnlyMatroid::IsIndependentImpl(const GroundSubset& s) const {
  return inner_->IsIndependent(s);
}

RankBackedMatroid::RankBackedMatroid(std::shared_ptr<const MatroidOracle> inner)
    : MatroidOracle(inner->ground_size(), true), inner_(std::move(inner)) {
  if (!inner_->supports_rank()) {
    throw CapabilityError("rank-backed view needs a rank oracle");
  }
}

std::unique_ptr<MatroidOracle> RankBackedMatroid::Clone() const {
  return std::make_unique<RankBackedMatroid>(
      std::shared_ptr<const MatroidOracle>(inner_->Clone()));
}

std::string RankBackedMatroid::Describe() const { return inner_->Describe(); }

bool RankBackedMatroid::IsIndependentImpl(const GroundSubset& s) const {
  return inner_->Rank(s) == s.size();
}

int RankBackedMatroid::RankImpl(const GroundSubset& s) const {
  return inner_->Rank(s);
}

std::unique_ptr<MatroidOracle> Truncate(const MatroidOracle& m, int cap) {
  return std::make_unique<TruncatedMatroid>(
      std::shared_ptr<const MatroidOracle>(m.Clone()), cap);
}

std::unique_ptr<RestrictedMatroid> Restrict(const MatroidOracle& m,
                                            const GroundSubset& keep) {
  return std::make_unique<RestrictedMatroid>(
      std::shared_ptr<const MatroidOracle>(m.Clone()), keep);
}

}  // namespace matint
