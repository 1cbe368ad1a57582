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

#ifndef MATINT_ORACLE_H_
#define MATINT_ORACLE_H_

#include <atomic>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>

#include "matint/ground_subset.h"

namespace matint {

// Thrown when a rank query is made against an oracle that only answers
// independence queries.
class CapabilityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct OracleCounters {
  int64_t independence_calls = 0;
  int64_t rank_calls = 0;
};

// A matroid over {0, ..., n - 1} accessed only through queries. Every public
// query increments a counter owned by this instance. Counters are atomic so
// concurrent queries from worker threads are safe.
class MatroidOracle {
 public:
  MatroidOracle(int ground_size, bool supports_rank);
  virtual ~MatroidOracle() = default;
  MatroidOracle(const MatroidOracle&) = delete;
  MatroidOracle& operator=(const MatroidOracle&) = delete;

  int ground_size() const { return n_; }
  bool supports_rank() const { return supports_rank_; }

  bool IsIndependent(const GroundSubset& s) const;
  // Throws CapabilityError if the oracle is independence-only.
  int Rank(const GroundSubset& s) const;

  OracleCounters counters() const;
  void ResetCounters() const;

  // Deep copy with fresh counters.
  virtual std::unique_ptr<MatroidOracle> Clone() const = 0;
  virtual std::string Describe() const = 0;

 protected:
  virtual bool IsIndependentImpl(const GroundSubset& s) const = 0;
  virtual int RankImpl(const GroundSubset& s) const;

 private:
  int n_;
  bool supports_rank_;
  mutable std::atomic<int64_t> independence_calls_{0};
  mutable std::atomic<int64_t> rank_calls_{0};
};

// Non-owning handle to an oracle that outlives the wrapper.
std::shared_ptr<const MatroidOracle> ViewOf(const MatroidOracle& m);

// Independent sets of size at most cap.
class TruncatedMatroid : public MatroidOracle {
 public:
  TruncatedMatroid(std::shared_ptr<const MatroidOracle> inner, int cap);
  std::unique_ptr<MatroidOracle> Clone() const override;
  std::string Describe() const override;

 protected:
  bool IsIndependentImpl(const GroundSubset& s) const override;
  int RankImpl(const GroundSubset& s) const override;

 private:
  std::shared_ptr<const MatroidOracle> inner_;
  int cap_;
};

// The matroid restricted to a subset U, with U re-indexed as 0..|U|-1 in
// ascending order of the original ids.
class RestrictedMatroid : public MatroidOracle {
 public:
  RestrictedMatroid(std::shared_ptr<const MatroidOracle> inner,
                    const GroundSubset& keep);
  std::unique_ptr<MatroidOracle> Clone() const override;
  std::string Describe() const override;

  ElementId ToParent(ElementId local) const { return to_parent_[local]; }
  GroundSubset LiftToParent(const GroundSubset& local) const;

 protected:
  bool IsIndependentImpl(const GroundSubset& s) const override;
  int RankImpl(const GroundSubset& s) const override;

 private:
  std::shared_ptr<const MatroidOracle> inner_;
  std::vector<ElementId> to_parent_;
};

// Hides the rank capability of the wrapped oracle.
class IndependenceOnlyMatroid : public MatroidOracle {
 public:
  explicit IndependenceOnlyMatroid(std::shared_ptr<const MatroidOracle> inner);
  std::unique_ptr<MatroidOracle> Clone() const override;
  std::string Describe() const override;

 protected:
  bool IsIndependentImpl(const GroundSubset& s) const override;

 private:
  std::shared_ptr<const MatroidOracle> inner_;
};

// Answers independence queries with one rank query each, so the wrapped
// oracle only ever sees rank calls.
class RankBackedMatroid : public MatroidOracle {
 public:
  explicit RankBackedMatroid(std::shared_ptr<const MatroidOracle> inner);
  std::unique_ptr<MatroidOracle> Clone() const override;
  std::string Describe() const override;

 protected:
  bool IsIndependentImpl(const GroundSubset& s) const override;
  int RankImpl(const GroundSubset& s) const override;

 private:
  std::shared_ptr<const MatroidOracle> inner_;
};

std::unique_ptr<MatroidOracle> Truncate(const MatroidOracle& m, int cap);
std::unique_ptr<RestrictedMatroid> Restrict(const MatroidOracle& m,
                                            const GroundSubset& keep);

}  // namespace matint

#endif  // MATINT_ORACLE_H_
