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

#ifndef MATINT_FAMILIES_H_
#define MATINT_FAMILIES_H_

#include <cstdint>
#include <memory>
#include <utility>
#include <variant>
#include <vector>

#include "matint/oracle.h"

namespace matint {

struct UniformParams {
  int n = 0;
  int k = 0;
};

// blocks[i] lists the elements of block i; every element of 0..n-1 must
// appear in exactly one block. A cap larger than its block is allowed.
struct PartitionParams {
  std::vector<std::vector<ElementId>> blocks;
  std::vector<int> caps;
};

// Element i is edge i. Self loops are never independent.
struct GraphicParams {
  int num_vertices = 0;
  std::vector<std::pair<int, int>> edges;
};

// Element i is column i of a rows x n matrix over GF(prime).
struct LinearParams {
  int64_t prime = 2003;
  int rows = 0;
  std::vector<std::vector<int64_t>> columns;
};

using MatroidSpec =
    std::variant<UniformParams, PartitionParams, GraphicParams, LinearParams>;

const char* KindName(const MatroidSpec& spec);
int GroundSizeOf(const MatroidSpec& spec);

// Throws std::invalid_argument on malformed parameters.
std::unique_ptr<MatroidOracle> MakeMatroid(const MatroidSpec& spec);

class UniformMatroid : public MatroidOracle {
 public:
  UniformMatroid(int n, int k);
  std::unique_ptr<MatroidOracle> Clone() const override;
  std::string Describe() const override;

 protected:
  bool IsIndependentImpl(const GroundSubset& s) const override;
  int RankImpl(const GroundSubset& s) const override;

 private:
  int k_;
};

class PartitionMatroid : public MatroidOracle {
 public:
  explicit PartitionMatroid(PartitionParams params);
  std::unique_ptr<MatroidOracle> Clone() const override;
  std::string Describe() const override;

 protected:
  bool IsIndependentImpl(const GroundSubset& s) const override;
  int RankImpl(const GroundSubset& s) const override;

 private:
  PartitionParams params_;
  std::vector<int> block_of_;
};

class GraphicMatroid : public MatroidOracle {
 public:
  explicit GraphicMatroid(GraphicParams params);
  std::unique_ptr<MatroidOracle> Clone() const override;
  std::string Describe() const override;

 protected:
  bool IsIndependentImpl(const GroundSubset& s) const override;
  int RankImpl(const GroundSubset& s) const override;

 private:
  // Number of edges of s that join two different components.
  int ForestSize(const GroundSubset& s, bool stop_on_cycle) const;

  GraphicParams params_;
};

class LinearMatroid : public MatroidOracle {
 public:
  explicit LinearMatroid(LinearParams params);
  std::unique_ptr<MatroidOracle> Clone() const override;
  std::string Describe() const override;

 protected:
  bool IsIndependentImpl(const GroundSubset& s) const override;
  int RankImpl(const GroundSubset& s) const override;

 private:
  int ColumnRank(const GroundSubset& s) const;

  LinearParams params_;
};

}  // namespace matint

#endif  // MATINT_FAMILIES_H_
