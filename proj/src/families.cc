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

#include "matint/families.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace matint {
namespace {

bool IsPrime(int64_t p) {
  if (p < 2) return false;
  for (int64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

int64_t PowMod(int64_t base, int64_t exp, int64_t mod) {
  int64_t result = 1;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) result = result * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return result;
}

}  // namespace

const char* KindName(const MatroidSpec& spec) {
  switch (spec.index()) {
    case 0:
      return "uniform";
    case 1:
      return "partition";
    case 2:
      return "graphic";
    default:
      return "linear";
  }
}

int GroundSizeOf(const MatroidSpec& spec) {
  struct Visitor {
    int operator()(const UniformParams& p) const { return p.n; }
    int operator()(const PartitionParams& p) const {
      int n = 0;
      for (const auto& b : p.blocks) n += static_cast<int>(b.size());
      return n;
    }
    int operator()(const GraphicParams& p) const {
      return static_cast<int>(p.edges.size());
    }
    int operator()(const LinearParams& p) const {
      return static_cast<int>(p.columns.size());
    }
  };
  return std::visit(Visitor{}, spec);
}

std::unique_ptr<MatroidOracle> MakeMatroid(const MatroidSpec& spec) {
  struct Visitor {
    std::unique_ptr<MatroidOracle> operator()(const UniformParams& p) const {
      return std::make_unique<UniformMatroid>(p.n, p.k);
    }
    std::unique_ptr<MatroidOracle> operator()(const PartitionParams& p) const {
      return std::make_unique<PartitionMatroid>(p);
    }
    std::unique_ptr<MatroidOracle> operator()(const GraphicParams& p) const {
      return std::make_unique<GraphicMatroid>(p);
    }
    std::unique_ptr<MatroidOracle> operator()(const LinearParams& p) const {
      return std::make_unique<LinearMatroid>(p);
    }
  };
  return std::visit(Visitor{}, spec);
}

UniformMatroid::UniformMatroid(int n, int k) : MatroidOracle(n, true), k_(k) {
  if (k < 0) throw std::invalid_argument("uniform matroid with negative k");
}

std::unique_ptr<MatroidOracle> UniformMatroid::Clone() const {
  return std::make_unique<UniformMatroid>(ground_size(), k_);
}

std::string UniformMatroid::Describe() const {
  return "uniform(" + std::to_string(ground_size()) + ", " +
         std::to_string(k_) + ")";
}

bool UniformMatroid::IsIndependentImpl(const GroundSubset& s) const {
  return s.size() <= k_;
}

int UniformMatroid::RankImpl(const GroundSubset& s) const {
  return std::min(s.size(), k_);
}

PartitionMatroid::PartitionMatroid(PartitionParams params)
    : MatroidOracle(GroundSizeOf(MatroidSpec(params)), true),
      params_(std::move(params)) {
  if (params_.caps.size() != params_.blocks.size()) {
    throw std::invalid_argument("partition needs one cap per block");
  }
  block_of_.assign(ground_size(), -1);
  for (size_t b = 0; b < params_.blocks.size(); ++b) {
    if (params_.caps[b] < 0) {
      throw std::invalid_argument("partition cap is negative");
    }
    for (ElementId e : params_.blocks[b]) {
      if (e < 0 || e >= ground_size() || block_of_[e] != -1) {
        throw std::invalid_argument(
            "partition blocks must cover 0..n-1 exactly once");
      }
      block_of_[e] = static_cast<int>(b);
    }
  }
}

std::unique_ptr<MatroidOracle> PartitionMatroid::Clone() const {
  return std::make_unique<PartitionMatroid>(params_);
}

std::string PartitionMatroid::Describe() const {
  return "partition(" + std::to_string(ground_size()) + " elements, " +
         std::to_string(params_.blocks.size()) + " blocks)";
}

bool PartitionMatroid::IsIndependentImpl(const GroundSubset& s) const {
  thread_local std::vector<int> count;
  thread_local std::vector<int> touched;
  if (count.size() < params_.caps.size()) count.resize(params_.caps.size(), 0);
  touched.clear();
  bool ok = true;
  s.ForEach([&](ElementId e) {
    if (!ok) return;
    const int b = block_of_[e];
    if (count[b] == 0) touched.push_back(b);
    if (++count[b] > params_.caps[b]) ok = false;
  });
  for (int b : touched) count[b] = 0;
  return ok;
}

int PartitionMatroid::RankImpl(const GroundSubset& s) const {
  thread_local std::vector<int> count;
  thread_local std::vector<int> touched;
  if (count.size() < params_.caps.size()) count.resize(params_.caps.size(), 0);
  touched.clear();
  int rank = 0;
  s.ForEach([&](ElementId e) {
    const int b = block_of_[e];
    if (count[b] == 0) touched.push_back(b);
    if (++count[b] <= params_.caps[b]) ++rank;
  });
  for (int b : touched) count[b] = 0;
  return rank;
}

GraphicMatroid::GraphicMatroid(GraphicParams params)
    : MatroidOracle(static_cast<int>(params.edges.size()), true),
      params_(std::move(params)) {
  if (params_.num_vertices < 0) {
    throw std::invalid_argument("graphic matroid with negative vertex count");
  }
  for (const auto& [u, v] : params_.edges) {
    if (u < 0 || v < 0 || u >= params_.num_vertices ||
        v >= params_.num_vertices) {
      throw std::invalid_argument("edge endpoint out of range");
    }
  }
}

std::unique_ptr<MatroidOracle> GraphicMatroid::Clone() const {
  return std::make_unique<GraphicMatroid>(params_);
}

std::string GraphicMatroid::Describe() const {
  return "graphic(" + std::to_string(params_.num_vertices) + " vertices, " +
         std::to_string(params_.edges.size()) + " edges)";
}

int GraphicMatroid::ForestSize(const GroundSubset& s,
                               bool stop_on_cycle) const {
  thread_local std::vector<int> parent;
  thread_local std::vector<int> touched;
  if (static_cast<int>(parent.size()) < params_.num_vertices) {
    const size_t old = parent.size();
    parent.resize(params_.num_vertices);
    std::iota(parent.begin() + old, parent.end(), static_cast<int>(old));
  }
  touched.clear();
  auto find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  int forest = 0;
  bool cycle = false;
  s.ForEach([&](ElementId e) {
    if (cycle && stop_on_cycle) return;
    const auto [u, v] = params_.edges[e];
    touched.push_back(u);
    touched.push_back(v);
    const int ru = find(u);
    const int rv = find(v);
    if (ru == rv) {
      cycle = true;
    } else {
      parent[ru] = rv;
      ++forest;
    }
  });
  for (int x : touched) parent[x] = x;
  return cycle && stop_on_cycle ? -1 : forest;
}

bool GraphicMatroid::IsIndependentImpl(const GroundSubset& s) const {
  return ForestSize(s, true) >= 0;
}

int GraphicMatroid::RankImpl(const GroundSubset& s) const {
  return ForestSize(s, false);
}

LinearMatroid::LinearMatroid(LinearParams params)
    : MatroidOracle(static_cast<int>(params.columns.size()), true),
      params_(std::move(params)) {
  if (params_.rows < 0) throw std::invalid_argument("negative row count");
  if (!IsPrime(params_.prime) || params_.prime > (int64_t{1} << 30)) {
    throw std::invalid_argument("linear matroid field size must be a prime");
  }
  for (auto& col : params_.columns) {
    if (static_cast<int>(col.size()) != params_.rows) {
      throw std::invalid_argument("column length differs from row count");
    }
    for (auto& x : col) x = ((x % params_.prime) + params_.prime) % params_.prime;
  }
}

std::unique_ptr<MatroidOracle> LinearMatroid::Clone() const {
  return std::make_unique<LinearMatroid>(params_);
}

std::string LinearMatroid::Describe() const {
  return "linear(GF(" + std::to_string(params_.prime) + "), " +
         std::to_string(params_.rows) + "x" +
         std::to_string(params_.columns.size()) + ")";
}

int LinearMatroid::ColumnRank(const GroundSubset& s) const {
  const int64_t p = params_.prime;
  const int m = params_.rows;
  thread_local std::vector<std::vector<int64_t>> basis;  // echelon rows
  thread_local std::vector<int> pivot;
  basis.clear();
  pivot.clear();
  int rank = 0;
  s.ForEach([&](ElementId e) {
    if (rank == m) return;
    std::vector<int64_t> v = params_.columns[e];
    for (int i = 0; i < rank; ++i) {
      const int c = pivot[i];
      if (v[c] != 0) {
        const int64_t f = v[c];
        for (int j = c; j < m; ++j) {
          v[j] = ((v[j] - f * basis[i][j]) % p + p) % p;
        }
      }
    }
    int c = 0;
    while (c < m && v[c] == 0) ++c;
    if (c == m) return;
    const int64_t inv = PowMod(v[c], p - 2, p);
    for (int j = c; j < m; ++j) v[j] = v[j] * inv % p;
    basis.push_back(std::move(v));
    pivot.push_back(c);
    ++rank;
  });
  return rank;
}

bool LinearMatroid::IsIndependentImpl(const GroundSubset& s) const {
  if (s.size() > params_.rows) return false;
  return ColumnRank(s) == s.size();
}

int LinearMatroid::RankImpl(const GroundSubset& s) const {
  return ColumnRank(s);
}

}  // namespace matint
