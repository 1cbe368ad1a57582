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

#ifndef MATINT_GROUND_SUBSET_H_
#define MATINT_GROUND_SUBSET_H_

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace matint {

using ElementId = int;

// A subset of the ground set {0, ..., universe - 1}, stored as a bitset.
class GroundSubset {
 public:
  GroundSubset() = default;
  explicit GroundSubset(int universe);
  GroundSubset(int universe, std::initializer_list<ElementId> elements);
  GroundSubset(int universe, const std::vector<ElementId>& elements);

  static GroundSubset Full(int universe);
  // Universe of at most 64 elements; bit i of mask is element i.
  static GroundSubset FromMask(int universe, uint64_t mask);

  int universe() const { return universe_; }
  int size() const { return size_; }
  bool empty() const { return size_ == 0; }

  bool contains(ElementId e) const {
    return (words_[e >> 6] >> (e & 63)) & 1u;
  }
  void insert(ElementId e);
  void erase(ElementId e);
  void clear();

  GroundSubset With(ElementId e) const;
  GroundSubset Without(ElementId e) const;

  GroundSubset& operator|=(const GroundSubset& other);
  GroundSubset& operator&=(const GroundSubset& other);
  GroundSubset& operator-=(const GroundSubset& other);
  GroundSubset& operator^=(const GroundSubset& other);
  friend GroundSubset operator|(GroundSubset a, const GroundSubset& b) {
    return a |= b;
  }
  friend GroundSubset operator&(GroundSubset a, const GroundSubset& b) {
    return a &= b;
  }
  friend GroundSubset operator-(GroundSubset a, const GroundSubset& b) {
    return a -= b;
  }
  friend GroundSubset operator^(GroundSubset a, const GroundSubset& b) {
    return a ^= b;
  }
  GroundSubset Complement() const;

  bool IsSubsetOf(const GroundSubset& other) const;
  bool operator==(const GroundSubset& other) const {
    return universe_ == other.universe_ && words_ == other.words_;
  }
  bool operator<(const GroundSubset& other) const {
    return words_ < other.words_;
  }

  // Members in ascending order.
  std::vector<ElementId> members() const;

  template <typename F>
  void ForEach(F&& f) const {
    for (size_t w = 0; w < words_.size(); ++w) {
      uint64_t bits = words_[w];
      while (bits != 0) {
        f(static_cast<ElementId>(w * 64 + std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  const std::vector<uint64_t>& words() const { return words_; }
  std::string ToString() const;

 private:
  void Recount();

  int universe_ = 0;
  int size_ = 0;
  std::vector<uint64_t> words_;
};

struct GroundSubsetHash {
  size_t operator()(const GroundSubset& s) const;
};

}  // namespace matint

#endif  // MATINT_GROUND_SUBSET_H_
