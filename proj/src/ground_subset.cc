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

#include "matint/ground_subset.h"

#include <cassert>
#include <stdexcept>

namespace matint {

GroundSubset::GroundSubset(int universe)
    : universe_(universe), words_((universe + 63) / 64, 0) {
  if (universe < 0) throw std::invalid_argument("negative universe size");
}

GroundSubset::GroundSubset(int universe,
                           std::initializer_list<ElementId> elements)
    : GroundSubset(universe) {
  for (ElementId e : elements) insert(e);
}

GroundSubset::GroundSubset(int universe,
                           const std::vector<ElementId>& elements)
    : GroundSubset(universe) {
  for (ElementId e : elements) insert(e);
}

GroundSubset GroundSubset::Full(int universe) {
  GroundSubset s(universe);
  for (auto& w : s.words_) w = ~uint64_t{0};
  if (universe % 64 != 0 && !s.words_.empty()) {
    s.words_.back() = (uint64_t{1} << (universe % 64)) - 1;
  }
  s.size_ = universe;
  return s;
}

GroundSubset GroundSubset::FromMask(int universe, uint64_t mask) {
  if (universe > 64) throw std::invalid_argument("mask universe above 64");
  GroundSubset s(universe);
  if (universe > 0) {
    if (universe < 64) mask &= (uint64_t{1} << universe) - 1;
    s.words_[0] = mask;
    s.size_ = std::popcount(mask);
  }
  return s;
}

void GroundSubset::insert(ElementId e) {
  if (e < 0 || e >= universe_) throw std::out_of_range("element outside universe");
  uint64_t& w = words_[e >> 6];
  const uint64_t bit = uint64_t{1} << (e & 63);
  if (!(w & bit)) {
    w |= bit;
    ++size_;
  }
}

void GroundSubset::erase(ElementId e) {
  if (e < 0 || e >= universe_) throw std::out_of_range("element outside universe");
  uint64_t& w = words_[e >> 6];
  const uint64_t bit = uint64_t{1} << (e & 63);
  if (w & bit) {
    w &= ~bit;
    --size_;
  }
}

void GroundSubset::clear() {
  for (auto& w : words_) w = 0;
  size_ = 0;
}

GroundSubset GroundSubset::With(ElementId e) const {
  GroundSubset s = *this;
  s.insert(e);
  return s;
}

GroundSubset GroundSubset::Without(ElementId e) const {
  GroundSubset s = *this;
  s.erase(e);
  return s;
}

GroundSubset& GroundSubset::operator|=(const GroundSubset& other) {
  assert(universe_ == other.universe_);
  for (size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  Recount();
  return *this;
}

GroundSubset& GroundSubset::operator&=(const GroundSubset& other) {
  assert(universe_ == other.universe_);
  for (size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  Recount();
  return *this;
}

GroundSubset& GroundSubset::operator-=(const GroundSubset& other) {
  assert(universe_ == other.universe_);
  for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  Recount();
  return *this;
}

GroundSubset& GroundSubset::operator^=(const GroundSubset& other) {
  assert(universe_ == other.universe_);
  for (size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  Recount();
  return *this;
}

GroundSubset GroundSubset::Complement() const {
  return Full(universe_) - *this;
}

bool GroundSubset::IsSubsetOf(const GroundSubset& other) const {
  for (size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i]) return false;
  }
  return true;
}

std::vector<ElementId> GroundSubset::members() const {
  std::vector<ElementId> out;
  out.reserve(size_);
  ForEach([&](ElementId e) { out.push_back(e); });
  return out;
}

std::string GroundSubset::ToString() const {
  std::string out = "{";
  bool first = true;
  ForEach([&](ElementId e) {
    if (!first) out += ",";
    out += std::to_string(e);
    first = false;
  });
  return out + "}";
}

void GroundSubset::Recount() {
  int c = 0;
  for (uint64_t w : words_) c += std::popcount(w);
  size_ = c;
}

size_t GroundSubsetHash::operator()(const GroundSubset& s) const {
  size_t h = static_cast<size_t>(s.universe());
  for (uint64_t w : s.words()) {
    h ^= std::hash<uint64_t>{}(w) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace matint
