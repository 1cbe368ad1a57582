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

#ifndef MATINT_INSTANCE_H_
#define MATINT_INSTANCE_H_

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "matint/families.h"

namespace matint {

// A matroid intersection instance: two explicit matroids on the same ground
// set plus the generator settings that produced them. The file format is
// described in docs/instance_format.md.
struct Instance {
  std::string family;
  uint64_t seed = 0;
  std::map<std::string, double> params;
  // "rank" or "independence"; the latter hides the rank capability.
  std::string oracle = "rank";
  MatroidSpec m1;
  MatroidSpec m2;

  int n() const { return GroundSizeOf(m1); }
};

struct GenSpec {
  std::string family;
  int n = 0;
  uint64_t seed = 0;
  // Family-specific overrides (see FamilyNames for the accepted keys).
  std::map<std::string, double> params;
};

// bipartite-matching, graphic-partition, linear-linear, uniform-partition,
// bipartite-path.
std::vector<std::string> FamilyNames();

// Deterministic for a given spec. Throws std::invalid_argument on an unknown
// family or bad sizes.
Instance Generate(const GenSpec& spec);

std::string InstanceToJson(const Instance& inst);
// Throws std::invalid_argument on malformed input.
Instance InstanceFromJson(const std::string& text);

Instance LoadInstance(const std::string& path);
void SaveInstance(const Instance& inst, const std::string& path);

struct BuiltInstance {
  std::unique_ptr<MatroidOracle> m1;
  std::unique_ptr<MatroidOracle> m2;
};
BuiltInstance Build(const Instance& inst);

}  // namespace matint

#endif  // MATINT_INSTANCE_H_
