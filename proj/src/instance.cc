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

#include "matint/instance.h"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace matint {
namespace {

using nlohmann::json;

constexpr char kFormat[] = "matint-instance";
constexpr int kVersion = 1;

double Param(const GenSpec& spec, const std::string& key, double fallback) {
  auto it = spec.params.find(key);
  return it == spec.params.end() ? fallback : it->second;
}

int RandInt(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

PartitionParams PartitionFromLabels(const std::vector<int>& label, int blocks,
                                    const std::vector<int>& caps) {
  PartitionParams p;
  p.blocks.assign(blocks, {});
  for (size_t e = 0; e < label.size(); ++e) {
    p.blocks[label[e]].push_back(static_cast<ElementId>(e));
  }
  p.caps = caps;
  return p;
}

Instance BipartiteMatching(const GenSpec& spec, std::mt19937_64& rng,
                           Instance inst) {
  const int n = spec.n;
  const int left = std::max(1, static_cast<int>(Param(spec, "left", n / 4)));
  const int right = std::max(1, static_cast<int>(Param(spec, "right", n / 4)));
  inst.params["left"] = left;
  inst.params["right"] = right;
  std::vector<int> l(n), r(n);
  for (int e = 0; e < n; ++e) {
    l[e] = RandInt(rng, 0, left - 1);
    r[e] = RandInt(rng, 0, right - 1);
  }
  inst.m1 = PartitionFromLabels(l, left, std::vector<int>(left, 1));
  inst.m2 = PartitionFromLabels(r, right, std::vector<int>(right, 1));
  return inst;
}

Instance BipartitePath(const GenSpec& spec, Instance inst) {
  // Edge e joins path vertices e and e + 1; even vertices are on the left.
  const int n = spec.n;
  const int vertices = n + 1;
  std::vector<int> l(n), r(n);
  for (int e = 0; e < n; ++e) {
    const int even = (e % 2 == 0) ? e : e + 1;
    const int odd = (e % 2 == 0) ? e + 1 : e;
    l[e] = even / 2;
    r[e] = odd / 2;
  }
  const int left = (vertices + 1) / 2;
  const int right = vertices / 2;
  inst.m1 = PartitionFromLabels(l, left, std::vector<int>(left, 1));
  inst.m2 = PartitionFromLabels(r, std::max(right, 1),
                                std::vector<int>(std::max(right, 1), 1));
  return inst;
}

Instance GraphicPartition(const GenSpec& spec, std::mt19937_64& rng,
                          Instance inst) {
  const int n = spec.n;
  const int vertices =
      std::max(2, static_cast<int>(Param(spec, "vertices", n / 2 + 1)));
  const int colors = std::max(1, static_cast<int>(Param(spec, "colors", n / 3 + 1)));
  const int cap = std::max(0, static_cast<int>(Param(spec, "cap", 1)));
  inst.params["vertices"] = vertices;
  inst.params["colors"] = colors;
  inst.params["cap"] = cap;
  GraphicParams g;
  g.num_vertices = vertices;
  std::vector<int> color(n);
  for (int e = 0; e < n; ++e) {
    const int u = RandInt(rng, 0, vertices - 1);
    int v = RandInt(rng, 0, vertices - 2);
    if (v >= u) ++v;
    g.edges.emplace_back(u, v);
    color[e] = RandInt(rng, 0, colors - 1);
  }
  inst.m1 = g;
  inst.m2 = PartitionFromLabels(color, colors, std::vector<int>(colors, cap));
  return inst;
}

LinearParams SparseColumns(int n, int rows, int64_t prime, int max_support,
                           std::mt19937_64& rng) {
  LinearParams p;
  p.prime = prime;
  p.rows = rows;
  for (int e = 0; e < n; ++e) {
    std::vector<int64_t> col(rows, 0);
    const int support = RandInt(rng, 1, std::min(max_support, rows));
    for (int i = 0; i < support; ++i) {
      col[RandInt(rng, 0, rows - 1)] =
          std::uniform_int_distribution<int64_t>(1, prime - 1)(rng);
    }
    p.columns.push_back(std::move(col));
  }
  return p;
}

Instance LinearLinear(const GenSpec& spec, std::mt19937_64& rng,
                      Instance inst) {
  const int n = spec.n;
  const int rows1 = std::max(1, static_cast<int>(Param(spec, "rows1", n / 3 + 1)));
  const int rows2 = std::max(1, static_cast<int>(Param(spec, "rows2", n / 2 + 1)));
  const int64_t prime = static_cast<int64_t>(Param(spec, "prime", 2003));
  const int support = std::max(1, static_cast<int>(Param(spec, "support", 2)));
  inst.params["rows1"] = rows1;
  inst.params["rows2"] = rows2;
  inst.params["prime"] = static_cast<double>(prime);
  inst.params["support"] = support;
  inst.m1 = SparseColumns(n, rows1, prime, support, rng);
  inst.m2 = SparseColumns(n, rows2, prime, support, rng);
  return inst;
}

Instance UniformPartition(const GenSpec& spec, std::mt19937_64& rng,
                          Instance inst) {
  const int n = spec.n;
  const int k = std::max(0, static_cast<int>(Param(spec, "k", n / 3)));
  const int blocks = std::max(1, static_cast<int>(Param(spec, "blocks", n / 4 + 1)));
  const int max_cap = std::max(1, static_cast<int>(Param(spec, "max_cap", 2)));
  inst.params["k"] = k;
  inst.params["blocks"] = blocks;
  inst.params["max_cap"] = max_cap;
  std::vector<int> label(n);
  for (int e = 0; e < n; ++e) label[e] = RandInt(rng, 0, blocks - 1);
  std::vector<int> caps(blocks);
  for (int b = 0; b < blocks; ++b) caps[b] = RandInt(rng, 1, max_cap);
  inst.m1 = UniformParams{n, k};
  inst.m2 = PartitionFromLabels(label, blocks, caps);
  return inst;
}

json MatroidToJson(const MatroidSpec& spec) {
  json j;
  j["kind"] = KindName(spec);
  json p;
  if (auto* u = std::get_if<UniformParams>(&spec)) {
    p["n"] = u->n;
    p["k"] = u->k;
  } else if (auto* q = std::get_if<PartitionParams>(&spec)) {
    p["blocks"] = q->blocks;
    p["caps"] = q->caps;
  } else if (auto* g = std::get_if<GraphicParams>(&spec)) {
    p["num_vertices"] = g->num_vertices;
    json edges = json::array();
    for (const auto& [a, b] : g->edges) edges.push_back({a, b});
    p["edges"] = edges;
  } else if (auto* l = std::get_if<LinearParams>(&spec)) {
    p["prime"] = l->prime;
    p["rows"] = l->rows;
    p["columns"] = l->columns;
  }
  j["params"] = p;
  return j;
}

MatroidSpec MatroidFromJson(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  const json& p = j.at("params");
  if (kind == "uniform") {
    return UniformParams{p.at("n").get<int>(), p.at("k").get<int>()};
  }
  if (kind == "partition") {
    PartitionParams q;
    q.blocks = p.at("blocks").get<std::vector<std::vector<ElementId>>>();
    q.caps = p.at("caps").get<std::vector<int>>();
    return q;
  }
  if (kind == "graphic") {
    GraphicParams g;
    g.num_vertices = p.at("num_vertices").get<int>();
    for (const auto& e : p.at("edges")) {
      g.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    }
    return g;
  }
  if (kind == "linear") {
    LinearParams l;
    l.prime = p.at("prime").get<int64_t>();
    l.rows = p.at("rows").get<int>();
    l.columns = p.at("columns").get<std::vector<std::vector<int64_t>>>();
    return l;
  }
  throw std::invalid_argument("unknown matroid kind: " + kind);
}

}  // namespace

std::vector<std::string> FamilyNames() {
  return {"bipartite-matching", "graphic-partition", "linear-linear",
          "uniform-partition", "bipartite-path"};
}

Instance Generate(const GenSpec& spec) {
  if (spec.n < 0) throw std::invalid_argument("negative instance size");
  std::mt19937_64 rng(spec.seed);
  Instance inst;
  inst.family = spec.family;
  inst.seed = spec.seed;
  inst.params = spec.params;
  inst.params["n"] = spec.n;
  if (spec.family == "bipartite-matching") return BipartiteMatching(spec, rng, inst);
  if (spec.family == "graphic-partition") return GraphicPartition(spec, rng, inst);
  if (spec.family == "linear-linear") return LinearLinear(spec, rng, inst);
  if (spec.family == "uniform-partition") return UniformPartition(spec, rng, inst);
  if (spec.family == "bipartite-path") return BipartitePath(spec, inst);
  throw std::invalid_argument("unknown family: " + spec.family);
}

std::string InstanceToJson(const Instance& inst) {
  json j;
  j["format"] = kFormat;
  j["version"] = kVersion;
  j["family"] = inst.family;
  j["seed"] = inst.seed;
  j["params"] = inst.params;
  j["oracle"] = inst.oracle;
  j["n"] = inst.n();
  j["matroids"] = json::array({MatroidToJson(inst.m1), MatroidToJson(inst.m2)});
  return j.dump(1) + "\n";
}

Instance InstanceFromJson(const std::string& text) {
  try {
    const json j = json::parse(text);
    if (j.at("format").get<std::string>() != kFormat ||
        j.at("version").get<int>() != kVersion) {
      throw std::invalid_argument("unsupported instance format or version");
    }
    Instance inst;
    inst.family = j.at("family").get<std::string>();
    inst.seed = j.at("seed").get<uint64_t>();
    inst.params = j.at("params").get<std::map<std::string, double>>();
    inst.oracle = j.value("oracle", std::string("rank"));
    if (inst.oracle != "rank" && inst.oracle != "independence") {
      throw std::invalid_argument("oracle must be rank or independence");
    }
    const json& ms = j.at("matroids");
    if (!ms.is_array() || ms.size() != 2) {
      throw std::invalid_argument("an instance has exactly two matroids");
    }
    inst.m1 = MatroidFromJson(ms[0]);
    inst.m2 = MatroidFromJson(ms[1]);
    if (GroundSizeOf(inst.m1) != GroundSizeOf(inst.m2) ||
        j.at("n").get<int>() != GroundSizeOf(inst.m1)) {
      throw std::invalid_argument("matroids disagree on the ground set size");
    }
    return inst;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed instance: ") + e.what());
  }
}

Instance LoadInstance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return InstanceFromJson(buf.str());
}

void SaveInstance(const Instance& inst, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << InstanceToJson(inst);
}

BuiltInstance Build(const Instance& inst) {
  BuiltInstance b;
  b.m1 = MakeMatroid(inst.m1);
  b.m2 = MakeMatroid(inst.m2);
  if (inst.oracle == "independence") {
    b.m1 = std::make_unique<IndependenceOnlyMatroid>(
        std::shared_ptr<const MatroidOracle>(std::move(b.m1)));
    b.m2 = std::make_unique<IndependenceOnlyMatroid>(
        std::shared_ptr<const MatroidOracle>(std::move(b.m2)));
  }
  return b;
}

}  // namespace matint
