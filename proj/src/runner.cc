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

#include "matint/runner.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "matint/augset.h"
#include "matint/exchange.h"
#include "matint/fractional.h"
#include "matint/greedy.h"
#include "matint/indep_solver.h"
#include "matint/rank_solver.h"
#include "matint/reference.h"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace matint {
namespace {

using nlohmann::json;

std::string FormatDouble(double v) {
  std::ostringstream out;
  out << std::setprecision(6) << v;
  return out.str();
}

std::string FormatDStop(int d) {
  return d == kNoPath ? "none" : std::to_string(d);
}

std::vector<std::string> SplitCsv(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

GroundSubset RandomSubset(int n, std::mt19937_64& rng) {
  GroundSubset s(n);
  if (n == 0) return s;
  const int size = std::uniform_int_distribution<int>(0, n)(rng);
  std::vector<ElementId> ids(n);
  std::iota(ids.begin(), ids.end(), 0);
  std::shuffle(ids.begin(), ids.end(), rng);
  for (int i = 0; i < size; ++i) s.insert(ids[i]);
  return s;
}

GroundSubset RandomCommonIndependent(const MatroidOracle& m1,
                                     const MatroidOracle& m2,
                                     std::mt19937_64& rng) {
  const int n = m1.ground_size();
  std::vector<ElementId> ids(n);
  std::iota(ids.begin(), ids.end(), 0);
  std::shuffle(ids.begin(), ids.end(), rng);
  const int stop = std::uniform_int_distribution<int>(0, n)(rng);
  GroundSubset s(n);
  for (int i = 0; i < stop; ++i) {
    GroundSubset t = s.With(ids[i]);
    if (m1.IsIndependent(t) && m2.IsIndependent(t)) s = std::move(t);
  }
  return s;
}

std::string LabelsToString(const DistanceLabels& d) {
  std::string out = "[";
  for (size_t i = 0; i < d.dist.size(); ++i) {
    if (i) out += ",";
    out += DistanceLabels::Finite(d.dist[i]) ? std::to_string(d.dist[i]) : "inf";
  }
  return out + "]";
}

PropertyResult NewProperty(std::string name) {
  PropertyResult r;
  r.name = std::move(name);
  return r;
}

}  // namespace

const std::vector<std::string>& AlgorithmNames() {
  static const std::vector<std::string> names = {
      "exact-rank",    "approx-rank",   "exact-indep", "approx-augset",
      "approx-sparse", "greedy",        "reference"};
  return names;
}

bool IsApproximate(const std::string& algorithm) {
  return algorithm == "approx-rank" || algorithm == "approx-augset" ||
         algorithm == "approx-sparse";
}

RunRecord SolveWith(const MatroidOracle& m1, const MatroidOracle& m2,
                    const std::string& algorithm, const SolveConfig& config) {
  RunRecord rec;
  rec.algorithm = algorithm;
  rec.n = m1.ground_size();
  rec.eps = IsApproximate(algorithm) ? config.eps : 0;
  if (m1.ground_size() != m2.ground_size()) {
    throw std::invalid_argument("matroids have different ground sets");
  }
  SolveResult res;
  if (algorithm == "exact-rank" || algorithm == "approx-rank") {
    if (!m1.supports_rank() || !m2.supports_rank()) {
      throw CapabilityError(algorithm + " needs rank oracles");
    }
    res = algorithm == "exact-rank" ? SolveExactRank(m1, m2)
                                    : SolveApproxRank(m1, m2, config.eps);
  } else if (algorithm == "exact-indep") {
    res = SolveExactIndep(m1, m2);
  } else if (algorithm == "approx-augset") {
    AugsetOptions opt;
    opt.p = config.p_override;
    opt.cutoff = config.cutoff;
    res = SolveApproxAugset(m1, m2, config.eps, opt).result;
  } else if (algorithm == "approx-sparse") {
    AugsetOptions opt;
    opt.p = config.p_override;
    opt.cutoff = config.cutoff;
    res = SolveApproxSparse(m1, m2, config.eps, config.seed, opt).result;
  } else if (algorithm == "greedy") {
    CallMeter meter(m1, m2);
    res.solution = GreedyMaximalCommon(m1, m2);
    res.d_stop = kNoPath;
    res.stats = meter.Finish();
  } else if (algorithm == "reference") {
    res = SolveReference(m1, m2);
  } else {
    throw std::invalid_argument("unknown algorithm: " + algorithm);
  }
  rec.r_found = res.solution.size();
  rec.phases = res.phases;
  rec.independence_calls = res.stats.independence_calls;
  rec.rank_calls = res.stats.rank_calls;
  rec.wall_ms = res.stats.wall_ms;
  rec.d_stop = algorithm == "greedy" ? kNoPath : res.d_stop;
  rec.solution = res.solution;
  return rec;
}

RunRecord SolveInstance(const Instance& inst, const std::string& algorithm,
                        const SolveConfig& config) {
  BuiltInstance b = Build(inst);
  return SolveWith(*b.m1, *b.m2, algorithm, config);
}

std::string RecordToJson(const RunRecord& r, bool with_solution) {
  json j;
  j["algorithm"] = r.algorithm;
  j["n"] = r.n;
  j["r_found"] = r.r_found;
  j["phases"] = r.phases;
  j["independence_calls"] = r.independence_calls;
  j["rank_calls"] = r.rank_calls;
  j["wall_ms"] = r.wall_ms;
  if (IsApproximate(r.algorithm)) j["eps"] = r.eps;
  if (r.d_stop != kNoPath) j["d_stop"] = r.d_stop;
  if (with_solution) j["solution"] = r.solution.members();
  return j.dump(2) + "\n";
}

BenchGrid DefaultGrid() {
  BenchGrid g;
  g.families = {"bipartite-matching", "graphic-partition", "linear-linear",
                "uniform-partition"};
  g.sizes = {50, 100, 200, 400};
  g.eps = {0.5, 0.2, 0.1, 0.05};
  g.algorithms = AlgorithmNames();
  g.seeds = {1};
  return g;
}

BenchGrid GridFromJson(const std::string& text, BenchGrid g) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad bench config: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("bench config is not an object");
  try {
    if (j.contains("families")) g.families = j["families"].get<std::vector<std::string>>();
    if (j.contains("sizes")) g.sizes = j["sizes"].get<std::vector<int>>();
    if (j.contains("eps")) g.eps = j["eps"].get<std::vector<double>>();
    if (j.contains("algorithms")) g.algorithms = j["algorithms"].get<std::vector<std::string>>();
    if (j.contains("seeds")) g.seeds = j["seeds"].get<std::vector<uint64_t>>();
    if (j.contains("brute_force_cap")) g.brute_force_cap = j["brute_force_cap"].get<int>();
    if (j.contains("threads")) g.threads = j["threads"].get<int>();
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad bench config: ") + e.what());
  }
  return g;
}

BenchGrid ApplyEnvOverrides(BenchGrid g) {
  auto env = [](const char* name) -> const char* { return std::getenv(name); };
  try {
    if (const char* v = env("MATINT_FAMILIES")) g.families = SplitCsv(v);
    if (const char* v = env("MATINT_ALGORITHMS")) g.algorithms = SplitCsv(v);
    if (const char* v = env("MATINT_SIZES")) {
      g.sizes.clear();
      for (const auto& s : SplitCsv(v)) g.sizes.push_back(std::stoi(s));
    }
    if (const char* v = env("MATINT_EPS")) {
      g.eps.clear();
      for (const auto& s : SplitCsv(v)) g.eps.push_back(std::stod(s));
    }
    if (const char* v = env("MATINT_SEEDS")) {
      g.seeds.clear();
      for (const auto& s : SplitCsv(v)) g.seeds.push_back(std::stoull(s));
    }
    if (const char* v = env("MATINT_BRUTE_FORCE_CAP")) g.brute_force_cap = std::stoi(v);
    if (const char* v = env("MATINT_THREADS")) g.threads = std::stoi(v);
  } catch (const std::logic_error&) {
    throw std::invalid_argument("malformed MATINT_* environment override");
  }
  return g;
}

const std::vector<std::string>& BenchColumns() {
  static const std::vector<std::string> cols = {
      "family", "n",      "seed",   "algorithm",          "eps",
      "r_exact", "r_found", "phases", "independence_calls", "rank_calls",
      "d_stop", "wall_ms", "status"};
  return cols;
}

BenchOutput RunBench(const BenchGrid& grid) {
  for (const auto& a : grid.algorithms) {
    if (std::find(AlgorithmNames().begin(), AlgorithmNames().end(), a) ==
        AlgorithmNames().end()) {
      throw std::invalid_argument("unknown algorithm: " + a);
    }
  }
  for (double e : grid.eps) {
    if (!(e > 0 && e < 1)) throw std::invalid_argument("eps must lie in (0, 1)");
  }
  struct Cell {
    std::string family;
    int n;
    uint64_t seed;
  };
  std::vector<Cell> cells;
  for (const auto& f : grid.families) {
    for (int n : grid.sizes) {
      for (uint64_t s : grid.seeds) cells.push_back({f, n, s});
    }
  }
  std::vector<std::string> rows(cells.size());
  std::vector<std::string> plot(cells.size());
  std::vector<int> failures(cells.size(), 0);
  std::vector<int> counts(cells.size(), 0);
#ifdef _OPENMP
  const int threads = grid.threads > 0 ? grid.threads : omp_get_max_threads();
#endif
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (size_t c = 0; c < cells.size(); ++c) {
    const Cell& cell = cells[c];
    std::ostringstream out;
    std::ostringstream pl;
    auto prefix = [&] {
      return cell.family + "," + std::to_string(cell.n) + "," +
             std::to_string(cell.seed) + ",";
    };
    Instance inst;
    BuiltInstance b;
    int r_exact = -1;
    std::string instance_error;
    try {
      inst = Generate({cell.family, cell.n, cell.seed, {}});
      b = Build(inst);
      r_exact = SolveExactIndep(*b.m1, *b.m2).solution.size();
      if (cell.n <= grid.brute_force_cap &&
          BruteForceMaxCommon(*b.m1, *b.m2).size() != r_exact) {
        instance_error = "exact solver disagrees with brute force";
      }
    } catch (const std::exception& e) {
      instance_error = e.what();
    }
    for (const auto& algo : grid.algorithms) {
      std::vector<double> eps_list = IsApproximate(algo) ? grid.eps
                                                         : std::vector<double>{0};
      for (double eps : eps_list) {
        ++counts[c];
        const std::string eps_text = IsApproximate(algo) ? FormatDouble(eps) : "";
        if (!instance_error.empty()) {
          out << prefix() << algo << "," << eps_text << ",,,,,,,,failed: "
              << instance_error << "\n";
          ++failures[c];
          continue;
        }
        try {
          SolveConfig cfg;
          cfg.eps = eps;
          cfg.seed = cell.seed;
          RunRecord r = SolveWith(*b.m1, *b.m2, algo, cfg);
          std::string status = "ok";
          if (!b.m1->IsIndependent(r.solution) || !b.m2->IsIndependent(r.solution)) {
            status = "failed: solution not common independent";
          } else if (!IsApproximate(algo) && algo != "greedy" &&
                     r.r_found != r_exact) {
            status = "failed: size differs from the exact optimum";
          }
          if (status != "ok") ++failures[c];
          out << prefix() << algo << "," << eps_text << "," << r_exact << ","
              << r.r_found << "," << r.phases << "," << r.independence_calls
              << "," << r.rank_calls << "," << FormatDStop(r.d_stop) << ","
              << FormatDouble(r.wall_ms) << "," << status << "\n";
          const std::string series =
              IsApproximate(algo) ? algo + "(eps=" + eps_text + ")" : algo;
          pl << cell.n << "," << (r.independence_calls + r.rank_calls) << ","
             << series << "," << cell.family << "," << cell.seed << "\n";
        } catch (const std::exception& e) {
          ++failures[c];
          out << prefix() << algo << "," << eps_text << "," << r_exact
              << ",,,,,,,failed: " << e.what() << "\n";
        }
      }
    }
    rows[c] = out.str();
    plot[c] = pl.str();
  }
  BenchOutput result;
  std::string header;
  for (size_t i = 0; i < BenchColumns().size(); ++i) {
    header += (i ? "," : "") + BenchColumns()[i];
  }
  result.csv = header + "\n";
  result.plot = "x,y,series,family,seed\n";
  for (size_t c = 0; c < cells.size(); ++c) {
    result.csv += rows[c];
    result.plot += plot[c];
    result.cells += counts[c];
    result.failed_cells += failures[c];
  }
  return result;
}

std::vector<PropertyResult> Verify(const MatroidOracle& m1,
                                   const MatroidOracle& m2,
                                   const VerifyConfig& config) {
  std::vector<PropertyResult> out;
  std::mt19937_64 rng(config.seed);
  const int n = m1.ground_size();
  const MatroidOracle* ms[2] = {&m1, &m2};

  for (int i = 0; i < 2; ++i) {
    const MatroidOracle& m = *ms[i];
    const std::string tag = "M" + std::to_string(i + 1);
    PropertyResult empty = NewProperty(tag + " empty set independent");
    empty.pass = m.IsIndependent(GroundSubset(n));
    out.push_back(empty);

    // Walk down from random independent sets; every step must stay
    // independent.
    PropertyResult her = NewProperty(tag + " hereditary");
    for (int t = 0; t < config.samples && her.pass; ++t) {
      GroundSubset x = RandomSubset(n, rng);
      while (!x.empty() && !m.IsIndependent(x)) {
        std::vector<ElementId> mem = x.members();
        x.erase(mem[std::uniform_int_distribution<size_t>(0, mem.size() - 1)(rng)]);
      }
      while (!x.empty()) {
        const std::vector<ElementId> mem = x.members();
        for (ElementId e : mem) {
          if (!m.IsIndependent(x.Without(e))) {
            her.pass = false;
            her.counterexample = "independent " + x.ToString() +
                                 " but dependent after removing " +
                                 std::to_string(e);
            break;
          }
        }
        if (!her.pass) break;
        x.erase(mem[std::uniform_int_distribution<size_t>(0, mem.size() - 1)(rng)]);
      }
    }
    out.push_back(her);

    if (m.supports_rank()) {
      PropertyResult rc = NewProperty(tag + " rank agrees with independence");
      for (int t = 0; t < config.samples && rc.pass; ++t) {
        const GroundSubset x = RandomSubset(n, rng);
        if (m.IsIndependent(x) != (m.Rank(x) == x.size())) {
          rc.pass = false;
          rc.counterexample = x.ToString();
        }
      }
      out.push_back(rc);
    }

    if (n <= 10) {
      PropertyResult ex = NewProperty(tag + " exchange axiom");
      std::vector<GroundSubset> indep;
      for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
        GroundSubset x = GroundSubset::FromMask(n, mask);
        if (m.IsIndependent(x)) indep.push_back(std::move(x));
      }
      for (int t = 0; t < config.samples * 10 && ex.pass && !indep.empty(); ++t) {
        std::uniform_int_distribution<size_t> pick(0, indep.size() - 1);
        const GroundSubset& a = indep[pick(rng)];
        const GroundSubset& b = indep[pick(rng)];
        if (a.size() >= b.size()) continue;
        bool found = false;
        (b - a).ForEach([&](ElementId e) {
          if (!found && m.IsIndependent(a.With(e))) found = true;
        });
        if (!found) {
          ex.pass = false;
          ex.counterexample = "I=" + a.ToString() + " J=" + b.ToString();
        }
      }
      out.push_back(ex);
    }
  }

  const bool rank_ok = m1.supports_rank() && m2.supports_rank();
  {
    PropertyResult dist = NewProperty("distance labels match the explicit exchange graph");
    PropertyResult arcs = NewProperty("out_arc agrees with the explicit exchange graph");
    for (int t = 0; t < std::max(1, config.samples / 10) && dist.pass; ++t) {
      const GroundSubset s = RandomCommonIndependent(m1, m2, rng);
      const ExplicitExchangeGraph g = BuildExplicit(m1, m2, s);
      const DistanceLabels truth = g.BfsDistances();
      IndepDistanceOptions full;
      full.stop_at_sink = false;
      const DistanceLabels indep =
          GetDistancesIndep(m1, m2, s, BaseLowerBounds(s), full).labels;
      if (indep.dist != truth.dist) {
        dist.pass = false;
        dist.counterexample = "S=" + s.ToString() + " expected " +
                              LabelsToString(truth) + " got " +
                              LabelsToString(indep);
      }
      if (rank_ok && dist.pass) {
        const DistanceLabels rk = GetDistancesRank(m1, m2, s);
        if (rk.dist != truth.dist) {
          dist.pass = false;
          dist.counterexample = "S=" + s.ToString() + " expected " +
                                LabelsToString(truth) + " got " +
                                LabelsToString(rk);
        }
        for (int a = 0; a < n + 1 && arcs.pass; ++a) {
          GroundSubset pl = RandomSubset(n, rng);
          if (a < n) pl.erase(a);
          const bool sink = rng() & 1;
          auto v = OutArc(m1, m2, s, a, pl, sink);
          bool any = false;
          for (int w : g.OutArcs(a)) {
            if ((w < n && pl.contains(w)) || (w == SinkVertex(n) && sink)) any = true;
          }
          if (v.has_value() != any ||
              (v && (!g.HasArc(a, *v) ||
                     (*v < n ? !pl.contains(*v) : !sink)))) {
            arcs.pass = false;
            arcs.counterexample = "S=" + s.ToString() + " a=" + std::to_string(a) +
                                  " pool=" + pl.ToString();
          }
        }
      }
    }
    out.push_back(dist);
    if (rank_ok) out.push_back(arcs);
  }

  {
    PropertyResult agree = NewProperty("exact solvers agree");
    PropertyResult mono = NewProperty("distances never decrease across augmentations");
    SolveObserver obs;
    if (n <= 60) {
      obs.on_augment = [&](const GroundSubset& before, const GroundSubset& after) {
        if (!mono.pass) return;
        const DistanceLabels d0 = BuildExplicit(m1, m2, before).BfsDistances();
        const DistanceLabels d1 = BuildExplicit(m1, m2, after).BfsDistances();
        for (int v = 0; v < n + 2; ++v) {
          if (d0[v] < d0.sink() && d1[v] < d0[v]) {
            mono.pass = false;
            mono.counterexample = "S=" + before.ToString() + " -> " +
                                  after.ToString() + " vertex " + std::to_string(v);
          }
        }
      };
    }
    const int r_indep = SolveExactIndep(m1, m2, &obs).solution.size();
    const int r_ref = SolveReference(m1, m2, &obs).solution.size();
    std::string sizes = "exact-indep=" + std::to_string(r_indep) +
                        " reference=" + std::to_string(r_ref);
    bool ok = r_indep == r_ref;
    if (rank_ok) {
      const int r_rank = SolveExactRank(m1, m2, &obs).solution.size();
      sizes += " exact-rank=" + std::to_string(r_rank);
      ok = ok && r_rank == r_indep;
    }
    if (n <= config.brute_force_cap) {
      const int r_bf = BruteForceMaxCommon(m1, m2).size();
      sizes += " brute-force=" + std::to_string(r_bf);
      ok = ok && r_bf == r_indep;
    }
    agree.pass = ok;
    agree.detail = sizes;
    if (!ok) agree.counterexample = sizes;
    out.push_back(agree);
    if (n <= 60) out.push_back(mono);

    PropertyResult sets = NewProperty("augmenting sets satisfy their defining conditions");
    AugsetOptions opt;
    opt.on_augmenting_set = [&](const GroundSubset& s, const Layers& layers,
                                const AugmentingSet& pi) {
      if (!sets.pass) return;
      auto bad = CheckAugmentingSet(m1, m2, s, layers, pi);
      if (!bad.empty()) {
        sets.pass = false;
        sets.counterexample = "S=" + s.ToString() + ": " + bad.front();
      }
    };
    const int r_aug = SolveApproxAugset(m1, m2, 0.01, opt).result.solution.size();
    sets.detail = "approx-augset(eps=0.01) size " + std::to_string(r_aug);
    out.push_back(sets);
  }
  return out;
}

SingletonDependentMatroid::SingletonDependentMatroid(
    std::shared_ptr<const MatroidOracle> inner)
    : MatroidOracle(inner->ground_size(), inner->supports_rank()),
      inner_(std::move(inner)) {}

std::unique_ptr<MatroidOracle> SingletonDependentMatroid::Clone() const {
  return std::make_unique<SingletonDependentMatroid>(
      std::shared_ptr<const MatroidOracle>(inner_->Clone()));
}

std::string SingletonDependentMatroid::Describe() const {
  return "singleton-dependent(" + inner_->Describe() + ")";
}

bool SingletonDependentMatroid::IsIndependentImpl(const GroundSubset& s) const {
  if (s.size() == 1) return false;
  return inner_->IsIndependent(s);
}

int SingletonDependentMatroid::RankImpl(const GroundSubset& s) const {
  return inner_->Rank(s);
}

}  // namespace matint
