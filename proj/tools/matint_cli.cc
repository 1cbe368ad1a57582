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

// Command line front end: gen, solve, bench, verify.
//
// Exit codes: 0 success, 1 a verification or benchmark check failed,
// 2 usage error (bad flags, unreadable input, capability mismatch).

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "matint/instance.h"
#include "matint/oracle.h"
#include "matint/runner.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

void WriteOut(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << text;
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::map<std::string, double> ParseParams(const std::vector<std::string>& kv) {
  std::map<std::string, double> out;
  for (const auto& item : kv) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("--param expects key=value, got " + item);
    }
    try {
      out[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
    } catch (const std::logic_error&) {
      throw std::invalid_argument("--param value is not a number: " + item);
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matroid intersection solvers with oracle-call accounting"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate an instance file");
  matint::GenSpec gen_spec;
  std::vector<std::string> gen_params;
  std::string gen_oracle = "rank";
  std::string gen_out;
  gen->add_option("--family", gen_spec.family, "Instance family")
      ->required()
      ->check(CLI::IsMember(matint::FamilyNames()));
  gen->add_option("--n", gen_spec.n, "Ground set size")->required();
  gen->add_option("--seed", gen_spec.seed, "Generator seed");
  gen->add_option("--param", gen_params, "Family parameter key=value");
  gen->add_option("--oracle", gen_oracle, "rank or independence")
      ->check(CLI::IsMember({"rank", "independence"}));
  gen->add_option("--out", gen_out, "Output file (default stdout)");

  // solve
  auto* solve = app.add_subcommand("solve", "Solve one instance");
  std::string solve_in;
  std::string algo = "exact-indep";
  matint::SolveConfig cfg;
  std::string solve_out;
  bool with_solution = false;
  solve->add_option("instance", solve_in, "Instance file")->required();
  solve->add_option("--algo", algo, "Algorithm")
      ->check(CLI::IsMember(matint::AlgorithmNames()));
  solve->add_option("--eps", cfg.eps, "Approximation parameter in (0, 1)");
  solve->add_option("--seed", cfg.seed, "Sampling seed (approx-sparse)");
  solve->add_option("--p-override", cfg.p_override,
                    "Gap threshold of the augmenting-set solver");
  solve->add_option("--cutoff", cfg.cutoff,
                    "Largest searched sink distance (approx-augset)");
  solve->add_option("--out", solve_out, "Record file (default stdout)");
  solve->add_flag("--with-solution", with_solution, "Include the solution set");

  // bench
  auto* bench = app.add_subcommand("bench", "Run a benchmark grid");
  std::string bench_config;
  std::string bench_out = "bench";
  int bench_threads = -1;
  bench->add_option("--config", bench_config, "Grid file (JSON)");
  bench->add_option("--out", bench_out,
                    "Output prefix; writes PREFIX.csv and PREFIX.plot.csv");
  bench->add_option("--threads", bench_threads, "Worker threads");

  // verify
  auto* verify = app.add_subcommand("verify", "Check matroid and solver properties");
  std::string verify_in;
  matint::VerifyConfig vcfg;
  std::string fault;
  verify->add_option("instance", verify_in, "Instance file")->required();
  verify->add_option("--seed", vcfg.seed, "Sampling seed");
  verify->add_option("--brute-force-cap", vcfg.brute_force_cap,
                     "Largest n checked by exhaustive search");
  verify->add_option("--samples", vcfg.samples, "Random samples per check");
  verify->add_option("--inject-fault", fault,
                     "Corrupt the first matroid (singleton-dependent)")
      ->check(CLI::IsMember({"singleton-dependent"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*gen) {
      gen_spec.params = ParseParams(gen_params);
      matint::Instance inst = matint::Generate(gen_spec);
      inst.oracle = gen_oracle;
      WriteOut(gen_out, matint::InstanceToJson(inst));
      return kExitOk;
    }

    if (*solve) {
      const matint::Instance inst = matint::LoadInstance(solve_in);
      const matint::RunRecord rec = matint::SolveInstance(inst, algo, cfg);
      WriteOut(solve_out, matint::RecordToJson(rec, with_solution));
      return kExitOk;
    }

    if (*bench) {
      matint::BenchGrid grid = matint::DefaultGrid();
      if (!bench_config.empty()) {
        grid = matint::GridFromJson(ReadFile(bench_config), grid);
      }
      grid = matint::ApplyEnvOverrides(grid);
      if (bench_threads >= 0) grid.threads = bench_threads;
      const matint::BenchOutput out = matint::RunBench(grid);
      WriteOut(bench_out + ".csv", out.csv);
      WriteOut(bench_out + ".plot.csv", out.plot);
      std::cerr << out.cells << " runs, " << out.failed_cells << " failed\n";
      return out.failed_cells == 0 ? kExitOk : kExitCheckFailed;
    }

    if (*verify) {
      const matint::Instance inst = matint::LoadInstance(verify_in);
      matint::BuiltInstance b = matint::Build(inst);
      std::unique_ptr<matint::MatroidOracle> m1 = std::move(b.m1);
      if (!fault.empty()) {
        m1 = std::make_unique<matint::SingletonDependentMatroid>(
            std::shared_ptr<const matint::MatroidOracle>(std::move(m1)));
      }
      const auto report = matint::Verify(*m1, *b.m2, vcfg);
      bool ok = true;
      for (const auto& r : report) {
        std::cout << (r.pass ? "PASS " : "FAIL ") << r.name;
        if (!r.detail.empty()) std::cout << " (" << r.detail << ")";
        std::cout << "\n";
        if (!r.pass) {
          ok = false;
          std::cout << "  counterexample: " << r.counterexample << "\n";
        }
      }
      return ok ? kExitOk : kExitCheckFailed;
    }
  } catch (const matint::CapabilityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitUsage;
}
