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

#include "cli.h"

#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "matroid_union/bench.h"
#include "matroid_union/generate.h"
#include "matroid_union/instance_io.h"
#include "matroid_union/solve.h"
#include "matroid_union/verify.h"

namespace matroid_union::cli {
namespace {

std::vector<std::string> SplitList(const std::string& text) {
  std::vector<std::string> items;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

std::vector<int> ParseIntList(const std::string& text) {
  std::vector<int> values;
  for (const std::string& item : SplitList(text)) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw InstanceError("not an integer: " + item);
    values.push_back(value);
  }
  return values;
}

std::optional<OracleMode> ParseOracleMode(const std::string& name) {
  if (name == "both") return OracleMode::kBoth;
  if (name == "independence") return OracleMode::kIndependenceOnly;
  if (name == "rank") return OracleMode::kRankOnly;
  return std::nullopt;
}

Algorithm RequireAlgorithm(const std::string& name) {
  const std::optional<Algorithm> algorithm = ParseAlgorithm(name);
  if (!algorithm) throw InstanceError("unknown algorithm: " + name);
  return *algorithm;
}

void PrintSet(std::ostream& out, const ElementSet& set) {
  out << "{";
  for (std::size_t i = 0; i < set.size(); ++i) {
    out << (i ? ", " : "") << set[i];
  }
  out << "}";
}

struct SolveArgs {
  std::string instance;
  std::string algo = "combined";
  std::optional<double> eps;
  std::optional<int> d;
  bool json = false;
  std::string oracle_mode = "both";
};

int RunSolve(const SolveArgs& args, std::ostream& out) {
  Instance instance = LoadInstance(args.instance);
  const Algorithm algorithm = RequireAlgorithm(args.algo);
  const std::optional<OracleMode> mode = ParseOracleMode(args.oracle_mode);
  if (!mode) throw InstanceError("unknown oracle mode: " + args.oracle_mode);
  instance.SetMode(*mode);

  SolveOptions options;
  options.eps = args.eps;
  options.threshold = args.d;
  const SolveReport report = RunAlgorithm(algorithm, instance, options);
  if (args.json) {
    nlohmann::ordered_json doc;
    doc["algo"] = std::string(AlgorithmName(algorithm));
    const nlohmann::ordered_json body = ReportToJson(report);
    for (const auto& [key, value] : body.items()) doc[key] = value;
    out << doc.dump(2) << "\n";
  } else {
    out << "algo = " << AlgorithmName(algorithm) << "\n"
        << FormatReport(report);
  }
  return kExitOk;
}

struct GenArgs {
  std::string kind;
  int n = 0;
  int k = 0;
  std::uint64_t seed = 0;
  std::string out;
};

int RunGen(const GenArgs& args) {
  const std::optional<GenKind> kind = ParseGenKind(args.kind);
  if (!kind) throw InstanceError("unknown kind: " + args.kind);
  SaveInstance(GenerateInstance(*kind, args.n, args.k, args.seed), args.out);
  return kExitOk;
}

struct VerifyArgs {
  std::string instance;
  std::string algo = "combined";
  std::optional<int> expect_p;
};

int RunVerify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  const Instance loaded = LoadInstance(args.instance);
  const Algorithm algorithm = RequireAlgorithm(args.algo);
  if (loaded.n() > kMaxOracleGroundSize) {
    err << "verify: n = " << loaded.n() << " exceeds "
        << kMaxOracleGroundSize << "\n";
    return kExitUsage;
  }
  const OracleVerdict verdict = UnionRankOracle(loaded);

  Instance for_algo = loaded.Fresh();
  const SolveReport solved = RunAlgorithm(algorithm, for_algo);
  Instance for_reference = loaded.Fresh();
  const SolveReport reference = ReferenceSolver(for_reference);

  bool ok = true;
  auto fail = [&](const std::string& message) {
    ok = false;
    err << "verify: " << message << "\n";
  };
  if (algorithm != Algorithm::kGreedy && solved.p != verdict.p) {
    fail(std::string(AlgorithmName(algorithm)) + " found " +
         std::to_string(solved.p));
  }
  if (algorithm == Algorithm::kGreedy &&
      (solved.p > verdict.p || 2 * solved.p < verdict.p)) {
    fail("greedy size " + std::to_string(solved.p) + " outside [p/2, p]");
  }
  if (reference.p != verdict.p) {
    fail("reference solver found " + std::to_string(reference.p));
  }
  if (args.expect_p && *args.expect_p != verdict.p) {
    fail("expected p = " + std::to_string(*args.expect_p));
  }
  if (!ValidatePartition(loaded, solved.state)) {
    fail("partition from " + std::string(AlgorithmName(algorithm)) +
         " is invalid");
  }
  if (!ValidatePartition(loaded, reference.state)) {
    fail("reference partition is invalid");
  }

  out << "oracle p = " << verdict.p << "\n";
  if (!ok) {
    out << "witness T = ";
    PrintSet(out, verdict.witness);
    out << "\n";
    return kExitMismatch;
  }
  out << "ok\n";
  return kExitOk;
}

struct BenchArgs {
  std::string kinds;
  std::string n_grid;
  std::string k_grid;
  int reps = 1;
  std::uint64_t seed = 0;
  std::string out;
  std::string algos;
};

int RunBenchCommand(const BenchArgs& args) {
  BenchConfig config;
  for (const std::string& name : SplitList(args.kinds)) {
    const std::optional<GenKind> kind = ParseGenKind(name);
    if (!kind) throw InstanceError("unknown kind: " + name);
    config.kinds.push_back(*kind);
  }
  config.n_grid = ParseIntList(args.n_grid);
  for (const std::string& item : SplitList(args.k_grid)) {
    // "n" ties k to each n in the grid.
    config.k_grid.push_back(item == "n" ? kKEqualsN : ParseIntList(item)[0]);
    if (item != "n" && config.k_grid.back() < 1) {
      throw InstanceError("k must be >= 1");
    }
  }
  if (args.reps < 0) throw InstanceError("reps must be >= 0");
  config.reps = args.reps;
  config.seed = args.seed;
  if (!args.algos.empty()) {
    config.algos.clear();
    for (const std::string& name : SplitList(args.algos)) {
      config.algos.push_back(RequireAlgorithm(name));
    }
  }
  config.threads = ThreadsFromEnv();

  std::ofstream file(args.out, std::ios::binary);
  if (!file) throw InstanceError("cannot write " + args.out);
  WriteCsv(RunBench(config), file);
  if (!file) throw InstanceError("failed writing " + args.out);
  return kExitOk;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Matroid partitioning under counted oracles"};
  app.require_subcommand(1);

  SolveArgs solve;
  CLI::App* solve_cmd = app.add_subcommand("solve", "Solve one instance");
  solve_cmd->add_option("--instance", solve.instance)->required();
  solve_cmd->add_option("--algo", solve.algo);
  solve_cmd->add_option("--eps", solve.eps);
  solve_cmd->add_option("--d", solve.d);
  solve_cmd->add_flag("--json", solve.json);
  solve_cmd->add_option("--oracle-mode", solve.oracle_mode)
      ->check(CLI::IsMember({"both", "independence", "rank"}));

  GenArgs gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "Write a random instance");
  gen_cmd->add_option("--kind", gen.kind)->required();
  gen_cmd->add_option("--n", gen.n)->required();
  gen_cmd->add_option("--k", gen.k)->required();
  gen_cmd->add_option("--seed", gen.seed)->required();
  gen_cmd->add_option("--out", gen.out)->required();

  VerifyArgs verify;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Cross-check a solver against the oracle");
  verify_cmd->add_option("--instance", verify.instance)->required();
  verify_cmd->add_option("--algo", verify.algo);
  verify_cmd->add_option("--expect-p", verify.expect_p);

  BenchArgs bench;
  CLI::App* bench_cmd = app.add_subcommand("bench", "Query-count matrix");
  bench_cmd->add_option("--kinds", bench.kinds)->required();
  bench_cmd->add_option("--n-grid", bench.n_grid)->required();
  bench_cmd->add_option("--k-grid", bench.k_grid)->required();
  bench_cmd->add_option("--reps", bench.reps)->required();
  bench_cmd->add_option("--seed", bench.seed)->required();
  bench_cmd->add_option("--out", bench.out)->required();
  bench_cmd->add_option("--algos", bench.algos);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*solve_cmd) return RunSolve(solve, out);
    if (*gen_cmd) return RunGen(gen);
    if (*verify_cmd) return RunVerify(verify, out, err);
    if (*bench_cmd) return RunBenchCommand(bench);
  } catch (const OracleModeError& e) {
    err << "error: " << e.what() << "\n";
    return kExitOracleMode;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace matroid_union::cli
