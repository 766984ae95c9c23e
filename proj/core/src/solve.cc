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

#include "matroid_union/solve.h"

#include <sstream>

#include "matroid_union/algos_rank.h"
#include "matroid_union/verify.h"

namespace matroid_union {

std::optional<Algorithm> ParseAlgorithm(std::string_view name) {
  if (name == "greedy") return Algorithm::kGreedy;
  if (name == "blockflow-ind") return Algorithm::kBlockFlowInd;
  if (name == "blockflow-enum") return Algorithm::kBlockFlowEnum;
  if (name == "blockflow-rank") return Algorithm::kBlockFlowRank;
  if (name == "edge-recycle") return Algorithm::kEdgeRecycle;
  if (name == "combined") return Algorithm::kCombined;
  if (name == "reference") return Algorithm::kReference;
  return std::nullopt;
}

std::string_view AlgorithmName(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kGreedy:
      return "greedy";
    case Algorithm::kBlockFlowInd:
      return "blockflow-ind";
    case Algorithm::kBlockFlowEnum:
      return "blockflow-enum";
    case Algorithm::kBlockFlowRank:
      return "blockflow-rank";
    case Algorithm::kEdgeRecycle:
      return "edge-recycle";
    case Algorithm::kCombined:
      return "combined";
    case Algorithm::kReference:
      return "reference";
  }
  return "unknown";
}

bool UsesRankOracle(Algorithm algorithm) {
  return algorithm == Algorithm::kBlockFlowRank;
}

SolveReport RunAlgorithm(Algorithm algorithm, Instance& instance,
                         const SolveOptions& options) {
  const OracleMode mode = instance.oracle(0).mode();
  if (UsesRankOracle(algorithm) ? mode == OracleMode::kIndependenceOnly
                                : mode == OracleMode::kRankOnly) {
    throw OracleModeError(std::string(AlgorithmName(algorithm)) +
                          " cannot run with the configured oracle mode");
  }
  if (options.eps && algorithm != Algorithm::kBlockFlowInd &&
      algorithm != Algorithm::kBlockFlowRank) {
    throw PreconditionError("eps applies only to blockflow-ind and "
                            "blockflow-rank");
  }
  if (options.threshold && algorithm != Algorithm::kCombined) {
    throw PreconditionError("a switch distance applies only to combined");
  }

  SearchObserver* observer = options.observer;
  switch (algorithm) {
    case Algorithm::kGreedy: {
      const QueryStats start = instance.Snapshot();
      GreedyResult greedy = GreedyHalfApprox(instance);
      SolveReport report;
      report.p = greedy.p_bar;
      report.state = std::move(greedy.state);
      report.stats = instance.Snapshot() - start;
      return report;
    }
    case Algorithm::kBlockFlowInd:
      return options.eps ? SolveApprox(instance, *options.eps, observer)
                         : SolveBlockFlow(instance,
                                          BlockFlowVariant::kBinarySearch,
                                          observer);
    case Algorithm::kBlockFlowEnum:
      return SolveBlockFlow(instance, BlockFlowVariant::kEnumeration, observer);
    case Algorithm::kBlockFlowRank:
      return options.eps ? SolveRankApprox(instance, *options.eps, observer)
                         : SolveRank(instance, observer);
    case Algorithm::kEdgeRecycle:
      return SolveEdgeRecycling(instance, observer);
    case Algorithm::kCombined:
      return SolveCombined(instance, observer, options.threshold);
    case Algorithm::kReference:
      return ReferenceSolver(instance, observer);
  }
  throw PreconditionError("unknown algorithm");
}

nlohmann::ordered_json ReportToJson(const SolveReport& report) {
  nlohmann::ordered_json out;
  out["p"] = report.p;
  out["parts"] = report.state.parts;
  nlohmann::ordered_json stats;
  stats["independence_queries"] = report.stats.independence_queries;
  stats["rank_queries"] = report.stats.rank_queries;
  stats["per_matroid_independence"] = report.stats.per_matroid_independence;
  stats["per_matroid_rank"] = report.stats.per_matroid_rank;
  stats["phases"] = report.stats.phases;
  stats["augmentations"] = report.stats.augmentations;
  out["stats"] = std::move(stats);
  nlohmann::ordered_json phases = nlohmann::ordered_json::array();
  for (const PhaseLog& phase : report.phases) {
    nlohmann::ordered_json entry;
    entry["kind"] = phase.kind;
    if (phase.distance == kUnreachable) {
      entry["distance"] = nullptr;
    } else {
      entry["distance"] = phase.distance;
    }
    entry["augmentations"] = phase.augmentations;
    entry["independence_queries"] = phase.independence_queries;
    entry["rank_queries"] = phase.rank_queries;
    phases.push_back(std::move(entry));
  }
  out["phases"] = std::move(phases);
  return out;
}

std::string FormatReport(const SolveReport& report) {
  std::ostringstream out;
  out << "p = " << report.p << "\n";
  for (int i = 0; i < report.state.k(); ++i) {
    out << "S_" << (i + 1) << " = {";
    for (std::size_t j = 0; j < report.state.parts[i].size(); ++j) {
      out << (j ? ", " : "") << report.state.parts[i][j];
    }
    out << "}\n";
  }
  out << "independence queries = " << report.stats.independence_queries
      << "\nrank queries = " << report.stats.rank_queries
      << "\nphases = " << report.stats.phases
      << "\naugmentations = " << report.stats.augmentations << "\n";
  return out.str();
}

}  // namespace matroid_union
