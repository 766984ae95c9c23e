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

#ifndef MATROID_UNION_SOLVE_H_
#define MATROID_UNION_SOLVE_H_

// Name-based dispatch over every solver, shared by the CLI and the bench
// harness.

#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "matroid_union/algos_ind.h"
#include "matroid_union/observer.h"
#include "matroid_union/oracle.h"

namespace matroid_union {

enum class Algorithm {
  kGreedy,
  kBlockFlowInd,
  kBlockFlowEnum,
  kBlockFlowRank,
  kEdgeRecycle,
  kCombined,
  kReference,
};

std::optional<Algorithm> ParseAlgorithm(std::string_view name);
std::string_view AlgorithmName(Algorithm algorithm);

// Oracle type the algorithm queries.
bool UsesRankOracle(Algorithm algorithm);

struct SolveOptions {
  std::optional<double> eps;       // approximate run; blockflow-ind/-rank only
  std::optional<int> threshold;    // combined: override the switch distance
  SearchObserver* observer = nullptr;
};

// Throws PreconditionError for options the algorithm does not take, and
// OracleModeError if the instance's oracle mode forbids the query type.
SolveReport RunAlgorithm(Algorithm algorithm, Instance& instance,
                         const SolveOptions& options = {});

nlohmann::ordered_json ReportToJson(const SolveReport& report);
std::string FormatReport(const SolveReport& report);

}  // namespace matroid_union

#endif  // MATROID_UNION_SOLVE_H_
