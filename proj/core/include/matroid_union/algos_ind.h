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

#ifndef MATROID_UNION_ALGOS_IND_H_
#define MATROID_UNION_ALGOS_IND_H_

// Matroid partition under independence oracles: greedy 1/2-approximation,
// binary-search BFS, blocking-flow phases (binary search and direct
// enumeration), edge-recycling augmentation, and the combined solver that
// switches from blocking flow to edge recycling once augmenting paths get
// long.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "matroid_union/exchange.h"
#include "matroid_union/observer.h"
#include "matroid_union/oracle.h"

namespace matroid_union {

// BFS levels from s. Exact for every element with level below to_sinks(),
// and for to_sinks() itself.
struct DistanceLabels {
  std::vector<int> element;  // d_v, kUnreachable if never labeled
  std::vector<int> sink;     // d_{t_i}
  int to_sinks() const;      // d_T = min_i d_{t_i}
};

struct PhaseLog {
  std::string kind;  // "blockflow-ind", "blockflow-enum", "blockflow-rank",
                     // "edge-recycle"
  int distance = kUnreachable;  // d(s, T) when the phase started
  int augmentations = 0;
  std::int64_t independence_queries = 0;
  std::int64_t rank_queries = 0;
};

struct SolveReport {
  PartitionState state;
  int p = 0;
  QueryStats stats;
  std::vector<PhaseLog> phases;
};

struct PhaseResult {
  bool made_progress = false;
  int distance = kUnreachable;  // d(s, T) at phase start
  int augmentations = 0;
};

struct GreedyResult {
  PartitionState state;
  int p_bar = 0;
};

// Fills S_1, then S_2, ... greedily from the unused elements in id order.
// p_bar <= p <= 2 p_bar, at most k n queries.
GreedyResult GreedyHalfApprox(Instance& instance);

// BFS over the exchange graph that discovers edges with FindOutEdge against
// shrinking per-part pools.
DistanceLabels GetDistanceIndependence(Instance& instance,
                                       const PartitionState& state,
                                       SearchObserver* observer = nullptr);

// One blocking-flow phase: augments along a maximal set of shortest paths so
// that d(s, T) strictly increases. Leaves `state` untouched when no sink is
// reachable.
PhaseResult BlockFlowIndependence(Instance& instance, PartitionState& state,
                                  SearchObserver* observer = nullptr);

// Same contract, but exchange edges are found by direct per-pair queries
// against the current parts (edges from the phase-start graph are reused
// while a part is unchanged) and sink adjacency is read from `sinks`, which
// is kept current (one part rebuilt per augmentation).
PhaseResult BlockFlowEnumeration(Instance& instance, PartitionState& state,
                                 SinkSets& sinks,
                                 SearchObserver* observer = nullptr);

enum class BlockFlowVariant { kBinarySearch, kEnumeration, kAuto };

// Use enumeration when k * ceil(log2 max(2 p_bar, 2)) > 2 p_bar.
BlockFlowVariant ChooseVariant(int k, int p_bar);

// Blocking-flow phases from the empty partition until no sink is reachable.
SolveReport SolveBlockFlow(Instance& instance, BlockFlowVariant variant,
                           SearchObserver* observer = nullptr);

// ceil(1/eps) binary-search blocking-flow phases. 0 < eps <= 1.
SolveReport SolveApprox(Instance& instance, double eps,
                        SearchObserver* observer = nullptr);

// ceil(1/eps) with a tolerance for eps given as a rounded reciprocal.
int PhaseBudget(double eps);

// Per-call state of an edge-recycling augmentation.
struct RecycleState {
  ExchangeEdgeSet estar;      // E* as of the start of the call
  std::vector<char> dirty;    // J as a k-length indicator
  SinkSets sinks;             // F_i, always current
  std::int64_t sum = 0;

  int dirty_count() const;
};

// BFS that calls FindOutEdge only for dirty parts and reuses `estar` for the
// clean ones. Returns a shortest augmenting path, or nullopt.
// `find_out_edge_calls`, when given, is incremented per FindOutEdge call.
std::optional<AugmentingPath> EdgeRecyclingBfs(
    Instance& instance, const PartitionState& state,
    const ExchangeEdgeSet& estar, const std::vector<char>& dirty,
    const SinkSets& sinks, SearchObserver* observer = nullptr,
    std::int64_t* find_out_edge_calls = nullptr);

struct RecycleResult {
  int augmentations = 0;
  bool exhausted = false;  // stopped because no augmenting path remains
  std::int64_t sum = 0;
  std::int64_t find_out_edge_calls = 0;
  int dirty_count = 0;
};

// Builds E*, then alternates BFS and augmentation while sum < 2 p_bar.
// `sinks` must be current on entry and is kept current.
RecycleResult EdgeRecyclingAugmentation(Instance& instance,
                                        PartitionState& state,
                                        SinkSets& sinks, int p_bar,
                                        SearchObserver* observer = nullptr);

// Greedy for p_bar, all F_i, then edge-recycling calls from the empty
// partition until exhausted.
SolveReport SolveEdgeRecycling(Instance& instance,
                               SearchObserver* observer = nullptr);

struct CombinedPlan {
  int p_bar = 0;
  int k_prime = 0;    // min(k, 2 p_bar)
  int threshold = 1;  // switch to edge recycling once d(s, T) >= threshold
  BlockFlowVariant variant = BlockFlowVariant::kBinarySearch;
};

// threshold = max(1, ceil(p_bar / k_prime^(2/3))).
CombinedPlan PlanCombined(int k, int p_bar);

// Blocking flow while paths are short, then edge recycling.
// `threshold_override` replaces the planned threshold.
SolveReport SolveCombined(Instance& instance,
                          SearchObserver* observer = nullptr,
                          std::optional<int> threshold_override = std::nullopt);

}  // namespace matroid_union

#endif  // MATROID_UNION_ALGOS_IND_H_
