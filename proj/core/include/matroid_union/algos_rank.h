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

#ifndef MATROID_UNION_ALGOS_RANK_H_
#define MATROID_UNION_ALGOS_RANK_H_

// Matroid partition under rank oracles. Searches run backwards from the
// sinks, discovering incoming edges with FindInEdge.

#include <vector>

#include "matroid_union/algos_ind.h"
#include "matroid_union/exchange.h"
#include "matroid_union/observer.h"
#include "matroid_union/oracle.h"

namespace matroid_union {

// Distances to T. Exact for elements with d_v < source and for source
// itself (d_s = 1 + min over v outside S of d_v).
struct ReverseDistanceLabels {
  std::vector<int> element;
  int source = kUnreachable;
};

// Reverse BFS seeded from every sink, with a single pool of unlabeled
// elements shared across all FindInEdge calls.
ReverseDistanceLabels GetDistanceRank(Instance& instance,
                                      const PartitionState& state,
                                      SearchObserver* observer = nullptr);

// One reverse blocking-flow phase. d(s, T) strictly increases whenever the
// phase augments.
PhaseResult BlockFlowRank(Instance& instance, PartitionState& state,
                          SearchObserver* observer = nullptr);

SolveReport SolveRank(Instance& instance, SearchObserver* observer = nullptr);

// ceil(1/eps) phases. 0 < eps <= 1.
SolveReport SolveRankApprox(Instance& instance, double eps,
                            SearchObserver* observer = nullptr);

}  // namespace matroid_union

#endif  // MATROID_UNION_ALGOS_RANK_H_
