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

#ifndef MATROID_UNION_VERIFY_H_
#define MATROID_UNION_VERIFY_H_

// Ground truth for tests and the `verify` command. Nothing here touches the
// query counters of the instance under test.

#include "matroid_union/algos_ind.h"
#include "matroid_union/exchange.h"
#include "matroid_union/oracle.h"

namespace matroid_union {

inline constexpr int kMaxOracleGroundSize = 20;

struct OracleVerdict {
  int p = 0;
  ElementSet witness;  // a T attaining the minimum
};

// p = min over T of sum_i rank_i(T) + |V \ T|, by enumerating all 2^n sets.
// Throws PreconditionError when n > kMaxOracleGroundSize.
OracleVerdict UnionRankOracle(const Instance& instance);

// One augmentation per rebuild of the full exchange graph, from the empty
// partition. Queries are charged to `instance`.
SolveReport ReferenceSolver(Instance& instance,
                            SearchObserver* observer = nullptr);

// Parts disjoint, consistent with part_of, and each S_i independent in M_i.
bool ValidatePartition(const Instance& instance, const PartitionState& state);

}  // namespace matroid_union

#endif  // MATROID_UNION_VERIFY_H_
