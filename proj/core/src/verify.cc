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

#include "matroid_union/verify.h"

#include <cstdint>
#include <string>
#include <utility>

#include "run_recorder.h"

namespace matroid_union {

OracleVerdict UnionRankOracle(const Instance& instance) {
  const int n = instance.n();
  if (n > kMaxOracleGroundSize) {
    throw PreconditionError("union rank oracle supports n <= " +
                            std::to_string(kMaxOracleGroundSize) + ", got " +
                            std::to_string(n));
  }
  OracleVerdict verdict;
  verdict.p = n + 1;
  ElementSet subset;
  subset.reserve(n);
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    subset.clear();
    for (Element v = 0; v < n; ++v) {
      if ((mask >> v) & 1) subset.push_back(v);
    }
    int value = n - static_cast<int>(subset.size());
    for (int i = 0; i < instance.k() && value < verdict.p; ++i) {
      value += instance.matroid(i).Rank(subset);
    }
    if (value < verdict.p) {
      verdict.p = value;
      verdict.witness = subset;
    }
  }
  return verdict;
}

SolveReport ReferenceSolver(Instance& instance, SearchObserver* observer) {
  internal::RunRecorder recorder(instance);
  PartitionState state = PartitionState::Empty(instance.n(), instance.k());
  while (true) {
    recorder.Begin();
    const ExchangeEdgeSet graph = BuildReferenceGraph(instance, state);
    const auto path = ShortestAugmentingPath(graph, state);
    if (!path) break;
    if (observer != nullptr) {
      const PartitionState before = state;
      ApplyAugmentation(state, *path);
      observer->OnAugment(before, *path, state);
    } else {
      ApplyAugmentation(state, *path);
    }
    recorder.Finish("reference", path->length(), 1);
  }
  return recorder.Report(std::move(state));
}

bool ValidatePartition(const Instance& instance, const PartitionState& state) {
  if (state.k() != instance.k() || state.n() != instance.n()) return false;
  if (!state.IsConsistent()) return false;
  for (int i = 0; i < instance.k(); ++i) {
    if (!instance.matroid(i).IsIndependent(state.parts[i])) return false;
  }
  return true;
}

}  // namespace matroid_union
