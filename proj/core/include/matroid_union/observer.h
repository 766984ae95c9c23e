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

#ifndef MATROID_UNION_OBSERVER_H_
#define MATROID_UNION_OBSERVER_H_

#include <cstdint>

namespace matroid_union {

struct AugmentingPath;
struct PartitionState;
struct RecycleState;

// Instrumentation hooks. Solvers call these synchronously; every default is a
// no-op. Used by the invariant and acceptance suites, never by the solvers
// themselves.
class SearchObserver {
 public:
  virtual ~SearchObserver() = default;

  // `queries` is the oracle counter delta consumed by the call.
  virtual void OnFindOutEdge(int /*pool_size*/, std::int64_t /*queries*/,
                             bool /*found*/) {}
  virtual void OnFindInEdge(int /*pool_size*/, std::int64_t /*queries*/,
                            bool /*found*/) {}

  virtual void OnAugment(const PartitionState& /*before*/,
                         const AugmentingPath& /*path*/,
                         const PartitionState& /*after*/) {}

  // After each augmentation inside an edge-recycling call.
  virtual void OnRecycleStep(const PartitionState& /*state*/,
                             const RecycleState& /*recycle*/) {}
};

}  // namespace matroid_union

#endif  // MATROID_UNION_OBSERVER_H_
