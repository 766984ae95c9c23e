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

#include "matroid_union/algos_rank.h"

#include <deque>
#include <utility>

#include "run_recorder.h"

namespace matroid_union {

using internal::RunRecorder;

namespace {

// Elements with pooled[w] set that lie outside `part`, in id order.
ElementSet PoolOutside(const std::vector<char>& pooled,
                       const PartitionState& state, int part) {
  ElementSet pool;
  for (Element w = 0; w < state.n(); ++w) {
    if (pooled[w] && state.part_of[w] != part) pool.push_back(w);
  }
  return pool;
}

}  // namespace

ReverseDistanceLabels GetDistanceRank(Instance& instance,
                                      const PartitionState& state,
                                      SearchObserver* observer) {
  const int n = instance.n();
  ReverseDistanceLabels labels;
  labels.element.assign(n, kUnreachable);
  std::vector<char> unlabeled(n, 1);
  std::deque<Element> queue;

  // Expands one FindInEdge search to exhaustion against the shared pool.
  auto drain = [&](int part, std::optional<Element> removed, int distance) {
    while (true) {
      const ElementSet pool = PoolOutside(unlabeled, state, part);
      if (pool.empty()) return;
      auto u = FindInEdge(instance.oracle(part), state.parts[part], removed,
                          pool, observer);
      if (!u) return;
      labels.element[*u] = distance;
      unlabeled[*u] = 0;
      queue.push_back(*u);
    }
  };

  for (int i = 0; i < instance.k(); ++i) drain(i, std::nullopt, 1);
  while (!queue.empty()) {
    const Element v = queue.front();
    queue.pop_front();
    if (!state.InS(v)) {
      if (labels.source == kUnreachable) {
        labels.source = labels.element[v] + 1;
      }
    } else {
      drain(state.part_of[v], v, labels.element[v] + 1);
    }
  }
  return labels;
}

PhaseResult BlockFlowRank(Instance& instance, PartitionState& state,
                          SearchObserver* observer) {
  const ReverseDistanceLabels labels =
      GetDistanceRank(instance, state, observer);
  PhaseResult result;
  result.distance = labels.source;
  if (labels.source == kUnreachable) return result;

  const int n = instance.n();
  const int k = instance.k();
  const int top = labels.source - 1;
  // layer_of[v] in [1, top]; layer top holds only elements outside S, since
  // the path leaves s through it.
  std::vector<int> layer_of(n, 0);
  std::vector<int> count(top + 1, 0);
  for (Element v = 0; v < n; ++v) {
    const int d = labels.element[v];
    if (d < 1 || d > top) continue;
    if (d == top && state.InS(v)) continue;
    layer_of[v] = d;
    ++count[d];
  }
  auto all_non_empty = [&] {
    for (int l = 1; l <= top; ++l) {
      if (count[l] == 0) return false;
    }
    return true;
  };
  auto remove = [&](Element v) {
    if (layer_of[v] == 0) return;
    --count[layer_of[v]];
    layer_of[v] = 0;
  };
  auto layer_outside = [&](int layer, int part) {
    ElementSet pool;
    for (Element w = 0; w < n; ++w) {
      if (layer_of[w] == layer && state.part_of[w] != part) pool.push_back(w);
    }
    return pool;
  };

  int next_sink = 0;  // sinks below this index are retired
  std::vector<Element> a(top + 1, kNoPart);
  while (all_non_empty() && next_sink < k) {
    int l = 0;
    int sink_part = kNoPart;
    bool complete = false;
    while (true) {
      std::optional<Element> next;
      if (l == 0) {
        for (; next_sink < k; ++next_sink) {
          const ElementSet pool = layer_outside(1, next_sink);
          if (pool.empty()) continue;
          next = FindInEdge(instance.oracle(next_sink),
                            state.parts[next_sink], std::nullopt, pool,
                            observer);
          if (next) {
            sink_part = next_sink;
            break;
          }
        }
        if (!next) break;
      } else {
        const int part = state.part_of[a[l]];
        const ElementSet pool = layer_outside(l + 1, part);
        if (!pool.empty()) {
          next = FindInEdge(instance.oracle(part), state.parts[part], a[l],
                            pool, observer);
        }
      }

      if (next) {
        a[++l] = *next;
        if (l == top) {
          complete = true;
          break;
        }
        continue;
      }
      remove(a[l]);
      if (count[l] == 0) break;
      --l;
    }
    if (!complete) break;

    AugmentingPath path;
    path.sink = sink_part;
    for (int l2 = top; l2 >= 1; --l2) path.interior.push_back(a[l2]);
    if (observer != nullptr) {
      const PartitionState before = state;
      ApplyAugmentation(state, path);
      observer->OnAugment(before, path, state);
    } else {
      ApplyAugmentation(state, path);
    }
    for (int l2 = 1; l2 <= top; ++l2) remove(a[l2]);
    ++result.augmentations;
  }
  result.made_progress = result.augmentations > 0;
  return result;
}

namespace {

template <typename Continue>
SolveReport RunRankPhases(Instance& instance, SearchObserver* observer,
                          Continue keep_going) {
  RunRecorder recorder(instance);
  PartitionState state = PartitionState::Empty(instance.n(), instance.k());
  for (int phases = 0; keep_going(phases); ++phases) {
    recorder.Begin();
    const PhaseResult r = BlockFlowRank(instance, state, observer);
    if (!r.made_progress) break;
    recorder.Finish("blockflow-rank", r.distance, r.augmentations);
  }
  return recorder.Report(std::move(state));
}

}  // namespace

SolveReport SolveRank(Instance& instance, SearchObserver* observer) {
  return RunRankPhases(instance, observer, [](int) { return true; });
}

SolveReport SolveRankApprox(Instance& instance, double eps,
                            SearchObserver* observer) {
  const int budget = PhaseBudget(eps);
  return RunRankPhases(instance, observer,
                       [budget](int phases) { return phases < budget; });
}

}  // namespace matroid_union
