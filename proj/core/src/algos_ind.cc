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

#include "matroid_union/algos_ind.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <deque>
#include <string>
#include <utility>

#include "run_recorder.h"

namespace matroid_union {

using internal::RunRecorder;

namespace {

bool IsIndependentWith(MatroidOracle& oracle, const ElementSet& part,
                       Element v) {
  ElementSet probe = part;
  probe.push_back(v);
  return oracle.IsIndependent(probe);
}

void Augment(PartitionState& state, const AugmentingPath& path,
             SearchObserver* observer) {
  if (observer == nullptr) {
    ApplyAugmentation(state, path);
    return;
  }
  const PartitionState before = state;
  ApplyAugmentation(state, path);
  observer->OnAugment(before, path, state);
}

// Elements of `part` whose layer is `layer`, in part order.
ElementSet LayerSlice(const ElementSet& part, const std::vector<int>& layer_of,
                      int layer) {
  ElementSet slice;
  for (Element u : part) {
    if (layer_of[u] == layer) slice.push_back(u);
  }
  return slice;
}

void EraseSorted(ElementSet& set, Element v) {
  auto it = std::lower_bound(set.begin(), set.end(), v);
  if (it != set.end() && *it == v) set.erase(it);
}

// Layered graph bookkeeping shared by the blocking-flow variants: layer_of[v]
// is v's layer in [1, top], or 0 once removed.
struct Layers {
  std::vector<int> layer_of;
  std::vector<int> count;

  Layers(const std::vector<int>& distance, int top)
      : layer_of(distance.size(), 0), count(top + 1, 0) {
    for (std::size_t v = 0; v < distance.size(); ++v) {
      if (distance[v] >= 1 && distance[v] <= top) {
        layer_of[v] = distance[v];
        ++count[distance[v]];
      }
    }
  }

  bool AllNonEmpty() const {
    for (std::size_t l = 1; l < count.size(); ++l) {
      if (count[l] == 0) return false;
    }
    return true;
  }

  void Remove(Element v) {
    if (layer_of[v] == 0) return;
    --count[layer_of[v]];
    layer_of[v] = 0;
  }

  Element Smallest(int layer) const {
    for (std::size_t v = 0; v < layer_of.size(); ++v) {
      if (layer_of[v] == layer) return static_cast<Element>(v);
    }
    return kNoPart;
  }
};

// Depth-first search over layers 1..top for s-t paths of length top + 1.
// `advance(v, layer)` returns the next element in layer + 1 or nullopt;
// `sink(v)` returns the sink part adjacent to a last-layer element.
// Each discovered path is applied immediately, and its elements leave their
// layers. Returns the number of augmentations.
template <typename AdvanceFn, typename SinkFn, typename AugmentFn>
int RunBlockingSearch(Layers& layers, int top, AdvanceFn advance, SinkFn sink,
                      AugmentFn on_path) {
  int augmentations = 0;
  std::vector<Element> a(top + 2, kNoPart);
  while (layers.AllNonEmpty()) {
    int l = 0;
    int sink_part = kNoPart;
    bool complete = false;
    while (true) {
      bool found = false;
      if (l == 0) {
        a[1] = layers.Smallest(1);
        found = true;
      } else if (l < top) {
        if (auto next = advance(a[l], l)) {
          a[l + 1] = *next;
          found = true;
        }
      } else if (auto part = sink(a[l])) {
        sink_part = *part;
        found = true;
      }

      if (found) {
        if (l == top) {
          complete = true;
          break;
        }
        ++l;
        continue;
      }
      layers.Remove(a[l]);
      if (layers.count[l] == 0) break;
      --l;
    }
    if (!complete) break;

    AugmentingPath path;
    path.interior.assign(a.begin() + 1, a.begin() + top + 1);
    path.sink = sink_part;
    on_path(path);
    for (Element v : path.interior) layers.Remove(v);
    ++augmentations;
  }
  return augmentations;
}

}  // namespace

int DistanceLabels::to_sinks() const {
  int best = kUnreachable;
  for (int d : sink) best = std::min(best, d);
  return best;
}

GreedyResult GreedyHalfApprox(Instance& instance) {
  GreedyResult result;
  result.state = PartitionState::Empty(instance.n(), instance.k());
  PartitionState& state = result.state;
  for (int i = 0; i < instance.k(); ++i) {
    ElementSet probe;
    for (Element v = 0; v < instance.n(); ++v) {
      if (state.InS(v)) continue;
      probe.push_back(v);
      if (instance.oracle(i).IsIndependent(probe)) {
        state.Insert(i, v);
      } else {
        probe.pop_back();
      }
    }
  }
  result.p_bar = state.size();
  return result;
}

DistanceLabels GetDistanceIndependence(Instance& instance,
                                       const PartitionState& state,
                                       SearchObserver* observer) {
  const int n = instance.n();
  const int k = instance.k();
  DistanceLabels labels;
  labels.element.assign(n, kUnreachable);
  labels.sink.assign(k, kUnreachable);

  std::deque<Element> queue;
  for (Element v = 0; v < n; ++v) {
    if (!state.InS(v)) {
      labels.element[v] = 1;
      queue.push_back(v);
    }
  }
  std::vector<ElementSet> pools = state.parts;
  while (!queue.empty()) {
    const Element v = queue.front();
    queue.pop_front();
    const int dv = labels.element[v];
    for (int i = 0; i < k; ++i) {
      if (labels.sink[i] != kUnreachable || state.part_of[v] == i) continue;
      if (IsIndependentWith(instance.oracle(i), state.parts[i], v)) {
        labels.sink[i] = dv + 1;
      }
    }
    for (int i = 0; i < k; ++i) {
      if (state.part_of[v] == i) continue;
      while (!pools[i].empty()) {
        auto u = FindOutEdge(instance.oracle(i), state.parts[i], v, pools[i],
                             observer);
        if (!u) break;
        labels.element[*u] = dv + 1;
        queue.push_back(*u);
        EraseSorted(pools[i], *u);
      }
    }
  }
  return labels;
}

PhaseResult BlockFlowIndependence(Instance& instance, PartitionState& state,
                                  SearchObserver* observer) {
  const DistanceLabels labels =
      GetDistanceIndependence(instance, state, observer);
  PhaseResult result;
  result.distance = labels.to_sinks();
  if (result.distance == kUnreachable) return result;

  const int top = result.distance - 1;
  const int k = instance.k();
  Layers layers(labels.element, top);
  // Parts below next_part[v] are retired for v for the rest of the phase.
  std::vector<int> next_part(instance.n(), 0);

  auto advance = [&](Element v, int l) -> std::optional<Element> {
    while (next_part[v] < k) {
      const int i = next_part[v];
      if (state.part_of[v] != i) {
        const ElementSet pool =
            LayerSlice(state.parts[i], layers.layer_of, l + 1);
        if (!pool.empty()) {
          if (auto u = FindOutEdge(instance.oracle(i), state.parts[i], v, pool,
                                   observer)) {
            return u;
          }
        }
      }
      ++next_part[v];
    }
    return std::nullopt;
  };
  auto sink = [&](Element v) -> std::optional<int> {
    for (int i = 0; i < k; ++i) {
      if (state.part_of[v] == i) continue;
      if (IsIndependentWith(instance.oracle(i), state.parts[i], v)) return i;
    }
    return std::nullopt;
  };
  auto on_path = [&](const AugmentingPath& path) {
    Augment(state, path, observer);
  };
  result.augmentations = RunBlockingSearch(layers, top, advance, sink, on_path);
  result.made_progress = result.augmentations > 0;
  return result;
}

PhaseResult BlockFlowEnumeration(Instance& instance, PartitionState& state,
                                 SinkSets& sinks, SearchObserver* observer) {
  const ExchangeEdgeSet graph = BuildExchangeEdges(instance, state, sinks);
  const GraphDistances dist = ComputeDistances(graph, state);
  PhaseResult result;
  result.distance = dist.source_to_sinks;
  if (result.distance == kUnreachable) return result;

  const int top = result.distance - 1;
  const int n = instance.n();
  Layers layers(dist.from_source, top);

  // Per element a part cursor, as in the binary-search variant, with a
  // linear scan in place of FindOutEdge. While a part is unchanged since the
  // phase start its edges are read from `graph`; afterwards each (v, u) pair
  // is queried at most once per version of the part.
  const int k = instance.k();
  std::vector<int> next_part(n, 0);
  std::vector<int> version(k, 0);
  std::vector<std::vector<std::pair<Element, int>>> rejected(n);

  auto is_rejected = [&](Element v, Element u, int i) {
    for (const auto& [w, seen] : rejected[v]) {
      if (w == u) return seen == version[i];
    }
    return false;
  };
  auto reject = [&](Element v, Element u, int i) {
    for (auto& [w, seen] : rejected[v]) {
      if (w == u) {
        seen = version[i];
        return;
      }
    }
    rejected[v].emplace_back(u, version[i]);
  };
  auto advance = [&](Element v, int l) -> std::optional<Element> {
    while (next_part[v] < k) {
      const int i = next_part[v];
      // v in F_i has no exchange edges into S_i.
      if (state.part_of[v] != i && !sinks.Contains(i, v)) {
        for (Element u : state.parts[i]) {
          if (layers.layer_of[u] != l + 1 || is_rejected(v, u, i)) continue;
          bool edge;
          if (version[i] == 0) {
            edge = graph.HasEdge(v, u);
          } else {
            ElementSet probe;
            probe.reserve(state.parts[i].size());
            for (Element w : state.parts[i]) {
              if (w != u) probe.push_back(w);
            }
            probe.push_back(v);
            edge = instance.oracle(i).IsIndependent(probe);
          }
          if (edge) return u;
          reject(v, u, i);
        }
      }
      ++next_part[v];
      rejected[v].clear();
    }
    return std::nullopt;
  };
  auto sink = [&](Element v) { return sinks.FirstPartContaining(v); };
  auto on_path = [&](const AugmentingPath& path) {
    for (std::size_t idx = 1; idx < path.interior.size(); ++idx) {
      ++version[state.part_of[path.interior[idx]]];
    }
    ++version[path.sink];
    Augment(state, path, observer);
    sinks.Rebuild(instance.oracle(path.sink), path.sink, state);
  };
  result.augmentations = RunBlockingSearch(layers, top, advance, sink, on_path);
  result.made_progress = result.augmentations > 0;
  return result;
}

BlockFlowVariant ChooseVariant(int k, int p_bar) {
  const unsigned span = static_cast<unsigned>(std::max(2 * p_bar, 2));
  const int ceil_log2 = static_cast<int>(std::bit_width(span - 1));
  return static_cast<std::int64_t>(k) * ceil_log2 > 2 * p_bar
             ? BlockFlowVariant::kEnumeration
             : BlockFlowVariant::kBinarySearch;
}

namespace {

const char* VariantKind(BlockFlowVariant variant) {
  return variant == BlockFlowVariant::kEnumeration ? "blockflow-enum"
                                                   : "blockflow-ind";
}

// Runs blocking-flow phases while `keep_going(lower_bound_on_distance,
// phases_done)` holds. Returns false when a phase found no augmenting path.
template <typename Continue>
bool RunBlockFlowPhases(Instance& instance, PartitionState& state,
                        BlockFlowVariant variant, std::optional<SinkSets>& sinks,
                        RunRecorder& recorder, SearchObserver* observer,
                        Continue keep_going) {
  int lower_bound = 2;
  int phases = 0;
  while (keep_going(lower_bound, phases)) {
    recorder.Begin();
    PhaseResult r;
    if (variant == BlockFlowVariant::kEnumeration) {
      if (!sinks) sinks = BuildSinkSets(instance, state);
      r = BlockFlowEnumeration(instance, state, *sinks, observer);
    } else {
      r = BlockFlowIndependence(instance, state, observer);
    }
    if (!r.made_progress) return false;
    recorder.Finish(VariantKind(variant), r.distance, r.augmentations);
    lower_bound = r.distance + 1;
    ++phases;
  }
  return true;
}

}  // namespace

SolveReport SolveBlockFlow(Instance& instance, BlockFlowVariant variant,
                           SearchObserver* observer) {
  RunRecorder recorder(instance);
  if (variant == BlockFlowVariant::kAuto) {
    variant = ChooseVariant(instance.k(), GreedyHalfApprox(instance).p_bar);
  }
  PartitionState state = PartitionState::Empty(instance.n(), instance.k());
  std::optional<SinkSets> sinks;
  RunBlockFlowPhases(instance, state, variant, sinks, recorder, observer,
                     [](int, int) { return true; });
  return recorder.Report(std::move(state));
}

int PhaseBudget(double eps) {
  if (!(eps > 0.0 && eps <= 1.0)) {
    throw PreconditionError("eps must lie in (0, 1]");
  }
  return static_cast<int>(std::ceil(1.0 / eps - 1e-9));
}

SolveReport SolveApprox(Instance& instance, double eps,
                        SearchObserver* observer) {
  const int budget = PhaseBudget(eps);
  RunRecorder recorder(instance);
  PartitionState state = PartitionState::Empty(instance.n(), instance.k());
  std::optional<SinkSets> sinks;
  RunBlockFlowPhases(instance, state, BlockFlowVariant::kBinarySearch, sinks,
                     recorder, observer,
                     [budget](int, int phases) { return phases < budget; });
  return recorder.Report(std::move(state));
}

int RecycleState::dirty_count() const {
  return static_cast<int>(std::count(dirty.begin(), dirty.end(), 1));
}

std::optional<AugmentingPath> EdgeRecyclingBfs(
    Instance& instance, const PartitionState& state,
    const ExchangeEdgeSet& estar, const std::vector<char>& dirty,
    const SinkSets& sinks, SearchObserver* observer,
    std::int64_t* find_out_edge_calls) {
  const int n = instance.n();
  const int k = instance.k();
  std::vector<Element> parent(n, kNoPart);
  // in_pool[u]: u is in S and not yet reached (u in B_{pi(u)}).
  std::vector<char> in_pool(n, 0);
  std::deque<Element> queue;
  for (Element v = 0; v < n; ++v) {
    if (state.InS(v)) {
      in_pool[v] = 1;
    } else {
      queue.push_back(v);
    }
  }
  std::vector<ElementSet> pools(k);
  for (int i = 0; i < k; ++i) {
    if (dirty[i]) pools[i] = state.parts[i];
  }

  auto reach = [&](Element u, Element from) {
    in_pool[u] = 0;
    parent[u] = from;
    queue.push_back(u);
  };
  while (!queue.empty()) {
    const Element v = queue.front();
    queue.pop_front();
    if (auto sink = sinks.FirstPartContaining(v)) {
      AugmentingPath path;
      path.sink = *sink;
      for (Element w = v; w != kNoPart; w = parent[w]) {
        path.interior.push_back(w);
      }
      std::reverse(path.interior.begin(), path.interior.end());
      return path;
    }
    for (int i = 0; i < k; ++i) {
      if (!dirty[i] || state.part_of[v] == i) continue;
      while (!pools[i].empty()) {
        if (find_out_edge_calls != nullptr) ++*find_out_edge_calls;
        auto u = FindOutEdge(instance.oracle(i), state.parts[i], v, pools[i],
                             observer);
        if (!u) break;
        reach(*u, v);
        EraseSorted(pools[i], *u);
      }
    }
    for (Element u : estar.out[v]) {
      const int i = state.part_of[u];
      if (i == kNoPart || dirty[i] || !in_pool[u]) continue;
      reach(u, v);
    }
  }
  return std::nullopt;
}

RecycleResult EdgeRecyclingAugmentation(Instance& instance,
                                        PartitionState& state,
                                        SinkSets& sinks, int p_bar,
                                        SearchObserver* observer) {
  RecycleState recycle;
  recycle.estar = BuildExchangeEdges(instance, state, sinks);
  recycle.dirty.assign(instance.k(), 0);
  recycle.sinks = std::move(sinks);

  RecycleResult result;
  while (recycle.sum < 2 * static_cast<std::int64_t>(p_bar)) {
    auto path = EdgeRecyclingBfs(instance, state, recycle.estar, recycle.dirty,
                                 recycle.sinks, observer,
                                 &result.find_out_edge_calls);
    if (!path) {
      result.exhausted = true;
      break;
    }
    for (std::size_t idx = 1; idx < path->interior.size(); ++idx) {
      recycle.dirty[state.part_of[path->interior[idx]]] = 1;
    }
    recycle.dirty[path->sink] = 1;
    Augment(state, *path, observer);
    recycle.sinks.Rebuild(instance.oracle(path->sink), path->sink, state);
    recycle.sum += recycle.dirty_count();
    ++result.augmentations;
    if (observer != nullptr) observer->OnRecycleStep(state, recycle);
  }
  result.sum = recycle.sum;
  result.dirty_count = recycle.dirty_count();
  sinks = std::move(recycle.sinks);
  return result;
}

namespace {

void RunEdgeRecycling(Instance& instance, PartitionState& state,
                      SinkSets& sinks, int p_bar, RunRecorder& recorder,
                      SearchObserver* observer) {
  while (true) {
    recorder.Begin();
    const RecycleResult r =
        EdgeRecyclingAugmentation(instance, state, sinks, p_bar, observer);
    if (r.augmentations > 0) {
      recorder.Finish("edge-recycle", kUnreachable, r.augmentations);
    }
    if (r.exhausted || r.augmentations == 0) break;
  }
}

}  // namespace

SolveReport SolveEdgeRecycling(Instance& instance, SearchObserver* observer) {
  RunRecorder recorder(instance);
  const int p_bar = GreedyHalfApprox(instance).p_bar;
  PartitionState state = PartitionState::Empty(instance.n(), instance.k());
  if (p_bar > 0) {
    SinkSets sinks = BuildSinkSets(instance, state);
    RunEdgeRecycling(instance, state, sinks, p_bar, recorder, observer);
  }
  return recorder.Report(std::move(state));
}

CombinedPlan PlanCombined(int k, int p_bar) {
  CombinedPlan plan;
  plan.p_bar = p_bar;
  plan.k_prime = std::min(k, 2 * p_bar);
  if (plan.k_prime > 0) {
    const double raw =
        static_cast<double>(p_bar) / std::cbrt(static_cast<double>(plan.k_prime) *
                                               plan.k_prime);
    plan.threshold = std::max(1, static_cast<int>(std::ceil(raw - 1e-9)));
  }
  plan.variant = ChooseVariant(k, p_bar);
  return plan;
}

SolveReport SolveCombined(Instance& instance, SearchObserver* observer,
                          std::optional<int> threshold_override) {
  RunRecorder recorder(instance);
  CombinedPlan plan =
      PlanCombined(instance.k(), GreedyHalfApprox(instance).p_bar);
  if (threshold_override) plan.threshold = std::max(1, *threshold_override);

  PartitionState state = PartitionState::Empty(instance.n(), instance.k());
  if (plan.p_bar == 0) return recorder.Report(std::move(state));

  std::optional<SinkSets> sinks;
  const bool paths_remain = RunBlockFlowPhases(
      instance, state, plan.variant, sinks, recorder, observer,
      [&](int lower_bound, int) { return lower_bound < plan.threshold; });
  if (paths_remain) {
    if (!sinks) sinks = BuildSinkSets(instance, state);
    RunEdgeRecycling(instance, state, *sinks, plan.p_bar, recorder, observer);
  }
  return recorder.Report(std::move(state));
}

}  // namespace matroid_union
