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

#include "matroid_union/exchange.h"

#include <algorithm>
#include <deque>
#include <string>

namespace matroid_union {
namespace {

void SortedInsert(ElementSet& set, Element v) {
  set.insert(std::lower_bound(set.begin(), set.end(), v), v);
}

void SortedErase(ElementSet& set, Element v) {
  auto it = std::lower_bound(set.begin(), set.end(), v);
  if (it != set.end() && *it == v) set.erase(it);
}

bool SortedContains(const ElementSet& sorted, Element v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

}  // namespace

PartitionState PartitionState::Empty(int n, int k) {
  PartitionState state;
  state.parts.assign(k, {});
  state.part_of.assign(n, kNoPart);
  return state;
}

int PartitionState::size() const {
  int total = 0;
  for (const auto& part : parts) total += static_cast<int>(part.size());
  return total;
}

ElementSet PartitionState::Union() const {
  ElementSet all;
  for (Element v = 0; v < n(); ++v) {
    if (InS(v)) all.push_back(v);
  }
  return all;
}

void PartitionState::Insert(int part, Element v) {
  SortedInsert(parts[part], v);
  part_of[v] = part;
}

void PartitionState::Erase(Element v) {
  if (part_of[v] == kNoPart) return;
  SortedErase(parts[part_of[v]], v);
  part_of[v] = kNoPart;
}

bool PartitionState::IsConsistent() const {
  std::vector<int> seen(part_of.size(), kNoPart);
  for (int i = 0; i < k(); ++i) {
    if (!std::is_sorted(parts[i].begin(), parts[i].end())) return false;
    for (Element v : parts[i]) {
      if (v < 0 || v >= n()) return false;
      if (seen[v] != kNoPart) return false;
      seen[v] = i;
    }
  }
  return seen == part_of;
}

std::optional<Element> FindOutEdge(MatroidOracle& oracle,
                                   std::span<const Element> independent,
                                   Element v, std::span<const Element> pool,
                                   SearchObserver* observer) {
  if (std::find(independent.begin(), independent.end(), v) !=
      independent.end()) {
    throw PreconditionError("FindOutEdge: v must lie outside S");
  }
  // pool_index[j]: position in `pool` of independent[j], or -1.
  std::vector<std::pair<Element, int>> by_element;
  by_element.reserve(pool.size());
  for (std::size_t j = 0; j < pool.size(); ++j) {
    by_element.emplace_back(pool[j], static_cast<int>(j));
  }
  std::sort(by_element.begin(), by_element.end());
  std::vector<int> pool_index(independent.size(), -1);
  std::size_t matched = 0;
  for (std::size_t j = 0; j < independent.size(); ++j) {
    auto it = std::lower_bound(by_element.begin(), by_element.end(),
                               std::pair<Element, int>{independent[j], -1});
    if (it != by_element.end() && it->first == independent[j]) {
      pool_index[j] = it->second;
      ++matched;
    }
  }
  if (matched != pool.size()) {
    throw PreconditionError("FindOutEdge: pool must be a subset of S");
  }

  const std::int64_t before = oracle.independence_count();
  auto report = [&](bool found) {
    if (observer != nullptr) {
      observer->OnFindOutEdge(static_cast<int>(pool.size()),
                              oracle.independence_count() - before, found);
    }
  };
  ElementSet probe;
  probe.reserve(independent.size() + 1);
  // Queries S + v - pool[lo, hi).
  auto independent_without = [&](int lo, int hi) {
    probe.clear();
    for (std::size_t j = 0; j < independent.size(); ++j) {
      if (pool_index[j] < lo || pool_index[j] >= hi) {
        probe.push_back(independent[j]);
      }
    }
    probe.push_back(v);
    return oracle.IsIndependent(probe);
  };

  // Some u in the pool is exchangeable iff S + v - pool is independent.
  int lo = 0;
  int hi = static_cast<int>(pool.size());
  if (!independent_without(lo, hi) || pool.empty()) {
    report(false);
    return std::nullopt;
  }
  // Invariant: S + v - pool[lo, hi) is independent.
  while (hi - lo > 1) {
    const int mid = lo + (hi - lo + 1) / 2;
    if (independent_without(lo, mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  report(true);
  return pool[lo];
}

std::optional<Element> FindInEdge(MatroidOracle& oracle,
                                  std::span<const Element> independent,
                                  std::optional<Element> removed,
                                  std::span<const Element> pool,
                                  SearchObserver* observer) {
  if (removed && std::find(independent.begin(), independent.end(),
                           *removed) == independent.end()) {
    throw PreconditionError("FindInEdge: removed element must lie in S");
  }
  ElementSet sorted(independent.begin(), independent.end());
  std::sort(sorted.begin(), sorted.end());
  for (Element v : pool) {
    if (SortedContains(sorted, v)) {
      throw PreconditionError("FindInEdge: pool must be disjoint from S");
    }
  }
  const std::int64_t before = oracle.rank_count();
  auto report = [&](bool found) {
    if (observer != nullptr) {
      observer->OnFindInEdge(static_cast<int>(pool.size()),
                             oracle.rank_count() - before, found);
    }
  };
  if (pool.empty()) {
    report(false);
    return std::nullopt;
  }

  ElementSet base;
  base.reserve(independent.size() + pool.size());
  for (Element e : independent) {
    if (!removed || e != *removed) base.push_back(e);
  }
  const int target = static_cast<int>(base.size()) + 1;
  const std::size_t base_size = base.size();
  auto rank_with = [&](std::size_t lo, std::size_t hi) {
    base.resize(base_size);
    base.insert(base.end(), pool.begin() + lo, pool.begin() + hi);
    return oracle.Rank(base);
  };

  if (rank_with(0, pool.size()) < target) {
    report(false);
    return std::nullopt;
  }
  // Invariant: rank(base + pool[lo, hi)) >= target.
  std::size_t lo = 0;
  std::size_t hi = pool.size();
  while (hi - lo > 1) {
    const std::size_t mid = lo + (hi - lo + 1) / 2;
    if (rank_with(lo, mid) >= target) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  report(true);
  return pool[lo];
}

void ApplyAugmentation(PartitionState& state, const AugmentingPath& path) {
  const auto& v = path.interior;
  if (v.empty()) throw PreconditionError("augmenting path has no elements");
  if (state.InS(v.front())) {
    throw PreconditionError("augmenting path must start outside S");
  }
  std::vector<int> old_part(v.size(), kNoPart);
  for (std::size_t i = 0; i < v.size(); ++i) old_part[i] = state.part_of[v[i]];

  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    const int target = old_part[i + 1];
    state.Erase(v[i + 1]);
    state.Erase(v[i]);
    state.Insert(target, v[i]);
  }
  state.Erase(v.back());
  state.Insert(path.sink, v.back());
}

PartitionState UpdatePartition(const PartitionState& state,
                               const AugmentingPath& path) {
  PartitionState next = state;
  ApplyAugmentation(next, path);
  return next;
}

std::optional<int> SinkSets::FirstPartContaining(Element v) const {
  for (int i = 0; i < k(); ++i) {
    if (Contains(i, v)) return i;
  }
  return std::nullopt;
}

ElementSet SinkSets::Members(int part) const {
  ElementSet members;
  for (Element v = 0; v < n_; ++v) {
    if (Contains(part, v)) members.push_back(v);
  }
  return members;
}

void SinkSets::Rebuild(MatroidOracle& oracle, int part,
                       const PartitionState& state) {
  ElementSet probe = state.parts[part];
  for (Element v = 0; v < n_; ++v) {
    if (state.part_of[v] == part) {
      Set(part, v, false);
      continue;
    }
    probe.push_back(v);
    Set(part, v, oracle.IsIndependent(probe));
    probe.pop_back();
  }
}

SinkSets BuildSinkSets(Instance& instance, const PartitionState& state) {
  SinkSets sinks(instance.n(), instance.k());
  for (int i = 0; i < instance.k(); ++i) {
    sinks.Rebuild(instance.oracle(i), i, state);
  }
  return sinks;
}

bool ExchangeEdgeSet::HasEdge(Element v, Element u) const {
  return std::binary_search(out[v].begin(), out[v].end(), u);
}

std::size_t ExchangeEdgeSet::edge_count() const {
  std::size_t total = 0;
  for (const auto& targets : out) total += targets.size();
  return total;
}

namespace {

// Queries S_i + v - u for every u in S_i, for each (v, i) that `dependent`
// approves.
template <typename DependentFn>
void CollectExchangeEdges(Instance& instance, const PartitionState& state,
                          DependentFn dependent, ExchangeEdgeSet& graph) {
  const int n = instance.n();
  graph.out.assign(n, {});
  graph.in.assign(n, {});
  for (Element v = 0; v < n; ++v) {
    for (int i = 0; i < instance.k(); ++i) {
      if (state.part_of[v] == i) continue;
      if (!dependent(v, i)) continue;
      const ElementSet& part = state.parts[i];
      ElementSet probe;
      probe.reserve(part.size());
      for (Element u : part) {
        probe.clear();
        for (Element w : part) {
          if (w != u) probe.push_back(w);
        }
        probe.push_back(v);
        if (instance.oracle(i).IsIndependent(probe)) {
          graph.out[v].push_back(u);
          graph.in[u].push_back(v);
        }
      }
    }
  }
  for (auto& targets : graph.out) std::sort(targets.begin(), targets.end());
}

}  // namespace

ExchangeEdgeSet BuildReferenceGraph(Instance& instance,
                                    const PartitionState& state) {
  ExchangeEdgeSet graph;
  graph.sinks = SinkSets(instance.n(), instance.k());
  CollectExchangeEdges(
      instance, state,
      [&](Element v, int i) {
        ElementSet probe = state.parts[i];
        probe.push_back(v);
        const bool independent = instance.oracle(i).IsIndependent(probe);
        graph.sinks.Set(i, v, independent);
        return !independent;
      },
      graph);
  return graph;
}

ExchangeEdgeSet BuildExchangeEdges(Instance& instance,
                                   const PartitionState& state,
                                   const SinkSets& sinks) {
  ExchangeEdgeSet graph;
  graph.sinks = sinks;
  CollectExchangeEdges(
      instance, state,
      [&](Element v, int i) { return !sinks.Contains(i, v); }, graph);
  return graph;
}

GraphDistances ComputeDistances(const ExchangeEdgeSet& graph,
                                const PartitionState& state) {
  const int n = state.n();
  GraphDistances dist;
  dist.from_source.assign(n, kUnreachable);
  dist.to_sinks.assign(n, kUnreachable);

  std::deque<Element> queue;
  for (Element v = 0; v < n; ++v) {
    if (!state.InS(v)) {
      dist.from_source[v] = 1;
      queue.push_back(v);
    }
  }
  while (!queue.empty()) {
    const Element v = queue.front();
    queue.pop_front();
    if (graph.sinks.FirstPartContaining(v) &&
        dist.source_to_sinks == kUnreachable) {
      dist.source_to_sinks = dist.from_source[v] + 1;
    }
    for (Element u : graph.out[v]) {
      if (dist.from_source[u] == kUnreachable) {
        dist.from_source[u] = dist.from_source[v] + 1;
        queue.push_back(u);
      }
    }
  }

  for (Element v = 0; v < n; ++v) {
    if (graph.sinks.FirstPartContaining(v)) {
      dist.to_sinks[v] = 1;
      queue.push_back(v);
    }
  }
  while (!queue.empty()) {
    const Element u = queue.front();
    queue.pop_front();
    for (Element v : graph.in[u]) {
      if (dist.to_sinks[v] == kUnreachable) {
        dist.to_sinks[v] = dist.to_sinks[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

std::optional<AugmentingPath> ShortestAugmentingPath(
    const ExchangeEdgeSet& graph, const PartitionState& state) {
  const int n = state.n();
  std::vector<Element> parent(n, kNoPart);
  std::vector<char> seen(n, 0);
  std::deque<Element> queue;
  for (Element v = 0; v < n; ++v) {
    if (!state.InS(v)) {
      seen[v] = 1;
      queue.push_back(v);
    }
  }
  while (!queue.empty()) {
    const Element v = queue.front();
    queue.pop_front();
    if (auto sink = graph.sinks.FirstPartContaining(v)) {
      AugmentingPath path;
      path.sink = *sink;
      for (Element w = v; w != kNoPart; w = parent[w]) {
        path.interior.push_back(w);
      }
      std::reverse(path.interior.begin(), path.interior.end());
      return path;
    }
    for (Element u : graph.out[v]) {
      if (!seen[u]) {
        seen[u] = 1;
        parent[u] = v;
        queue.push_back(u);
      }
    }
  }
  return std::nullopt;
}

}  // namespace matroid_union
