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

#ifndef MATROID_UNION_EXCHANGE_H_
#define MATROID_UNION_EXCHANGE_H_

// Compressed exchange graph machinery: partitions, binary-search edge
// finding, augmentation along a path, and direct enumeration of the graph.
//
// Vertices are the ground elements plus a source s and one sink t_i per
// matroid. Edges:
//   s -> v      for every v not in S,
//   v -> u      if u in S_i, S_i + v dependent, S_i + v - u independent,
//   v -> t_i    if v not in S_i and S_i + v independent.

#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "matroid_union/observer.h"
#include "matroid_union/oracle.h"

namespace matroid_union {

inline constexpr int kUnreachable = std::numeric_limits<int>::max();
inline constexpr int kNoPart = -1;

// Disjoint parts S_1..S_k (stored 0-based, each sorted) and the assignment
// map pi. S is the union of the parts.
struct PartitionState {
  std::vector<ElementSet> parts;
  std::vector<int> part_of;  // kNoPart for elements outside S

  static PartitionState Empty(int n, int k);

  int n() const { return static_cast<int>(part_of.size()); }
  int k() const { return static_cast<int>(parts.size()); }
  int size() const;
  bool InS(Element v) const { return part_of[v] != kNoPart; }
  ElementSet Union() const;

  void Insert(int part, Element v);
  void Erase(Element v);

  // Parts disjoint, sorted, and in agreement with part_of.
  bool IsConsistent() const;

  friend bool operator==(const PartitionState&,
                         const PartitionState&) = default;
};

// s, interior[0], ..., interior.back(), t_sink. interior[0] is outside S,
// the rest are in S.
struct AugmentingPath {
  std::vector<Element> interior;
  int sink = 0;

  // Number of edges, counting the two at s and t.
  int length() const { return static_cast<int>(interior.size()) + 1; }
};

// Returns u in `pool` with `independent` + v - u independent, or nullopt.
// The none case costs exactly one independence query (the certificate
// `independent` + v - pool); a hit costs at most ceil(log2 |pool|) + 1.
// Among several valid u, returns the first in pool order.
std::optional<Element> FindOutEdge(MatroidOracle& oracle,
                                   std::span<const Element> independent,
                                   Element v, std::span<const Element> pool,
                                   SearchObserver* observer = nullptr);

// Returns v in `pool` with `independent` - removed + v independent, or
// nullopt. With removed == nullopt this searches for v with
// `independent` + v independent (sink edges). Uses at most
// ceil(log2 |pool|) + 1 rank queries and none for an empty pool.
std::optional<Element> FindInEdge(MatroidOracle& oracle,
                                  std::span<const Element> independent,
                                  std::optional<Element> removed,
                                  std::span<const Element> pool,
                                  SearchObserver* observer = nullptr);

// Applies an augmenting path in place: for consecutive interior elements
// (v_i, v_{i+1}), v_i takes v_{i+1}'s old part, and the last interior
// element joins the sink part. |S| grows by one.
void ApplyAugmentation(PartitionState& state, const AugmentingPath& path);
PartitionState UpdatePartition(const PartitionState& state,
                               const AugmentingPath& path);

// F_i = { v not in S_i : S_i + v independent } for every part.
class SinkSets {
 public:
  SinkSets() = default;
  SinkSets(int n, int k) : n_(n), flags_(static_cast<std::size_t>(n) * k, 0) {}

  int n() const { return n_; }
  int k() const { return n_ == 0 ? 0 : static_cast<int>(flags_.size()) / n_; }

  bool Contains(int part, Element v) const {
    return flags_[static_cast<std::size_t>(part) * n_ + v] != 0;
  }
  void Set(int part, Element v, bool value) {
    flags_[static_cast<std::size_t>(part) * n_ + v] = value ? 1 : 0;
  }
  // Smallest part index whose sink set holds v, if any.
  std::optional<int> FirstPartContaining(Element v) const;
  ElementSet Members(int part) const;

  // Recomputes F_part with one query per element outside the part.
  void Rebuild(MatroidOracle& oracle, int part, const PartitionState& state);

  friend bool operator==(const SinkSets&, const SinkSets&) = default;

 private:
  int n_ = 0;
  std::vector<char> flags_;
};

// All k sink sets; at most k * n independence queries.
SinkSets BuildSinkSets(Instance& instance, const PartitionState& state);

// Exchange edges E' with per-source and per-target adjacency, and the sink
// sets.
struct ExchangeEdgeSet {
  std::vector<ElementSet> out;  // out[v]: sorted targets u
  std::vector<ElementSet> in;   // in[u]: sorted sources v
  SinkSets sinks;

  bool HasEdge(Element v, Element u) const;
  std::size_t edge_count() const;
};

// Builds E' and every F_i by querying the definition directly: per (v, i)
// with v outside S_i, one query on S_i + v, then |S_i| queries on
// S_i + v - u when S_i + v is dependent.
ExchangeEdgeSet BuildReferenceGraph(Instance& instance,
                                    const PartitionState& state);

// Same edge set, but the "S_i + v dependent" test is read from current sink
// sets instead of queried. At most n * |S| queries.
ExchangeEdgeSet BuildExchangeEdges(Instance& instance,
                                   const PartitionState& state,
                                   const SinkSets& sinks);

// Exact BFS distances in an explicit graph. No oracle access.
struct GraphDistances {
  std::vector<int> from_source;  // d(s, v); kUnreachable if none
  std::vector<int> to_sinks;     // d(v, T)
  int source_to_sinks = kUnreachable;
};

GraphDistances ComputeDistances(const ExchangeEdgeSet& graph,
                                const PartitionState& state);

// FIFO BFS from s with ids visited in increasing order; returns the first
// shortest augmenting path found.
std::optional<AugmentingPath> ShortestAugmentingPath(
    const ExchangeEdgeSet& graph, const PartitionState& state);

}  // namespace matroid_union

#endif  // MATROID_UNION_EXCHANGE_H_
