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

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "matroid_union/verify.h"
#include "test_util.h"

namespace matroid_union {
namespace {

using testing::AllLoops;
using testing::RandomInstance;
using testing::RandomState;
using testing::TriangleInstance;
using testing::UniformCopies;

// Budget constants for the per-call query bounds.
constexpr double kBfsConstant = 4;          // distance BFS
constexpr double kPhaseConstant = 8;        // one binary-search phase
constexpr double kEnumerationConstant = 4;  // one enumeration phase
constexpr double kRecycleConstant = 8;      // one edge-recycling call

double Log2Max2(int x) { return std::log2(std::max(x, 2)); }

PartitionState TriangleTree(int k) {
  PartitionState state = PartitionState::Empty(3, k);
  state.Insert(0, 0);
  state.Insert(0, 1);
  return state;
}

TEST(GreedyTest, Examples) {
  Instance free = UniformCopies(4, 4, 1);
  EXPECT_EQ(GreedyHalfApprox(free).p_bar, 4);

  Instance copies = UniformCopies(3, 1, 2);
  EXPECT_EQ(GreedyHalfApprox(copies).p_bar, 2);

  Instance triangle = TriangleInstance(2);
  const GreedyResult greedy = GreedyHalfApprox(triangle);
  EXPECT_EQ(greedy.p_bar, 3);
  EXPECT_EQ(greedy.state.parts[0], (ElementSet{0, 1}));
  EXPECT_EQ(greedy.state.parts[1], ElementSet{2});
}

TEST(GreedyPropertyTest, HalfApproximationWithinBudget) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    Instance instance = RandomInstance(rng, 12, 6);
    const GreedyResult greedy = GreedyHalfApprox(instance);
    const int p = UnionRankOracle(instance).p;
    ASSERT_LE(greedy.p_bar, p);
    ASSERT_LE(p, 2 * greedy.p_bar);
    ASSERT_LE(instance.Snapshot().independence_queries,
              static_cast<std::int64_t>(instance.n()) * instance.k());
    ASSERT_TRUE(ValidatePartition(instance, greedy.state));
  }
}

TEST(DistanceTest, EmptyState) {
  Instance instance(3, {testing::Triangle(),
                        std::make_shared<UniformMatroid>(3, 0)});
  const DistanceLabels labels =
      GetDistanceIndependence(instance, PartitionState::Empty(3, 2));
  EXPECT_EQ(labels.element, (std::vector<int>{1, 1, 1}));
  EXPECT_EQ(labels.sink[0], 2);
  EXPECT_EQ(labels.sink[1], kUnreachable);
  EXPECT_EQ(labels.to_sinks(), 2);

  Instance loops = AllLoops(3, 2);
  EXPECT_EQ(GetDistanceIndependence(loops, PartitionState::Empty(3, 2))
                .to_sinks(),
            kUnreachable);
}

TEST(DistanceTest, TriangleTree) {
  Instance instance = TriangleInstance(1);
  const DistanceLabels labels =
      GetDistanceIndependence(instance, TriangleTree(1));
  EXPECT_EQ(labels.element, (std::vector<int>{2, 2, 1}));
  EXPECT_EQ(labels.sink[0], kUnreachable);
}

TEST(DistanceTest, SaturatedUniformCopies) {
  Instance instance = UniformCopies(3, 1, 2);
  PartitionState state = PartitionState::Empty(3, 2);
  state.Insert(0, 0);
  state.Insert(1, 1);
  const DistanceLabels labels = GetDistanceIndependence(instance, state);
  EXPECT_EQ(labels.element, (std::vector<int>{2, 2, 1}));
  EXPECT_EQ(labels.sink[0], kUnreachable);
  EXPECT_EQ(labels.sink[1], kUnreachable);
}

TEST(DistancePropertyTest, MatchesReferenceBelowSinkDistance) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 200; ++trial) {
    Instance instance = RandomInstance(rng, 10, 4);
    const PartitionState state = RandomState(instance, rng);
    Instance reference = instance.Fresh();
    const GraphDistances expected =
        ComputeDistances(BuildReferenceGraph(reference, state), state);
    const DistanceLabels labels = GetDistanceIndependence(instance, state);
    ASSERT_EQ(labels.to_sinks(), expected.source_to_sinks);
    for (Element v = 0; v < instance.n(); ++v) {
      if (labels.element[v] < labels.to_sinks() ||
          expected.from_source[v] < expected.source_to_sinks) {
        ASSERT_EQ(labels.element[v], expected.from_source[v]) << "v=" << v;
      }
    }
    const double bound =
        kBfsConstant * (instance.k() * instance.n() +
                        state.size() * Log2Max2(state.size()));
    ASSERT_LE(instance.Snapshot().independence_queries, bound);
  }
}

TEST(BlockFlowTest, NoPathLeavesStateUnchanged) {
  Instance instance = TriangleInstance(1);
  PartitionState state = TriangleTree(1);
  const PartitionState before = state;
  EXPECT_FALSE(BlockFlowIndependence(instance, state).made_progress);
  EXPECT_EQ(state, before);

  Instance again = TriangleInstance(1);
  SinkSets sinks = BuildSinkSets(again, state);
  EXPECT_FALSE(BlockFlowEnumeration(again, state, sinks).made_progress);
  EXPECT_EQ(state, before);
}

TEST(BlockFlowTest, FreeMatroidInOnePhase) {
  Instance instance = UniformCopies(3, 3, 1);
  PartitionState state = PartitionState::Empty(3, 1);
  const PhaseResult phase = BlockFlowIndependence(instance, state);
  EXPECT_TRUE(phase.made_progress);
  EXPECT_EQ(phase.distance, 2);
  EXPECT_EQ(phase.augmentations, 3);
  EXPECT_EQ(state.parts[0], (ElementSet{0, 1, 2}));
}

TEST(BlockFlowTest, TriangleFillsSecondPart) {
  Instance instance = TriangleInstance(2);
  PartitionState state = TriangleTree(2);
  EXPECT_TRUE(BlockFlowIndependence(instance, state).made_progress);
  EXPECT_EQ(state.parts[1], ElementSet{2});
  EXPECT_EQ(GetDistanceIndependence(instance, state).to_sinks(), kUnreachable);
}

TEST(SolveBlockFlowTest, Examples) {
  for (BlockFlowVariant variant :
       {BlockFlowVariant::kBinarySearch, BlockFlowVariant::kEnumeration,
        BlockFlowVariant::kAuto}) {
    Instance loops = AllLoops(4, 2);
    const SolveReport none = SolveBlockFlow(loops, variant);
    EXPECT_EQ(none.p, 0);
    EXPECT_EQ(none.stats.augmentations, 0);

    Instance copies = UniformCopies(3, 1, 2);
    EXPECT_EQ(SolveBlockFlow(copies, variant).p, 2);

    Instance triangle = TriangleInstance(2);
    EXPECT_EQ(SolveBlockFlow(triangle, variant).p, 3);
  }
}

// Runs phases by hand to check per-phase contracts.
TEST(BlockFlowPropertyTest, PhasesIncreaseDistanceWithinBudget) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 200; ++trial) {
    Instance instance = RandomInstance(rng, 12, 6);
    const int p = UnionRankOracle(instance).p;
    const bool enumeration = trial % 2 == 1;
    PartitionState state = PartitionState::Empty(instance.n(), instance.k());
    SinkSets sinks;
    if (enumeration) sinks = BuildSinkSets(instance, state);
    int last = 0;
    int phases = 0;
    while (true) {
      const QueryStats before = instance.Snapshot();
      const PhaseResult phase =
          enumeration ? BlockFlowEnumeration(instance, state, sinks)
                      : BlockFlowIndependence(instance, state);
      const QueryStats used = instance.Snapshot() - before;
      if (!phase.made_progress) break;
      ++phases;
      ASSERT_GT(phase.distance, last);
      last = phase.distance;
      ASSERT_TRUE(ValidatePartition(instance, state));
      const double bound =
          enumeration
              ? kEnumerationConstant * instance.n() * std::max(p, 1) +
                    phase.augmentations * instance.n()
              : kPhaseConstant *
                    (instance.k() * instance.n() + p * Log2Max2(p));
      ASSERT_LE(used.independence_queries, bound) << "trial " << trial;
      if (enumeration) {
        Instance check = instance.Fresh();
        ASSERT_EQ(sinks, BuildSinkSets(check, state));
      }
    }
    ASSERT_EQ(state.size(), p);
    ASSERT_LE(phases, 4 * std::sqrt(p + 1.0) + 4);
  }
}

TEST(ApproxTest, PhaseBudget) {
  EXPECT_EQ(PhaseBudget(1.0), 1);
  EXPECT_EQ(PhaseBudget(0.5), 2);
  EXPECT_EQ(PhaseBudget(1.0 / 3.0), 3);
  EXPECT_EQ(PhaseBudget(0.3), 4);
  EXPECT_THROW(PhaseBudget(0.0), PreconditionError);
  EXPECT_THROW(PhaseBudget(1.5), PreconditionError);
  Instance instance = TriangleInstance(2);
  EXPECT_THROW(SolveApprox(instance, -1.0), PreconditionError);
}

TEST(ApproxPropertyTest, GuaranteesHold) {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 200; ++trial) {
    const Instance base = RandomInstance(rng, 10, 4);
    const int p = UnionRankOracle(base).p;
    Instance one = base.Fresh();
    const SolveReport coarse = SolveApprox(one, 1.0);
    ASSERT_GE(2 * coarse.p, p);
    ASSERT_LE(coarse.stats.phases, 1);
    if (p > 0) {
      Instance exact = base.Fresh();
      ASSERT_EQ(SolveApprox(exact, 1.0 / p).p, p);
    }
  }
  Instance loops = AllLoops(5, 3);
  EXPECT_EQ(SolveApprox(loops, 0.5).p, 0);
}

TEST(EdgeRecyclingBfsTest, DirectSinkAndNoPath) {
  Instance instance = TriangleInstance(2);
  const PartitionState state = TriangleTree(2);
  const ExchangeEdgeSet graph = BuildReferenceGraph(instance, state);
  const std::vector<char> clean(2, 0);
  const auto path =
      EdgeRecyclingBfs(instance, state, graph, clean, graph.sinks);
  ASSERT_TRUE(path.has_value());
  EXPECT_EQ(path->length(), 2);
  EXPECT_EQ(path->interior, ElementSet{2});
  EXPECT_EQ(path->sink, 1);

  Instance single = TriangleInstance(1);
  const PartitionState tree = TriangleTree(1);
  const ExchangeEdgeSet full = BuildReferenceGraph(single, tree);
  EXPECT_FALSE(EdgeRecyclingBfs(single, tree, full, std::vector<char>(1, 0),
                                full.sinks)
                   .has_value());
}

TEST(EdgeRecyclingBfsPropertyTest, CleanBfsFindsShortestPath) {
  std::mt19937_64 rng(35);
  for (int trial = 0; trial < 200; ++trial) {
    Instance instance = RandomInstance(rng, 10, 4);
    const PartitionState state = RandomState(instance, rng);
    const ExchangeEdgeSet graph = BuildReferenceGraph(instance, state);
    const GraphDistances dist = ComputeDistances(graph, state);
    const std::vector<char> clean(instance.k(), 0);
    const auto path =
        EdgeRecyclingBfs(instance, state, graph, clean, graph.sinks);
    ASSERT_EQ(path.has_value(), dist.source_to_sinks != kUnreachable);
    if (path) ASSERT_EQ(path->length(), dist.source_to_sinks);

    // All parts dirty: every edge comes from FindOutEdge.
    const std::vector<char> dirty(instance.k(), 1);
    const auto searched =
        EdgeRecyclingBfs(instance, state, graph, dirty, graph.sinks);
    ASSERT_EQ(searched.has_value(), path.has_value());
    if (searched) ASSERT_EQ(searched->length(), dist.source_to_sinks);
  }
}

TEST(EdgeRecyclingTest, NoPathBuildsOnce) {
  Instance instance = TriangleInstance(1);
  PartitionState state = TriangleTree(1);
  SinkSets sinks = BuildSinkSets(instance, state);
  const RecycleResult result =
      EdgeRecyclingAugmentation(instance, state, sinks, 2);
  EXPECT_EQ(result.augmentations, 0);
  EXPECT_TRUE(result.exhausted);
  EXPECT_EQ(state, TriangleTree(1));
}

TEST(EdgeRecyclingTest, TriangleOneAugmentation) {
  Instance instance = TriangleInstance(2);
  PartitionState state = TriangleTree(2);
  SinkSets sinks = BuildSinkSets(instance, state);
  const RecycleResult result =
      EdgeRecyclingAugmentation(instance, state, sinks, 3);
  EXPECT_EQ(result.augmentations, 1);
  EXPECT_EQ(result.sum, 1);
  EXPECT_EQ(result.dirty_count, 1);
  EXPECT_TRUE(result.exhausted);
  EXPECT_EQ(state.parts[1], ElementSet{2});
}

TEST(CombinedTest, PlanThreshold) {
  // d = p_bar / k'^(2/3) with p_bar = k' = 8.
  const CombinedPlan plan = PlanCombined(8, 8);
  EXPECT_EQ(plan.k_prime, 8);
  EXPECT_EQ(plan.threshold, 2);

  const CombinedPlan single = PlanCombined(1, 5);
  EXPECT_EQ(single.k_prime, 1);
  EXPECT_EQ(single.threshold, 5);

  EXPECT_EQ(PlanCombined(100, 3).k_prime, 6);
  EXPECT_EQ(PlanCombined(0, 0).threshold, 1);
}

TEST(CombinedTest, VariantRule) {
  EXPECT_EQ(ChooseVariant(64, 8), BlockFlowVariant::kEnumeration);
  EXPECT_EQ(ChooseVariant(2, 64), BlockFlowVariant::kBinarySearch);
}

TEST(CombinedPropertyTest, MatchesOracleForEveryThreshold) {
  std::mt19937_64 rng(36);
  for (int trial = 0; trial < 200; ++trial) {
    const Instance base = RandomInstance(rng, 10, 4);
    const int p = UnionRankOracle(base).p;
    Instance planned = base.Fresh();
    const SolveReport report = SolveCombined(planned);
    ASSERT_EQ(report.p, p);
    ASSERT_TRUE(ValidatePartition(base, report.state));
    Instance forced = base.Fresh();
    ASSERT_EQ(SolveCombined(forced, nullptr, 1 + trial % 4).p, p);
    Instance recycled = base.Fresh();
    ASSERT_EQ(SolveEdgeRecycling(recycled).p, p);
  }
  Instance single = UniformCopies(6, 4, 1);
  EXPECT_EQ(SolveCombined(single).p, 4);
}

// Distances never decrease along an augmentation, and vertices on the path
// move strictly further from s.
class MonotonicityObserver : public SearchObserver {
 public:
  explicit MonotonicityObserver(const Instance& instance)
      : reference_(instance.Fresh()) {}

  void OnAugment(const PartitionState& before, const AugmentingPath& path,
                 const PartitionState& after) override {
    const GraphDistances d =
        ComputeDistances(BuildReferenceGraph(reference_, before), before);
    const GraphDistances e =
        ComputeDistances(BuildReferenceGraph(reference_, after), after);
    ++augmentations;
    if (path.length() != d.source_to_sinks) ++violations;
    if (e.source_to_sinks < d.source_to_sinks) ++violations;
    for (Element v : path.interior) {
      if (e.from_source[v] <= d.from_source[v]) ++violations;
    }
    for (Element v = 0; v < before.n(); ++v) {
      const int floor = std::min(d.from_source[v], d.source_to_sinks);
      if (e.from_source[v] < floor) ++violations;
    }
  }

  int augmentations = 0;
  int violations = 0;

 private:
  Instance reference_;
};

TEST(MonotonicityPropertyTest, AllSolvers) {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 60; ++trial) {
    const Instance base = RandomInstance(rng, 10, 4);
    for (int variant = 0; variant < 4; ++variant) {
      Instance instance = base.Fresh();
      MonotonicityObserver observer(base);
      switch (variant) {
        case 0:
          SolveBlockFlow(instance, BlockFlowVariant::kBinarySearch, &observer);
          break;
        case 1:
          SolveBlockFlow(instance, BlockFlowVariant::kEnumeration, &observer);
          break;
        case 2:
          SolveEdgeRecycling(instance, &observer);
          break;
        default:
          SolveCombined(instance, &observer);
          break;
      }
      ASSERT_EQ(observer.violations, 0) << "trial " << trial << " variant "
                                        << variant;
    }
  }
}

}  // namespace
}  // namespace matroid_union
