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

#include <random>

#include <gtest/gtest.h>

#include "test_util.h"

namespace matroid_union {
namespace {

using testing::AllLoops;
using testing::RandomInstance;
using testing::TriangleInstance;
using testing::UniformCopies;

TEST(UnionRankOracleTest, Examples) {
  EXPECT_EQ(UnionRankOracle(TriangleInstance(2)).p, 3);
  const OracleVerdict copies = UnionRankOracle(UniformCopies(3, 1, 2));
  EXPECT_EQ(copies.p, 2);
  EXPECT_EQ(copies.witness, (ElementSet{0, 1, 2}));
  const OracleVerdict loops = UnionRankOracle(AllLoops(4, 2));
  EXPECT_EQ(loops.p, 0);
  EXPECT_EQ(loops.witness, (ElementSet{0, 1, 2, 3}));
}

TEST(UnionRankOracleTest, WitnessAttainsMinimum) {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 100; ++trial) {
    const Instance instance = RandomInstance(rng, 10, 4);
    const OracleVerdict verdict = UnionRankOracle(instance);
    int value = instance.n() - static_cast<int>(verdict.witness.size());
    for (int i = 0; i < instance.k(); ++i) {
      value += instance.matroid(i).Rank(verdict.witness);
    }
    ASSERT_EQ(value, verdict.p);
  }
}

TEST(UnionRankOracleTest, RefusesLargeInstances) {
  EXPECT_THROW(UnionRankOracle(UniformCopies(kMaxOracleGroundSize + 1, 1, 1)),
               PreconditionError);
}

TEST(UnionRankOracleTest, LeavesCountersUntouched) {
  const Instance instance = TriangleInstance(2);
  UnionRankOracle(instance);
  EXPECT_EQ(instance.Snapshot().rank_queries, 0);
  EXPECT_EQ(instance.Snapshot().independence_queries, 0);
}

TEST(ReferenceSolverTest, Examples) {
  Instance triangle = TriangleInstance(2);
  EXPECT_EQ(ReferenceSolver(triangle).p, 3);
  Instance free = UniformCopies(5, 5, 1);
  EXPECT_EQ(ReferenceSolver(free).p, 5);
}

TEST(ReferenceSolverTest, AgreesWithOracle) {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 1000; ++trial) {
    Instance instance = RandomInstance(rng, 12, 6);
    const int p = UnionRankOracle(instance).p;
    const SolveReport report = ReferenceSolver(instance);
    ASSERT_EQ(report.p, p);
    ASSERT_TRUE(ValidatePartition(instance, report.state));
    // No sink is reachable once the solver halts.
    Instance check = instance.Fresh();
    ASSERT_EQ(ComputeDistances(BuildReferenceGraph(check, report.state),
                               report.state)
                  .source_to_sinks,
              kUnreachable);
  }
}

TEST(ValidatePartitionTest, Examples) {
  const Instance instance = TriangleInstance(2);
  EXPECT_TRUE(ValidatePartition(instance, PartitionState::Empty(3, 2)));

  PartitionState duplicate = PartitionState::Empty(3, 2);
  duplicate.Insert(0, 0);
  duplicate.parts[1].push_back(0);
  EXPECT_FALSE(ValidatePartition(instance, duplicate));

  PartitionState cycle = PartitionState::Empty(3, 2);
  for (Element v = 0; v < 3; ++v) cycle.Insert(0, v);
  EXPECT_FALSE(ValidatePartition(instance, cycle));

  EXPECT_FALSE(ValidatePartition(instance, PartitionState::Empty(3, 1)));
}

}  // namespace
}  // namespace matroid_union
