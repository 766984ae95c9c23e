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

#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "matroid_union/bench.h"
#include "matroid_union/generate.h"
#include "matroid_union/instance_io.h"
#include "matroid_union/solve.h"
#include "matroid_union/verify.h"
#include "test_util.h"

namespace matroid_union {
namespace {

TEST(InstanceIoTest, ParsesEveryBackend) {
  const Instance instance = ParseInstance(R"({
    "n": 3,
    "matroids": [
      {"type": "uniform", "r": 2},
      {"type": "partition", "blocks": [[0, 2]], "capacities": [1]},
      {"type": "graphic", "num_vertices": 3, "edges": [[0, 1], [1, 2], [2, 0]]},
      {"type": "binary", "rows": ["101", "011"]}
    ]})");
  EXPECT_EQ(instance.n(), 3);
  EXPECT_EQ(instance.k(), 4);
  EXPECT_EQ(instance.matroid(0).kind(), MatroidKind::kUniform);
  EXPECT_EQ(instance.matroid(1).Rank(ElementSet{0, 1, 2}), 1);
  EXPECT_EQ(instance.matroid(2).Rank(ElementSet{0, 1, 2}), 2);
  EXPECT_EQ(instance.matroid(3).Rank(ElementSet{0, 1, 2}), 2);
}

TEST(InstanceIoTest, RejectsMalformedInput) {
  EXPECT_THROW(ParseInstance("{"), InstanceError);
  EXPECT_THROW(ParseInstance(R"({"n": 2})"), InstanceError);
  EXPECT_THROW(ParseInstance(R"({"n": 2, "matroids": []})"), InstanceError);
  EXPECT_THROW(ParseInstance(R"({"n": 2, "matroids": [{"type": "x"}]})"),
               InstanceError);
  EXPECT_THROW(
      ParseInstance(R"({"n": 2, "matroids": [{"type": "graphic",
                       "num_vertices": 2, "edges": [[0, 1]]}]})"),
      InstanceError);
  EXPECT_THROW(ParseInstance(R"({"n": 2, "matroids": [{"type": "binary",
                                 "rows": ["1"]}]})"),
               InstanceError);
  EXPECT_THROW(ParseInstance(R"({"n": 2, "matroids": [{"type": "uniform",
                                 "r": "two"}]})"),
               InstanceError);
  EXPECT_THROW(LoadInstance("/nonexistent/instance.json"), InstanceError);
}

TEST(InstanceIoTest, RoundTripIsByteIdentical) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 20);
    const int k = 1 + static_cast<int>(rng() % 6);
    const Instance instance =
        GenerateInstance(testing::RandomKind(rng), n, k, rng());
    const std::string text = SerializeInstance(instance);
    ASSERT_EQ(SerializeInstance(ParseInstance(text)), text);
  }
}

TEST(GenerateTest, DeterministicAndValidated) {
  for (GenKind kind : {GenKind::kUniform, GenKind::kPartition,
                       GenKind::kGraphic, GenKind::kBinary, GenKind::kMixed}) {
    EXPECT_EQ(SerializeInstance(GenerateInstance(kind, 9, 3, 5)),
              SerializeInstance(GenerateInstance(kind, 9, 3, 5)));
  }
  EXPECT_THROW(GenerateInstance(GenKind::kGraphic, 0, 2, 1), InstanceError);
  EXPECT_THROW(GenerateInstance(GenKind::kGraphic, 3, 0, 1), InstanceError);
  EXPECT_EQ(ParseGenKind("mixed"), GenKind::kMixed);
  EXPECT_EQ(ParseGenKind("nope"), std::nullopt);
}

TEST(GenerateTest, MixedRotatesBackends) {
  const Instance instance = GenerateInstance(GenKind::kMixed, 6, 6, 3);
  const MatroidKind expected[] = {MatroidKind::kUniform, MatroidKind::kPartition,
                                  MatroidKind::kGraphic, MatroidKind::kBinary};
  for (int i = 0; i < 6; ++i) {
    EXPECT_EQ(instance.matroid(i).kind(), expected[i % 4]);
  }
}

TEST(GenerateTest, BinaryRowCount) {
  const std::string text =
      SerializeInstance(GenerateInstance(GenKind::kBinary, 10, 1, 2));
  const Instance parsed = ParseInstance(text);
  const auto& binary = static_cast<const BinaryMatroid&>(parsed.matroid(0));
  EXPECT_EQ(binary.rows().size(), 5u);
}

TEST(SolveDispatchTest, NamesRoundTrip) {
  for (Algorithm algorithm :
       {Algorithm::kGreedy, Algorithm::kBlockFlowInd, Algorithm::kBlockFlowEnum,
        Algorithm::kBlockFlowRank, Algorithm::kEdgeRecycle,
        Algorithm::kCombined, Algorithm::kReference}) {
    EXPECT_EQ(ParseAlgorithm(AlgorithmName(algorithm)), algorithm);
  }
  EXPECT_EQ(ParseAlgorithm("fast"), std::nullopt);
}

TEST(SolveDispatchTest, OptionsAndModes) {
  Instance instance = testing::TriangleInstance(2);
  SolveOptions eps;
  eps.eps = 0.5;
  EXPECT_THROW(RunAlgorithm(Algorithm::kCombined, instance, eps),
               PreconditionError);
  EXPECT_EQ(RunAlgorithm(Algorithm::kBlockFlowRank, instance, eps).p, 3);
  SolveOptions threshold;
  threshold.threshold = 3;
  EXPECT_THROW(RunAlgorithm(Algorithm::kGreedy, instance, threshold),
               PreconditionError);
  EXPECT_EQ(RunAlgorithm(Algorithm::kCombined, instance, threshold).p, 3);

  instance.SetMode(OracleMode::kIndependenceOnly);
  EXPECT_THROW(RunAlgorithm(Algorithm::kBlockFlowRank, instance),
               OracleModeError);
  instance.SetMode(OracleMode::kRankOnly);
  EXPECT_THROW(RunAlgorithm(Algorithm::kCombined, instance), OracleModeError);
  EXPECT_EQ(RunAlgorithm(Algorithm::kBlockFlowRank, instance).stats
                .independence_queries,
            0);
}

TEST(SolveDispatchTest, ReportJson) {
  Instance instance = testing::TriangleInstance(2);
  const SolveReport report = RunAlgorithm(Algorithm::kBlockFlowInd, instance);
  const auto json = ReportToJson(report);
  EXPECT_EQ(json["p"], 3);
  EXPECT_EQ(json["parts"].size(), 2u);
  EXPECT_EQ(json["stats"]["independence_queries"],
            report.stats.independence_queries);
  EXPECT_EQ(json["phases"].size(), report.phases.size());
  EXPECT_NE(FormatReport(report).find("p = 3"), std::string::npos);
}

std::string StripWallTime(const std::string& csv) {
  std::istringstream in(csv);
  std::string line;
  std::string out;
  while (std::getline(in, line)) out += line.substr(0, line.rfind(',')) + "\n";
  return out;
}

TEST(BenchTest, HeaderOnlyForZeroReps) {
  BenchConfig config;
  config.kinds = {GenKind::kGraphic};
  config.n_grid = {8};
  config.k_grid = {2};
  config.reps = 0;
  std::ostringstream out;
  WriteCsv(RunBench(config), out);
  EXPECT_EQ(out.str(), std::string(kCsvHeader) + "\n");
}

TEST(BenchTest, DeterministicAcrossThreadCounts) {
  BenchConfig config;
  config.kinds = {GenKind::kPartition, GenKind::kMixed};
  config.n_grid = {6, 12};
  config.k_grid = {2, kKEqualsN};
  config.reps = 2;
  config.seed = 9;
  std::ostringstream serial;
  WriteCsv(RunBench(config), serial);
  config.threads = 3;
  std::ostringstream parallel;
  WriteCsv(RunBench(config), parallel);
  EXPECT_EQ(StripWallTime(serial.str()), StripWallTime(parallel.str()));
}

TEST(BenchTest, RowsAgreeWithOracle) {
  BenchConfig config;
  config.kinds = {GenKind::kUniform, GenKind::kPartition, GenKind::kGraphic,
                  GenKind::kBinary, GenKind::kMixed};
  config.n_grid = {4, 12};
  config.k_grid = {1, 3};
  config.reps = 2;
  const std::vector<BenchRow> rows = RunBench(config);
  EXPECT_EQ(rows.size(), 5u * 2 * 2 * 2 * config.algos.size());
  for (const BenchRow& row : rows) {
    const Instance instance = GenerateInstance(
        *ParseGenKind(row.kind), row.n, row.k, row.seed);
    EXPECT_EQ(row.p, UnionRankOracle(instance).p) << row.instance_id;
  }
}

TEST(BenchTest, ThreadsFromEnvironment) {
  unsetenv("MATROID_UNION_THREADS");
  EXPECT_EQ(ThreadsFromEnv(), 1);
  setenv("MATROID_UNION_THREADS", "4", 1);
  EXPECT_EQ(ThreadsFromEnv(), 4);
  setenv("MATROID_UNION_THREADS", "many", 1);
  EXPECT_EQ(ThreadsFromEnv(), 1);
  unsetenv("MATROID_UNION_THREADS");
}

}  // namespace
}  // namespace matroid_union
