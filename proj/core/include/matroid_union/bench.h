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

#ifndef MATROID_UNION_BENCH_H_
#define MATROID_UNION_BENCH_H_

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "matroid_union/generate.h"
#include "matroid_union/solve.h"

namespace matroid_union {

inline constexpr std::string_view kCsvHeader =
    "instance_id,seed,n,k,kind,algo,p,ind_queries,rank_queries,phases,"
    "augmentations,wall_ms";

inline constexpr int kKEqualsN = 0;

std::vector<Algorithm> DefaultBenchAlgorithms();

struct BenchConfig {
  std::vector<GenKind> kinds;
  std::vector<int> n_grid;
  std::vector<int> k_grid;  // an entry of kKEqualsN means k = n
  int reps = 1;
  std::uint64_t seed = 0;
  std::vector<Algorithm> algos = DefaultBenchAlgorithms();
  int threads = 1;
  // Cross-check every row against the union rank oracle when n <= 12.
  bool check_small = true;
};

struct BenchRow {
  std::string instance_id;
  std::uint64_t seed = 0;
  int n = 0;
  int k = 0;
  std::string kind;
  std::string algo;
  int p = 0;
  std::int64_t ind_queries = 0;
  std::int64_t rank_queries = 0;
  int phases = 0;
  int augmentations = 0;
  double wall_ms = 0.0;
};

// Seed used for rep `rep` of the (kind, n, k) cell.
std::uint64_t CellSeed(std::uint64_t base, GenKind kind, int n, int k,
                       int rep);

// Rows ordered by kind, n, k, rep, then algorithm, independent of `threads`.
// Throws PreconditionError if a row disagrees with the oracle (check_small)
// or if two algorithms report different p on one instance.
std::vector<BenchRow> RunBench(const BenchConfig& config);

// MATROID_UNION_THREADS, or 1 when unset or invalid.
int ThreadsFromEnv();

void WriteCsv(const std::vector<BenchRow>& rows, std::ostream& out);

}  // namespace matroid_union

#endif  // MATROID_UNION_BENCH_H_
