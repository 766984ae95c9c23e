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

#include "matroid_union/bench.h"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <thread>

#include "matroid_union/verify.h"

namespace matroid_union {
namespace {

constexpr int kCheckedGroundSize = 12;

struct BenchJob {
  GenKind kind;
  int n;
  int k;
  int rep;
  std::uint64_t seed;
};

std::string InstanceId(const BenchJob& job) {
  std::ostringstream out;
  out << GenKindName(job.kind) << "_n" << job.n << "_k" << job.k << "_r"
      << job.rep;
  return out.str();
}

std::vector<BenchRow> RunJob(const BenchConfig& config, const BenchJob& job) {
  const Instance base = GenerateInstance(job.kind, job.n, job.k, job.seed);
  const std::string id = InstanceId(job);
  std::optional<int> expected;
  if (config.check_small && job.n <= kCheckedGroundSize) {
    expected = UnionRankOracle(base).p;
  }
  std::vector<BenchRow> rows;
  for (Algorithm algorithm : config.algos) {
    Instance instance = base.Fresh();
    const auto start = std::chrono::steady_clock::now();
    const SolveReport report = RunAlgorithm(algorithm, instance);
    const auto stop = std::chrono::steady_clock::now();

    BenchRow row;
    row.instance_id = id;
    row.seed = job.seed;
    row.n = job.n;
    row.k = job.k;
    row.kind = std::string(GenKindName(job.kind));
    row.algo = std::string(AlgorithmName(algorithm));
    row.p = report.p;
    row.ind_queries = report.stats.independence_queries;
    row.rank_queries = report.stats.rank_queries;
    row.phases = report.stats.phases;
    row.augmentations = report.stats.augmentations;
    row.wall_ms =
        std::chrono::duration<double, std::milli>(stop - start).count();

    if (algorithm != Algorithm::kGreedy) {
      if (expected && row.p != *expected) {
        throw PreconditionError(id + ": " + row.algo + " reports p=" +
                                std::to_string(row.p) + ", oracle says " +
                                std::to_string(*expected));
      }
      if (!expected) expected = row.p;
      if (row.p != *expected) {
        throw PreconditionError(id + ": exact solvers disagree on p");
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::vector<Algorithm> DefaultBenchAlgorithms() {
  return {Algorithm::kBlockFlowInd, Algorithm::kBlockFlowEnum,
          Algorithm::kBlockFlowRank, Algorithm::kEdgeRecycle,
          Algorithm::kCombined};
}

std::uint64_t CellSeed(std::uint64_t base, GenKind kind, int n, int k,
                       int rep) {
  // splitmix64 over the cell coordinates.
  std::uint64_t x = base;
  for (std::uint64_t v :
       {static_cast<std::uint64_t>(kind), static_cast<std::uint64_t>(n),
        static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(rep)}) {
    x += 0x9e3779b97f4a7c15ULL + v;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    x ^= x >> 31;
  }
  return x;
}

std::vector<BenchRow> RunBench(const BenchConfig& config) {
  std::vector<BenchJob> jobs;
  for (GenKind kind : config.kinds) {
    for (int n : config.n_grid) {
      for (int grid_k : config.k_grid) {
        const int k = grid_k == kKEqualsN ? n : grid_k;
        for (int rep = 0; rep < config.reps; ++rep) {
          jobs.push_back({kind, n, k, rep, CellSeed(config.seed, kind, n, k,
                                                    rep)});
        }
      }
    }
  }

  std::vector<std::vector<BenchRow>> results(jobs.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      try {
        results[i] = RunJob(config, jobs[i]);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = jobs.size();
      }
    }
  };
  const int threads = std::max(1, config.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (std::thread& thread : pool) thread.join();
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<BenchRow> rows;
  for (std::vector<BenchRow>& chunk : results) {
    for (BenchRow& row : chunk) rows.push_back(std::move(row));
  }
  return rows;
}

int ThreadsFromEnv() {
  const char* value = std::getenv("MATROID_UNION_THREADS");
  if (value == nullptr) return 1;
  char* end = nullptr;
  const long threads = std::strtol(value, &end, 10);
  if (end == value || *end != '\0' || threads < 1 || threads > 1024) {
    return 1;
  }
  return static_cast<int>(threads);
}

void WriteCsv(const std::vector<BenchRow>& rows, std::ostream& out) {
  out << kCsvHeader << "\n";
  for (const BenchRow& row : rows) {
    out << row.instance_id << ',' << row.seed << ',' << row.n << ',' << row.k
        << ',' << row.kind << ',' << row.algo << ',' << row.p << ','
        << row.ind_queries << ',' << row.rank_queries << ',' << row.phases
        << ',' << row.augmentations << ',' << std::fixed
        << std::setprecision(3) << row.wall_ms << "\n";
  }
}

}  // namespace matroid_union
