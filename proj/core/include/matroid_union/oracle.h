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

#ifndef MATROID_UNION_ORACLE_H_
#define MATROID_UNION_ORACLE_H_

// Matroids over a dense ground set [0, n), accessed only through counted
// independence and rank oracles.

#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace matroid_union {

using Element = int;
using ElementSet = std::vector<Element>;

// Malformed instance data or an element id outside the ground set.
class InstanceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller broke a documented precondition (e.g. v already in S).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// The oracle was asked a query type that its mode forbids.
class OracleModeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class MatroidKind { kUniform, kPartition, kGraphic, kBinary };

std::string_view KindName(MatroidKind kind);

// Uncounted matroid backend. Implementations are immutable after
// construction and safe to share between threads.
class Matroid {
 public:
  virtual ~Matroid() = default;

  virtual MatroidKind kind() const = 0;
  int ground_size() const { return ground_size_; }

  // `set` must not contain duplicates. Throws InstanceError on ids outside
  // [0, ground_size()).
  virtual bool IsIndependent(std::span<const Element> set) const;
  virtual int Rank(std::span<const Element> set) const = 0;

 protected:
  explicit Matroid(int ground_size);
  void CheckRange(std::span<const Element> set) const;

 private:
  int ground_size_;
};

// Every subset of size at most `rank` is independent.
class UniformMatroid final : public Matroid {
 public:
  UniformMatroid(int ground_size, int rank);

  MatroidKind kind() const override { return MatroidKind::kUniform; }
  bool IsIndependent(std::span<const Element> set) const override;
  int Rank(std::span<const Element> set) const override;

  int rank_bound() const { return rank_; }

 private:
  int rank_;
};

// rank(S) = sum over blocks of min(|S ∩ block|, capacity). Elements listed
// in no block are loops.
class PartitionMatroid final : public Matroid {
 public:
  PartitionMatroid(int ground_size, std::vector<ElementSet> blocks,
                   std::vector<int> capacities);

  MatroidKind kind() const override { return MatroidKind::kPartition; }
  int Rank(std::span<const Element> set) const override;

  const std::vector<ElementSet>& blocks() const { return blocks_; }
  const std::vector<int>& capacities() const { return capacities_; }

 private:
  std::vector<ElementSet> blocks_;
  std::vector<int> capacities_;
  std::vector<int> block_of_;  // -1 for unlisted elements
};

// Cycle matroid of a multigraph; edge i is ground element i. Each query
// rebuilds a fresh union-find.
class GraphicMatroid final : public Matroid {
 public:
  GraphicMatroid(int num_vertices, std::vector<std::pair<int, int>> edges);

  MatroidKind kind() const override { return MatroidKind::kGraphic; }
  bool IsIndependent(std::span<const Element> set) const override;
  int Rank(std::span<const Element> set) const override;

  int num_vertices() const { return num_vertices_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

 private:
  int num_vertices_;
  std::vector<std::pair<int, int>> edges_;
};

// Column matroid of a 0/1 matrix over GF(2). Column i of the row strings is
// ground element i.
class BinaryMatroid final : public Matroid {
 public:
  BinaryMatroid(int ground_size, std::vector<std::string> rows);

  MatroidKind kind() const override { return MatroidKind::kBinary; }
  int Rank(std::span<const Element> set) const override;

  const std::vector<std::string>& rows() const { return rows_; }

 private:
  std::vector<std::string> rows_;
  int words_per_column_;
  std::vector<std::uint64_t> columns_;  // column-major, packed bits
};

enum class OracleMode { kBoth, kIndependenceOnly, kRankOnly };

// Counted access to a matroid backend. Copies share the backend and carry
// their own counters.
class MatroidOracle {
 public:
  explicit MatroidOracle(std::shared_ptr<const Matroid> backend);

  bool IsIndependent(std::span<const Element> set);
  int Rank(std::span<const Element> set);

  std::int64_t independence_count() const { return independence_count_; }
  std::int64_t rank_count() const { return rank_count_; }
  void ResetCounters();

  OracleMode mode() const { return mode_; }
  void set_mode(OracleMode mode) { mode_ = mode; }

  // Uncounted handle for verification code.
  const Matroid& backend() const { return *backend_; }
  const std::shared_ptr<const Matroid>& shared_backend() const {
    return backend_;
  }

 private:
  std::shared_ptr<const Matroid> backend_;
  std::int64_t independence_count_ = 0;
  std::int64_t rank_count_ = 0;
  OracleMode mode_ = OracleMode::kBoth;
};

struct QueryStats {
  std::int64_t independence_queries = 0;
  std::int64_t rank_queries = 0;
  std::vector<std::int64_t> per_matroid_independence;
  std::vector<std::int64_t> per_matroid_rank;
  int phases = 0;
  int augmentations = 0;
};

// Counter difference `later - earlier`; both snapshots must cover the same
// matroids. Phase and augmentation counts are taken from `later`.
QueryStats operator-(const QueryStats& later, const QueryStats& earlier);

// k >= 1 matroids over the common ground set [0, n).
class Instance {
 public:
  Instance(int n, std::vector<std::shared_ptr<const Matroid>> matroids);

  int n() const { return n_; }
  int k() const { return static_cast<int>(oracles_.size()); }

  MatroidOracle& oracle(int i) { return oracles_[i]; }
  const MatroidOracle& oracle(int i) const { return oracles_[i]; }
  const Matroid& matroid(int i) const { return oracles_[i].backend(); }

  // Same backends, zeroed counters. Used for uncounted verification runs and
  // for giving each bench worker its own instance.
  Instance Fresh() const;

  QueryStats Snapshot() const;
  void ResetStats();
  void SetMode(OracleMode mode);

 private:
  int n_;
  std::vector<MatroidOracle> oracles_;
};

}  // namespace matroid_union

#endif  // MATROID_UNION_ORACLE_H_
