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

#include "matroid_union/oracle.h"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>
#include <utility>

namespace matroid_union {
namespace {

class UnionFind {
 public:
  explicit UnionFind(int size) : parent_(size), rank_(size, 0) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int Find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // Returns false if x and y were already connected.
  bool Union(int x, int y) {
    x = Find(x);
    y = Find(y);
    if (x == y) return false;
    if (rank_[x] < rank_[y]) std::swap(x, y);
    parent_[y] = x;
    if (rank_[x] == rank_[y]) ++rank_[x];
    return true;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> rank_;
};

}  // namespace

std::string_view KindName(MatroidKind kind) {
  switch (kind) {
    case MatroidKind::kUniform:
      return "uniform";
    case MatroidKind::kPartition:
      return "partition";
    case MatroidKind::kGraphic:
      return "graphic";
    case MatroidKind::kBinary:
      return "binary";
  }
  return "unknown";
}

Matroid::Matroid(int ground_size) : ground_size_(ground_size) {
  if (ground_size < 0) throw InstanceError("negative ground set size");
}

void Matroid::CheckRange(std::span<const Element> set) const {
  for (Element e : set) {
    if (e < 0 || e >= ground_size_) {
      throw InstanceError("element id " + std::to_string(e) +
                          " outside ground set of size " +
                          std::to_string(ground_size_));
    }
  }
}

bool Matroid::IsIndependent(std::span<const Element> set) const {
  return Rank(set) == static_cast<int>(set.size());
}

UniformMatroid::UniformMatroid(int ground_size, int rank)
    : Matroid(ground_size), rank_(rank) {
  if (rank < 0) throw InstanceError("uniform matroid rank must be >= 0");
}

bool UniformMatroid::IsIndependent(std::span<const Element> set) const {
  CheckRange(set);
  return static_cast<int>(set.size()) <= rank_;
}

int UniformMatroid::Rank(std::span<const Element> set) const {
  CheckRange(set);
  return std::min(static_cast<int>(set.size()), rank_);
}

PartitionMatroid::PartitionMatroid(int ground_size,
                                   std::vector<ElementSet> blocks,
                                   std::vector<int> capacities)
    : Matroid(ground_size),
      blocks_(std::move(blocks)),
      capacities_(std::move(capacities)),
      block_of_(ground_size, -1) {
  if (blocks_.size() != capacities_.size()) {
    throw InstanceError("partition matroid needs one capacity per block");
  }
  for (int b = 0; b < static_cast<int>(blocks_.size()); ++b) {
    if (capacities_[b] < 0) {
      throw InstanceError("partition capacities must be >= 0");
    }
    CheckRange(blocks_[b]);
    for (Element e : blocks_[b]) {
      if (block_of_[e] != -1) {
        throw InstanceError("element " + std::to_string(e) +
                            " appears in more than one block");
      }
      block_of_[e] = b;
    }
  }
}

int PartitionMatroid::Rank(std::span<const Element> set) const {
  CheckRange(set);
  std::vector<int> used(blocks_.size(), 0);
  int rank = 0;
  for (Element e : set) {
    const int b = block_of_[e];
    if (b < 0) continue;
    if (used[b] < capacities_[b]) {
      ++used[b];
      ++rank;
    }
  }
  return rank;
}

GraphicMatroid::GraphicMatroid(int num_vertices,
                               std::vector<std::pair<int, int>> edges)
    : Matroid(static_cast<int>(edges.size())),
      num_vertices_(num_vertices),
      edges_(std::move(edges)) {
  if (num_vertices < 0) throw InstanceError("negative vertex count");
  for (const auto& [u, v] : edges_) {
    if (u < 0 || u >= num_vertices || v < 0 || v >= num_vertices) {
      throw InstanceError("graphic edge endpoint out of range");
    }
  }
}

bool GraphicMatroid::IsIndependent(std::span<const Element> set) const {
  CheckRange(set);
  UnionFind uf(num_vertices_);
  for (Element e : set) {
    if (!uf.Union(edges_[e].first, edges_[e].second)) return false;
  }
  return true;
}

int GraphicMatroid::Rank(std::span<const Element> set) const {
  CheckRange(set);
  UnionFind uf(num_vertices_);
  int rank = 0;
  for (Element e : set) {
    if (uf.Union(edges_[e].first, edges_[e].second)) ++rank;
  }
  return rank;
}

BinaryMatroid::BinaryMatroid(int ground_size, std::vector<std::string> rows)
    : Matroid(ground_size), rows_(std::move(rows)) {
  const int num_rows = static_cast<int>(rows_.size());
  words_per_column_ = std::max(1, (num_rows + 63) / 64);
  columns_.assign(static_cast<std::size_t>(words_per_column_) * ground_size,
                  0);
  for (int r = 0; r < num_rows; ++r) {
    const std::string& row = rows_[r];
    if (static_cast<int>(row.size()) != ground_size) {
      throw InstanceError("binary row " + std::to_string(r) + " has length " +
                          std::to_string(row.size()) + ", expected " +
                          std::to_string(ground_size));
    }
    for (int c = 0; c < ground_size; ++c) {
      if (row[c] == '1') {
        columns_[static_cast<std::size_t>(c) * words_per_column_ + r / 64] |=
            std::uint64_t{1} << (r % 64);
      } else if (row[c] != '0') {
        throw InstanceError("binary rows may only contain '0' and '1'");
      }
    }
  }
}

int BinaryMatroid::Rank(std::span<const Element> set) const {
  CheckRange(set);
  const int w = words_per_column_;
  // Reduced basis vectors, each tagged with its pivot bit.
  std::vector<std::uint64_t> basis;
  std::vector<int> pivots;
  basis.reserve(set.size() * w);
  std::vector<std::uint64_t> vec(w);
  for (Element e : set) {
    std::copy_n(columns_.begin() + static_cast<std::ptrdiff_t>(e) * w, w,
                vec.begin());
    for (std::size_t b = 0; b < pivots.size(); ++b) {
      const int p = pivots[b];
      if ((vec[p / 64] >> (p % 64)) & 1) {
        for (int j = 0; j < w; ++j) vec[j] ^= basis[b * w + j];
      }
    }
    int pivot = -1;
    for (int j = 0; j < w; ++j) {
      if (vec[j] != 0) {
        pivot = j * 64 + std::countr_zero(vec[j]);
        break;
      }
    }
    if (pivot < 0) continue;
    // Keep the basis fully reduced so later vectors need one pass.
    for (std::size_t b = 0; b < pivots.size(); ++b) {
      std::uint64_t* row = &basis[b * w];
      if ((row[pivot / 64] >> (pivot % 64)) & 1) {
        for (int j = 0; j < w; ++j) row[j] ^= vec[j];
      }
    }
    basis.insert(basis.end(), vec.begin(), vec.end());
    pivots.push_back(pivot);
  }
  return static_cast<int>(pivots.size());
}

MatroidOracle::MatroidOracle(std::shared_ptr<const Matroid> backend)
    : backend_(std::move(backend)) {
  if (!backend_) throw InstanceError("null matroid backend");
}

bool MatroidOracle::IsIndependent(std::span<const Element> set) {
  if (mode_ == OracleMode::kRankOnly) {
    throw OracleModeError("independence query on a rank-only oracle");
  }
  ++independence_count_;
  return backend_->IsIndependent(set);
}

int MatroidOracle::Rank(std::span<const Element> set) {
  if (mode_ == OracleMode::kIndependenceOnly) {
    throw OracleModeError("rank query on an independence-only oracle");
  }
  ++rank_count_;
  return backend_->Rank(set);
}

void MatroidOracle::ResetCounters() {
  independence_count_ = 0;
  rank_count_ = 0;
}

QueryStats operator-(const QueryStats& later, const QueryStats& earlier) {
  QueryStats diff = later;
  diff.independence_queries -= earlier.independence_queries;
  diff.rank_queries -= earlier.rank_queries;
  for (std::size_t i = 0; i < diff.per_matroid_independence.size() &&
                          i < earlier.per_matroid_independence.size();
       ++i) {
    diff.per_matroid_independence[i] -= earlier.per_matroid_independence[i];
    diff.per_matroid_rank[i] -= earlier.per_matroid_rank[i];
  }
  return diff;
}

Instance::Instance(int n, std::vector<std::shared_ptr<const Matroid>> matroids)
    : n_(n) {
  if (n < 0) throw InstanceError("n must be >= 0");
  if (matroids.empty()) throw InstanceError("instance needs k >= 1 matroids");
  oracles_.reserve(matroids.size());
  for (auto& m : matroids) {
    if (!m) throw InstanceError("null matroid backend");
    if (m->ground_size() != n) {
      throw InstanceError("matroid " + std::to_string(oracles_.size()) +
                          " has ground set size " +
                          std::to_string(m->ground_size()) + ", expected " +
                          std::to_string(n));
    }
    oracles_.emplace_back(std::move(m));
  }
}

Instance Instance::Fresh() const {
  std::vector<std::shared_ptr<const Matroid>> backends;
  backends.reserve(oracles_.size());
  for (const auto& o : oracles_) backends.push_back(o.shared_backend());
  return Instance(n_, std::move(backends));
}

QueryStats Instance::Snapshot() const {
  QueryStats stats;
  stats.per_matroid_independence.reserve(oracles_.size());
  stats.per_matroid_rank.reserve(oracles_.size());
  for (const auto& o : oracles_) {
    stats.per_matroid_independence.push_back(o.independence_count());
    stats.per_matroid_rank.push_back(o.rank_count());
    stats.independence_queries += o.independence_count();
    stats.rank_queries += o.rank_count();
  }
  return stats;
}

void Instance::ResetStats() {
  for (auto& o : oracles_) o.ResetCounters();
}

void Instance::SetMode(OracleMode mode) {
  for (auto& o : oracles_) o.set_mode(mode);
}

}  // namespace matroid_union
