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

#include "matroid_union/generate.h"

#include <algorithm>
#include <memory>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace matroid_union {
namespace {

int Uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Per-matroid rank scale: k matroids of rank about n/k keep the union tight.
int RankScale(int n, int k) { return std::max(1, (n + k - 1) / k); }

// Each element is a non-loop in a matroid with this probability, so it fits
// about three parts on average once k is large.
bool Active(std::mt19937_64& rng, int k) {
  const double q = std::min(0.9, 3.0 / k);
  return std::bernoulli_distribution(q)(rng);
}

std::shared_ptr<const Matroid> MakeUniform(std::mt19937_64& rng, int n,
                                           int k) {
  return std::make_shared<UniformMatroid>(n, Uniform(rng, 0, RankScale(n, k)));
}

std::shared_ptr<const Matroid> MakePartition(std::mt19937_64& rng, int n,
                                             int k) {
  const int scale = RankScale(n, k);
  const int num_blocks = Uniform(rng, 1, scale);
  std::vector<ElementSet> blocks(num_blocks);
  for (Element v = 0; v < n; ++v) {
    const int block = Uniform(rng, 0, num_blocks - 1);
    if (Active(rng, k)) blocks[block].push_back(v);
  }
  const int max_cap = (scale + num_blocks - 1) / num_blocks;
  std::vector<int> capacities(num_blocks);
  for (int& c : capacities) c = Uniform(rng, 1, max_cap);
  return std::make_shared<PartitionMatroid>(n, std::move(blocks),
                                            std::move(capacities));
}

// Inactive elements become self-loops at a random vertex.
std::shared_ptr<const Matroid> MakeGraphic(std::mt19937_64& rng, int n,
                                           int k) {
  const int num_vertices = Uniform(rng, 2, RankScale(n, k) + 1);
  std::vector<std::pair<int, int>> edges;
  edges.reserve(n);
  for (int e = 0; e < n; ++e) {
    const int a = Uniform(rng, 0, num_vertices - 1);
    int b = a;
    if (Active(rng, k)) {
      b = Uniform(rng, 0, num_vertices - 2);
      if (b >= a) ++b;
    }
    edges.emplace_back(a, b);
  }
  return std::make_shared<GraphicMatroid>(num_vertices, std::move(edges));
}

std::shared_ptr<const Matroid> MakeBinary(std::mt19937_64& rng, int n,
                                          int /*k*/) {
  const int num_rows = std::max(1, n / 2);
  std::vector<std::string> rows(num_rows, std::string(n, '0'));
  for (auto& row : rows) {
    for (char& bit : row) bit = Uniform(rng, 0, 1) == 1 ? '1' : '0';
  }
  return std::make_shared<BinaryMatroid>(n, std::move(rows));
}

}  // namespace

std::optional<GenKind> ParseGenKind(std::string_view name) {
  if (name == "uniform") return GenKind::kUniform;
  if (name == "partition") return GenKind::kPartition;
  if (name == "graphic") return GenKind::kGraphic;
  if (name == "binary") return GenKind::kBinary;
  if (name == "mixed") return GenKind::kMixed;
  return std::nullopt;
}

std::string_view GenKindName(GenKind kind) {
  switch (kind) {
    case GenKind::kUniform:
      return "uniform";
    case GenKind::kPartition:
      return "partition";
    case GenKind::kGraphic:
      return "graphic";
    case GenKind::kBinary:
      return "binary";
    case GenKind::kMixed:
      return "mixed";
  }
  return "unknown";
}

Instance GenerateInstance(GenKind kind, int n, int k, std::uint64_t seed) {
  if (n < 1) throw InstanceError("generated instances need n >= 1");
  if (k < 1) throw InstanceError("generated instances need k >= 1");
  std::mt19937_64 rng(seed);
  std::vector<std::shared_ptr<const Matroid>> matroids;
  matroids.reserve(k);
  for (int i = 0; i < k; ++i) {
    GenKind pick = kind;
    if (kind == GenKind::kMixed) pick = static_cast<GenKind>(i % 4);
    switch (pick) {
      case GenKind::kUniform:
        matroids.push_back(MakeUniform(rng, n, k));
        break;
      case GenKind::kPartition:
        matroids.push_back(MakePartition(rng, n, k));
        break;
      case GenKind::kGraphic:
        matroids.push_back(MakeGraphic(rng, n, k));
        break;
      case GenKind::kBinary:
      case GenKind::kMixed:
        matroids.push_back(MakeBinary(rng, n, k));
        break;
    }
  }
  return Instance(n, std::move(matroids));
}

}  // namespace matroid_union
