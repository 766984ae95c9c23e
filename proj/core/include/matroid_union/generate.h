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

#ifndef MATROID_UNION_GENERATE_H_
#define MATROID_UNION_GENERATE_H_

#include <cstdint>
#include <optional>
#include <string_view>

#include "matroid_union/oracle.h"

namespace matroid_union {

enum class GenKind { kUniform, kPartition, kGraphic, kBinary, kMixed };

std::optional<GenKind> ParseGenKind(std::string_view name);
std::string_view GenKindName(GenKind kind);

// Deterministic random instance with k matroids over n >= 1 elements.
// Partition and graphic matroids have rank about n/k, and each element is a
// non-loop in a given one with probability min(0.9, 3/k). Graphic matroids
// are random multigraphs with n edges whose inactive edges are self-loops;
// binary matroids are random 0/1 matrices with max(1, n/2) rows; kMixed
// rotates uniform, partition, graphic, binary by matroid index.
// Throws InstanceError for n < 1 or k < 1.
Instance GenerateInstance(GenKind kind, int n, int k, std::uint64_t seed);

}  // namespace matroid_union

#endif  // MATROID_UNION_GENERATE_H_
