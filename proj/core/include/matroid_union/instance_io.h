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

#ifndef MATROID_UNION_INSTANCE_IO_H_
#define MATROID_UNION_INSTANCE_IO_H_

// Instance files:
//   {"n": int, "matroids": [
//     {"type":"uniform","r":int} |
//     {"type":"partition","blocks":[[elem,...],...],"capacities":[int,...]} |
//     {"type":"graphic","num_vertices":int,"edges":[[u,v],...]} |
//     {"type":"binary","rows":["0101...", ...]} ]}
// edges[i] and column i are ground element i.

#include <string>
#include <string_view>

#include "matroid_union/oracle.h"

namespace matroid_union {

// Throws InstanceError on malformed JSON, unknown types, size mismatches, or
// k = 0.
Instance ParseInstance(std::string_view text);
Instance LoadInstance(const std::string& path);

// Compact JSON followed by a newline. Parse then serialize reproduces the
// output of a previous SerializeInstance byte for byte.
std::string SerializeInstance(const Instance& instance);
void SaveInstance(const Instance& instance, const std::string& path);

}  // namespace matroid_union

#endif  // MATROID_UNION_INSTANCE_IO_H_
