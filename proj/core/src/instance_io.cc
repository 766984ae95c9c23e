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

#include "matroid_union/instance_io.h"

#include <fstream>
#include <memory>
#include <sstream>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace matroid_union {
namespace {

using Json = nlohmann::ordered_json;

const Json& Field(const Json& object, const char* key) {
  auto it = object.find(key);
  if (it == object.end()) {
    throw InstanceError(std::string("missing field \"") + key + "\"");
  }
  return *it;
}

int IntField(const Json& object, const char* key) {
  const Json& value = Field(object, key);
  if (!value.is_number_integer()) {
    throw InstanceError(std::string("field \"") + key +
                        "\" must be an integer");
  }
  return value.get<int>();
}

std::shared_ptr<const Matroid> ParseMatroid(const Json& spec, int n) {
  if (!spec.is_object()) throw InstanceError("matroid entry must be an object");
  const Json& type = Field(spec, "type");
  if (!type.is_string()) throw InstanceError("\"type\" must be a string");
  const std::string kind = type.get<std::string>();

  if (kind == "uniform") {
    return std::make_shared<UniformMatroid>(n, IntField(spec, "r"));
  }
  if (kind == "partition") {
    auto blocks = Field(spec, "blocks").get<std::vector<ElementSet>>();
    auto capacities = Field(spec, "capacities").get<std::vector<int>>();
    return std::make_shared<PartitionMatroid>(n, std::move(blocks),
                                              std::move(capacities));
  }
  if (kind == "graphic") {
    const int num_vertices = IntField(spec, "num_vertices");
    std::vector<std::pair<int, int>> edges;
    for (const Json& edge : Field(spec, "edges")) {
      if (!edge.is_array() || edge.size() != 2) {
        throw InstanceError("graphic edges must be [u, v] pairs");
      }
      edges.emplace_back(edge[0].get<int>(), edge[1].get<int>());
    }
    if (static_cast<int>(edges.size()) != n) {
      throw InstanceError("graphic matroid needs exactly n edges");
    }
    return std::make_shared<GraphicMatroid>(num_vertices, std::move(edges));
  }
  if (kind == "binary") {
    auto rows = Field(spec, "rows").get<std::vector<std::string>>();
    return std::make_shared<BinaryMatroid>(n, std::move(rows));
  }
  throw InstanceError("unknown matroid type \"" + kind + "\"");
}

Json MatroidToJson(const Matroid& m) {
  Json out;
  out["type"] = std::string(KindName(m.kind()));
  switch (m.kind()) {
    case MatroidKind::kUniform:
      out["r"] = static_cast<const UniformMatroid&>(m).rank_bound();
      break;
    case MatroidKind::kPartition: {
      const auto& pm = static_cast<const PartitionMatroid&>(m);
      out["blocks"] = pm.blocks();
      out["capacities"] = pm.capacities();
      break;
    }
    case MatroidKind::kGraphic: {
      const auto& gm = static_cast<const GraphicMatroid&>(m);
      out["num_vertices"] = gm.num_vertices();
      Json edges = Json::array();
      for (const auto& [u, v] : gm.edges()) edges.push_back({u, v});
      out["edges"] = std::move(edges);
      break;
    }
    case MatroidKind::kBinary:
      out["rows"] = static_cast<const BinaryMatroid&>(m).rows();
      break;
  }
  return out;
}

}  // namespace

Instance ParseInstance(std::string_view text) {
  try {
    const Json doc = Json::parse(text);
    if (!doc.is_object()) throw InstanceError("instance must be a JSON object");
    const int n = IntField(doc, "n");
    if (n < 0) throw InstanceError("n must be >= 0");
    const Json& specs = Field(doc, "matroids");
    if (!specs.is_array()) throw InstanceError("\"matroids\" must be an array");
    std::vector<std::shared_ptr<const Matroid>> matroids;
    for (const Json& spec : specs) matroids.push_back(ParseMatroid(spec, n));
    return Instance(n, std::move(matroids));
  } catch (const nlohmann::json::exception& e) {
    throw InstanceError(std::string("malformed instance: ") + e.what());
  }
}

Instance LoadInstance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InstanceError("cannot open instance file " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseInstance(buffer.str());
}

std::string SerializeInstance(const Instance& instance) {
  Json doc;
  doc["n"] = instance.n();
  Json matroids = Json::array();
  for (int i = 0; i < instance.k(); ++i) {
    matroids.push_back(MatroidToJson(instance.matroid(i)));
  }
  doc["matroids"] = std::move(matroids);
  return doc.dump() + "\n";
}

void SaveInstance(const Instance& instance, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InstanceError("cannot write instance file " + path);
  out << SerializeInstance(instance);
  if (!out) throw InstanceError("failed writing instance file " + path);
}

}  // namespace matroid_union
