// Copyright 2026 The harary-closeness Authors
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

#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "harary/graph.hpp"

namespace harary {

enum class GraphFormat { EdgeList, Dot, Json };

inline std::optional<GraphFormat> parse_graph_format(std::string_view name) {
  if (name == "edgelist") return GraphFormat::EdgeList;
  if (name == "dot") return GraphFormat::Dot;
  if (name == "json") return GraphFormat::Json;
  return std::nullopt;
}

// edgelist: "u v\n" per edge, u < v, lexicographic. json: {"n":..,"edges":..}
// in the same order. dot: an undirected graph listing isolated vertices too.
inline std::string export_graph(const Graph& g, GraphFormat format) {
  const auto edges = g.edges();
  std::string out;
  switch (format) {
    case GraphFormat::EdgeList:
      for (const auto& [u, v] : edges) {
        out += std::to_string(u);
        out += ' ';
        out += std::to_string(v);
        out += '\n';
      }
      break;
    case GraphFormat::Dot:
      out = "graph G {\n";
      for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) == 0) out += "  " + std::to_string(v) + ";\n";
      }
      for (const auto& [u, v] : edges) {
        out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
      }
      out += "}\n";
      break;
    case GraphFormat::Json: {
      nlohmann::ordered_json doc;
      doc["n"] = g.vertex_count();
      doc["edges"] = nlohmann::ordered_json::array();
      for (const auto& [u, v] : edges) doc["edges"].push_back({u, v});
      out = doc.dump() + "\n";
      break;
    }
  }
  return out;
}

}  // namespace harary
