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

#include "harary/graph.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "harary/export.hpp"

namespace harary {
namespace {

std::vector<Vertex> neighbors_of(const Graph& g, Vertex v) {
  const auto row = g.neighbors(v);
  return {row.begin(), row.end()};
}

TEST(BuildHarary, EvenKJoinsNearestNeighbors) {
  const Graph g = build_harary(HararyParams(4, 8));
  EXPECT_EQ(neighbors_of(g, 0), (std::vector<Vertex>{1, 2, 6, 7}));
  EXPECT_EQ(edge_count(g), 16u);
}

TEST(BuildHarary, OddKOddNApexHasExtraEdge) {
  const Graph g = build_harary(HararyParams(3, 9));
  EXPECT_EQ(neighbors_of(g, 4), (std::vector<Vertex>{0, 3, 5, 8}));
  for (Vertex v = 0; v < 9; ++v) {
    EXPECT_EQ(g.degree(v), v == 4 ? 4u : 3u) << "vertex " << v;
  }
  EXPECT_EQ(edge_count(g), 14u);
}

TEST(BuildHarary, OddKEvenNAddsDiametricChord) {
  const Graph g = build_harary(HararyParams(5, 12));
  EXPECT_EQ(neighbors_of(g, 0), (std::vector<Vertex>{1, 2, 6, 10, 11}));
  EXPECT_EQ(edge_count(g), 30u);
}

TEST(BuildHarary, KTwoIsTheCycle) {
  const Graph g = build_harary(HararyParams(2, 6));
  EXPECT_EQ(neighbors_of(g, 0), (std::vector<Vertex>{1, 5}));
  EXPECT_EQ(edge_count(g), 6u);
}

TEST(BuildHarary, RejectsInvalidParameters) {
  EXPECT_THROW(HararyParams(1, 5), ParameterError);
  EXPECT_THROW(HararyParams(5, 5), ParameterError);
  EXPECT_THROW(HararyParams(6, 4), ParameterError);
}

TEST(BuildHarary, ParityCases) {
  EXPECT_EQ(HararyParams(4, 9).parity_case(), ParityCase::EvenK);
  EXPECT_EQ(HararyParams(5, 12).parity_case(), ParityCase::OddKEvenN);
  EXPECT_EQ(HararyParams(5, 17).parity_case(), ParityCase::OddKOddN);
}

// Degrees, edge count and canonical form over every small (k, n).
TEST(BuildHarary, StructuralInvariantsOverGrid) {
  for (int n = 3; n <= 60; ++n) {
    for (int k = 2; k < n; ++k) {
      const HararyParams p(k, n);
      const Graph g = build_harary(p);
      SCOPED_TRACE("k=" + std::to_string(k) + " n=" + std::to_string(n));
      ASSERT_EQ(g.vertex_count(), n);
      EXPECT_EQ(edge_count(g), static_cast<std::size_t>((k * n + 1) / 2));
      const bool odd_odd = p.parity_case() == ParityCase::OddKOddN;
      for (Vertex v = 0; v < n; ++v) {
        const auto row = g.neighbors(v);
        EXPECT_TRUE(std::adjacent_find(row.begin(), row.end(),
                                       std::greater_equal<>()) == row.end());
        EXPECT_FALSE(g.adjacent(v, v));
        for (Vertex u : row) EXPECT_TRUE(g.adjacent(u, v));
        const auto expected =
            static_cast<std::size_t>(odd_odd && v == p.apex() ? k + 1 : k);
        EXPECT_EQ(g.degree(v), expected) << "vertex " << v;
      }
    }
  }
}

TEST(BuildCirculant, Examples) {
  const Graph cycle = build_circulant(7, 1);
  for (Vertex v = 0; v < 7; ++v) EXPECT_EQ(cycle.degree(v), 2u);

  const Graph k7 = build_circulant(7, 3);
  EXPECT_EQ(edge_count(k7), 21u);

  EXPECT_EQ(build_circulant(10, 2), build_harary(HararyParams(4, 10)));
}

TEST(BuildCirculant, MatchesEvenHarary) {
  for (int n = 3; n <= 80; ++n) {
    for (int l = 1; 2 * l < n; ++l) {
      EXPECT_EQ(build_circulant(n, l), build_harary(HararyParams(2 * l, n)))
          << "n=" << n << " l=" << l;
    }
  }
}

TEST(BuildCirculant, HalfStepIsComplete) {
  for (int n = 2; n <= 20; ++n) {
    EXPECT_EQ(edge_count(build_circulant(n, n / 2)),
              static_cast<std::size_t>(n * (n - 1) / 2));
  }
}

TEST(BuildCirculant, RejectsStepOutOfRange) {
  EXPECT_THROW(build_circulant(7, 0), ParameterError);
  EXPECT_THROW(build_circulant(7, 4), ParameterError);
}

TEST(GraphCanonicalForm, RejectsAsymmetryAndLoops) {
  EXPECT_THROW(Graph::from_adjacency({{1}, {}}), ParameterError);
  EXPECT_THROW(Graph::from_adjacency({{0}}), ParameterError);
  EXPECT_THROW(Graph::from_adjacency({{3}, {}}), ParameterError);
  const Graph g = Graph::from_adjacency({{2, 1, 1}, {0}, {0}});
  EXPECT_EQ(neighbors_of(g, 0), (std::vector<Vertex>{1, 2}));
}

TEST(ExportGraph, EdgeListIsSortedWithUnixNewlines) {
  EXPECT_EQ(export_graph(complete_graph(3), GraphFormat::EdgeList),
            "0 1\n0 2\n1 2\n");
  const std::string text =
      export_graph(build_harary(HararyParams(3, 8)), GraphFormat::EdgeList);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 12);
  EXPECT_EQ(text.find('\r'), std::string::npos);
}

TEST(ExportGraph, JsonCarriesOrderAndCount) {
  const auto doc = nlohmann::json::parse(
      export_graph(build_circulant(4, 1), GraphFormat::Json));
  EXPECT_EQ(doc["n"], 4);
  ASSERT_EQ(doc["edges"].size(), 4u);
  EXPECT_EQ(doc["edges"][0], nlohmann::json::array({0, 1}));
  EXPECT_EQ(doc["edges"][3], nlohmann::json::array({2, 3}));
}

TEST(ExportGraph, DotIsUndirected) {
  EXPECT_EQ(export_graph(complete_graph(3), GraphFormat::Dot),
            "graph G {\n  0 -- 1;\n  0 -- 2;\n  1 -- 2;\n}\n");
  EXPECT_EQ(export_graph(Graph::from_adjacency({{}, {}}), GraphFormat::Dot),
            "graph G {\n  0;\n  1;\n}\n");
}

}  // namespace
}  // namespace harary
