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

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "harary/error.hpp"
#include "harary/formula_result.hpp"
#include "harary/graph.hpp"
#include "harary/parallel.hpp"

namespace harary {

// Hop distances from one source. Unreachable vertices (including a deleted
// vertex) carry their own state rather than a large number.
class DistanceRow {
 public:
  static constexpr std::int32_t kUnreachable = -1;

  DistanceRow(Vertex source, std::vector<std::int32_t> hops)
      : source_(source), hops_(std::move(hops)) {}

  Vertex source() const { return source_; }
  std::size_t size() const { return hops_.size(); }
  bool reachable(Vertex v) const { return hops_[v] != kUnreachable; }

  std::optional<int> at(Vertex v) const {
    if (!reachable(v)) return std::nullopt;
    return hops_[v];
  }

  // Hop count for a vertex known to be reachable.
  int operator[](Vertex v) const { return hops_[v]; }

  const std::vector<std::int32_t>& raw() const { return hops_; }

 private:
  Vertex source_;
  std::vector<std::int32_t> hops_;
};

namespace detail {

inline constexpr Vertex kNoVertex = -1;

// Reusable BFS buffers. After run(), `order` holds the reached vertices in
// visiting order and `layer[d]` counts vertices at distance d.
struct BfsScratch {
  std::vector<std::int32_t> dist;
  std::vector<Vertex> order;
  std::vector<std::int64_t> layer;

  void run(const Graph& g, Vertex source, Vertex removed) {
    const auto n = static_cast<std::size_t>(g.vertex_count());
    dist.assign(n, DistanceRow::kUnreachable);
    order.clear();
    order.reserve(n);
    layer.clear();
    if (removed != kNoVertex) dist[removed] = -2;  // never enqueued
    dist[source] = 0;
    order.push_back(source);
    layer.push_back(1);
    for (std::size_t head = 0; head < order.size(); ++head) {
      const Vertex u = order[head];
      const std::int32_t next = dist[u] + 1;
      for (Vertex v : g.neighbors(u)) {
        if (dist[v] == DistanceRow::kUnreachable) {
          dist[v] = next;
          order.push_back(v);
          if (static_cast<std::size_t>(next) == layer.size()) {
            layer.push_back(0);
          }
          ++layer[next];
        }
      }
    }
    if (removed != kNoVertex) dist[removed] = DistanceRow::kUnreachable;
  }

  int eccentricity() const { return static_cast<int>(layer.size()) - 1; }
};

inline void check_vertex(const Graph& g, Vertex v, const char* what) {
  if (!g.contains(v)) {
    throw ParameterError(std::string(what) + " " + std::to_string(v) +
                         " is out of range [0, " +
                         std::to_string(g.vertex_count()) + ")");
  }
}

}  // namespace detail

inline DistanceRow bfs_distances(const Graph& g, Vertex source) {
  detail::check_vertex(g, source, "source");
  detail::BfsScratch scratch;
  scratch.run(g, source, detail::kNoVertex);
  return {source, std::move(scratch.dist)};
}

// Distances in g with `removed` and its incident edges deleted.
inline DistanceRow bfs_excluding(const Graph& g, Vertex source,
                                 Vertex removed) {
  detail::check_vertex(g, source, "source");
  detail::check_vertex(g, removed, "removed vertex");
  if (source == removed) {
    throw ParameterError("source and removed vertex coincide");
  }
  detail::BfsScratch scratch;
  scratch.run(g, source, removed);
  return {source, std::move(scratch.dist)};
}

struct GraphStats {
  std::vector<int> eccentricities;  // max finite distance per vertex
  int diameter = 0;
  int radius = 0;
  bool connected = true;
};

// One BFS per vertex, fanned across `jobs` workers.
inline GraphStats graph_stats(const Graph& g, unsigned jobs = 1) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  GraphStats stats;
  stats.eccentricities.resize(n, 0);
  std::vector<char> spans_all(n, 1);
  const std::size_t chunk = 64;
  parallel_for((n + chunk - 1) / chunk, jobs, [&](std::size_t c) {
    detail::BfsScratch scratch;
    for (std::size_t v = c * chunk; v < std::min(n, (c + 1) * chunk); ++v) {
      scratch.run(g, static_cast<Vertex>(v), detail::kNoVertex);
      stats.eccentricities[v] = scratch.eccentricity();
      spans_all[v] = scratch.order.size() == n;
    }
  });
  if (n > 0) {
    stats.diameter = *std::max_element(stats.eccentricities.begin(),
                                       stats.eccentricities.end());
    stats.radius = *std::min_element(stats.eccentricities.begin(),
                                     stats.eccentricities.end());
  }
  stats.connected = std::all_of(spans_all.begin(), spans_all.end(),
                                [](char c) { return c != 0; });
  return stats;
}

namespace detail {

inline int ceil_div(int a, int b) { return (a + b - 1) / b; }

struct DiameterCase {
  int value;
  const char* theorem_id;
  std::optional<int> inner_diam;
};

// Closed-form diameter for any k >= 2 (the even rule also serves H_{2,n},
// which the odd-k cases consult as an inner diameter).
inline DiameterCase harary_diameter(int k, int n) {
  if (k % 2 == 0) {
    if (n % k == 1) return {n / k, "Diam-evenK-n1", std::nullopt};
    return {ceil_div(n, k), "Diam-evenK", std::nullopt};
  }
  if (k == 3) {
    if (n % 2 == 0) return {ceil_div(n, 4), "Diam-k3-evenN", std::nullopt};
    return {ceil_div(n + 1, 4), "Diam-k3-oddN", std::nullopt};
  }
  const int base = ceil_div(n, 2 * k - 2);
  if (n % 2 == 0) {
    const int inner = harary_diameter(k - 1, n).value;
    if (inner % 2 == 0 && n % (k - 1) != 2) {
      return {base + 1, "Diam-oddK-evenN-plus1", inner};
    }
    return {base, "Diam-oddK-evenN", inner};
  }
  if ((n - k - 1) % (2 * (k - 1)) == 1) {
    return {base + 1, "Diam-oddK-oddN-plus1", std::nullopt};
  }
  return {base, "Diam-oddK-oddN", std::nullopt};
}

}  // namespace detail

// Closed-form diameter of H_{k,n}. k = 2 is outside the published rules and
// comes back uncovered; BFS remains the reference there.
inline FormulaResult diameter_formula(const HararyParams& params) {
  if (params.k() == 2) return FormulaResult::not_covered("NotCovered-k2");
  const auto d = detail::harary_diameter(params.k(), params.n());
  FormulaTrace trace{.theorem_id = d.theorem_id, .inner_diam = d.inner_diam};
  if (params.parity_case() == ParityCase::OddKOddN && params.k() > 3) {
    const int m = 2 * (params.k() - 1);
    trace.t = Residue{(params.n() - params.k() - 1) % m, m};
  }
  return FormulaResult::covered_by(d.value, std::move(trace));
}

}  // namespace harary
