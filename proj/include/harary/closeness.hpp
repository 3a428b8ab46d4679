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
#include <cmath>
#include <cstddef>
#include <vector>

#include "harary/distance.hpp"
#include "harary/graph.hpp"
#include "harary/parallel.hpp"

namespace harary {

// Per-removal totals closer than this to the minimum count as ties.
inline constexpr double kResidualTieTolerance = 1e-9;

struct ClosenessReport {
  std::vector<double> per_vertex;
  double total = 0.0;
};

struct ResidualReport {
  std::vector<double> per_removal;  // C_v for every deleted vertex v
  double r_value = 0.0;
  std::vector<Vertex> argmin;       // ascending
};

namespace detail {

// Sum of count[d] * 2^-d over d >= 1. Terms are added from the farthest
// layer inward, which keeps every partial sum exact for the graph sizes in
// use and makes the result independent of vertex numbering.
inline double dyadic_layer_sum(const std::vector<std::int64_t>& layer) {
  double sum = 0.0;
  for (std::size_t d = layer.size(); d-- > 1;) {
    sum += std::ldexp(static_cast<double>(layer[d]), -static_cast<int>(d));
  }
  return sum;
}

inline double closeness_from(const Graph& g, Vertex source, Vertex removed,
                             BfsScratch& scratch) {
  scratch.run(g, source, removed);
  return dyadic_layer_sum(scratch.layer);
}

// Total closeness of g - removed, sources summed in ascending id order.
inline double total_without(const Graph& g, Vertex removed,
                            BfsScratch& scratch) {
  double total = 0.0;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (s == removed) continue;
    total += closeness_from(g, s, removed, scratch);
  }
  return total;
}

}  // namespace detail

// C(v) = sum over u != v of 2^-d(v,u); unreachable vertices add nothing.
inline double vertex_closeness(const Graph& g, Vertex v) {
  detail::check_vertex(g, v, "vertex");
  detail::BfsScratch scratch;
  return detail::closeness_from(g, v, detail::kNoVertex, scratch);
}

inline ClosenessReport graph_closeness(const Graph& g, unsigned jobs = 1) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  ClosenessReport report;
  report.per_vertex.resize(n);
  const std::size_t chunk = 64;
  parallel_for((n + chunk - 1) / chunk, jobs, [&](std::size_t c) {
    detail::BfsScratch scratch;
    for (std::size_t v = c * chunk; v < std::min(n, (c + 1) * chunk); ++v) {
      report.per_vertex[v] = detail::closeness_from(
          g, static_cast<Vertex>(v), detail::kNoVertex, scratch);
    }
  });
  for (double c : report.per_vertex) report.total += c;
  return report;
}

// Total closeness C_v of the graph with v deleted.
inline double closeness_after_removal(const Graph& g, Vertex v) {
  detail::check_vertex(g, v, "removed vertex");
  detail::BfsScratch scratch;
  return detail::total_without(g, v, scratch);
}

// R = min over v of C_v, evaluated for every v. Parallel across removals;
// each C_v keeps its own fixed summation order.
inline ResidualReport residual_closeness(const Graph& g, unsigned jobs = 1) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  if (n < 2) throw ParameterError("residual closeness needs n >= 2");
  ResidualReport report;
  report.per_removal.resize(n);
  parallel_for(n, jobs, [&](std::size_t v) {
    thread_local detail::BfsScratch scratch;
    report.per_removal[v] =
        detail::total_without(g, static_cast<Vertex>(v), scratch);
  });
  report.r_value =
      *std::min_element(report.per_removal.begin(), report.per_removal.end());
  for (std::size_t v = 0; v < n; ++v) {
    if (report.per_removal[v] - report.r_value <= kResidualTieTolerance) {
      report.argmin.push_back(static_cast<Vertex>(v));
    }
  }
  return report;
}

}  // namespace harary
