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
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "harary/error.hpp"

namespace harary {

using Vertex = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;

// Immutable simple undirected graph on vertices 0..n-1.
//
// Adjacency is stored in compressed rows; every row is strictly ascending,
// symmetric and free of self-loops. All constructors go through
// from_adjacency(), which enforces that canonical form.
class Graph {
 public:
  Graph() = default;

  // Sorts and de-duplicates each row, then checks symmetry and self-loops.
  static Graph from_adjacency(std::vector<std::vector<Vertex>> rows) {
    const auto n = static_cast<Vertex>(rows.size());
    Graph g;
    g.offsets_.reserve(rows.size() + 1);
    g.offsets_.push_back(0);
    for (Vertex v = 0; v < n; ++v) {
      auto& row = rows[v];
      std::sort(row.begin(), row.end());
      row.erase(std::unique(row.begin(), row.end()), row.end());
      for (Vertex u : row) {
        if (u < 0 || u >= n) {
          throw ParameterError("neighbor " + std::to_string(u) +
                               " of vertex " + std::to_string(v) +
                               " is out of range");
        }
        if (u == v) {
          throw ParameterError("self-loop at vertex " + std::to_string(v));
        }
      }
      g.neighbors_.insert(g.neighbors_.end(), row.begin(), row.end());
      g.offsets_.push_back(g.neighbors_.size());
    }
    for (Vertex v = 0; v < n; ++v) {
      for (Vertex u : g.neighbors(v)) {
        if (!g.adjacent(u, v)) {
          throw ParameterError("adjacency is not symmetric: " +
                               std::to_string(v) + " -> " +
                               std::to_string(u));
        }
      }
    }
    return g;
  }

  static Graph from_edges(Vertex n, std::span<const Edge> edges) {
    if (n < 0) throw ParameterError("vertex count must be nonnegative");
    std::vector<std::vector<Vertex>> rows(static_cast<std::size_t>(n));
    for (const auto& [u, v] : edges) {
      if (u < 0 || u >= n || v < 0 || v >= n) {
        throw ParameterError("edge endpoint out of range");
      }
      rows[u].push_back(v);
      rows[v].push_back(u);
    }
    return from_adjacency(std::move(rows));
  }

  Vertex vertex_count() const {
    return offsets_.empty() ? 0 : static_cast<Vertex>(offsets_.size() - 1);
  }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {neighbors_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }

  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

  bool adjacent(Vertex u, Vertex v) const {
    const auto row = neighbors(u);
    return std::binary_search(row.begin(), row.end(), v);
  }

  std::size_t edge_count() const { return neighbors_.size() / 2; }

  // Edges as (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (Vertex u = 0; u < vertex_count(); ++u) {
      for (Vertex v : neighbors(u)) {
        if (u < v) out.emplace_back(u, v);
      }
    }
    return out;
  }

  bool contains(Vertex v) const { return v >= 0 && v < vertex_count(); }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> neighbors_;
};

inline std::size_t edge_count(const Graph& g) { return g.edge_count(); }

enum class ParityCase { EvenK, OddKEvenN, OddKOddN };

inline std::string_view to_string(ParityCase c) {
  switch (c) {
    case ParityCase::EvenK:
      return "EvenK";
    case ParityCase::OddKEvenN:
      return "OddKEvenN";
    case ParityCase::OddKOddN:
      return "OddKOddN";
  }
  return "?";
}

// Connectivity k and order n of a Harary graph. Requires 2 <= k < n.
class HararyParams {
 public:
  HararyParams(int k, int n) : k_(k), n_(n) {
    if (k < 2) {
      throw ParameterError("k must be at least 2 (got " + std::to_string(k) +
                           ")");
    }
    if (k >= n) {
      throw ParameterError("k must be less than n (got k=" +
                           std::to_string(k) + ", n=" + std::to_string(n) +
                           ")");
    }
  }

  static bool valid(int k, int n) { return k >= 2 && k < n; }

  int k() const { return k_; }
  int n() const { return n_; }

  ParityCase parity_case() const {
    if (k_ % 2 == 0) return ParityCase::EvenK;
    return n_ % 2 == 0 ? ParityCase::OddKEvenN : ParityCase::OddKOddN;
  }

  // The degree-(k+1) vertex of the odd/odd construction.
  Vertex apex() const { return (n_ - 1) / 2; }

  friend bool operator==(const HararyParams&, const HararyParams&) = default;
  friend auto operator<=>(const HararyParams&, const HararyParams&) = default;

 private:
  int k_;
  int n_;
};

namespace detail {

inline void link(std::vector<std::vector<Vertex>>& rows, long long u,
                 long long v) {
  const auto n = static_cast<long long>(rows.size());
  u = ((u % n) + n) % n;
  v = ((v % n) + n) % n;
  if (u == v) return;
  rows[u].push_back(static_cast<Vertex>(v));
  rows[v].push_back(static_cast<Vertex>(u));
}

inline std::vector<std::vector<Vertex>> ring_rows(int n, int reach) {
  std::vector<std::vector<Vertex>> rows(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int s = 1; s <= reach; ++s) link(rows, i, i + s);
  }
  return rows;
}

}  // namespace detail

// Even k: i ~ i±1..i±k/2 (mod n). Odd k, even n: the even core for k-1 plus
// the diametric chords {i, i+n/2}. Odd k, odd n: the even core plus
// {i, i+(n-1)/2} for 0 <= i <= (n-1)/2, which makes (n-1)/2 the single
// vertex of degree k+1.
inline Graph build_harary(const HararyParams& params) {
  const int k = params.k();
  const int n = params.n();
  auto rows = detail::ring_rows(n, k / 2);
  if (k % 2 == 1) {
    if (n % 2 == 0) {
      for (int i = 0; i < n / 2; ++i) detail::link(rows, i, i + n / 2);
    } else {
      const int half = (n - 1) / 2;
      for (int i = 0; i <= half; ++i) detail::link(rows, i, i + half);
    }
  }
  return Graph::from_adjacency(std::move(rows));
}

// Consecutive circulant C_{n,[l]}: v ~ v±i (mod n) for i in 1..l.
inline Graph build_circulant(int n, int l) {
  if (n < 1) throw ParameterError("n must be at least 1");
  if (l < 1 || l > n / 2) {
    throw ParameterError("step bound l must lie in [1, " +
                         std::to_string(n / 2) + "] (got " +
                         std::to_string(l) + ")");
  }
  return Graph::from_adjacency(detail::ring_rows(n, l));
}

inline Graph complete_graph(int n) {
  if (n < 2) throw ParameterError("complete graph needs n >= 2");
  return build_circulant(n, n / 2);
}

}  // namespace harary
