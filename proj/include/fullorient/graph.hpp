// Copyright 2026 The fullorient Authors
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

#ifndef FULLORIENT_GRAPH_HPP
#define FULLORIENT_GRAPH_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace fullorient {

using Vertex = std::uint32_t;
using EdgeIndex = std::uint32_t;

// Undirected edge, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Directed arc tail -> head.
struct Arc {
  Vertex tail = 0;
  Vertex head = 0;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

struct Incidence {
  Vertex neighbor;
  EdgeIndex edge;
};

// Immutable simple undirected graph on vertices 0..n-1. Edge indices follow
// the order in which the edges were supplied, so orientations built against
// one graph can refer to edges by index.
class SimpleGraph {
 public:
  SimpleGraph() = default;

  // Validates and builds. Endpoints may be given in either order; they are
  // stored canonically. Throws InvalidArgument on loops, duplicates, or
  // labels >= n.
  SimpleGraph(std::size_t n, std::span<const Edge> edges);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(EdgeIndex e) const { return edges_.at(e); }

  // Incident edges of v, sorted by neighbor label.
  std::span<const Incidence> incident(Vertex v) const { return adj_.at(v); }
  std::size_t degree(Vertex v) const { return adj_.at(v).size(); }

  std::optional<EdgeIndex> find_edge(Vertex a, Vertex b) const;
  bool adjacent(Vertex a, Vertex b) const { return find_edge(a, b).has_value(); }

  // Identical vertex count and identical indexed edge list.
  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adj_;
};

using GraphPtr = std::shared_ptr<const SimpleGraph>;

inline GraphPtr share(SimpleGraph g) {
  return std::make_shared<const SimpleGraph>(std::move(g));
}

struct Triangle {
  std::array<Vertex, 3> vertices;   // sorted
  std::array<EdgeIndex, 3> edges;   // {v0v1, v0v2, v1v2}

  friend bool operator==(const Triangle&, const Triangle&) = default;
};

// Generators. Vertex i plays the role of v_i on a cycle v_0 v_1 ... v_{n-1}.
SimpleGraph cycle_graph(std::size_t n);
SimpleGraph complete_graph(std::size_t n);
// r partite blocks of `part_size` vertices each; block of v is v / part_size.
SimpleGraph complete_multipartite(std::size_t r, std::size_t part_size);

// u ~ v iff 1 <= dist(u, v) <= m. Keeps g's edges (and indices) first, then
// appends the new edges distance layer by distance layer in (u, v) order.
// Rejects disconnected graphs and m == 0.
SimpleGraph graph_power(const SimpleGraph& g, std::size_t m);

// Shorthand for graph_power(cycle_graph(n), k).
SimpleGraph cycle_power(std::size_t n, std::size_t k);

std::vector<Triangle> enumerate_triangles(const SimpleGraph& g);
std::size_t component_count(const SimpleGraph& g);

// BFS distances from `source`; unreachable vertices get SIZE_MAX.
std::vector<std::size_t> bfs_distances(const SimpleGraph& g, Vertex source);

// Copy of g without the listed edges. Surviving edges keep their relative
// order but are re-indexed.
SimpleGraph remove_edges(const SimpleGraph& g, std::span<const Edge> removed);

}  // namespace fullorient

#endif  // FULLORIENT_GRAPH_HPP
