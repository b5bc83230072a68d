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

#include "fullorient/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <set>
#include <string>

#include "fullorient/error.hpp"

namespace fullorient {

SimpleGraph::SimpleGraph(std::size_t n, std::span<const Edge> edges)
    : n_(n), adj_(n) {
  if (n > std::numeric_limits<Vertex>::max()) {
    throw InvalidArgument("vertex count too large");
  }
  edges_.reserve(edges.size());
  for (const Edge& raw : edges) {
    Edge e{std::min(raw.u, raw.v), std::max(raw.u, raw.v)};
    if (e.u == e.v) {
      throw InvalidArgument("loop at vertex " + std::to_string(e.u));
    }
    if (e.v >= n) {
      throw InvalidArgument("edge " + std::to_string(e.u) + "-" +
                            std::to_string(e.v) + " references a vertex >= " +
                            std::to_string(n));
    }
    const auto idx = static_cast<EdgeIndex>(edges_.size());
    edges_.push_back(e);
    adj_[e.u].push_back({e.v, idx});
    adj_[e.v].push_back({e.u, idx});
  }
  for (auto& list : adj_) {
    std::sort(list.begin(), list.end(),
              [](const Incidence& a, const Incidence& b) {
                return a.neighbor < b.neighbor;
              });
    auto dup = std::adjacent_find(list.begin(), list.end(),
                                  [](const Incidence& a, const Incidence& b) {
                                    return a.neighbor == b.neighbor;
                                  });
    if (dup != list.end()) {
      const Edge& e = edges_[dup->edge];
      throw InvalidArgument("duplicate edge " + std::to_string(e.u) + "-" +
                            std::to_string(e.v));
    }
  }
}

std::optional<EdgeIndex> SimpleGraph::find_edge(Vertex a, Vertex b) const {
  if (a >= n_ || b >= n_ || a == b) return std::nullopt;
  if (adj_[a].size() > adj_[b].size()) std::swap(a, b);
  const auto& list = adj_[a];
  auto it = std::lower_bound(
      list.begin(), list.end(), b,
      [](const Incidence& inc, Vertex x) { return inc.neighbor < x; });
  if (it == list.end() || it->neighbor != b) return std::nullopt;
  return it->edge;
}

SimpleGraph cycle_graph(std::size_t n) {
  if (n < 3) throw InvalidArgument("cycle needs n >= 3");
  std::vector<Edge> edges;
  edges.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n)});
  }
  return SimpleGraph(n, edges);
}

SimpleGraph complete_graph(std::size_t n) {
  if (n < 1) throw InvalidArgument("complete graph needs n >= 1");
  std::vector<Edge> edges;
  edges.reserve(n * (n - 1) / 2);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return SimpleGraph(n, edges);
}

SimpleGraph complete_multipartite(std::size_t r, std::size_t part_size) {
  if (r < 2) throw InvalidArgument("multipartite graph needs r >= 2");
  if (part_size < 1) throw InvalidArgument("partite sets need >= 1 vertex");
  const std::size_t n = r * part_size;
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (u / part_size != v / part_size) edges.push_back({u, v});
    }
  }
  return SimpleGraph(n, edges);
}

std::vector<std::size_t> bfs_distances(const SimpleGraph& g, Vertex source) {
  constexpr auto kInf = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(g.vertex_count(), kInf);
  std::deque<Vertex> queue{source};
  dist.at(source) = 0;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (const Incidence& inc : g.incident(v)) {
      if (dist[inc.neighbor] == kInf) {
        dist[inc.neighbor] = dist[v] + 1;
        queue.push_back(inc.neighbor);
      }
    }
  }
  return dist;
}

SimpleGraph graph_power(const SimpleGraph& g, std::size_t m) {
  if (m < 1) throw InvalidArgument("graph power needs m >= 1");
  if (component_count(g) > 1) {
    throw InvalidArgument("graph power is defined for connected graphs only");
  }
  if (m == 1) return g;

  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::size_t>> dist(n);
  for (Vertex v = 0; v < n; ++v) dist[v] = bfs_distances(g, v);

  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (std::size_t layer = 2; layer <= m; ++layer) {
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (dist[u][v] == layer) edges.push_back({u, v});
      }
    }
  }
  return SimpleGraph(n, edges);
}

SimpleGraph cycle_power(std::size_t n, std::size_t k) {
  return graph_power(cycle_graph(n), k);
}

std::vector<Triangle> enumerate_triangles(const SimpleGraph& g) {
  std::vector<Triangle> out;
  const std::size_t n = g.vertex_count();
  for (Vertex u = 0; u < n; ++u) {
    for (const Incidence& uv : g.incident(u)) {
      const Vertex v = uv.neighbor;
      if (v <= u) continue;
      // Common neighbours w > v, found by merging the two sorted lists.
      auto a = g.incident(u);
      auto b = g.incident(v);
      std::size_t i = 0, j = 0;
      while (i < a.size() && j < b.size()) {
        if (a[i].neighbor < b[j].neighbor) {
          ++i;
        } else if (b[j].neighbor < a[i].neighbor) {
          ++j;
        } else {
          const Vertex w = a[i].neighbor;
          if (w > v) {
            out.push_back({{u, v, w}, {uv.edge, a[i].edge, b[j].edge}});
          }
          ++i;
          ++j;
        }
      }
    }
  }
  return out;
}

std::size_t component_count(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> seen(n, false);
  std::size_t components = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++components;
    seen[s] = true;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (const Incidence& inc : g.incident(v)) {
        if (!seen[inc.neighbor]) {
          seen[inc.neighbor] = true;
          stack.push_back(inc.neighbor);
        }
      }
    }
  }
  return components;
}

SimpleGraph remove_edges(const SimpleGraph& g, std::span<const Edge> removed) {
  std::set<Edge> drop;
  for (const Edge& e : removed) {
    drop.insert({std::min(e.u, e.v), std::max(e.u, e.v)});
  }
  std::vector<Edge> kept;
  kept.reserve(g.edge_count());
  for (const Edge& e : g.edges()) {
    if (!drop.contains(e)) kept.push_back(e);
  }
  return SimpleGraph(g.vertex_count(), kept);
}

}  // namespace fullorient
