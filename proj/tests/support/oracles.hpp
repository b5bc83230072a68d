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

// Slow reference implementations used only by the tests. Nothing here calls
// into the library's orientation, spectrum, or triangle code: graphs are read
// through their edge lists and everything else is recomputed from scratch.

#ifndef FULLORIENT_TESTS_ORACLES_HPP
#define FULLORIENT_TESTS_ORACLES_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "fullorient/graph.hpp"

namespace oracle {

using fullorient::Arc;
using fullorient::Edge;
using fullorient::SimpleGraph;
using fullorient::Vertex;

using Matrix = std::vector<std::vector<bool>>;

inline Matrix adjacency(const SimpleGraph& g) {
  Matrix a(g.vertex_count(), std::vector<bool>(g.vertex_count(), false));
  for (const Edge& e : g.edges()) a[e.u][e.v] = a[e.v][e.u] = true;
  return a;
}

// Arc list for direction bits (bit set: edge points from higher to lower).
inline std::vector<Arc> arcs_from_bits(const SimpleGraph& g, std::uint64_t bits) {
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(static_cast<fullorient::EdgeIndex>(i));
    arcs.push_back(((bits >> i) & 1u) ? Arc{e.v, e.u} : Arc{e.u, e.v});
  }
  return arcs;
}

// Three-colour DFS.
inline bool has_directed_cycle(std::size_t n, const std::vector<Arc>& arcs) {
  std::vector<std::vector<Vertex>> out(n);
  for (const Arc& a : arcs) out[a.tail].push_back(a.head);
  std::vector<int> colour(n, 0);
  auto dfs = [&](auto&& self, Vertex v) -> bool {
    colour[v] = 1;
    for (Vertex w : out[v]) {
      if (colour[w] == 1) return true;
      if (colour[w] == 0 && self(self, w)) return true;
    }
    colour[v] = 2;
    return false;
  };
  for (Vertex v = 0; v < n; ++v) {
    if (colour[v] == 0 && dfs(dfs, v)) return true;
  }
  return false;
}

// Literal definition: an arc is dependent iff reversing it alone creates a
// directed cycle.
inline std::vector<Arc> dependent_by_reversal(std::size_t n, const std::vector<Arc>& arcs) {
  std::vector<Arc> dep;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    auto flipped = arcs;
    flipped[i] = {arcs[i].head, arcs[i].tail};
    if (has_directed_cycle(n, flipped)) dep.push_back(arcs[i]);
  }
  std::sort(dep.begin(), dep.end());
  return dep;
}

// Transitive reduction size via Floyd-Warshall closure: u -> v is a cover
// arc iff no w with u ~> w ~> v.
inline std::size_t transitive_reduction_size(std::size_t n, const std::vector<Arc>& arcs) {
  Matrix reach(n, std::vector<bool>(n, false));
  for (const Arc& a : arcs) reach[a.tail][a.head] = true;
  for (std::size_t w = 0; w < n; ++w)
    for (std::size_t u = 0; u < n; ++u)
      if (reach[u][w])
        for (std::size_t v = 0; v < n; ++v)
          if (reach[w][v]) reach[u][v] = true;
  std::size_t covers = 0;
  for (const Arc& a : arcs) {
    bool bypass = false;
    for (std::size_t w = 0; w < n && !bypass; ++w) {
      bypass = reach[a.tail][w] && reach[w][a.head];
    }
    if (!bypass) ++covers;
  }
  return covers;
}

// d -> number of acyclic orientations, over all 2^|E| direction vectors.
inline std::map<std::size_t, std::uint64_t> brute_spectrum(const SimpleGraph& g) {
  std::map<std::size_t, std::uint64_t> counts;
  const std::size_t n = g.vertex_count();
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << g.edge_count()); ++bits) {
    const auto arcs = arcs_from_bits(g, bits);
    if (has_directed_cycle(n, arcs)) continue;
    ++counts[arcs.size() - transitive_reduction_size(n, arcs)];
  }
  return counts;
}

inline std::vector<std::array<Vertex, 3>> brute_triangles(const SimpleGraph& g) {
  const auto a = adjacency(g);
  std::vector<std::array<Vertex, 3>> out;
  const auto n = static_cast<Vertex>(g.vertex_count());
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = x + 1; y < n; ++y)
      for (Vertex z = y + 1; z < n; ++z)
        if (a[x][y] && a[x][z] && a[y][z]) out.push_back({x, y, z});
  return out;
}

inline bool triangle_free_without(const SimpleGraph& g, const std::vector<bool>& removed) {
  Matrix a(g.vertex_count(), std::vector<bool>(g.vertex_count(), false));
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    if (removed[i]) continue;
    const Edge& e = g.edge(static_cast<fullorient::EdgeIndex>(i));
    a[e.u][e.v] = a[e.v][e.u] = true;
  }
  const std::size_t n = g.vertex_count();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      if (a[x][y])
        for (std::size_t z = y + 1; z < n; ++z)
          if (a[x][z] && a[y][z]) return false;
  return true;
}

// Smallest k such that some k-subset of edges leaves g triangle-free.
inline std::size_t brute_pi_t(const SimpleGraph& g) {
  const std::size_t m = g.edge_count();
  for (std::size_t k = 0; k <= m; ++k) {
    std::vector<bool> pick(m, false);
    std::fill(pick.end() - static_cast<std::ptrdiff_t>(k), pick.end(), true);
    do {
      if (triangle_free_without(g, pick)) return k;
    } while (std::next_permutation(pick.begin(), pick.end()));
  }
  return m;
}

// Lexicographically largest upper-triangle adjacency string over all vertex
// relabellings. Equal strings <=> isomorphic graphs. n <= 10.
inline std::string canonical_form(const SimpleGraph& g) {
  const auto a = adjacency(g);
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::string s;
    s.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) s.push_back(a[perm[i]][perm[j]] ? '1' : '0');
    if (s > best) best = std::move(s);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::to_string(n) + ":" + best;
}

inline bool isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
  return a.vertex_count() == b.vertex_count() && a.edge_count() == b.edge_count() &&
         canonical_form(a) == canonical_form(b);
}

// All automorphisms of g as old -> new label maps. Small n only.
inline std::vector<std::vector<Vertex>> automorphisms(const SimpleGraph& g) {
  const auto a = adjacency(g);
  const std::size_t n = g.vertex_count();
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::vector<std::vector<Vertex>> out;
  do {
    bool ok = true;
    for (const Edge& e : g.edges()) {
      if (!a[perm[e.u]][perm[e.v]]) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// Erdos-Renyi style graph with exactly `m` edges on `n` vertices.
inline SimpleGraph random_graph(std::size_t n, std::size_t m, std::uint32_t seed) {
  std::vector<Edge> all;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) all.push_back({u, v});
  std::mt19937 rng(seed);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(std::min(m, all.size()));
  return SimpleGraph(n, all);
}

}  // namespace oracle

#endif  // FULLORIENT_TESTS_ORACLES_HPP
