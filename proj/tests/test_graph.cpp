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

#include <set>

#include "doctest.h"
#include "fullorient/error.hpp"
#include "fullorient/graph.hpp"
#include "fullorient/graph_io.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace fullorient;

namespace {

std::set<Edge> edge_set(const SimpleGraph& g) { return {g.edges().begin(), g.edges().end()}; }

// Cycle distance table by Floyd-Warshall on the cycle itself.
std::set<Edge> power_by_distance_table(std::size_t n, std::size_t k) {
  constexpr std::size_t kInf = 1000;
  std::vector<std::vector<std::size_t>> d(n, std::vector<std::size_t>(n, kInf));
  for (std::size_t i = 0; i < n; ++i) {
    d[i][i] = 0;
    d[i][(i + 1) % n] = d[(i + 1) % n][i] = 1;
  }
  for (std::size_t w = 0; w < n; ++w)
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v) d[u][v] = std::min(d[u][v], d[u][w] + d[w][v]);
  std::set<Edge> out;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (d[u][v] <= k) out.insert({u, v});
  return out;
}

}  // namespace

TEST_CASE("cycle_graph builds n edges of degree 2") {
  const auto c5 = cycle_graph(5);
  CHECK(edge_set(c5) == std::set<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});

  const auto c3 = cycle_graph(3);
  CHECK(edge_set(c3) == edge_set(complete_graph(3)));

  const auto c8 = cycle_graph(8);
  CHECK(c8.vertex_count() == 8);
  CHECK(c8.edge_count() == 8);
  for (Vertex v = 0; v < 8; ++v) CHECK(c8.degree(v) == 2);

  CHECK_THROWS_AS(cycle_graph(2), InvalidArgument);
  CHECK_THROWS_AS(cycle_graph(0), InvalidArgument);
}

TEST_CASE("SimpleGraph rejects loops, duplicates and out-of-range labels") {
  const std::vector<Edge> loop{{1, 1}};
  CHECK_THROWS_AS(SimpleGraph(3, loop), InvalidArgument);
  const std::vector<Edge> dup{{0, 1}, {1, 0}};
  CHECK_THROWS_AS(SimpleGraph(3, dup), InvalidArgument);
  const std::vector<Edge> far{{0, 3}};
  CHECK_THROWS_AS(SimpleGraph(3, far), InvalidArgument);

  const std::vector<Edge> flipped{{2, 0}};
  SimpleGraph g(3, flipped);
  CHECK(g.edge(0) == Edge{0, 2});
  CHECK(g.find_edge(2, 0) == EdgeIndex{0});
  CHECK_FALSE(g.find_edge(0, 1).has_value());
}

TEST_CASE("graph_power of small cycles") {
  SUBCASE("C5 squared is K5") {
    CHECK(edge_set(graph_power(cycle_graph(5), 2)) == edge_set(complete_graph(5)));
  }
  SUBCASE("C7 squared matches the distance table") {
    const auto g = graph_power(cycle_graph(7), 2);
    CHECK(g.edge_count() == 14);
    CHECK(edge_set(g) == power_by_distance_table(7, 2));
    std::set<Edge> expected;
    for (Vertex i = 0; i < 7; ++i) {
      for (Vertex step : {1u, 2u}) {
        const Vertex j = (i + step) % 7;
        expected.insert({std::min(i, j), std::max(i, j)});
      }
    }
    CHECK(edge_set(g) == expected);
  }
  SUBCASE("first power is the graph itself") {
    const auto g = oracle::random_graph(6, 9, 7);
    if (component_count(g) == 1) CHECK(graph_power(g, 1) == g);
    CHECK(graph_power(cycle_graph(6), 1) == cycle_graph(6));
  }
  SUBCASE("cycle edges keep their indices in the square") {
    const auto c = cycle_graph(9);
    const auto sq = cycle_power(9, 2);
    for (EdgeIndex e = 0; e < 9; ++e) CHECK(sq.edge(e) == c.edge(e));
  }
  SUBCASE("errors") {
    const std::vector<Edge> split{{0, 1}, {2, 3}};
    CHECK_THROWS_AS(graph_power(SimpleGraph(4, split), 2), InvalidArgument);
    CHECK_THROWS_AS(graph_power(cycle_graph(5), 0), InvalidArgument);
  }
}

TEST_CASE("graph_power edge counts and monotonicity") {
  for (std::size_t n = 3; n <= 14; ++n) {
    const auto sq = cycle_power(n, 2);
    CHECK(sq.edge_count() == (n >= 5 ? 2 * n : n * (n - 1) / 2));
    for (std::size_t k = 1; k <= 4; ++k) {
      const auto lo = cycle_power(n, k);
      const auto hi = cycle_power(n, k + 1);
      CHECK(edge_set(lo) == power_by_distance_table(n, k));
      const auto a = edge_set(lo);
      const auto b = edge_set(hi);
      CHECK(std::includes(b.begin(), b.end(), a.begin(), a.end()));
    }
  }
}

TEST_CASE("complete and multipartite generators") {
  CHECK(complete_graph(4).edge_count() == 6);
  CHECK(complete_graph(1).edge_count() == 0);
  CHECK_THROWS_AS(complete_multipartite(1, 3), InvalidArgument);

  const auto k32 = complete_multipartite(3, 2);
  CHECK(k32.edge_count() == 12);
  CHECK(oracle::isomorphic(k32, cycle_power(6, 2)));

  const auto k42 = complete_multipartite(4, 2);
  CHECK(k42.edge_count() == 24);
  CHECK(oracle::isomorphic(k42, cycle_power(8, 3)));

  // Sanity check on the isomorphism oracle itself.
  CHECK_FALSE(oracle::isomorphic(cycle_power(8, 2), complete_multipartite(4, 2)));
  CHECK_FALSE(oracle::isomorphic(cycle_graph(6), complete_multipartite(2, 3)));
}

TEST_CASE("enumerate_triangles") {
  const auto c72 = cycle_power(7, 2);
  const auto tris = enumerate_triangles(c72);
  REQUIRE(tris.size() == 7);
  std::set<std::array<Vertex, 3>> got;
  for (const auto& t : tris) got.insert(t.vertices);
  std::set<std::array<Vertex, 3>> expected;
  for (Vertex i = 0; i < 7; ++i) {
    std::array<Vertex, 3> t{i, (i + 1) % 7, (i + 2) % 7};
    std::sort(t.begin(), t.end());
    expected.insert(t);
  }
  CHECK(got == expected);

  CHECK(enumerate_triangles(cycle_graph(5)).empty());
  CHECK(enumerate_triangles(complete_graph(4)).size() == 4);

  for (std::size_t n = 7; n <= 20; ++n) CHECK(enumerate_triangles(cycle_power(n, 2)).size() == n);
}

TEST_CASE("enumerate_triangles agrees with a 3-subset scan") {
  for (const auto& [name, g] : corpus::small_graphs()) {
    if (g.vertex_count() > 10) continue;
    CAPTURE(name);
    const auto tris = enumerate_triangles(g);
    std::vector<std::array<Vertex, 3>> got;
    for (const auto& t : tris) {
      got.push_back(t.vertices);
      CHECK(g.edge(t.edges[0]) == Edge{t.vertices[0], t.vertices[1]});
      CHECK(g.edge(t.edges[1]) == Edge{t.vertices[0], t.vertices[2]});
      CHECK(g.edge(t.edges[2]) == Edge{t.vertices[1], t.vertices[2]});
    }
    CHECK(got == oracle::brute_triangles(g));
  }
  for (std::uint32_t seed = 100; seed < 140; ++seed) {
    const auto g = oracle::random_graph(10, 5 + seed % 30, seed);
    std::vector<std::array<Vertex, 3>> got;
    for (const auto& t : enumerate_triangles(g)) got.push_back(t.vertices);
    CHECK(got == oracle::brute_triangles(g));
  }
}

TEST_CASE("component_count") {
  CHECK(component_count(cycle_graph(5)) == 1);
  const std::vector<Edge> two{{0, 1}, {2, 3}};
  CHECK(component_count(SimpleGraph(4, two)) == 2);
  CHECK(component_count(SimpleGraph(3, {})) == 3);
  CHECK(component_count(SimpleGraph(0, {})) == 0);
}

TEST_CASE("graph text format") {
  SUBCASE("round trip") {
    for (const auto& [name, g] : corpus::small_graphs()) {
      CAPTURE(name);
      CHECK(parse_graph_text(format_graph_text(g)) == g);
    }
    CHECK(parse_graph_text(format_graph_text(cycle_power(40, 3))) == cycle_power(40, 3));
  }
  SUBCASE("comments and blank lines") {
    const auto g = parse_graph_text("# triangle\n3 3   # header\n\n0 1\n1 2\n0 2 # last\n");
    CHECK(edge_set(g) == edge_set(complete_graph(3)));
  }
  SUBCASE("malformed input") {
    CHECK_THROWS_AS(parse_graph_text(""), InvalidArgument);
    CHECK_THROWS_AS(parse_graph_text("3\n"), InvalidArgument);
    CHECK_THROWS_AS(parse_graph_text("3 2\n0 1\n"), InvalidArgument);
    CHECK_THROWS_AS(parse_graph_text("3 1\n1 0\n"), InvalidArgument);
    CHECK_THROWS_AS(parse_graph_text("3 1\n0 3\n"), InvalidArgument);
    CHECK_THROWS_AS(parse_graph_text("3 2\n0 1\n0 1\n"), InvalidArgument);
    CHECK_THROWS_AS(parse_graph_text("3 1\n0 x\n"), InvalidArgument);
    CHECK_THROWS_AS(parse_graph_text("3 1\n0 1 2\n"), InvalidArgument);
  }
}
