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
#include "fullorient/constructions.hpp"
#include "fullorient/error.hpp"
#include "fullorient/orientation.hpp"
#include "fullorient/spectrum.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace fullorient;

namespace {

Orientation from_bits(const GraphPtr& g, std::uint64_t bits) {
  std::vector<bool> rev(g->edge_count());
  for (std::size_t i = 0; i < rev.size(); ++i) rev[i] = (bits >> i) & 1u;
  return Orientation(g, rev);
}

}  // namespace

TEST_CASE("linear orders give acyclic orientations") {
  const auto k3 = share(complete_graph(3));
  const std::vector<Vertex> order{2, 0, 1};
  const auto o = Orientation::from_linear_order(k3, order);
  CHECK(o.has_arc({2, 0}));
  CHECK(o.has_arc({2, 1}));
  CHECK(o.has_arc({0, 1}));
  CHECK(is_acyclic(o));
  const auto rep = dependent_arcs(o);
  CHECK(rep.d == 1);
  CHECK(rep.dependent == std::vector<Arc>{{2, 1}});
}

TEST_CASE("small worked examples") {
  SUBCASE("C4 orientations") {
    const auto c4 = share(cycle_graph(4));
    const Orientation id(c4);
    REQUIRE(is_acyclic(id));
    CHECK(dependent_arcs(id).dependent == std::vector<Arc>{{0, 3}});
    const std::vector<Arc> alternating{{0, 1}, {2, 1}, {2, 3}, {0, 3}};
    CHECK(dependent_arcs(Orientation::from_arcs(c4, alternating)).d == 0);
  }
  SUBCASE("cyclic triangle") {
    const auto k3 = share(complete_graph(3));
    const std::vector<Arc> arcs{{0, 1}, {1, 2}, {2, 0}};
    const auto o = Orientation::from_arcs(k3, arcs);
    CHECK_FALSE(is_acyclic(o));
    CHECK_FALSE(topological_order(o).has_value());
    CHECK_THROWS_AS(dependent_arcs(o), NotAcyclic);
  }
  SUBCASE("transitive triangle") {
    const auto k3 = share(complete_graph(3));
    const std::vector<Arc> arcs{{0, 1}, {1, 2}, {0, 2}};
    const auto rep = dependent_arcs(Orientation::from_arcs(k3, arcs));
    CHECK(rep.d == 1);
    CHECK(rep.dependent == std::vector<Arc>{{0, 2}});
    CHECK(rep.covers == std::vector<Arc>{{0, 1}, {1, 2}});
  }
  SUBCASE("every acyclic orientation of K4 has 3 dependent arcs") {
    const auto k4 = share(complete_graph(4));
    std::size_t acyclic = 0;
    for (std::uint64_t bits = 0; bits < 64; ++bits) {
      const auto o = from_bits(k4, bits);
      if (!is_acyclic(o)) continue;
      ++acyclic;
      CHECK(dependent_arcs(o).d == 3);
    }
    CHECK(acyclic == 24);
  }
}

TEST_CASE("D0 on C8 squared and a single reversal") {
  const auto d0 = construct_d0(8);
  const auto rep = dependent_arcs(d0);
  CHECK(rep.d == 5);
  CHECK(rep.dependent == std::vector<Arc>{{1, 7}, {2, 0}, {2, 3}, {4, 5}, {6, 7}});
  const std::vector<Arc> flip{{1, 3}};
  const auto d1 = reverse_arcs(d0, flip);
  REQUIRE(is_acyclic(d1));
  CHECK(dependent_arcs(d1).d == 6);
}

TEST_CASE("dependent_arcs matches the single-reversal definition") {
  std::size_t checked = 0;
  for (const auto& [name, g] : corpus::small_graphs()) {
    if (g.edge_count() > 12) continue;
    CAPTURE(name);
    const auto gp = share(g);
    const std::size_t n = g.vertex_count();
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << g.edge_count()); ++bits) {
      const auto arcs = oracle::arcs_from_bits(g, bits);
      const auto o = from_bits(gp, bits);
      const bool cyclic = oracle::has_directed_cycle(n, arcs);
      REQUIRE(is_acyclic(o) == !cyclic);
      if (cyclic) continue;
      const auto rep = dependent_arcs(o);
      CHECK(rep.dependent == oracle::dependent_by_reversal(n, arcs));
      CHECK(rep.d == g.edge_count() - oracle::transitive_reduction_size(n, arcs));
      CHECK(rep.d + rep.covers.size() == g.edge_count());
      ++checked;
    }
  }
  CHECK(checked > 1000);
}

TEST_CASE("topological order reproduces the orientation") {
  for (const auto& [name, g] : corpus::small_graphs()) {
    if (g.edge_count() > 10) continue;
    CAPTURE(name);
    const auto gp = share(g);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << g.edge_count()); ++bits) {
      const auto o = from_bits(gp, bits);
      const auto order = topological_order(o);
      if (!order) continue;
      CHECK(Orientation::from_linear_order(gp, *order) == o);
    }
  }
}

TEST_CASE("dependence count is invariant under automorphisms") {
  for (const auto& g : {cycle_power(6, 2), cycle_power(7, 2), complete_multipartite(3, 2)}) {
    const auto gp = share(g);
    const auto autos = oracle::automorphisms(g);
    REQUIRE(autos.size() > 1);
    std::mt19937 rng(42);
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<Vertex> order(g.vertex_count());
      std::iota(order.begin(), order.end(), Vertex{0});
      std::shuffle(order.begin(), order.end(), rng);
      const auto o = Orientation::from_linear_order(gp, order);
      const std::size_t d = dependent_arcs(o).d;
      for (const auto& sigma : autos) {
        const auto r = relabel(o, sigma);
        CHECK(dependent_arcs(r).d == d);
        for (const Arc& a : o.arcs()) CHECK(r.has_arc({sigma[a.tail], sigma[a.head]}));
      }
    }
  }
  const auto c5 = share(cycle_graph(5));
  const std::vector<Vertex> not_auto{0, 2, 1, 3, 4};
  CHECK_THROWS_AS(relabel(Orientation(c5), not_auto), InvalidArgument);
}

TEST_CASE("reverse_arcs validation") {
  const auto k3 = share(complete_graph(3));
  const Orientation o(k3);
  const std::vector<Arc> wrong_way{{1, 0}};
  CHECK_THROWS_AS(reverse_arcs(o, wrong_way), InvalidArgument);
  const std::vector<Arc> absent{{0, 5}};
  CHECK_THROWS_AS(reverse_arcs(o, absent), InvalidArgument);
  const std::vector<Arc> twice{{0, 1}, {0, 1}};
  CHECK_THROWS_AS(reverse_arcs(o, twice), InvalidArgument);
  const std::vector<Arc> ok{{0, 2}};
  const auto r = reverse_arcs(o, ok);
  CHECK(r.has_arc({2, 0}));
  CHECK_FALSE(is_acyclic(r));
}

TEST_CASE("factory validation") {
  const auto k3 = share(complete_graph(3));
  const std::vector<Vertex> dup{0, 0, 1};
  CHECK_THROWS_AS(Orientation::from_linear_order(k3, dup), InvalidArgument);
  const std::vector<Vertex> short_order{0, 1};
  CHECK_THROWS_AS(Orientation::from_linear_order(k3, short_order), InvalidArgument);
  const std::vector<Arc> missing{{0, 1}, {1, 2}};
  CHECK_THROWS_AS(Orientation::from_arcs(k3, missing), InvalidArgument);
  const std::vector<Arc> both{{0, 1}, {1, 0}, {1, 2}};
  CHECK_THROWS_AS(Orientation::from_arcs(k3, both), InvalidArgument);
}

TEST_CASE("DOT output") {
  const auto k3 = share(complete_graph(3));
  const std::vector<Arc> arcs{{0, 1}, {1, 2}, {0, 2}};
  const auto dot = to_dot(Orientation::from_arcs(k3, arcs), "T");
  CHECK(dot.find("digraph \"T\"") == 0);
  CHECK(dot.find("0 -> 2 [style=bold, class=dependent];") != std::string::npos);
  CHECK(dot.find("0 -> 1;") != std::string::npos);
  CHECK(dot.find("1 -> 2;") != std::string::npos);
  CHECK(format_arcs(arcs) == "{0->1, 1->2, 0->2}");
}
