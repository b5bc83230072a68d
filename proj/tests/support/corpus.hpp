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

#ifndef FULLORIENT_TESTS_CORPUS_HPP
#define FULLORIENT_TESTS_CORPUS_HPP

#include <string>
#include <vector>

#include "fullorient/graph.hpp"
#include "oracles.hpp"

namespace corpus {

struct Named {
  std::string name;
  fullorient::SimpleGraph graph;
};

// Cycle powers, complete and complete multipartite graphs, a few forests and
// disconnected graphs, and seeded random graphs with at most 18 edges.
inline std::vector<Named> small_graphs() {
  using namespace fullorient;
  std::vector<Named> out;
  for (std::size_t n = 3; n <= 9; ++n) {
    for (std::size_t k = 1; k <= 3; ++k) {
      SimpleGraph g = cycle_power(n, k);
      if (g.edge_count() <= 27) {
        out.push_back({"C" + std::to_string(n) + "^" + std::to_string(k), std::move(g)});
      }
    }
  }
  for (std::size_t n = 1; n <= 7; ++n) out.push_back({"K" + std::to_string(n), complete_graph(n)});
  for (auto [r, p] : {std::pair{2, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 1}, {3, 2}, {4, 1}, {4, 2}}) {
    out.push_back({"K" + std::to_string(r) + "(" + std::to_string(p) + ")",
                   complete_multipartite(r, p)});
  }
  {
    const std::vector<Edge> star{{0, 1}, {0, 2}, {0, 3}, {3, 4}};
    out.push_back({"tree5", SimpleGraph(5, star)});
    const std::vector<Edge> two{{0, 1}, {2, 3}};
    out.push_back({"2K2", SimpleGraph(4, two)});
    out.push_back({"empty3", SimpleGraph(3, {})});
    const std::vector<Edge> tri_and_edge{{0, 1}, {1, 2}, {0, 2}, {3, 4}};
    out.push_back({"K3+K2", SimpleGraph(5, tri_and_edge)});
  }
  std::uint32_t seed = 1;
  for (std::size_t n = 4; n <= 8; ++n) {
    const std::size_t max_m = std::min<std::size_t>(18, n * (n - 1) / 2);
    for (std::size_t m : {max_m / 3, max_m / 2, (2 * max_m) / 3, max_m}) {
      out.push_back({"G(" + std::to_string(n) + "," + std::to_string(m) + ")#" +
                         std::to_string(seed),
                     oracle::random_graph(n, m, seed)});
      ++seed;
    }
  }
  return out;
}

}  // namespace corpus

#endif  // FULLORIENT_TESTS_CORPUS_HPP
