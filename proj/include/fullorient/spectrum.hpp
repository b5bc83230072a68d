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

#ifndef FULLORIENT_SPECTRUM_HPP
#define FULLORIENT_SPECTRUM_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string_view>
#include <vector>

#include "fullorient/error.hpp"
#include "fullorient/graph.hpp"
#include "fullorient/orientation.hpp"

namespace fullorient {

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 26;

// Exhaustive enumeration only works on graphs this small.
inline constexpr std::size_t kMaxEnumerationVertices = 64;
inline constexpr std::size_t kMaxEnumerationEdges = 64;

enum class Strategy {
  Auto,          // whichever of the two below is cheaper
  EdgeSubsets,   // all 2^|E| direction vectors, keep the acyclic ones
  LinearOrders,  // all |V|! vertex orders, one representative per orientation
};

std::string_view strategy_name(Strategy s);

WorkEstimate estimate_work(const SimpleGraph& g);

// Picks the concrete strategy and checks it against the budget. Throws
// BudgetExceeded if the requested (or cheapest, for Auto) strategy is over.
Strategy resolve_strategy(const SimpleGraph& g, Strategy requested,
                          std::uint64_t budget);

// Calls `visit` once per distinct acyclic orientation, single threaded, in an
// order that is fixed for a given graph and strategy.
void enumerate_acyclic_orientations(
    const GraphPtr& g, Strategy strategy, std::uint64_t budget,
    const std::function<void(const Orientation&)>& visit);

struct SpectrumResult {
  std::vector<std::size_t> achievable;           // ascending
  std::map<std::size_t, std::uint64_t> counts;   // d -> #orientations
  std::size_t d_min = 0;
  std::size_t d_max = 0;
  bool fully_orientable = false;
  std::vector<std::size_t> gaps;                 // missing values in [d_min, d_max]
  Strategy strategy = Strategy::Auto;            // concrete strategy used
  std::uint64_t enumerated = 0;                  // distinct acyclic orientations

  friend bool operator==(const SpectrumResult&, const SpectrumResult&) = default;
};

struct EnumerationOptions {
  // 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
  // Number of deterministic work chunks; results do not depend on it.
  std::size_t chunks = 0;
};

SpectrumResult dependency_spectrum(const SimpleGraph& g,
                                   Strategy strategy = Strategy::Auto,
                                   std::uint64_t budget = kDefaultBudget,
                                   EnumerationOptions options = {});

// |E| - |V| + c.
std::size_t d_max_closed_form(const SimpleGraph& g);

struct FullOrientability {
  bool fully_orientable = false;
  SpectrumResult spectrum;
};

FullOrientability full_orientability(const SimpleGraph& g,
                                     Strategy strategy = Strategy::Auto,
                                     std::uint64_t budget = kDefaultBudget);

// Minimum set of edges whose removal leaves the graph triangle-free.
struct TriangleCover {
  std::size_t pi_t = 0;
  std::vector<Edge> deletion_set;  // sorted
};

struct TriangleCoverLimits {
  std::size_t max_triangles = 4096;
  std::uint64_t max_nodes = 5'000'000;
};

// Exact branch and bound: branch on the three edges of the first uncovered
// triangle, prune with the larger of a greedy edge-disjoint triangle packing
// and ceil(uncovered / max triangles per usable edge). Throws BudgetExceeded
// when the instance exceeds `limits`.
TriangleCover min_triangle_edge_deletion(const SimpleGraph& g,
                                         const TriangleCoverLimits& limits = {});

}  // namespace fullorient

#endif  // FULLORIENT_SPECTRUM_HPP
