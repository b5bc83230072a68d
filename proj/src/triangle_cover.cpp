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

#include <algorithm>
#include <string>
#include <vector>

#include "fullorient/spectrum.hpp"

namespace fullorient {
namespace {

// Exact minimum edge hitting set of the triangle family.
class TriangleHittingSearch {
 public:
  TriangleHittingSearch(const SimpleGraph& g, std::vector<Triangle> triangles,
                        std::uint64_t max_nodes)
      : tris_(std::move(triangles)),
        max_nodes_(max_nodes),
        edge_tris_(g.edge_count()),
        live_(g.edge_count(), 0),
        deleted_(g.edge_count(), 0),
        forbidden_(g.edge_count(), 0),
        hits_(tris_.size(), 0),
        uncovered_(tris_.size()) {
    for (std::size_t t = 0; t < tris_.size(); ++t) {
      for (EdgeIndex e : tris_[t].edges) {
        edge_tris_[e].push_back(t);
        ++live_[e];
      }
    }
  }

  std::vector<EdgeIndex> solve() {
    best_ = greedy_upper_bound();
    search(0);
    return best_;
  }

 private:
  void remove(EdgeIndex e) {
    deleted_[e] = 1;
    chosen_.push_back(e);
    for (std::size_t t : edge_tris_[e]) {
      if (hits_[t]++ == 0) {
        --uncovered_;
        for (EdgeIndex f : tris_[t].edges) --live_[f];
      }
    }
  }

  void restore(EdgeIndex e) {
    for (std::size_t t : edge_tris_[e]) {
      if (--hits_[t] == 0) {
        ++uncovered_;
        for (EdgeIndex f : tris_[t].edges) ++live_[f];
      }
    }
    chosen_.pop_back();
    deleted_[e] = 0;
  }

  std::vector<EdgeIndex> greedy_upper_bound() {
    std::vector<EdgeIndex> picked;
    while (uncovered_ > 0) {
      auto it = std::max_element(live_.begin(), live_.end());
      picked.push_back(static_cast<EdgeIndex>(it - live_.begin()));
      remove(picked.back());
    }
    for (auto it = picked.rbegin(); it != picked.rend(); ++it) restore(*it);
    return picked;
  }

  // Returns SIZE_MAX when no completion exists under the current forbids.
  std::size_t lower_bound() {
    std::size_t max_live = 0;
    for (EdgeIndex e = 0; e < live_.size(); ++e) {
      if (!deleted_[e] && !forbidden_[e]) max_live = std::max(max_live, live_[e]);
    }
    if (max_live == 0) return static_cast<std::size_t>(-1);
    const std::size_t by_count = (uncovered_ + max_live - 1) / max_live;

    packed_.assign(live_.size(), 0);
    std::size_t packing = 0;
    for (std::size_t t = 0; t < tris_.size(); ++t) {
      if (hits_[t]) continue;
      const auto& es = tris_[t].edges;
      if (packed_[es[0]] || packed_[es[1]] || packed_[es[2]]) continue;
      for (EdgeIndex e : es) packed_[e] = 1;
      ++packing;
    }
    return std::max(by_count, packing);
  }

  void search(std::size_t depth) {
    if (++nodes_ > max_nodes_) {
      throw BudgetExceeded("triangle deletion search exceeded " +
                               std::to_string(max_nodes_) + " nodes",
                           {}, max_nodes_);
    }
    if (uncovered_ == 0) {
      if (depth < best_.size()) best_ = chosen_;
      return;
    }
    const std::size_t lb = lower_bound();
    if (lb == static_cast<std::size_t>(-1) || depth + lb >= best_.size()) return;

    std::size_t branch = 0;
    while (hits_[branch]) ++branch;
    const auto edges = tris_[branch].edges;

    // Branch i deletes edge i and forbids edges 0..i-1 below it.
    std::vector<EdgeIndex> forbade;
    for (EdgeIndex e : edges) {
      if (!forbidden_[e]) {
        remove(e);
        search(depth + 1);
        restore(e);
      }
      ++forbidden_[e];
      forbade.push_back(e);
    }
    for (EdgeIndex e : forbade) --forbidden_[e];
  }

  std::vector<Triangle> tris_;
  std::uint64_t max_nodes_;
  std::uint64_t nodes_ = 0;
  std::vector<std::vector<std::size_t>> edge_tris_;
  std::vector<std::size_t> live_;  // uncovered triangles through each edge
  std::vector<char> deleted_;
  std::vector<std::size_t> forbidden_;
  std::vector<std::size_t> hits_;  // deleted edges per triangle
  std::size_t uncovered_;
  std::vector<EdgeIndex> chosen_;
  std::vector<EdgeIndex> best_;
  std::vector<char> packed_;
};

}  // namespace

TriangleCover min_triangle_edge_deletion(const SimpleGraph& g,
                                         const TriangleCoverLimits& limits) {
  auto triangles = enumerate_triangles(g);
  if (triangles.size() > limits.max_triangles) {
    throw BudgetExceeded("graph has " + std::to_string(triangles.size()) +
                             " triangles, limit is " +
                             std::to_string(limits.max_triangles),
                         {}, limits.max_triangles);
  }
  TriangleHittingSearch search(g, std::move(triangles), limits.max_nodes);
  TriangleCover cover;
  for (EdgeIndex e : search.solve()) cover.deletion_set.push_back(g.edge(e));
  std::sort(cover.deletion_set.begin(), cover.deletion_set.end());
  cover.pi_t = cover.deletion_set.size();
  return cover;
}

}  // namespace fullorient
