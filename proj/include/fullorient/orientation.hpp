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

#ifndef FULLORIENT_ORIENTATION_HPP
#define FULLORIENT_ORIENTATION_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fullorient/graph.hpp"

namespace fullorient {

// One direction bit per edge of a shared host graph. Bit 0 sends edge (u, v)
// from u to v (lower label to higher), bit 1 reverses it. Values are
// immutable; "modifying" operations return new orientations.
class Orientation {
 public:
  // All edges from lower to higher label.
  explicit Orientation(GraphPtr host);
  Orientation(GraphPtr host, std::vector<bool> reversed);

  // Throws InvalidArgument unless `arcs` lists every host edge exactly once.
  static Orientation from_arcs(GraphPtr host, std::span<const Arc> arcs);

  // Each edge points from the endpoint appearing earlier in `order`.
  // Throws InvalidArgument unless `order` is a permutation of 0..n-1.
  static Orientation from_linear_order(GraphPtr host,
                                       std::span<const Vertex> order);

  const SimpleGraph& host() const noexcept { return *host_; }
  const GraphPtr& host_ptr() const noexcept { return host_; }

  bool reversed(EdgeIndex e) const { return reversed_.at(e); }
  const std::vector<bool>& direction_bits() const noexcept { return reversed_; }

  Arc arc(EdgeIndex e) const;
  // All arcs, sorted by (tail, head).
  std::vector<Arc> arcs() const;
  // Whether tail -> head is an arc of this orientation.
  bool has_arc(Arc a) const;

  friend bool operator==(const Orientation& a, const Orientation& b) {
    return *a.host_ == *b.host_ && a.reversed_ == b.reversed_;
  }

 private:
  GraphPtr host_;
  std::vector<bool> reversed_;
};

// Dependent arcs (outside the transitive reduction) and cover arcs (inside).
// Both lists are sorted by (tail, head); d == dependent.size().
struct DependencyReport {
  std::vector<Arc> dependent;
  std::vector<Arc> covers;
  std::size_t d = 0;
};

// Topological order, or nullopt if the orientation has a directed cycle.
std::optional<std::vector<Vertex>> topological_order(const Orientation& o);
bool is_acyclic(const Orientation& o);

// u -> v is dependent iff some other out-neighbour of u reaches v. Uses
// descendant bitsets built in reverse topological order. Throws NotAcyclic on
// cyclic input.
DependencyReport dependent_arcs(const Orientation& o);

// Flips exactly the listed arcs. The result may be cyclic. Throws
// InvalidArgument if an arc is missing or points the other way.
Orientation reverse_arcs(const Orientation& o, std::span<const Arc> arcs);

// Applies a vertex relabelling `sigma` (old label -> new label) that must be
// an automorphism of the host; the result lives on the same host graph.
Orientation relabel(const Orientation& o, std::span<const Vertex> sigma);

// Graphviz digraph. Arcs are listed by (tail, head); dependent arcs carry
// `style=bold, class=dependent`. Cyclic orientations are written without
// any dependency styling.
std::string to_dot(const Orientation& o, const std::string& name = "D");

std::string format_arc(Arc a);
std::string format_arcs(std::span<const Arc> arcs);

}  // namespace fullorient

#endif  // FULLORIENT_ORIENTATION_HPP
