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

#include "fullorient/orientation.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

#include "fullorient/error.hpp"

namespace fullorient {
namespace {

// n rows of ceil(n/64) words, one row per vertex.
class BitMatrix {
 public:
  explicit BitMatrix(std::size_t n)
      : words_((n + 63) / 64), bits_(n * words_, 0) {}

  std::uint64_t* row(std::size_t r) { return bits_.data() + r * words_; }
  const std::uint64_t* row(std::size_t r) const {
    return bits_.data() + r * words_;
  }
  std::size_t words() const { return words_; }

  static bool test(const std::uint64_t* row, std::size_t c) {
    return (row[c >> 6] >> (c & 63)) & 1u;
  }
  static void set(std::uint64_t* row, std::size_t c) {
    row[c >> 6] |= std::uint64_t{1} << (c & 63);
  }

 private:
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

std::vector<std::vector<Vertex>> out_lists(const Orientation& o) {
  const SimpleGraph& g = o.host();
  std::vector<std::vector<Vertex>> out(g.vertex_count());
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const Arc a = o.arc(e);
    out[a.tail].push_back(a.head);
  }
  return out;
}

}  // namespace

Orientation::Orientation(GraphPtr host)
    : host_(std::move(host)), reversed_(host_->edge_count(), false) {}

Orientation::Orientation(GraphPtr host, std::vector<bool> reversed)
    : host_(std::move(host)), reversed_(std::move(reversed)) {
  if (reversed_.size() != host_->edge_count()) {
    throw InvalidArgument("direction vector has " +
                          std::to_string(reversed_.size()) +
                          " bits, host has " +
                          std::to_string(host_->edge_count()) + " edges");
  }
}

Orientation Orientation::from_arcs(GraphPtr host, std::span<const Arc> arcs) {
  const SimpleGraph& g = *host;
  std::vector<bool> bits(g.edge_count(), false);
  std::vector<bool> seen(g.edge_count(), false);
  for (const Arc& a : arcs) {
    auto e = g.find_edge(a.tail, a.head);
    if (!e) throw InvalidArgument("arc " + format_arc(a) + " is not a host edge");
    if (seen[*e]) {
      throw InvalidArgument("edge of arc " + format_arc(a) + " oriented twice");
    }
    seen[*e] = true;
    bits[*e] = a.tail > a.head;
  }
  if (auto it = std::find(seen.begin(), seen.end(), false); it != seen.end()) {
    const Edge& e = g.edge(static_cast<EdgeIndex>(it - seen.begin()));
    throw InvalidArgument("edge " + std::to_string(e.u) + "-" +
                          std::to_string(e.v) + " left unoriented");
  }
  return Orientation(std::move(host), std::move(bits));
}

Orientation Orientation::from_linear_order(GraphPtr host,
                                           std::span<const Vertex> order) {
  const std::size_t n = host->vertex_count();
  if (order.size() != n) {
    throw InvalidArgument("order has " + std::to_string(order.size()) +
                          " entries, expected " + std::to_string(n));
  }
  constexpr auto kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> pos(n, kUnset);
  for (std::size_t i = 0; i < n; ++i) {
    if (order[i] >= n || pos[order[i]] != kUnset) {
      throw InvalidArgument("order is not a permutation of 0..n-1");
    }
    pos[order[i]] = i;
  }
  std::vector<bool> bits(host->edge_count());
  for (EdgeIndex e = 0; e < host->edge_count(); ++e) {
    const Edge& ed = host->edge(e);
    bits[e] = pos[ed.u] > pos[ed.v];
  }
  return Orientation(std::move(host), std::move(bits));
}

Arc Orientation::arc(EdgeIndex e) const {
  const Edge& ed = host_->edge(e);
  return reversed_.at(e) ? Arc{ed.v, ed.u} : Arc{ed.u, ed.v};
}

std::vector<Arc> Orientation::arcs() const {
  std::vector<Arc> out;
  out.reserve(reversed_.size());
  for (EdgeIndex e = 0; e < reversed_.size(); ++e) out.push_back(arc(e));
  std::sort(out.begin(), out.end());
  return out;
}

bool Orientation::has_arc(Arc a) const {
  auto e = host_->find_edge(a.tail, a.head);
  return e && arc(*e) == a;
}

std::optional<std::vector<Vertex>> topological_order(const Orientation& o) {
  const std::size_t n = o.host().vertex_count();
  const auto out = out_lists(o);
  std::vector<std::size_t> indeg(n, 0);
  for (const auto& list : out) {
    for (Vertex w : list) ++indeg[w];
  }
  std::vector<Vertex> order;
  order.reserve(n);
  std::vector<Vertex> ready;
  for (Vertex v = 0; v < n; ++v) {
    if (indeg[v] == 0) ready.push_back(v);
  }
  while (!ready.empty()) {
    const Vertex v = ready.back();
    ready.pop_back();
    order.push_back(v);
    for (Vertex w : out[v]) {
      if (--indeg[w] == 0) ready.push_back(w);
    }
  }
  if (order.size() != n) return std::nullopt;
  return order;
}

bool is_acyclic(const Orientation& o) { return topological_order(o).has_value(); }

DependencyReport dependent_arcs(const Orientation& o) {
  auto order = topological_order(o);
  if (!order) {
    throw NotAcyclic("dependent arcs are undefined for a cyclic orientation");
  }
  const std::size_t n = o.host().vertex_count();
  const auto out = out_lists(o);

  // desc[v]: strict descendants of v. via[v]: vertices reachable from v by a
  // path of length >= 2, i.e. the union of desc[w] over out-neighbours w.
  BitMatrix desc(n);
  BitMatrix via(n);
  const std::size_t words = desc.words();
  for (auto it = order->rbegin(); it != order->rend(); ++it) {
    const Vertex v = *it;
    std::uint64_t* dv = desc.row(v);
    std::uint64_t* vv = via.row(v);
    for (Vertex w : out[v]) {
      const std::uint64_t* dw = desc.row(w);
      for (std::size_t k = 0; k < words; ++k) {
        vv[k] |= dw[k];
        dv[k] |= dw[k];
      }
      BitMatrix::set(dv, w);
    }
  }

  DependencyReport report;
  for (const Arc& a : o.arcs()) {
    if (BitMatrix::test(via.row(a.tail), a.head)) {
      report.dependent.push_back(a);
    } else {
      report.covers.push_back(a);
    }
  }
  report.d = report.dependent.size();
  return report;
}

Orientation reverse_arcs(const Orientation& o, std::span<const Arc> arcs) {
  std::vector<bool> bits = o.direction_bits();
  std::vector<bool> touched(bits.size(), false);
  for (const Arc& a : arcs) {
    auto e = o.host().find_edge(a.tail, a.head);
    if (!e) throw InvalidArgument("arc " + format_arc(a) + " is not a host edge");
    if (o.arc(*e) != a) {
      throw InvalidArgument("arc " + format_arc(a) +
                            " is oriented the other way");
    }
    if (touched[*e]) {
      throw InvalidArgument("arc " + format_arc(a) + " listed twice");
    }
    touched[*e] = true;
    bits[*e] = !bits[*e];
  }
  return Orientation(o.host_ptr(), std::move(bits));
}

Orientation relabel(const Orientation& o, std::span<const Vertex> sigma) {
  const SimpleGraph& g = o.host();
  if (sigma.size() != g.vertex_count()) {
    throw InvalidArgument("relabelling has the wrong length");
  }
  std::vector<Arc> mapped;
  mapped.reserve(g.edge_count());
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const Arc a = o.arc(e);
    mapped.push_back({sigma[a.tail], sigma[a.head]});
  }
  // from_arcs rejects sigma that is not an automorphism.
  return Orientation::from_arcs(o.host_ptr(), mapped);
}

std::string to_dot(const Orientation& o, const std::string& name) {
  std::vector<Arc> dependent;
  if (is_acyclic(o)) dependent = dependent_arcs(o).dependent;

  std::string out = "digraph \"" + name + "\" {\n";
  for (Vertex v = 0; v < o.host().vertex_count(); ++v) {
    out += "  " + std::to_string(v) + ";\n";
  }
  for (const Arc& a : o.arcs()) {
    out += "  " + std::to_string(a.tail) + " -> " + std::to_string(a.head);
    if (std::binary_search(dependent.begin(), dependent.end(), a)) {
      out += " [style=bold, class=dependent]";
    }
    out += ";\n";
  }
  out += "}\n";
  return out;
}

std::string format_arc(Arc a) {
  return std::to_string(a.tail) + "->" + std::to_string(a.head);
}

std::string format_arcs(std::span<const Arc> arcs) {
  std::string out = "{";
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (i) out += ", ";
    out += format_arc(arcs[i]);
  }
  out += "}";
  return out;
}

}  // namespace fullorient
