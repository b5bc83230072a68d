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

#include "fullorient/spectrum.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <limits>
#include <numeric>
#include <string>
#include <thread>

namespace fullorient {
namespace {

constexpr std::uint64_t kUnbounded = std::numeric_limits<std::uint64_t>::max();

constexpr std::uint64_t bit(unsigned i) { return std::uint64_t{1} << i; }

// Word-sized copy of a graph with at most 64 vertices and 64 edges; every
// kernel below works on out-neighbour masks.
struct DenseGraph {
  unsigned n = 0;
  unsigned m = 0;
  std::array<std::uint8_t, kMaxEnumerationEdges> eu{};
  std::array<std::uint8_t, kMaxEnumerationEdges> ev{};
  std::array<std::uint64_t, kMaxEnumerationVertices> nbr{};

  explicit DenseGraph(const SimpleGraph& g)
      : n(static_cast<unsigned>(g.vertex_count())),
        m(static_cast<unsigned>(g.edge_count())) {
    for (unsigned e = 0; e < m; ++e) {
      const Edge& ed = g.edge(e);
      eu[e] = static_cast<std::uint8_t>(ed.u);
      ev[e] = static_cast<std::uint8_t>(ed.v);
      nbr[ed.u] |= bit(ed.v);
      nbr[ed.v] |= bit(ed.u);
    }
  }

  std::uint64_t all_vertices() const { return n == 64 ? kUnbounded : bit(n) - 1; }
};

using OutMasks = std::array<std::uint64_t, kMaxEnumerationVertices>;
using Order = std::array<std::uint8_t, kMaxEnumerationVertices>;

// Number of dependent arcs given a topological order of the out masks.
unsigned dependents_along(const OutMasks& out, const Order& order, unsigned n) {
  OutMasks desc{};
  unsigned d = 0;
  for (unsigned i = n; i-- > 0;) {
    const unsigned v = order[i];
    std::uint64_t reach = 0;
    std::uint64_t via = 0;
    for (std::uint64_t rest = out[v]; rest; rest &= rest - 1) {
      const unsigned w = static_cast<unsigned>(std::countr_zero(rest));
      via |= desc[w];
      reach |= desc[w] | bit(w);
    }
    desc[v] = reach;
    d += static_cast<unsigned>(std::popcount(out[v] & via));
  }
  return d;
}

// Kahn's algorithm on masks. Returns false on a directed cycle.
bool topo_sort(const OutMasks& out, unsigned n, Order& order) {
  std::array<std::uint8_t, kMaxEnumerationVertices> indeg{};
  for (unsigned v = 0; v < n; ++v) {
    for (std::uint64_t rest = out[v]; rest; rest &= rest - 1) {
      ++indeg[static_cast<unsigned>(std::countr_zero(rest))];
    }
  }
  std::array<std::uint8_t, kMaxEnumerationVertices> stack{};
  unsigned top = 0;
  for (unsigned v = 0; v < n; ++v) {
    if (indeg[v] == 0) stack[top++] = static_cast<std::uint8_t>(v);
  }
  unsigned placed = 0;
  while (top > 0) {
    const unsigned v = stack[--top];
    order[placed++] = static_cast<std::uint8_t>(v);
    for (std::uint64_t rest = out[v]; rest; rest &= rest - 1) {
      const unsigned w = static_cast<unsigned>(std::countr_zero(rest));
      if (--indeg[w] == 0) stack[top++] = static_cast<std::uint8_t>(w);
    }
  }
  return placed == n;
}

std::uint64_t subset_total(const DenseGraph& g) { return std::uint64_t{1} << g.m; }

// Visits direction vectors with Gray-code index in [lo, hi). Each step flips
// one edge, so the out masks are maintained incrementally.
// visit(bits, out, order_or_null)
template <class Visit>
void run_subset_chunk(const DenseGraph& g, std::uint64_t lo, std::uint64_t hi,
                      Visit&& visit) {
  if (lo >= hi) return;
  std::uint64_t bits = lo ^ (lo >> 1);
  OutMasks out{};
  for (unsigned e = 0; e < g.m; ++e) {
    if ((bits >> e) & 1u) {
      out[g.ev[e]] |= bit(g.eu[e]);
    } else {
      out[g.eu[e]] |= bit(g.ev[e]);
    }
  }
  for (std::uint64_t idx = lo;;) {
    visit(bits, out, static_cast<const Order*>(nullptr));
    if (++idx == hi) break;
    const unsigned e = static_cast<unsigned>(std::countr_zero(idx));
    const unsigned u = g.eu[e];
    const unsigned v = g.ev[e];
    out[u] ^= bit(v);
    out[v] ^= bit(u);
    bits ^= bit(e);
  }
}

unsigned order_chunk_count(const DenseGraph& g) {
  return g.n < 2 ? 1 : g.n * (g.n - 1);
}

// Permutations whose first two entries are fixed by `chunk`. A permutation is
// kept only if it is the lexicographically smallest topological order of the
// orientation it induces, so every acyclic orientation is visited once.
template <class Visit>
void run_order_chunk(const DenseGraph& g, unsigned chunk, Visit&& visit) {
  const unsigned n = g.n;
  Order perm{};
  unsigned fixed = 0;
  if (n >= 2) {
    const unsigned first = chunk / (n - 1);
    unsigned second = chunk % (n - 1);
    if (second >= first) ++second;
    perm[0] = static_cast<std::uint8_t>(first);
    perm[1] = static_cast<std::uint8_t>(second);
    fixed = 2;
    unsigned k = 2;
    for (unsigned v = 0; v < n; ++v) {
      if (v != first && v != second) perm[k++] = static_cast<std::uint8_t>(v);
    }
  } else {
    for (unsigned v = 0; v < n; ++v) perm[v] = static_cast<std::uint8_t>(v);
  }

  const std::uint64_t all = g.all_vertices();
  do {
    // before[v]: vertices placed ahead of v.
    OutMasks before{};
    std::uint64_t seen = 0;
    for (unsigned i = 0; i < n; ++i) {
      before[perm[i]] = seen;
      seen |= bit(perm[i]);
    }
    bool canonical = true;
    std::uint64_t remaining = all;
    for (unsigned i = 0; i < n && canonical; ++i) {
      const unsigned v = perm[i];
      for (std::uint64_t lower = remaining & (bit(v) - 1); lower;
           lower &= lower - 1) {
        const unsigned u = static_cast<unsigned>(std::countr_zero(lower));
        if ((g.nbr[u] & before[u] & remaining) == 0) {
          canonical = false;
          break;
        }
      }
      remaining &= ~bit(v);
    }
    if (!canonical) continue;

    OutMasks out{};
    for (unsigned v = 0; v < n; ++v) out[v] = g.nbr[v] & ~before[v] & ~bit(v);
    std::uint64_t bits = 0;
    for (unsigned e = 0; e < g.m; ++e) {
      if (before[g.eu[e]] & bit(g.ev[e])) bits |= bit(e);
    }
    visit(bits, out, &perm);
  } while (std::next_permutation(perm.begin() + fixed, perm.begin() + n));
}

void require_dense(const SimpleGraph& g) {
  if (g.vertex_count() > kMaxEnumerationVertices ||
      g.edge_count() > kMaxEnumerationEdges) {
    throw BudgetExceeded("graph too large for exhaustive enumeration",
                         estimate_work(g), 0);
  }
}

std::string format_estimate(std::uint64_t v) {
  return v == kUnbounded ? std::string("unbounded") : std::to_string(v);
}

}  // namespace

std::string_view strategy_name(Strategy s) {
  switch (s) {
    case Strategy::Auto: return "Auto";
    case Strategy::EdgeSubsets: return "EdgeSubsets";
    case Strategy::LinearOrders: return "LinearOrders";
  }
  return "?";
}

WorkEstimate estimate_work(const SimpleGraph& g) {
  WorkEstimate w;
  const std::size_t m = g.edge_count();
  w.edge_subsets = m >= 63 ? kUnbounded : (std::uint64_t{1} << m);
  std::uint64_t fact = 1;
  for (std::uint64_t i = 2; i <= g.vertex_count(); ++i) {
    if (fact > kUnbounded / i) {
      fact = kUnbounded;
      break;
    }
    fact *= i;
  }
  w.linear_orders = g.vertex_count() > kMaxEnumerationVertices ? kUnbounded : fact;
  return w;
}

Strategy resolve_strategy(const SimpleGraph& g, Strategy requested,
                          std::uint64_t budget) {
  const WorkEstimate w = estimate_work(g);
  Strategy chosen = requested;
  if (chosen == Strategy::Auto) {
    chosen = w.linear_orders < w.edge_subsets ? Strategy::LinearOrders
                                              : Strategy::EdgeSubsets;
  }
  const std::uint64_t cost =
      chosen == Strategy::EdgeSubsets ? w.edge_subsets : w.linear_orders;
  const bool too_large = g.vertex_count() > kMaxEnumerationVertices ||
                         g.edge_count() > kMaxEnumerationEdges;
  if (cost == kUnbounded || cost > budget || too_large) {
    throw BudgetExceeded(
        "enumeration over budget: " + std::string(strategy_name(chosen)) +
            " needs " + format_estimate(cost) + " (2^|E| = " +
            format_estimate(w.edge_subsets) + ", |V|! = " +
            format_estimate(w.linear_orders) + "), budget " +
            std::to_string(budget),
        w, budget);
  }
  return chosen;
}

void enumerate_acyclic_orientations(
    const GraphPtr& g, Strategy strategy, std::uint64_t budget,
    const std::function<void(const Orientation&)>& visit) {
  const Strategy chosen = resolve_strategy(*g, strategy, budget);
  require_dense(*g);
  const DenseGraph dense(*g);

  auto emit = [&](std::uint64_t bits) {
    std::vector<bool> dirs(dense.m);
    for (unsigned e = 0; e < dense.m; ++e) dirs[e] = (bits >> e) & 1u;
    visit(Orientation(g, std::move(dirs)));
  };

  if (chosen == Strategy::EdgeSubsets) {
    Order scratch{};
    run_subset_chunk(dense, 0, subset_total(dense),
                     [&](std::uint64_t bits, const OutMasks& out, const Order*) {
                       if (topo_sort(out, dense.n, scratch)) emit(bits);
                     });
  } else {
    for (unsigned c = 0; c < order_chunk_count(dense); ++c) {
      run_order_chunk(dense, c,
                      [&](std::uint64_t bits, const OutMasks&, const Order*) {
                        emit(bits);
                      });
    }
  }
}

SpectrumResult dependency_spectrum(const SimpleGraph& g, Strategy strategy,
                                   std::uint64_t budget,
                                   EnumerationOptions options) {
  const Strategy chosen = resolve_strategy(g, strategy, budget);
  require_dense(g);
  const DenseGraph dense(g);

  std::size_t chunks = 0;
  std::uint64_t total = 0;
  if (chosen == Strategy::EdgeSubsets) {
    total = subset_total(dense);
    chunks = options.chunks ? options.chunks : 256;
    chunks = static_cast<std::size_t>(std::min<std::uint64_t>(chunks, total));
  } else {
    chunks = order_chunk_count(dense);
  }

  // One histogram (indexed by d) per chunk, merged in chunk order.
  std::vector<std::vector<std::uint64_t>> partial(
      chunks, std::vector<std::uint64_t>(dense.m + 1, 0));

  auto run_chunk = [&](std::size_t c) {
    auto& hist = partial[c];
    if (chosen == Strategy::EdgeSubsets) {
      const auto lo = static_cast<std::uint64_t>(
          static_cast<unsigned __int128>(total) * c / chunks);
      const auto hi = static_cast<std::uint64_t>(
          static_cast<unsigned __int128>(total) * (c + 1) / chunks);
      Order order{};
      run_subset_chunk(dense, lo, hi,
                       [&](std::uint64_t, const OutMasks& out, const Order*) {
                         if (topo_sort(out, dense.n, order)) {
                           ++hist[dependents_along(out, order, dense.n)];
                         }
                       });
    } else {
      run_order_chunk(dense, static_cast<unsigned>(c),
                      [&](std::uint64_t, const OutMasks& out, const Order* order) {
                        ++hist[dependents_along(out, *order, dense.n)];
                      });
    }
  };

  unsigned threads = options.threads ? options.threads
                                     : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, chunks));
  if (threads <= 1) {
    for (std::size_t c = 0; c < chunks; ++c) run_chunk(c);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t c; (c = next.fetch_add(1)) < chunks;) run_chunk(c);
      });
    }
  }

  std::vector<std::uint64_t> hist(dense.m + 1, 0);
  for (const auto& p : partial) {
    for (std::size_t d = 0; d < hist.size(); ++d) hist[d] += p[d];
  }

  SpectrumResult r;
  r.strategy = chosen;
  for (std::size_t d = 0; d < hist.size(); ++d) {
    if (hist[d] == 0) continue;
    r.achievable.push_back(d);
    r.counts[d] = hist[d];
    r.enumerated += hist[d];
  }
  // Every graph has at least one acyclic orientation.
  r.d_min = r.achievable.front();
  r.d_max = r.achievable.back();
  for (std::size_t d = r.d_min; d <= r.d_max; ++d) {
    if (hist[d] == 0) r.gaps.push_back(d);
  }
  r.fully_orientable = r.gaps.empty();
  return r;
}

std::size_t d_max_closed_form(const SimpleGraph& g) {
  return g.edge_count() + component_count(g) - g.vertex_count();
}

FullOrientability full_orientability(const SimpleGraph& g, Strategy strategy,
                                     std::uint64_t budget) {
  FullOrientability out;
  out.spectrum = dependency_spectrum(g, strategy, budget);
  out.fully_orientable = out.spectrum.gaps.empty();
  return out;
}

}  // namespace fullorient
