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

#include "fullorient/fullorient.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "fullorient/constructions.hpp"
#include "fullorient/error.hpp"
#include "fullorient/graph_io.hpp"
#include "fullorient/orientation.hpp"
#include "fullorient/report.hpp"
#include "fullorient/spectrum.hpp"

using namespace fullorient;

struct fo_graph {
  GraphPtr graph;
  GraphLabel label;
};

struct fo_orientation {
  Orientation orientation;
};

struct fo_spectrum {
  SpectrumDocument doc;
};

struct fo_sequence {
  OrientationSequence seq;
};

namespace {

thread_local std::string g_last_error;

fo_status fail(fo_status code, const char* what) {
  g_last_error = what;
  return code;
}

// Runs `body`, translating exceptions into status codes.
template <class F>
fo_status guarded(F&& body) {
  try {
    body();
    return FO_OK;
  } catch (const BudgetExceeded& ex) {
    return fail(FO_ERR_BUDGET, ex.what());
  } catch (const InvalidArgument& ex) {
    return fail(FO_ERR_INVALID, ex.what());
  } catch (const VerificationFailure& ex) {
    return fail(FO_ERR_VERIFICATION, ex.what());
  } catch (const NotAcyclic& ex) {
    return fail(FO_ERR_NOT_ACYCLIC, ex.what());
  } catch (const std::bad_alloc&) {
    return fail(FO_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& ex) {
    return fail(FO_ERR_INTERNAL, ex.what());
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(const void* p, const char* what) {
  if (!p) throw InvalidArgument(std::string(what) + " must not be null");
}

fo_status make_graph(fo_graph** out, SimpleGraph g, GraphLabel label) {
  require(out, "out");
  *out = new fo_graph{share(std::move(g)), std::move(label)};
  return FO_OK;
}

Strategy to_strategy(fo_strategy s) {
  switch (s) {
    case FO_STRATEGY_AUTO: return Strategy::Auto;
    case FO_STRATEGY_SUBSETS: return Strategy::EdgeSubsets;
    case FO_STRATEGY_ORDERS: return Strategy::LinearOrders;
  }
  throw InvalidArgument("unknown strategy");
}

}  // namespace

extern "C" {

const char* fo_version(void) { return "1.0.0"; }
const char* fo_last_error(void) { return g_last_error.c_str(); }
void fo_string_free(char* s) { std::free(s); }
uint64_t fo_default_budget(void) { return kDefaultBudget; }

fo_status fo_graph_cycle(uint32_t n, fo_graph** out) {
  return guarded([&] { make_graph(out, cycle_graph(n), {"cycle", {{"n", n}}}); });
}

fo_status fo_graph_cycle_power(uint32_t n, uint32_t k, fo_graph** out) {
  return guarded([&] {
    make_graph(out, cycle_power(n, k), {"cycle-power", {{"n", n}, {"k", k}}});
  });
}

fo_status fo_graph_complete(uint32_t n, fo_graph** out) {
  return guarded([&] { make_graph(out, complete_graph(n), {"complete", {{"n", n}}}); });
}

fo_status fo_graph_multipartite(uint32_t r, uint32_t part_size, fo_graph** out) {
  return guarded([&] {
    make_graph(out, complete_multipartite(r, part_size),
               {"multipartite", {{"r", r}, {"n", part_size}}});
  });
}

fo_status fo_graph_from_edges(uint32_t n, const uint32_t* endpoints, size_t m,
                              fo_graph** out) {
  return guarded([&] {
    if (m > 0) require(endpoints, "endpoints");
    std::vector<Edge> edges(m);
    for (size_t i = 0; i < m; ++i) edges[i] = {endpoints[2 * i], endpoints[2 * i + 1]};
    make_graph(out, SimpleGraph(n, edges), {});
  });
}

fo_status fo_graph_parse(const char* text, fo_graph** out) {
  return guarded([&] {
    require(text, "text");
    make_graph(out, parse_graph_text(text), {});
  });
}

fo_status fo_graph_power(const fo_graph* g, uint32_t m, fo_graph** out) {
  return guarded([&] {
    require(g, "graph");
    GraphLabel label{"power", {{"m", m}}};
    make_graph(out, graph_power(*g->graph, m), std::move(label));
  });
}

void fo_graph_free(fo_graph* g) { delete g; }

size_t fo_graph_vertex_count(const fo_graph* g) { return g ? g->graph->vertex_count() : 0; }
size_t fo_graph_edge_count(const fo_graph* g) { return g ? g->graph->edge_count() : 0; }

fo_status fo_graph_edge(const fo_graph* g, size_t index, uint32_t* u, uint32_t* v) {
  return guarded([&] {
    require(g, "graph");
    require(u, "u");
    require(v, "v");
    if (index >= g->graph->edge_count()) throw InvalidArgument("edge index out of range");
    const Edge& e = g->graph->edge(static_cast<EdgeIndex>(index));
    *u = e.u;
    *v = e.v;
  });
}

size_t fo_graph_component_count(const fo_graph* g) {
  return g ? component_count(*g->graph) : 0;
}

size_t fo_graph_triangle_count(const fo_graph* g) {
  return g ? enumerate_triangles(*g->graph).size() : 0;
}

const char* fo_graph_family(const fo_graph* g) { return g ? g->label.family.c_str() : ""; }

fo_status fo_graph_to_text(const fo_graph* g, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = dup_string(format_graph_text(*g->graph));
  });
}

size_t fo_graph_d_max_formula(const fo_graph* g) {
  return g ? d_max_closed_form(*g->graph) : 0;
}

fo_status fo_graph_pi_t(const fo_graph* g, size_t* pi_t) {
  return guarded([&] {
    require(g, "graph");
    require(pi_t, "pi_t");
    *pi_t = min_triangle_edge_deletion(*g->graph).pi_t;
  });
}

fo_status fo_orientation_from_order(const fo_graph* g, const uint32_t* order, size_t len,
                                    fo_orientation** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    if (len > 0) require(order, "order");
    std::vector<Vertex> ord(order, order + len);
    *out = new fo_orientation{Orientation::from_linear_order(g->graph, ord)};
  });
}

fo_status fo_orientation_reverse(const fo_orientation* o, const uint32_t* arcs,
                                 size_t count, fo_orientation** out) {
  return guarded([&] {
    require(o, "orientation");
    require(out, "out");
    if (count > 0) require(arcs, "arcs");
    std::vector<Arc> list(count);
    for (size_t i = 0; i < count; ++i) list[i] = {arcs[2 * i], arcs[2 * i + 1]};
    *out = new fo_orientation{reverse_arcs(o->orientation, list)};
  });
}

void fo_orientation_free(fo_orientation* o) { delete o; }

int fo_orientation_is_acyclic(const fo_orientation* o) {
  return o && is_acyclic(o->orientation) ? 1 : 0;
}

fo_status fo_orientation_dependent_count(const fo_orientation* o, size_t* d) {
  return guarded([&] {
    require(o, "orientation");
    require(d, "d");
    *d = dependent_arcs(o->orientation).d;
  });
}

fo_status fo_orientation_to_dot(const fo_orientation* o, const char* name, char** out) {
  return guarded([&] {
    require(o, "orientation");
    require(out, "out");
    *out = dup_string(to_dot(o->orientation, name ? name : "D"));
  });
}

fo_status fo_spectrum_compute(const fo_graph* g, fo_strategy strategy, uint64_t budget,
                              fo_spectrum** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    if (budget == 0) throw InvalidArgument("budget must be positive");
    *out = new fo_spectrum{
        compute_spectrum_document(*g->graph, g->label, to_strategy(strategy), budget)};
  });
}

void fo_spectrum_free(fo_spectrum* s) { delete s; }
size_t fo_spectrum_d_min(const fo_spectrum* s) { return s ? s->doc.spectrum.d_min : 0; }
size_t fo_spectrum_d_max(const fo_spectrum* s) { return s ? s->doc.spectrum.d_max : 0; }

int fo_spectrum_fully_orientable(const fo_spectrum* s) {
  return s && s->doc.spectrum.fully_orientable ? 1 : 0;
}

uint64_t fo_spectrum_enumerated(const fo_spectrum* s) {
  return s ? s->doc.spectrum.enumerated : 0;
}

size_t fo_spectrum_achievable_count(const fo_spectrum* s) {
  return s ? s->doc.spectrum.achievable.size() : 0;
}

size_t fo_spectrum_achievable_at(const fo_spectrum* s, size_t i) {
  return s && i < s->doc.spectrum.achievable.size() ? s->doc.spectrum.achievable[i] : 0;
}

uint64_t fo_spectrum_count(const fo_spectrum* s, size_t d) {
  if (!s) return 0;
  auto it = s->doc.spectrum.counts.find(d);
  return it == s->doc.spectrum.counts.end() ? 0 : it->second;
}

size_t fo_spectrum_gap_count(const fo_spectrum* s) {
  return s ? s->doc.spectrum.gaps.size() : 0;
}

size_t fo_spectrum_gap_at(const fo_spectrum* s, size_t i) {
  return s && i < s->doc.spectrum.gaps.size() ? s->doc.spectrum.gaps[i] : 0;
}

fo_status fo_spectrum_to_json(const fo_spectrum* s, char** out) {
  return guarded([&] {
    require(s, "spectrum");
    require(out, "out");
    *out = dup_string(spectrum_json(s->doc));
  });
}

fo_status fo_spectrum_to_csv(const fo_spectrum* s, char** out) {
  return guarded([&] {
    require(s, "spectrum");
    require(out, "out");
    *out = dup_string(spectrum_csv(s->doc));
  });
}

fo_status fo_construct_d0(uint32_t n, fo_orientation** out) {
  return guarded([&] {
    require(out, "out");
    *out = new fo_orientation{construct_d0(n)};
  });
}

fo_status fo_construct_dmax(uint32_t n, fo_orientation** out) {
  return guarded([&] {
    require(out, "out");
    *out = new fo_orientation{construct_dmax_orientation(n)};
  });
}

fo_status fo_sequence_build(uint32_t n, fo_sequence** out) {
  return guarded([&] {
    require(out, "out");
    *out = new fo_sequence{construct_reversal_sequence(n)};
  });
}

void fo_sequence_free(fo_sequence* s) { delete s; }
size_t fo_sequence_size(const fo_sequence* s) { return s ? s->seq.entries.size() : 0; }

size_t fo_sequence_target(const fo_sequence* s, size_t i) {
  return s && i < s->seq.entries.size() ? s->seq.entries[i].target_d : 0;
}

const char* fo_sequence_label(const fo_sequence* s, size_t i) {
  return s && i < s->seq.entries.size() ? s->seq.entries[i].label.c_str() : "";
}

fo_status fo_sequence_orientation(const fo_sequence* s, size_t i, fo_orientation** out) {
  return guarded([&] {
    require(s, "sequence");
    require(out, "out");
    if (i >= s->seq.entries.size()) throw InvalidArgument("sequence index out of range");
    *out = new fo_orientation{s->seq.entries[i].orientation};
  });
}

fo_status fo_sequence_to_json(const fo_sequence* s, char** out) {
  return guarded([&] {
    require(s, "sequence");
    require(out, "out");
    *out = dup_string(sequence_json(s->seq));
  });
}

fo_status fo_verify_theorems(uint32_t n, uint64_t budget, char** report_json) {
  bool passed = false;
  fo_status st = guarded([&] {
    require(report_json, "report_json");
    if (budget == 0) throw InvalidArgument("budget must be positive");
    const auto report = verify_theorems(n, budget);
    *report_json = dup_string(verification_json(report));
    passed = report.all_passed();
  });
  if (st != FO_OK) return st;
  if (!passed) return fail(FO_ERR_VERIFICATION, "one or more clauses failed");
  return FO_OK;
}

}  // extern "C"
