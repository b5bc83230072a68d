/*
 * Copyright 2026 The fullorient Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to libfullorient.
 *
 * All objects are opaque handles created by fo_*_create-style functions and
 * released with the matching fo_*_free. Functions return an fo_status; on
 * failure fo_last_error() describes the problem (thread-local, valid until
 * the next failing call on the same thread). Strings returned through
 * `char**` out-parameters are owned by the caller and released with
 * fo_string_free.
 *
 * The nonzero status values double as process exit codes for the CLI.
 */

#ifndef FULLORIENT_H
#define FULLORIENT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define FO_API __declspec(dllexport)
#else
#  define FO_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fo_status {
  FO_OK = 0,
  FO_ERR_BUDGET = 2,        /* enumeration or search over budget */
  FO_ERR_INVALID = 3,       /* bad argument, malformed input */
  FO_ERR_VERIFICATION = 4,  /* a construction disagreed with the oracle */
  FO_ERR_NOT_ACYCLIC = 5,   /* dependence queried on a cyclic orientation */
  FO_ERR_INTERNAL = 6
} fo_status;

typedef enum fo_strategy {
  FO_STRATEGY_AUTO = 0,
  FO_STRATEGY_SUBSETS = 1,
  FO_STRATEGY_ORDERS = 2
} fo_strategy;

typedef struct fo_graph fo_graph;
typedef struct fo_orientation fo_orientation;
typedef struct fo_spectrum fo_spectrum;
typedef struct fo_sequence fo_sequence;

FO_API const char* fo_version(void);
FO_API const char* fo_last_error(void);
FO_API void fo_string_free(char* s);
FO_API uint64_t fo_default_budget(void);

/* ---- graphs ---------------------------------------------------------- */

FO_API fo_status fo_graph_cycle(uint32_t n, fo_graph** out);
FO_API fo_status fo_graph_cycle_power(uint32_t n, uint32_t k, fo_graph** out);
FO_API fo_status fo_graph_complete(uint32_t n, fo_graph** out);
FO_API fo_status fo_graph_multipartite(uint32_t r, uint32_t part_size, fo_graph** out);
/* Edges as 2*m vertex labels. */
FO_API fo_status fo_graph_from_edges(uint32_t n, const uint32_t* endpoints,
                                     size_t m, fo_graph** out);
FO_API fo_status fo_graph_parse(const char* text, fo_graph** out);
FO_API fo_status fo_graph_power(const fo_graph* g, uint32_t m, fo_graph** out);
FO_API void fo_graph_free(fo_graph* g);

FO_API size_t fo_graph_vertex_count(const fo_graph* g);
FO_API size_t fo_graph_edge_count(const fo_graph* g);
FO_API fo_status fo_graph_edge(const fo_graph* g, size_t index, uint32_t* u, uint32_t* v);
FO_API size_t fo_graph_component_count(const fo_graph* g);
FO_API size_t fo_graph_triangle_count(const fo_graph* g);
/* Family name recorded in result documents ("cycle", "cycle-power", ...). */
FO_API const char* fo_graph_family(const fo_graph* g);
FO_API fo_status fo_graph_to_text(const fo_graph* g, char** out);
FO_API size_t fo_graph_d_max_formula(const fo_graph* g);
/* Exact minimum triangle edge deletion; FO_ERR_BUDGET if the search is too large. */
FO_API fo_status fo_graph_pi_t(const fo_graph* g, size_t* pi_t);

/* ---- orientations ---------------------------------------------------- */

FO_API fo_status fo_orientation_from_order(const fo_graph* g, const uint32_t* order,
                                           size_t len, fo_orientation** out);
/* Arcs as 2*count labels (tail, head, tail, head, ...). */
FO_API fo_status fo_orientation_reverse(const fo_orientation* o, const uint32_t* arcs,
                                        size_t count, fo_orientation** out);
FO_API void fo_orientation_free(fo_orientation* o);
FO_API int fo_orientation_is_acyclic(const fo_orientation* o);
FO_API fo_status fo_orientation_dependent_count(const fo_orientation* o, size_t* d);
FO_API fo_status fo_orientation_to_dot(const fo_orientation* o, const char* name, char** out);

/* ---- spectrum -------------------------------------------------------- */

FO_API fo_status fo_spectrum_compute(const fo_graph* g, fo_strategy strategy,
                                     uint64_t budget, fo_spectrum** out);
FO_API void fo_spectrum_free(fo_spectrum* s);
FO_API size_t fo_spectrum_d_min(const fo_spectrum* s);
FO_API size_t fo_spectrum_d_max(const fo_spectrum* s);
FO_API int fo_spectrum_fully_orientable(const fo_spectrum* s);
FO_API uint64_t fo_spectrum_enumerated(const fo_spectrum* s);
FO_API size_t fo_spectrum_achievable_count(const fo_spectrum* s);
FO_API size_t fo_spectrum_achievable_at(const fo_spectrum* s, size_t i);
/* Number of acyclic orientations with exactly d dependent arcs. */
FO_API uint64_t fo_spectrum_count(const fo_spectrum* s, size_t d);
FO_API size_t fo_spectrum_gap_count(const fo_spectrum* s);
FO_API size_t fo_spectrum_gap_at(const fo_spectrum* s, size_t i);
FO_API fo_status fo_spectrum_to_json(const fo_spectrum* s, char** out);
FO_API fo_status fo_spectrum_to_csv(const fo_spectrum* s, char** out);

/* ---- constructions on C_n^2 ------------------------------------------ */

FO_API fo_status fo_construct_d0(uint32_t n, fo_orientation** out);
FO_API fo_status fo_construct_dmax(uint32_t n, fo_orientation** out);
FO_API fo_status fo_sequence_build(uint32_t n, fo_sequence** out);
FO_API void fo_sequence_free(fo_sequence* s);
FO_API size_t fo_sequence_size(const fo_sequence* s);
FO_API size_t fo_sequence_target(const fo_sequence* s, size_t i);
FO_API const char* fo_sequence_label(const fo_sequence* s, size_t i);
FO_API fo_status fo_sequence_orientation(const fo_sequence* s, size_t i, fo_orientation** out);
FO_API fo_status fo_sequence_to_json(const fo_sequence* s, char** out);

/* Writes the JSON report even when a clause fails; returns
 * FO_ERR_VERIFICATION in that case. */
FO_API fo_status fo_verify_theorems(uint32_t n, uint64_t budget, char** report_json);

#ifdef __cplusplus
}
#endif

#endif /* FULLORIENT_H */
