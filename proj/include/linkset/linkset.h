/*
 * Copyright (c) 2026, The linkset authors.
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
#ifndef LINKSET_LINKSET_H
#define LINKSET_LINKSET_H

/*
 * C interface to the linkset library. Objects are opaque handles released
 * with the matching *_free function. Every call returns an ls_status; on
 * failure ls_last_error() describes the problem (per thread). Strings
 * returned through char** are owned by the caller and released with
 * ls_string_free.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define LINKSET_API __declspec(dllexport)
#elif defined(__GNUC__)
#define LINKSET_API __attribute__((visibility("default")))
#else
#define LINKSET_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ls_status {
  LS_OK = 0,
  LS_ERR_INVALID_ARGUMENT = 1,
  LS_ERR_NOT_FOUND = 2,
  LS_ERR_PARSE = 3,
  LS_ERR_DEGENERATE_GEOMETRY = 4,
  LS_ERR_SIZE_LIMIT = 5,
  LS_ERR_VERIFICATION_FAILED = 6,
  LS_ERR_IO = 7,
  LS_ERR_INTERNAL = 8
} ls_status;

typedef struct ls_graph ls_graph;
typedef struct ls_lambda ls_lambda;
typedef struct ls_diagram ls_diagram;
typedef struct ls_bundle ls_bundle;
typedef struct ls_report ls_report;

LINKSET_API const char* ls_version(void);
LINKSET_API const char* ls_last_error(void);
LINKSET_API const char* ls_status_name(ls_status status);
LINKSET_API void ls_string_free(char* s);

/* Graphs */
LINKSET_API ls_status ls_graph_catalog(const char* name, ls_graph** out);
LINKSET_API ls_status ls_graph_complete(int n, ls_graph** out);
LINKSET_API ls_status ls_graph_from_json(const char* json, ls_graph** out);
LINKSET_API ls_status ls_graph_to_json(const ls_graph* g, char** out);
LINKSET_API size_t ls_graph_vertex_count(const ls_graph* g);
LINKSET_API size_t ls_graph_edge_count(const ls_graph* g);
LINKSET_API void ls_graph_free(ls_graph* g);

/* Cycle-pair sets */
LINKSET_API ls_status ls_lambda_catalog(const char* name, ls_lambda** out);
/* The set a catalog graph is certified with, e.g. Λ(G8) for "G8". */
LINKSET_API ls_status ls_lambda_default_for(const char* graph_name, ls_lambda** out);
/* Γ⁽²⁾(g) under the given name. */
LINKSET_API ls_status ls_lambda_all_pairs(const ls_graph* g, const char* name, ls_lambda** out);
LINKSET_API ls_status ls_lambda_from_json(const char* json, ls_lambda** out);
LINKSET_API ls_status ls_lambda_to_json(const ls_lambda* lam, char** out);
/* Copy without the pair at `index` (in the set's sorted order). */
LINKSET_API ls_status ls_lambda_without(const ls_lambda* lam, size_t index, ls_lambda** out);
LINKSET_API size_t ls_lambda_size(const ls_lambda* lam);
LINKSET_API void ls_lambda_free(ls_lambda* lam);

/* Diagrams and certificate bundles */
LINKSET_API ls_status ls_diagram_from_json(const char* json, ls_diagram** out);
/* Reads a diagram file, or the witness of a bundle file. */
LINKSET_API ls_status ls_diagram_load(const char* path, ls_diagram** out);
LINKSET_API ls_status ls_diagram_to_json(const ls_diagram* d, char** out);
LINKSET_API size_t ls_diagram_crossing_count(const ls_diagram* d);
LINKSET_API void ls_diagram_free(ls_diagram* d);

LINKSET_API ls_status ls_bundle_from_json(const char* json, ls_bundle** out);
LINKSET_API ls_status ls_bundle_load(const char* path, ls_bundle** out);
/* Shipped bundle for a catalog graph. */
LINKSET_API ls_status ls_bundle_asset(const char* graph_name, ls_bundle** out);
LINKSET_API ls_status ls_bundle_to_json(const ls_bundle* b, char** out);
LINKSET_API void ls_bundle_free(ls_bundle* b);

/* Catalog and enumeration (JSON text) */
LINKSET_API ls_status ls_catalog_json(char** out);
/* Graph, Λ set, "h_<graph>" witness or "<graph>.battery" bundle. */
LINKSET_API ls_status ls_catalog_export(const char* name, char** out);
/* p = q = 0 disables the type filter. */
LINKSET_API ls_status ls_enumerate_pairs(const ls_graph* g, int p, int q, int hamiltonian_only, char** out);
/* length 0 lists cycles of every length. */
LINKSET_API ls_status ls_enumerate_cycles(const ls_graph* g, int length, char** out);

/* Verification. A report is produced whenever the inputs are well formed;
 * whether the verification passed is read from the report. */
LINKSET_API ls_status ls_verify_linked(const ls_graph* g, const ls_lambda* lam, const ls_diagram* witness,
                                       ls_report** out);
LINKSET_API ls_status ls_verify_minimal(const ls_graph* g, const ls_bundle* bundle, int jobs, ls_report** out);
LINKSET_API ls_status ls_splitting_count(const ls_graph* g, ls_report** out);
LINKSET_API ls_status ls_monte_carlo(const ls_graph* g, const ls_lambda* lam, uint64_t trials, uint64_t seed, int jobs,
                                     ls_report** out);
/* Λ(K_{p+q}) constructions. Certificates are lifted for n <= battery_max_n
 * and parity tables checked for n <= parity_max_n. When construction_json is
 * not NULL it receives the construction file. */
LINKSET_API ls_status ls_construct(int p, int q, int battery_max_n, int parity_max_n, int jobs, ls_report** out,
                                   char** construction_json);
LINKSET_API ls_status ls_verify_lift(const char* construction_json, int battery_max_n, int parity_max_n, int jobs,
                                     ls_report** out);

LINKSET_API int ls_report_passed(const ls_report* r);
LINKSET_API ls_status ls_report_json(const ls_report* r, char** out);
LINKSET_API ls_status ls_report_text(const ls_report* r, char** out);
LINKSET_API void ls_report_free(ls_report* r);

#ifdef __cplusplus
}
#endif

#endif /* LINKSET_LINKSET_H */
