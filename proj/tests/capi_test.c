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
/* Exercises the shared library through its C interface only. */
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "linkset/linkset.h"

static int failures = 0;

#define EXPECT(cond)                                                    \
  do {                                                                  \
    if (!(cond)) {                                                      \
      fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                       \
    }                                                                   \
  } while (0)

static void graphs(void) {
  ls_graph* g = NULL;
  EXPECT(ls_graph_catalog("G10", &g) == LS_OK);
  EXPECT(ls_graph_vertex_count(g) == 10);
  EXPECT(ls_graph_edge_count(g) == 29);
  char* json = NULL;
  EXPECT(ls_graph_to_json(g, &json) == LS_OK);
  ls_graph* back = NULL;
  EXPECT(ls_graph_from_json(json, &back) == LS_OK);
  EXPECT(ls_graph_edge_count(back) == 29);
  ls_string_free(json);
  ls_graph_free(back);
  ls_graph_free(g);

  g = NULL;
  EXPECT(ls_graph_catalog("K99", &g) == LS_ERR_NOT_FOUND);
  EXPECT(g == NULL);
  EXPECT(strlen(ls_last_error()) > 0);
  EXPECT(ls_graph_from_json("{", &g) == LS_ERR_PARSE);
  EXPECT(ls_graph_complete(5, NULL) == LS_ERR_INVALID_ARGUMENT);
  EXPECT(strcmp(ls_status_name(LS_ERR_SIZE_LIMIT), "size limit") == 0);
  EXPECT(strlen(ls_version()) > 0);
}

static void enumeration(void) {
  ls_graph* k7 = NULL;
  EXPECT(ls_graph_complete(7, &k7) == LS_OK);
  char* json = NULL;
  EXPECT(ls_enumerate_pairs(k7, 4, 3, 1, &json) == LS_OK);
  EXPECT(json != NULL && strstr(json, "\"count\": 105") != NULL);
  ls_string_free(json);
  ls_graph_free(k7);

  ls_graph* k13 = NULL;
  EXPECT(ls_graph_complete(13, &k13) == LS_OK);
  json = NULL;
  EXPECT(ls_enumerate_pairs(k13, 0, 0, 0, &json) == LS_ERR_SIZE_LIMIT);
  ls_graph_free(k13);
}

static void verification(void) {
  ls_graph* g = NULL;
  ls_lambda* lam = NULL;
  ls_bundle* b = NULL;
  ls_report* r = NULL;
  EXPECT(ls_graph_catalog("G9", &g) == LS_OK);
  EXPECT(ls_lambda_default_for("G9", &lam) == LS_OK);
  EXPECT(ls_lambda_size(lam) == 9);
  EXPECT(ls_bundle_asset("G9", &b) == LS_OK);
  EXPECT(ls_verify_minimal(g, b, 2, &r) == LS_OK);
  EXPECT(ls_report_passed(r) == 1);
  char* text = NULL;
  EXPECT(ls_report_json(r, &text) == LS_OK);
  EXPECT(strstr(text, "\"passed\": true") != NULL || strstr(text, "\"passed\":true") != NULL);
  ls_string_free(text);
  ls_report_free(r);

  ls_lambda* fewer = NULL;
  EXPECT(ls_lambda_without(lam, 0, &fewer) == LS_OK);
  EXPECT(ls_lambda_size(fewer) == 8);
  EXPECT(ls_lambda_without(lam, 9, &fewer) == LS_ERR_INVALID_ARGUMENT);
  ls_diagram* w = NULL;
  char* bjson = NULL;
  EXPECT(ls_catalog_export("h_G9", &bjson) == LS_OK);
  EXPECT(ls_diagram_from_json(bjson, &w) == LS_OK);
  EXPECT(ls_diagram_crossing_count(w) > 0);
  ls_string_free(bjson);
  r = NULL;
  EXPECT(ls_verify_linked(g, fewer, w, &r) == LS_OK);
  EXPECT(ls_report_passed(r) == 0);
  ls_report_free(r);
  r = NULL;
  EXPECT(ls_verify_linked(g, lam, w, &r) == LS_OK);
  EXPECT(ls_report_passed(r) == 1);
  ls_report_free(r);

  ls_graph* q7 = NULL;
  EXPECT(ls_graph_catalog("Q7", &q7) == LS_OK);
  r = NULL;
  EXPECT(ls_verify_linked(q7, lam, w, &r) != LS_OK);
  EXPECT(r == NULL);
  ls_graph_free(q7);

  r = NULL;
  EXPECT(ls_monte_carlo(g, lam, 20, 7, 2, &r) == LS_OK);
  EXPECT(ls_report_passed(r) == 1);
  ls_report_free(r);

  ls_diagram_free(w);
  ls_lambda_free(fewer);
  ls_bundle_free(b);
  ls_lambda_free(lam);
  ls_graph_free(g);
}

static void construction(void) {
  ls_report* r = NULL;
  char* file = NULL;
  EXPECT(ls_construct(5, 3, 10, 12, 2, &r, &file) == LS_OK);
  EXPECT(ls_report_passed(r) == 1);
  ls_report_free(r);
  r = NULL;
  EXPECT(ls_verify_lift(file, 10, 12, 2, &r) == LS_OK);
  EXPECT(ls_report_passed(r) == 1);
  ls_report_free(r);
  ls_string_free(file);
  EXPECT(ls_construct(2, 2, 10, 12, 1, &r, NULL) == LS_ERR_INVALID_ARGUMENT);
}

int main(void) {
  graphs();
  enumeration();
  verification();
  construction();
  if (failures) {
    fprintf(stderr, "%d failure(s)\n", failures);
    return 1;
  }
  printf("capi: all checks passed\n");
  return 0;
}
