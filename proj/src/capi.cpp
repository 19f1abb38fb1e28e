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
#include "linkset/linkset.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "linkset/assets.hpp"
#include "linkset/catalog.hpp"
#include "linkset/commands.hpp"
#include "linkset/error.hpp"
#include "linkset/serialize.hpp"

struct ls_graph {
  linkset::Graph value;
};
struct ls_lambda {
  linkset::LambdaSet value;
};
struct ls_diagram {
  linkset::Diagram value;
};
struct ls_bundle {
  linkset::CertificateBundle value;
};
struct ls_report {
  linkset::Report value;
};

namespace {

thread_local std::string last_error;

ls_status status_of(linkset::ErrorCode code) {
  using linkset::ErrorCode;
  switch (code) {
    case ErrorCode::invalid_argument:
      return LS_ERR_INVALID_ARGUMENT;
    case ErrorCode::not_found:
      return LS_ERR_NOT_FOUND;
    case ErrorCode::parse_error:
      return LS_ERR_PARSE;
    case ErrorCode::degenerate_geometry:
      return LS_ERR_DEGENERATE_GEOMETRY;
    case ErrorCode::size_limit:
      return LS_ERR_SIZE_LIMIT;
    case ErrorCode::verification_failed:
      return LS_ERR_VERIFICATION_FAILED;
    case ErrorCode::io_error:
      return LS_ERR_IO;
  }
  return LS_ERR_INTERNAL;
}

template <class Fn>
ls_status guard(Fn&& fn) {
  try {
    fn();
    last_error.clear();
    return LS_OK;
  } catch (const linkset::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  } catch (...) {
    last_error = "unknown error";
  }
  return LS_ERR_INTERNAL;
}

void need(const void* p, const char* what) {
  if (!p) linkset::fail(linkset::ErrorCode::invalid_argument, std::string(what) + " is null");
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class Handle, class Value>
ls_status make(Handle** out, Value&& v) {
  need(out, "output pointer");
  *out = new Handle{std::forward<Value>(v)};
  return LS_OK;
}

}  // namespace

extern "C" {

const char* ls_version(void) { return "1.0.0"; }

const char* ls_last_error(void) { return last_error.c_str(); }

const char* ls_status_name(ls_status status) {
  switch (status) {
    case LS_OK:
      return "ok";
    case LS_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case LS_ERR_NOT_FOUND:
      return "not found";
    case LS_ERR_PARSE:
      return "parse error";
    case LS_ERR_DEGENERATE_GEOMETRY:
      return "degenerate geometry";
    case LS_ERR_SIZE_LIMIT:
      return "size limit";
    case LS_ERR_VERIFICATION_FAILED:
      return "verification failed";
    case LS_ERR_IO:
      return "i/o error";
    case LS_ERR_INTERNAL:
      break;
  }
  return "internal error";
}

void ls_string_free(char* s) { std::free(s); }

ls_status ls_graph_catalog(const char* name, ls_graph** out) {
  return guard([&] {
    need(name, "name");
    make(out, linkset::catalog_graph(name));
  });
}

ls_status ls_graph_complete(int n, ls_graph** out) {
  return guard([&] {
    if (n < 1) linkset::fail(linkset::ErrorCode::invalid_argument, "n must be at least 1");
    make(out, linkset::complete_graph(n));
  });
}

ls_status ls_graph_from_json(const char* json, ls_graph** out) {
  return guard([&] {
    need(json, "json");
    make(out, linkset::graph_from_json(linkset::parse_json(json)));
  });
}

ls_status ls_graph_to_json(const ls_graph* g, char** out) {
  return guard([&] {
    need(g, "graph");
    need(out, "output pointer");
    *out = copy_string(linkset::dump(linkset::to_json(g->value)));
  });
}

size_t ls_graph_vertex_count(const ls_graph* g) { return g ? g->value.vertex_count() : 0; }

size_t ls_graph_edge_count(const ls_graph* g) { return g ? g->value.edge_count() : 0; }

void ls_graph_free(ls_graph* g) { delete g; }

ls_status ls_lambda_catalog(const char* name, ls_lambda** out) {
  return guard([&] {
    need(name, "name");
    make(out, linkset::catalog_lambda(name));
  });
}

ls_status ls_lambda_default_for(const char* graph_name, ls_lambda** out) {
  return guard([&] {
    need(graph_name, "graph name");
    make(out, linkset::catalog_lambda(linkset::default_lambda_for(graph_name)));
  });
}

ls_status ls_lambda_all_pairs(const ls_graph* g, const char* name, ls_lambda** out) {
  return guard([&] {
    need(g, "graph");
    make(out, linkset::all_pairs(g->value, name ? name : "Γ⁽²⁾"));
  });
}

ls_status ls_lambda_from_json(const char* json, ls_lambda** out) {
  return guard([&] {
    need(json, "json");
    make(out, linkset::lambda_from_json(linkset::parse_json(json)));
  });
}

ls_status ls_lambda_to_json(const ls_lambda* lam, char** out) {
  return guard([&] {
    need(lam, "lambda");
    need(out, "output pointer");
    *out = copy_string(linkset::dump(linkset::to_json(lam->value)));
  });
}

ls_status ls_lambda_without(const ls_lambda* lam, size_t index, ls_lambda** out) {
  return guard([&] {
    need(lam, "lambda");
    if (index >= lam->value.size()) linkset::fail(linkset::ErrorCode::invalid_argument, "pair index out of range");
    make(out, lam->value.without(lam->value.pairs[index]));
  });
}

size_t ls_lambda_size(const ls_lambda* lam) { return lam ? lam->value.size() : 0; }

void ls_lambda_free(ls_lambda* lam) { delete lam; }

ls_status ls_diagram_from_json(const char* json, ls_diagram** out) {
  return guard([&] {
    need(json, "json");
    make(out, linkset::diagram_from_json(linkset::parse_json(json)));
  });
}

ls_status ls_diagram_load(const char* path, ls_diagram** out) {
  return guard([&] {
    need(path, "path");
    make(out, linkset::read_diagram_file(path));
  });
}

ls_status ls_diagram_to_json(const ls_diagram* d, char** out) {
  return guard([&] {
    need(d, "diagram");
    need(out, "output pointer");
    *out = copy_string(linkset::dump(linkset::to_json(d->value)));
  });
}

size_t ls_diagram_crossing_count(const ls_diagram* d) { return d ? d->value.crossings().size() : 0; }

void ls_diagram_free(ls_diagram* d) { delete d; }

ls_status ls_bundle_from_json(const char* json, ls_bundle** out) {
  return guard([&] {
    need(json, "json");
    make(out, linkset::bundle_from_json(linkset::parse_json(json)));
  });
}

ls_status ls_bundle_load(const char* path, ls_bundle** out) {
  return guard([&] {
    need(path, "path");
    make(out, linkset::bundle_from_json(linkset::read_json_file(path)));
  });
}

ls_status ls_bundle_asset(const char* graph_name, ls_bundle** out) {
  return guard([&] {
    need(graph_name, "graph name");
    make(out, linkset::load_bundle(graph_name));
  });
}

ls_status ls_bundle_to_json(const ls_bundle* b, char** out) {
  return guard([&] {
    need(b, "bundle");
    need(out, "output pointer");
    *out = copy_string(linkset::dump(linkset::to_json(b->value)));
  });
}

void ls_bundle_free(ls_bundle* b) { delete b; }

ls_status ls_catalog_json(char** out) {
  return guard([&] {
    need(out, "output pointer");
    *out = copy_string(linkset::dump(linkset::catalog_listing()));
  });
}

ls_status ls_catalog_export(const char* name, char** out) {
  return guard([&] {
    need(name, "name");
    need(out, "output pointer");
    *out = copy_string(linkset::dump(linkset::catalog_export(name)));
  });
}

ls_status ls_enumerate_pairs(const ls_graph* g, int p, int q, int hamiltonian_only, char** out) {
  return guard([&] {
    need(g, "graph");
    need(out, "output pointer");
    std::optional<std::pair<int, int>> type;
    if (p != 0 || q != 0) {
      if (p < 3 || q < 3) linkset::fail(linkset::ErrorCode::invalid_argument, "cycle lengths must be at least 3");
      type = std::pair<int, int>{p, q};
    }
    *out = copy_string(linkset::dump(linkset::enumerate(g->value, type, hamiltonian_only != 0, std::nullopt)));
  });
}

ls_status ls_enumerate_cycles(const ls_graph* g, int length, char** out) {
  return guard([&] {
    need(g, "graph");
    need(out, "output pointer");
    if (length < 0) linkset::fail(linkset::ErrorCode::invalid_argument, "negative cycle length");
    *out = copy_string(linkset::dump(linkset::enumerate(g->value, std::nullopt, false, length)));
  });
}

ls_status ls_verify_linked(const ls_graph* g, const ls_lambda* lam, const ls_diagram* witness, ls_report** out) {
  return guard([&] {
    need(g, "graph");
    need(lam, "lambda");
    need(witness, "witness");
    make(out, linkset::run_verify_linked(g->value, lam->value, witness->value));
  });
}

ls_status ls_verify_minimal(const ls_graph* g, const ls_bundle* bundle, int jobs, ls_report** out) {
  return guard([&] {
    need(g, "graph");
    need(bundle, "bundle");
    make(out, linkset::run_verify_minimal(g->value, bundle->value, jobs));
  });
}

ls_status ls_splitting_count(const ls_graph* g, ls_report** out) {
  return guard([&] {
    need(g, "graph");
    make(out, linkset::run_splitting_count(g->value));
  });
}

ls_status ls_monte_carlo(const ls_graph* g, const ls_lambda* lam, uint64_t trials, uint64_t seed, int jobs,
                         ls_report** out) {
  return guard([&] {
    need(g, "graph");
    need(lam, "lambda");
    make(out, linkset::run_monte_carlo(g->value, lam->value, trials, seed, jobs));
  });
}

ls_status ls_construct(int p, int q, int battery_max_n, int parity_max_n, int jobs, ls_report** out,
                       char** construction_json) {
  return guard([&] {
    linkset::Json file;
    linkset::Report r = linkset::run_construct(p, q, {battery_max_n, parity_max_n}, jobs, &file);
    make(out, std::move(r));
    if (construction_json) *construction_json = copy_string(linkset::dump(file));
  });
}

ls_status ls_verify_lift(const char* construction_json, int battery_max_n, int parity_max_n, int jobs,
                         ls_report** out) {
  return guard([&] {
    need(construction_json, "construction json");
    make(out, linkset::run_verify_lift(linkset::parse_json(construction_json), {battery_max_n, parity_max_n}, jobs));
  });
}

int ls_report_passed(const ls_report* r) { return r && r->value.passed ? 1 : 0; }

ls_status ls_report_json(const ls_report* r, char** out) {
  return guard([&] {
    need(r, "report");
    need(out, "output pointer");
    *out = copy_string(linkset::dump(r->value.to_json()));
  });
}

ls_status ls_report_text(const ls_report* r, char** out) {
  return guard([&] {
    need(r, "report");
    need(out, "output pointer");
    *out = copy_string(r->value.text());
  });
}

void ls_report_free(ls_report* r) { delete r; }

}  // extern "C"
