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
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "linkset/serialize.hpp"

namespace linkset {

/// Outcome of one top-level command: a verdict plus a JSON body.
struct Report {
  std::string kind;
  bool passed = false;
  Json body;

  Json to_json() const;
  std::string text() const;
};

/// Size bounds for certificate work on complete graphs.
struct Bounds {
  int battery_max_n = 10;
  int parity_max_n = 12;
};

/// Hex FNV-1a digest of a string; used to fingerprint command inputs.
std::string digest_hex(const std::string& data);

Json catalog_listing();
/// Graph, Λ set ("Λ(G9)"), witness ("h_G8") or bundle ("G8.battery").
Json catalog_export(const std::string& name);

/// Pairs of g (optionally of one type, optionally Hamiltonian only) or, when
/// cycle_length is set, its cycles (all lengths for 0).
Json enumerate(const Graph& g, std::optional<std::pair<int, int>> type, bool hamiltonian_only,
               std::optional<int> cycle_length);

Report run_verify_linked(const Graph& g, const LambdaSet& lam, const Diagram& witness);
/// Linkedness of the bundle's witness plus its minimality battery.
Report run_verify_minimal(const Graph& g, const CertificateBundle& bundle, int jobs);
Report run_splitting_count(const Graph& g);
Report run_monte_carlo(const Graph& g, const LambdaSet& lam, std::size_t trials, std::uint64_t seed, int jobs);

/// Builds Λ(K_{p+q}) (and Λ′(K10) for (5,5)), lifting shipped certificates
/// when n is within bounds. `output` receives the construction file.
Report run_construct(int p, int q, const Bounds& bounds, int jobs, Json* output);
/// Re-verifies a construction file from raw data.
Report run_verify_lift(const Json& constructions, const Bounds& bounds, int jobs);

}  // namespace linkset
