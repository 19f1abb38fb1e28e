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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "linkset/cycles.hpp"
#include "linkset/graph.hpp"
#include "linkset/minor.hpp"

namespace linkset {

/// K6, Q7, Q8, P7, P8, P9, P10, G8, G9, G10.
const std::vector<std::string>& catalog_graph_names();
/// The seven Petersen family members in catalog order.
const std::vector<std::string>& petersen_family_names();
/// Λ(G8), Λ(G9), Λ(G10), Γ⁽²⁾(P) for each Petersen member, Λ′(K10).
const std::vector<std::string>& catalog_lambda_names();

/// Throws not_found for unknown names.
Graph catalog_graph(const std::string& name);
/// Accepts the display names above and ASCII spellings such as "Lambda(G8)",
/// "Gamma2(P10)" or "Lambda'(K10)".
LambdaSet catalog_lambda(const std::string& name);
/// Maps an ASCII spelling to its display name; unknown names pass through.
std::string normalize_lambda_name(const std::string& name);
/// The Λ set a catalog graph is certified with (Γ⁽²⁾ for Petersen members).
std::string default_lambda_for(const std::string& graph_name);
/// Free-text provenance note (empty when there is nothing to flag).
std::string catalog_note(const std::string& graph_name);

/// One automorphism class of a minimality proof: every pair in the class is
/// carried onto `representative` by some element of the group generated by
/// `generators`, and that representative is the single nonsplit pair of the
/// base witness after crossing changes between `flip_edges` (if any).
struct WitnessClass {
  std::vector<std::string> generators;  // cycle notation; empty means the full automorphism group
  CyclePair representative;
  std::optional<std::pair<Edge, Edge>> flip_edges;
};

struct ProofRecipe {
  std::string graph;
  std::string lambda;
  std::vector<WitnessClass> classes;
  /// Index into `classes` for a pair of the Λ set.
  std::size_t class_of(const CyclePair& pair) const;
};

ProofRecipe proof_recipe(const std::string& graph_name);

struct IntegrityCheck {
  std::string graph;
  std::string description;
  bool passed = false;
};

/// Labeling reconstruction checks: Petersen members against the ΔY/YΔ
/// closure of K6, quoted cycles present, quoted generators automorphisms,
/// quoted uniqueness facts, gadget edge counts.
std::vector<IntegrityCheck> catalog_integrity();

struct CompleteConstruction {
  std::string gadget;  // catalog graph the set is pushed forward from
  Graph host;          // K_{p+q}
  LambdaSet lambda;
  MinorMap map;
  std::pair<int, int> type;
};

/// Minimally linked subset of Γ_{p,q}(K_{p+q}) built from G8, G9, G10, P7 or
/// Q8. Accepts (p, q) in either order; throws invalid_argument otherwise.
CompleteConstruction lambda_for_complete(int p, int q);
/// Λ′(K10): the six pairs of P10 pushed into K10.
CompleteConstruction lambda_prime_k10();

}  // namespace linkset
