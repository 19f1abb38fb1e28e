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
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "linkset/catalog.hpp"
#include "linkset/cycles.hpp"
#include "linkset/diagram.hpp"
#include "linkset/graph.hpp"
#include "linkset/minor.hpp"
#include "linkset/permutation.hpp"

namespace linkset {

using EdgePair = std::pair<Edge, Edge>;  // first < second

/// For every unordered pair of disjoint edges, the number of pairs of Λ that
/// carry the two edges on different components.
struct ParityTable {
  Graph host;
  std::string lambda;
  std::map<EdgePair, int> counts;

  bool all_even() const;
  std::vector<EdgePair> odd_pairs() const;
};

ParityTable parity_table(const Graph& g, const LambdaSet& lam);

struct PairVerdict {
  CyclePair pair;
  int lk = 0;
  SplitCertificate split;
};

/// Raw data of a linkedness proof; only meaningful after verify_linked.
struct LinkednessCertificate {
  LambdaSet lambda;
  Diagram witness;
};

struct LinkedReport {
  ParityTable parity;
  std::vector<PairVerdict> pairs;  // ordered as Λ
  int witness_sum = 0;             // Σ lk mod 2
  bool parity_even = false;
  /// Exactly one pair with |lk| = 1, every other pair split-certified.
  bool strict_profile = false;

  bool passed() const { return parity_even && witness_sum == 1; }
};

/// Recomputes the parity table and every linking number from raw data.
LinkedReport verify_linked(const Graph& g, const LambdaSet& lam, const Diagram& witness);

struct WitnessSpec {
  CyclePair target;
  VertexPermutation sigma;
  std::vector<CrossingKey> flips;
};

struct MinimalityBattery {
  LambdaSet lambda;
  Diagram base;
  std::vector<WitnessSpec> specs;
};

struct SpecResult {
  CyclePair target;
  CyclePair image;  // sigma(target)
  int lk = 0;
  /// Pairs λ' != target whose image was not split-certified.
  std::vector<std::pair<CyclePair, SplitCertificate>> unsplit;
  std::string problem;  // precondition failure for this spec, if any

  bool passed() const { return problem.empty() && lk % 2 != 0 && unsplit.empty(); }
};

struct MinimalReport {
  std::vector<SpecResult> specs;      // ordered as Λ
  std::vector<std::string> problems;  // battery-level precondition failures

  bool passed() const;
};

/// Checks every spec of the battery against `g` and `lam` from scratch.
/// `jobs` > 1 verifies specs in parallel; the report order is fixed.
MinimalReport verify_minimal(const Graph& g, const LambdaSet& lam, const MinimalityBattery& battery, int jobs = 1);

/// Battery following a proof recipe: for each pair, the first group element
/// (in generation order) carrying it onto its class representative, plus the
/// single crossing between the class's flip edges in `base`.
MinimalityBattery build_battery(const ProofRecipe& recipe, const LambdaSet& lam, const Diagram& base);

/// Host permutation induced by an automorphism of the minor: image vertices
/// follow sigma and subdivision vertices follow their paths; other host
/// vertices are fixed. Throws verification_failed when the result is not an
/// automorphism of m.host.
VertexPermutation lift_permutation(const MinorMap& m, const VertexPermutation& sigma);

struct LiftResult {
  LinkednessCertificate certificate;
  MinimalityBattery battery;
  LinkedReport linked;
  MinimalReport minimal;

  bool passed() const { return linked.passed() && minimal.passed(); }
};

/// Pushes certificate and battery through m (diagrams via extend_diagram)
/// and re-verifies both on the host.
LiftResult lift_battery(const MinorMap& m, const LinkednessCertificate& cert, const MinimalityBattery& battery,
                        std::string lambda_name, int jobs = 1);

struct SplittingRow {
  Vertex vertex = 0;
  std::vector<Vertex> side_a;
  std::vector<Vertex> side_b;
  std::size_t count = 0;
};

struct SplittingReport {
  std::size_t base_count = 0;
  std::vector<SplittingRow> rows;  // non-trivial splittings at vertices of degree >= 4

  bool passed() const;
};

SplittingReport splitting_count_check(const Graph& p);

/// Seed of trial i, derived from the master seed by a fixed 64-bit mixer.
std::uint64_t trial_seed(std::uint64_t master, std::uint64_t i);

struct MonteCarloReport {
  std::uint64_t master_seed = 0;
  bool parity_even = false;
  std::vector<int> sigma;            // per trial
  std::map<int, std::size_t> histogram;

  bool constant_one() const { return histogram.size() == 1 && histogram.count(1); }
};

/// ς = Σ lk mod 2 over Λ on `trials` random linear embeddings.
MonteCarloReport monte_carlo_sigma(const Graph& g, const LambdaSet& lam, std::size_t trials, std::uint64_t master_seed,
                                   int jobs = 1);

}  // namespace linkset
