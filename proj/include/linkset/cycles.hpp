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

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "linkset/graph.hpp"

namespace linkset {

/// A cycle as a cyclic vertex sequence. Always held in canonical form: the
/// rotation starting at the smallest label, read toward the smaller of its two
/// neighbours.
class Cycle {
 public:
  Cycle() = default;
  /// Canonicalizes `sequence`. Needs at least three distinct labels.
  explicit Cycle(std::vector<Vertex> sequence);

  const std::vector<Vertex>& vertices() const { return seq_; }
  std::size_t length() const { return seq_.size(); }
  bool contains(Vertex v) const;
  /// Edges in traversal order: (v0 v1), (v1 v2), ..., (v_{k-1} v0).
  std::vector<Edge> edges() const;
  bool has_edge(const Edge& e) const;
  /// +1 when the canonical traversal runs from e.u to e.v, -1 for the reverse,
  /// 0 when e is not on the cycle.
  int direction(const Edge& e) const;
  bool is_valid_in(const Graph& g) const;
  std::string to_string() const;  // "[1 3 5]"

  auto operator<=>(const Cycle&) const = default;

 private:
  std::vector<Vertex> seq_;
};

/// Canonical form of a cyclic sequence (exposed for property tests).
std::vector<Vertex> canonical_cycle(const std::vector<Vertex>& sequence);

/// An unordered pair of vertex-disjoint cycles. The longer cycle comes first;
/// for equal lengths the lexicographically smaller canonical sequence does.
class CyclePair {
 public:
  CyclePair() = default;
  /// Throws invalid_argument when the cycles share a vertex.
  CyclePair(Cycle a, Cycle b);

  const Cycle& first() const { return first_; }
  const Cycle& second() const { return second_; }
  std::pair<std::size_t, std::size_t> type() const { return {first_.length(), second_.length()}; }
  /// Union of the two vertex sets equals the vertex set of g.
  bool is_hamiltonian_in(const Graph& g) const;
  bool is_valid_in(const Graph& g) const;
  /// True when e and f lie in different components.
  bool separates(const Edge& e, const Edge& f) const;
  /// Which component carries e: 0, 1, or -1 when neither.
  int component_of(const Edge& e) const;
  std::string to_string() const;  // "[1 3 5]∪[2 4 6]"

  auto operator<=>(const CyclePair&) const = default;

 private:
  Cycle first_;
  Cycle second_;
};

/// Named set of cycle pairs over one host graph, sorted and deduplicated.
struct LambdaSet {
  std::string name;
  Graph host;
  std::vector<CyclePair> pairs;

  LambdaSet() = default;
  /// Throws invalid_argument if a pair is not valid in host. Duplicates are
  /// merged.
  LambdaSet(std::string name, Graph host, std::vector<CyclePair> pairs);

  std::size_t size() const { return pairs.size(); }
  bool contains(const CyclePair& p) const;
  /// Copy with one pair removed.
  LambdaSet without(const CyclePair& p) const;
};

/// Parses "[1 8 7 2 3]" into a cycle (canonicalized).
Cycle parse_cycle(const std::string& text);
/// Parses "[1 8 7 2 3]∪[4 5 6]" (also accepts "U" or "u" as the separator).
CyclePair parse_pair(const std::string& text);

/// Upper bound on host size for cycle-pair enumeration and permutation search.
inline constexpr std::size_t kEnumerationLimit = 12;

/// All cycles, or those of one length, in canonical form and sorted order.
std::vector<Cycle> enumerate_cycles(const Graph& g, std::optional<std::size_t> length = std::nullopt);

struct PairFilter {
  std::optional<std::pair<std::size_t, std::size_t>> type;  // normalized so first >= second
  bool hamiltonian_only = false;
};

/// All vertex-disjoint cycle pairs matching the filter, sorted. Throws
/// size_limit when g has more than kEnumerationLimit vertices.
std::vector<CyclePair> enumerate_pairs(const Graph& g, PairFilter filter = {});

/// Γ⁽²⁾(g) packaged as a LambdaSet.
LambdaSet all_pairs(const Graph& g, std::string name);

}  // namespace linkset
