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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "linkset/cycles.hpp"
#include "linkset/graph.hpp"

namespace linkset {

/// Injective relabeling of a finite set of vertex labels; a permutation when
/// the image equals the domain. Labels outside the domain are rejected on
/// application rather than fixed silently.
class VertexPermutation {
 public:
  VertexPermutation() = default;
  /// Throws invalid_argument unless `mapping` is injective.
  explicit VertexPermutation(std::map<Vertex, Vertex> mapping);

  static VertexPermutation identity(const std::vector<Vertex>& domain);
  /// Cycle notation such as "(1 2 3)(4 5 6)" over `domain`; unmentioned labels
  /// are fixed. "()" is the identity.
  static VertexPermutation from_cycles(const std::string& notation, const std::vector<Vertex>& domain);

  const std::map<Vertex, Vertex>& mapping() const { return map_; }
  Vertex operator()(Vertex v) const;
  bool defined_on(Vertex v) const { return map_.count(v) != 0; }
  bool is_identity() const;
  VertexPermutation inverse() const;
  /// (this ∘ other)(v) = this(other(v)).
  VertexPermutation compose(const VertexPermutation& other) const;
  bool is_automorphism_of(const Graph& g) const;
  std::string to_cycle_notation() const;

  bool operator==(const VertexPermutation& o) const { return map_ == o.map_; }
  bool operator<(const VertexPermutation& o) const { return map_ < o.map_; }

 private:
  std::map<Vertex, Vertex> map_;
};

Edge apply_permutation(const VertexPermutation& perm, const Edge& e);
Cycle apply_permutation(const VertexPermutation& perm, const Cycle& c);
CyclePair apply_permutation(const VertexPermutation& perm, const CyclePair& pair);
Graph apply_permutation(const VertexPermutation& perm, const Graph& g);

/// Full automorphism group by backtracking with degree and adjacency pruning.
/// Throws size_limit above kEnumerationLimit vertices.
std::vector<VertexPermutation> automorphism_group(const Graph& g);

/// A witness isomorphism g -> h, if one exists.
std::optional<VertexPermutation> is_isomorphic(const Graph& g, const Graph& h);

/// Closure of the generators under composition (includes the identity).
std::vector<VertexPermutation> generate_group(const std::vector<VertexPermutation>& generators,
                                              const std::vector<Vertex>& domain);

/// First element of `group` (in its given order) sending `from` to `to`.
std::optional<VertexPermutation> find_mapping(const std::vector<VertexPermutation>& group, const CyclePair& from,
                                              const CyclePair& to);

}  // namespace linkset
