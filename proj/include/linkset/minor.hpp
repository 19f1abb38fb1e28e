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
#include <utility>
#include <vector>

#include "linkset/cycles.hpp"
#include "linkset/graph.hpp"

namespace linkset {

/// H as a minor of G through a subgraph G' of G: every edge of H expands to a
/// path of G' (a single edge when not subdivided). Only subdivision-type
/// minors are representable.
struct MinorMap {
  Graph minor;
  Graph host;
  std::vector<Edge> subgraph_edges;
  /// Host path from image(e.u) to image(e.v), endpoints included.
  std::map<Edge, std::vector<Vertex>> expansion;
  std::map<Vertex, Vertex> vertex_image;

  /// G' as a graph (mapped vertices plus path vertices).
  Graph subgraph() const;
  /// Throws invalid_argument when an invariant fails: paths internally
  /// disjoint, path edges in the host, union of paths equal to G'.
  void validate() const;
  Vertex image(Vertex v) const;
  const std::vector<Vertex>& path(const Edge& minor_edge) const;
  bool is_identity() const;
};

MinorMap identity_minor_map(const Graph& g);

/// Replaces e by a path through k new vertices labelled label_start,
/// label_start+1, ... in order from e.u toward e.v. k = 0 is rejected.
std::pair<Graph, MinorMap> subdivide_edge(const Graph& g, const Edge& e, int k, Vertex label_start);

/// `inner` maps H into G1 and `outer` maps G1 into G2; the result maps H into G2.
MinorMap compose(const MinorMap& inner, const MinorMap& outer);

/// Re-hosts m into the complete graph on 1..n (G' unchanged). Host labels of m
/// must lie in 1..n.
MinorMap into_complete_graph(const MinorMap& m, int n);

/// Merges the endpoints of e into the smaller label, dropping the loop and
/// merging parallel edges.
Graph contract_edge(const Graph& g, const Edge& e);

/// Ψ⁽²⁾: replaces every edge of both cycles by its expansion path.
CyclePair psi_pair_map(const MinorMap& m, const CyclePair& pair);
LambdaSet psi_lambda(const MinorMap& m, const LambdaSet& lambda, std::string name);

}  // namespace linkset
