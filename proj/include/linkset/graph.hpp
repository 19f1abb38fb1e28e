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
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace linkset {

/// Vertex labels are positive integers.
using Vertex = int;

/// Unordered edge stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool touches(Vertex x) const { return u == x || v == x; }
  bool shares_vertex(const Edge& o) const { return touches(o.u) || touches(o.v); }
  Vertex other(Vertex x) const { return x == u ? v : u; }
  std::string id() const { return std::to_string(u) + "-" + std::to_string(v); }

  auto operator<=>(const Edge&) const = default;
};

/// Finite simple graph with positive integer vertex labels. Immutable after
/// construction; vertices and edges are kept sorted.
class Graph {
 public:
  Graph() = default;
  /// Throws invalid_argument on loops, repeated edges, non-positive labels or
  /// edges touching an unlisted vertex.
  Graph(std::vector<Vertex> vertices, std::vector<Edge> edges);

  /// Vertex set is the union of edge endpoints.
  static Graph from_edges(const std::vector<Edge>& edges);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_vertex(Vertex v) const;
  bool has_edge(Vertex a, Vertex b) const;
  bool has_edge(const Edge& e) const { return has_edge(e.u, e.v); }
  const std::vector<Vertex>& neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }
  Vertex max_label() const { return vertices_.empty() ? 0 : vertices_.back(); }
  /// Position of v in vertices(); throws not_found.
  std::size_t index_of(Vertex v) const;

  bool operator==(const Graph& o) const { return vertices_ == o.vertices_ && edges_ == o.edges_; }

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::map<Vertex, std::vector<Vertex>> adjacency_;
};

Graph complete_graph(int n);

/// Graph with `removed` edges deleted and `added` edges inserted.
Graph edit_edges(const Graph& g, const std::vector<Edge>& removed, const std::vector<Edge>& added);

}  // namespace linkset
