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
#include "linkset/graph.hpp"

#include <algorithm>

#include "linkset/error.hpp"

namespace linkset {

Graph::Graph(std::vector<Vertex> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
    fail(ErrorCode::invalid_argument, "repeated vertex label");
  if (!vertices_.empty() && vertices_.front() <= 0)
    fail(ErrorCode::invalid_argument, "vertex labels must be positive");
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    fail(ErrorCode::invalid_argument, "repeated edge " + std::adjacent_find(edges_.begin(), edges_.end())->id());
  for (Vertex v : vertices_) adjacency_[v];
  for (const Edge& e : edges_) {
    if (e.u == e.v) fail(ErrorCode::invalid_argument, "loop at vertex " + std::to_string(e.u));
    if (!std::binary_search(vertices_.begin(), vertices_.end(), e.u) ||
        !std::binary_search(vertices_.begin(), vertices_.end(), e.v))
      fail(ErrorCode::invalid_argument, "edge " + e.id() + " touches an unlisted vertex");
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& [v, nbrs] : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

Graph Graph::from_edges(const std::vector<Edge>& edges) {
  std::set<Vertex> vs;
  for (const Edge& e : edges) {
    vs.insert(e.u);
    vs.insert(e.v);
  }
  return Graph({vs.begin(), vs.end()}, edges);
}

bool Graph::has_vertex(Vertex v) const { return std::binary_search(vertices_.begin(), vertices_.end(), v); }

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a == b) return false;
  return std::binary_search(edges_.begin(), edges_.end(), Edge(a, b));
}

const std::vector<Vertex>& Graph::neighbors(Vertex v) const {
  auto it = adjacency_.find(v);
  if (it == adjacency_.end()) fail(ErrorCode::not_found, "vertex " + std::to_string(v) + " is not in the graph");
  return it->second;
}

std::size_t Graph::index_of(Vertex v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) fail(ErrorCode::not_found, "vertex " + std::to_string(v) + " is not in the graph");
  return static_cast<std::size_t>(it - vertices_.begin());
}

Graph complete_graph(int n) {
  if (n < 1) fail(ErrorCode::invalid_argument, "complete_graph needs n >= 1");
  std::vector<Vertex> vs;
  std::vector<Edge> es;
  for (int i = 1; i <= n; ++i) {
    vs.push_back(i);
    for (int j = i + 1; j <= n; ++j) es.emplace_back(i, j);
  }
  return Graph(std::move(vs), std::move(es));
}

Graph edit_edges(const Graph& g, const std::vector<Edge>& removed, const std::vector<Edge>& added) {
  std::set<Edge> es(g.edges().begin(), g.edges().end());
  for (const Edge& e : removed) {
    if (!es.erase(e)) fail(ErrorCode::not_found, "edge " + e.id() + " is not in the graph");
  }
  std::set<Vertex> vs(g.vertices().begin(), g.vertices().end());
  for (const Edge& e : added) {
    es.insert(e);
    vs.insert(e.u);
    vs.insert(e.v);
  }
  return Graph({vs.begin(), vs.end()}, {es.begin(), es.end()});
}

}  // namespace linkset
