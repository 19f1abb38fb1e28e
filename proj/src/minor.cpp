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
#include "linkset/minor.hpp"

#include <algorithm>
#include <set>

#include "linkset/error.hpp"

namespace linkset {

Graph MinorMap::subgraph() const {
  std::set<Vertex> vs;
  for (const auto& [v, img] : vertex_image) vs.insert(img);
  for (const Edge& e : subgraph_edges) {
    vs.insert(e.u);
    vs.insert(e.v);
  }
  return Graph({vs.begin(), vs.end()}, subgraph_edges);
}

Vertex MinorMap::image(Vertex v) const {
  auto it = vertex_image.find(v);
  if (it == vertex_image.end()) fail(ErrorCode::not_found, "vertex " + std::to_string(v) + " has no image");
  return it->second;
}

const std::vector<Vertex>& MinorMap::path(const Edge& minor_edge) const {
  auto it = expansion.find(minor_edge);
  if (it == expansion.end()) fail(ErrorCode::not_found, "edge " + minor_edge.id() + " is not in the minor");
  return it->second;
}

bool MinorMap::is_identity() const {
  if (!(minor == host)) return false;
  for (const auto& [v, img] : vertex_image)
    if (v != img) return false;
  for (const auto& [e, p] : expansion)
    if (p.size() != 2) return false;
  return true;
}

void MinorMap::validate() const {
  auto bad = [](const std::string& why) { fail(ErrorCode::invalid_argument, "minor map: " + why); };
  std::set<Vertex> images;
  for (Vertex v : minor.vertices()) {
    auto it = vertex_image.find(v);
    if (it == vertex_image.end()) bad("vertex " + std::to_string(v) + " has no image");
    if (!host.has_vertex(it->second)) bad("image of " + std::to_string(v) + " is not a host vertex");
    if (!images.insert(it->second).second) bad("vertex images are not injective");
  }
  if (vertex_image.size() != minor.vertex_count()) bad("vertex images for labels outside the minor");
  std::set<Edge> sub(subgraph_edges.begin(), subgraph_edges.end());
  std::set<Edge> covered;
  std::set<Vertex> interior;
  if (expansion.size() != minor.edge_count()) bad("expansion does not cover exactly the minor edges");
  for (const Edge& e : minor.edges()) {
    auto it = expansion.find(e);
    if (it == expansion.end()) bad("edge " + e.id() + " has no expansion");
    const auto& p = it->second;
    if (p.size() < 2 || p.front() != image(e.u) || p.back() != image(e.v))
      bad("path for " + e.id() + " does not join the images of its endpoints");
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      const Edge he(p[i], p[i + 1]);
      if (!host.has_edge(he)) bad("path edge " + he.id() + " is not a host edge");
      if (!sub.count(he)) bad("path edge " + he.id() + " is not in the subgraph");
      if (!covered.insert(he).second) bad("paths share edge " + he.id());
    }
    for (std::size_t i = 1; i + 1 < p.size(); ++i) {
      if (images.count(p[i])) bad("path for " + e.id() + " runs through a branch vertex");
      if (!interior.insert(p[i]).second) bad("paths are not internally disjoint");
    }
  }
  if (covered != sub) bad("subgraph has edges outside every expansion path");
}

MinorMap identity_minor_map(const Graph& g) {
  MinorMap m;
  m.minor = g;
  m.host = g;
  m.subgraph_edges = g.edges();
  for (Vertex v : g.vertices()) m.vertex_image[v] = v;
  for (const Edge& e : g.edges()) m.expansion[e] = {e.u, e.v};
  return m;
}

std::pair<Graph, MinorMap> subdivide_edge(const Graph& g, const Edge& e, int k, Vertex label_start) {
  if (!g.has_edge(e)) fail(ErrorCode::not_found, "edge " + e.id() + " is not in the graph");
  if (k < 1) fail(ErrorCode::invalid_argument, "subdivision needs k >= 1");
  if (label_start <= 0) fail(ErrorCode::invalid_argument, "labels must be positive");
  std::vector<Vertex> path{e.u};
  for (int i = 0; i < k; ++i) {
    const Vertex x = label_start + i;
    if (g.has_vertex(x)) fail(ErrorCode::invalid_argument, "label " + std::to_string(x) + " is already used");
    path.push_back(x);
  }
  path.push_back(e.v);
  std::vector<Edge> added;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) added.emplace_back(path[i], path[i + 1]);
  Graph out = edit_edges(g, {e}, added);

  MinorMap m = identity_minor_map(g);
  m.host = out;
  m.subgraph_edges = out.edges();
  m.expansion[e] = path;
  return {out, m};
}

MinorMap compose(const MinorMap& inner, const MinorMap& outer) {
  if (!(inner.host == outer.minor)) fail(ErrorCode::invalid_argument, "minor maps do not chain");
  MinorMap m;
  m.minor = inner.minor;
  m.host = outer.host;
  std::set<Edge> sub;
  for (const auto& [v, img] : inner.vertex_image) m.vertex_image[v] = outer.image(img);
  for (const auto& [e, p] : inner.expansion) {
    std::vector<Vertex> full{outer.image(p.front())};
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      const Edge mid(p[i], p[i + 1]);
      std::vector<Vertex> piece = outer.path(mid);
      if (piece.front() != outer.image(p[i])) std::reverse(piece.begin(), piece.end());
      full.insert(full.end(), piece.begin() + 1, piece.end());
    }
    for (std::size_t i = 0; i + 1 < full.size(); ++i) sub.emplace(full[i], full[i + 1]);
    m.expansion[e] = std::move(full);
  }
  m.subgraph_edges.assign(sub.begin(), sub.end());
  m.validate();
  return m;
}

MinorMap into_complete_graph(const MinorMap& m, int n) {
  for (Vertex v : m.host.vertices())
    if (v > n) fail(ErrorCode::invalid_argument, "host label " + std::to_string(v) + " exceeds n = " + std::to_string(n));
  MinorMap out = m;
  out.host = complete_graph(n);
  out.validate();
  return out;
}

Graph contract_edge(const Graph& g, const Edge& e) {
  if (!g.has_edge(e)) fail(ErrorCode::not_found, "edge " + e.id() + " is not in the graph");
  const Vertex keep = e.u;
  const Vertex gone = e.v;
  std::set<Edge> es;
  for (const Edge& f : g.edges()) {
    const Vertex a = f.u == gone ? keep : f.u;
    const Vertex b = f.v == gone ? keep : f.v;
    if (a != b) es.emplace(a, b);
  }
  std::vector<Vertex> vs;
  for (Vertex v : g.vertices())
    if (v != gone) vs.push_back(v);
  return Graph(std::move(vs), {es.begin(), es.end()});
}

namespace {

Cycle expand_cycle(const MinorMap& m, const Cycle& c) {
  const auto& seq = c.vertices();
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const Vertex a = seq[i];
    const Vertex b = seq[(i + 1) % seq.size()];
    std::vector<Vertex> p = m.path(Edge(a, b));
    if (p.front() != m.image(a)) std::reverse(p.begin(), p.end());
    out.insert(out.end(), p.begin(), p.end() - 1);
  }
  return Cycle(std::move(out));
}

}  // namespace

CyclePair psi_pair_map(const MinorMap& m, const CyclePair& pair) {
  if (!pair.is_valid_in(m.minor)) fail(ErrorCode::invalid_argument, "pair " + pair.to_string() + " is not in the minor");
  return CyclePair(expand_cycle(m, pair.first()), expand_cycle(m, pair.second()));
}

LambdaSet psi_lambda(const MinorMap& m, const LambdaSet& lambda, std::string name) {
  if (!(lambda.host == m.minor)) fail(ErrorCode::invalid_argument, "lambda set is not hosted on the minor");
  std::vector<CyclePair> out;
  for (const CyclePair& p : lambda.pairs) out.push_back(psi_pair_map(m, p));
  LambdaSet result(std::move(name), m.host, std::move(out));
  if (result.size() != lambda.size()) fail(ErrorCode::invalid_argument, "pair map is not injective on " + lambda.name);
  return result;
}

}  // namespace linkset
