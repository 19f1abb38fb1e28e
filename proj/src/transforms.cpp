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
#include "linkset/transforms.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "linkset/error.hpp"

namespace linkset {

Graph delta_y(const Graph& g, std::array<Vertex, 3> t, Vertex new_label) {
  const std::vector<Edge> sides{Edge(t[0], t[1]), Edge(t[1], t[2]), Edge(t[0], t[2])};
  for (const Edge& e : sides)
    if (!g.has_edge(e)) fail(ErrorCode::invalid_argument, "triangle edge " + e.id() + " is missing");
  if (new_label <= 0 || g.has_vertex(new_label))
    fail(ErrorCode::invalid_argument, "label " + std::to_string(new_label) + " is not fresh");
  return edit_edges(g, sides, {Edge(new_label, t[0]), Edge(new_label, t[1]), Edge(new_label, t[2])});
}

Graph y_delta(const Graph& g, Vertex v) {
  const auto nbrs = g.neighbors(v);
  if (nbrs.size() != 3) fail(ErrorCode::invalid_argument, "vertex " + std::to_string(v) + " does not have degree 3");
  std::set<Edge> es;
  for (const Edge& e : g.edges())
    if (!e.touches(v)) es.insert(e);
  es.emplace(nbrs[0], nbrs[1]);
  es.emplace(nbrs[1], nbrs[2]);
  es.emplace(nbrs[0], nbrs[2]);
  std::vector<Vertex> vs;
  for (Vertex x : g.vertices())
    if (x != v) vs.push_back(x);
  return Graph(std::move(vs), {es.begin(), es.end()});
}

std::vector<VertexSplitting> vertex_splittings(const Graph& g, Vertex v) {
  const auto& nbrs = g.neighbors(v);
  const std::size_t d = nbrs.size();
  std::vector<VertexSplitting> out;
  if (d == 0) return out;
  const Vertex fresh = g.max_label() + 1;
  // Bit i of `mask` puts nbrs[i + 1] on side B; nbrs[0] always stays in A.
  for (std::size_t mask = 0; mask < (std::size_t{1} << (d - 1)); ++mask) {
    VertexSplitting s;
    s.kept = v;
    s.new_vertex = fresh;
    s.side_a.push_back(nbrs[0]);
    for (std::size_t i = 1; i < d; ++i) ((mask >> (i - 1)) & 1U ? s.side_b : s.side_a).push_back(nbrs[i]);
    s.leaf = s.side_b.empty();
    s.trivial = std::min(s.side_a.size(), s.side_b.size()) <= 1;
    std::vector<Edge> removed, added{Edge(v, fresh)};
    for (Vertex b : s.side_b) {
      removed.emplace_back(v, b);
      added.emplace_back(fresh, b);
    }
    s.graph = edit_edges(g, removed, added);
    out.push_back(std::move(s));
  }
  return out;
}

ConnectivityReport connectivity_report(const Graph& g) {
  ConnectivityReport r;
  std::map<Vertex, int> disc, low;
  int timer = 0;
  std::function<void(Vertex, Vertex)> dfs = [&](Vertex u, Vertex parent) {
    disc[u] = low[u] = ++timer;
    for (Vertex w : g.neighbors(u)) {
      if (w == parent) continue;  // simple graph: one edge back to the parent
      if (disc.count(w)) {
        low[u] = std::min(low[u], disc[w]);
      } else {
        dfs(w, u);
        low[u] = std::min(low[u], low[w]);
        if (low[w] > disc[u]) r.cut_edges.emplace_back(u, w);
      }
    }
  };
  for (Vertex v : g.vertices()) {
    if (disc.count(v)) continue;
    ++r.components;
    dfs(v, 0);
  }
  std::sort(r.cut_edges.begin(), r.cut_edges.end());
  return r;
}

}  // namespace linkset
