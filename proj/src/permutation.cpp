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
#include "linkset/permutation.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "linkset/error.hpp"

namespace linkset {

VertexPermutation::VertexPermutation(std::map<Vertex, Vertex> mapping) : map_(std::move(mapping)) {
  std::set<Vertex> image;
  for (const auto& [from, to] : map_) image.insert(to);
  if (image.size() != map_.size()) fail(ErrorCode::invalid_argument, "vertex map is not injective");
}

VertexPermutation VertexPermutation::identity(const std::vector<Vertex>& domain) {
  std::map<Vertex, Vertex> m;
  for (Vertex v : domain) m[v] = v;
  return VertexPermutation(std::move(m));
}

VertexPermutation VertexPermutation::from_cycles(const std::string& notation, const std::vector<Vertex>& domain) {
  std::map<Vertex, Vertex> m;
  for (Vertex v : domain) m[v] = v;
  std::set<Vertex> seen;
  std::size_t pos = 0;
  while ((pos = notation.find('(', pos)) != std::string::npos) {
    const auto close = notation.find(')', pos);
    if (close == std::string::npos) fail(ErrorCode::parse_error, "unbalanced parenthesis in '" + notation + "'");
    std::istringstream is(notation.substr(pos + 1, close - pos - 1));
    std::vector<Vertex> cyc;
    Vertex v = 0;
    while (is >> v) cyc.push_back(v);
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      if (!m.count(cyc[i])) fail(ErrorCode::invalid_argument, "label " + std::to_string(cyc[i]) + " is outside the domain");
      if (!seen.insert(cyc[i]).second) fail(ErrorCode::parse_error, "label repeated in '" + notation + "'");
      m[cyc[i]] = cyc[(i + 1) % cyc.size()];
    }
    pos = close + 1;
  }
  return VertexPermutation(std::move(m));
}

Vertex VertexPermutation::operator()(Vertex v) const {
  auto it = map_.find(v);
  if (it == map_.end()) fail(ErrorCode::invalid_argument, "label " + std::to_string(v) + " is outside the permutation domain");
  return it->second;
}

bool VertexPermutation::is_identity() const {
  return std::all_of(map_.begin(), map_.end(), [](const auto& kv) { return kv.first == kv.second; });
}

VertexPermutation VertexPermutation::inverse() const {
  std::map<Vertex, Vertex> m;
  for (const auto& [a, b] : map_) m[b] = a;
  return VertexPermutation(std::move(m));
}

VertexPermutation VertexPermutation::compose(const VertexPermutation& other) const {
  std::map<Vertex, Vertex> m;
  for (const auto& [a, b] : other.map_) m[a] = (*this)(b);
  return VertexPermutation(std::move(m));
}

bool VertexPermutation::is_automorphism_of(const Graph& g) const {
  if (map_.size() != g.vertex_count()) return false;
  for (Vertex v : g.vertices())
    if (!defined_on(v) || !g.has_vertex(map_.at(v))) return false;
  return std::all_of(g.edges().begin(), g.edges().end(),
                     [&](const Edge& e) { return g.has_edge((*this)(e.u), (*this)(e.v)); });
}

std::string VertexPermutation::to_cycle_notation() const {
  std::set<Vertex> done;
  std::string out;
  for (const auto& [start, img] : map_) {
    if (done.count(start) || img == start) continue;
    out += '(';
    Vertex v = start;
    bool first = true;
    do {
      out += (first ? "" : " ") + std::to_string(v);
      first = false;
      done.insert(v);
      auto it = map_.find(v);
      if (it == map_.end()) break;  // relabeling map, not a permutation
      v = it->second;
    } while (v != start);
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Edge apply_permutation(const VertexPermutation& perm, const Edge& e) { return Edge(perm(e.u), perm(e.v)); }

Cycle apply_permutation(const VertexPermutation& perm, const Cycle& c) {
  std::vector<Vertex> seq;
  for (Vertex v : c.vertices()) seq.push_back(perm(v));
  return Cycle(std::move(seq));
}

CyclePair apply_permutation(const VertexPermutation& perm, const CyclePair& pair) {
  return CyclePair(apply_permutation(perm, pair.first()), apply_permutation(perm, pair.second()));
}

Graph apply_permutation(const VertexPermutation& perm, const Graph& g) {
  std::vector<Vertex> vs;
  std::vector<Edge> es;
  for (Vertex v : g.vertices()) vs.push_back(perm(v));
  for (const Edge& e : g.edges()) es.push_back(apply_permutation(perm, e));
  return Graph(std::move(vs), std::move(es));
}

namespace {

// Backtracking search for bijections g -> h preserving adjacency. Candidates
// are restricted by degree and by the adjacency pattern to already-mapped
// vertices. `visit` returns false to stop the search.
template <class Visit>
void search_isomorphisms(const Graph& g, const Graph& h, Visit&& visit) {
  if (g.vertex_count() > kEnumerationLimit || h.vertex_count() > kEnumerationLimit)
    fail(ErrorCode::size_limit, "isomorphism search is bounded at " + std::to_string(kEnumerationLimit) + " vertices");
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return;
  const auto& gv = g.vertices();
  const auto& hv = h.vertices();
  {
    std::vector<std::size_t> dg, dh;
    for (Vertex v : gv) dg.push_back(g.degree(v));
    for (Vertex v : hv) dh.push_back(h.degree(v));
    std::sort(dg.begin(), dg.end());
    std::sort(dh.begin(), dh.end());
    if (dg != dh) return;
  }
  // Map high-degree, well-connected vertices first.
  std::vector<Vertex> order(gv.begin(), gv.end());
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  std::map<Vertex, Vertex> fwd;
  std::set<Vertex> used;
  bool stop = false;
  auto rec = [&](auto& self, std::size_t k) -> void {
    if (stop) return;
    if (k == order.size()) {
      if (!visit(fwd)) stop = true;
      return;
    }
    const Vertex a = order[k];
    for (Vertex b : hv) {
      if (used.count(b) || g.degree(a) != h.degree(b)) continue;
      bool ok = true;
      for (std::size_t j = 0; j < k && ok; ++j) {
        const Vertex pa = order[j];
        ok = g.has_edge(a, pa) == h.has_edge(b, fwd[pa]);
      }
      if (!ok) continue;
      fwd[a] = b;
      used.insert(b);
      self(self, k + 1);
      used.erase(b);
      fwd.erase(a);
      if (stop) return;
    }
  };
  rec(rec, 0);
}

}  // namespace

std::vector<VertexPermutation> automorphism_group(const Graph& g) {
  std::vector<VertexPermutation> out;
  search_isomorphisms(g, g, [&](const std::map<Vertex, Vertex>& m) {
    out.emplace_back(m);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<VertexPermutation> is_isomorphic(const Graph& g, const Graph& h) {
  std::optional<VertexPermutation> found;
  search_isomorphisms(g, h, [&](const std::map<Vertex, Vertex>& m) {
    found = VertexPermutation(m);
    return false;
  });
  return found;
}

std::vector<VertexPermutation> generate_group(const std::vector<VertexPermutation>& generators,
                                              const std::vector<Vertex>& domain) {
  const VertexPermutation id = VertexPermutation::identity(domain);
  // Breadth-first order keeps short words first, which makes battery
  // generation pick the simplest element.
  std::vector<VertexPermutation> out{id};
  std::set<VertexPermutation> emitted{id};
  std::deque<VertexPermutation> queue{id};
  while (!queue.empty()) {
    const VertexPermutation cur = queue.front();
    queue.pop_front();
    for (const VertexPermutation& gen : generators) {
      VertexPermutation next = gen.compose(cur);
      if (emitted.insert(next).second) {
        out.push_back(next);
        queue.push_back(std::move(next));
      }
    }
  }
  return out;
}

std::optional<VertexPermutation> find_mapping(const std::vector<VertexPermutation>& group, const CyclePair& from,
                                              const CyclePair& to) {
  for (const VertexPermutation& g : group)
    if (apply_permutation(g, from) == to) return g;
  return std::nullopt;
}

}  // namespace linkset
