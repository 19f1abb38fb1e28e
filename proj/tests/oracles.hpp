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
// Brute-force reference computations used to cross-check the library. They
// share no code with the implementations they check.
#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "linkset/embedding.hpp"
#include "linkset/graph.hpp"

namespace oracle {

using linkset::Graph;
using linkset::Vertex;

inline bool adjacent(const Graph& g, Vertex a, Vertex b) {
  for (const auto& e : g.edges())
    if ((e.u == a && e.v == b) || (e.u == b && e.v == a)) return true;
  return false;
}

/// Cycles as sorted edge sets: every vertex subset, every ordering.
inline std::set<std::set<std::pair<Vertex, Vertex>>> cycles(const Graph& g, std::size_t only_length = 0) {
  std::set<std::set<std::pair<Vertex, Vertex>>> out;
  const auto& vs = g.vertices();
  const std::size_t n = vs.size();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<Vertex> sub;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1u) sub.push_back(vs[i]);
    if (sub.size() < 3 || (only_length && sub.size() != only_length)) continue;
    std::sort(sub.begin(), sub.end());
    do {
      if (sub[0] != *std::min_element(sub.begin(), sub.end())) break;
      bool ok = true;
      std::set<std::pair<Vertex, Vertex>> es;
      for (std::size_t i = 0; i < sub.size() && ok; ++i) {
        const Vertex a = sub[i];
        const Vertex b = sub[(i + 1) % sub.size()];
        ok = adjacent(g, a, b);
        es.insert({std::min(a, b), std::max(a, b)});
      }
      if (ok) out.insert(es);
    } while (std::next_permutation(sub.begin() + 1, sub.end()));
  }
  return out;
}

inline std::set<Vertex> vertices_of(const std::set<std::pair<Vertex, Vertex>>& c) {
  std::set<Vertex> out;
  for (const auto& [a, b] : c) {
    out.insert(a);
    out.insert(b);
  }
  return out;
}

/// Number of unordered vertex-disjoint cycle pairs.
inline std::size_t pair_count(const Graph& g) {
  const auto cs = cycles(g);
  std::vector<std::set<Vertex>> vsets;
  for (const auto& c : cs) vsets.push_back(vertices_of(c));
  std::size_t count = 0;
  for (std::size_t i = 0; i < vsets.size(); ++i)
    for (std::size_t j = i + 1; j < vsets.size(); ++j) {
      bool disjoint = true;
      for (Vertex v : vsets[i]) disjoint = disjoint && !vsets[j].count(v);
      count += disjoint;
    }
  return count;
}

/// Automorphism count by trying every permutation (small graphs only).
inline std::size_t automorphism_count(const Graph& g) {
  std::vector<Vertex> perm = g.vertices();
  std::size_t count = 0;
  do {
    std::map<Vertex, Vertex> m;
    for (std::size_t i = 0; i < perm.size(); ++i) m[g.vertices()[i]] = perm[i];
    bool ok = true;
    for (const auto& e : g.edges()) ok = ok && adjacent(g, m[e.u], m[e.v]);
    count += ok;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

using P3 = std::array<__int128, 3>;

inline P3 sub(const P3& a, const P3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

inline __int128 det3(const P3& a, const P3& b, const P3& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) + a[2] * (b[0] * c[1] - b[1] * c[0]);
}

inline int sgn(__int128 x) { return (x > 0) - (x < 0); }

/// Linking number of two closed polygons in space, computed as the signed
/// intersection number of polygon `b` with the cone over polygon `a` from
/// a.front(). Returns nullopt-like flag `ok = false` on a degenerate
/// configuration (segment meeting a triangle boundary).
inline int cone_linking_number(const std::vector<P3>& a, const std::vector<P3>& b, bool& ok) {
  ok = true;
  int total = 0;
  const P3& apex = a.front();
  for (std::size_t i = 1; i + 1 < a.size(); ++i) {
    const P3& t1 = a[i];
    const P3& t2 = a[i + 1];
    for (std::size_t j = 0; j < b.size(); ++j) {
      const P3& p = b[j];
      const P3& q = b[(j + 1) % b.size()];
      const int sp = sgn(det3(sub(t1, apex), sub(t2, apex), sub(p, apex)));
      const int sq = sgn(det3(sub(t1, apex), sub(t2, apex), sub(q, apex)));
      if (sp == 0 || sq == 0) {
        ok = false;
        return 0;
      }
      if (sp == sq) continue;
      const int e1 = sgn(det3(sub(apex, p), sub(t1, p), sub(q, p)));
      const int e2 = sgn(det3(sub(t1, p), sub(t2, p), sub(q, p)));
      const int e3 = sgn(det3(sub(t2, p), sub(apex, p), sub(q, p)));
      if (e1 == 0 || e2 == 0 || e3 == 0) {
        ok = false;
        return 0;
      }
      if (e1 == e2 && e2 == e3) total += sq > sp ? 1 : -1;
    }
  }
  return total;
}

/// Vertex coordinates of a cycle, in the given traversal order.
inline std::vector<P3> polygon(const linkset::LinearEmbedding& e, const std::vector<Vertex>& cycle) {
  std::vector<P3> out;
  for (Vertex v : cycle) {
    const auto& p = e.coords.at(v);
    out.push_back({p.x, p.y, p.z});
  }
  return out;
}

}  // namespace oracle
