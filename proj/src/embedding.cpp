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
#include "linkset/embedding.hpp"

#include "linkset/error.hpp"
#include "prng.hpp"

namespace linkset {

namespace {

using i128 = __int128;

struct V3 {
  i128 x, y, z;
};

V3 sub(const Point3& a, const Point3& b) { return {i128(a.x) - b.x, i128(a.y) - b.y, i128(a.z) - b.z}; }

V3 cross3(const V3& a, const V3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

bool collinear(const Point3& a, const Point3& b, const Point3& c) {
  const V3 n = cross3(sub(b, a), sub(c, a));
  return n.x == 0 && n.y == 0 && n.z == 0;
}

// Coordinates are bounded by 2*10^6 after subtraction, so the triple product
// stays far below the __int128 range.
bool coplanar(const Point3& a, const Point3& b, const Point3& c, const Point3& d) {
  const V3 n = cross3(sub(b, a), sub(c, a));
  const V3 w = sub(d, a);
  return n.x * w.x + n.y * w.y + n.z * w.z == 0;
}

struct Q3 {
  Rational x, y, z;
};

Q3 cross_q(const Q3& a, const Q3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

Rational dot_q(const Q3& a, const Q3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

}  // namespace

std::optional<std::string> general_position_violation(const LinearEmbedding& e) {
  std::vector<std::pair<Vertex, Point3>> pts(e.coords.begin(), e.coords.end());
  for (Vertex v : e.host.vertices()) {
    if (!e.coords.count(v)) return "vertex " + std::to_string(v) + " has no coordinates";
  }
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (pts[i].second == pts[j].second)
        return "vertices " + std::to_string(pts[i].first) + " and " + std::to_string(pts[j].first) + " coincide";
      for (std::size_t k = j + 1; k < pts.size(); ++k) {
        if (collinear(pts[i].second, pts[j].second, pts[k].second))
          return "vertices " + std::to_string(pts[i].first) + ", " + std::to_string(pts[j].first) + ", " +
                 std::to_string(pts[k].first) + " are collinear";
      }
    }
  }
  const auto& edges = e.host.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const Edge& a = edges[i];
      const Edge& b = edges[j];
      if (a.shares_vertex(b)) continue;
      if (coplanar(e.coords.at(a.u), e.coords.at(a.v), e.coords.at(b.u), e.coords.at(b.v)))
        return "edges " + a.id() + " and " + b.id() + " are coplanar";
    }
  }
  return std::nullopt;
}

LinearEmbedding random_linear_embedding(const Graph& g, std::uint64_t seed) {
  for (int retry = 0; retry < kEmbeddingRetries; ++retry) {
    std::mt19937_64 rng(detail::splitmix64(seed + 0x632BE59BD9B4E019ULL * static_cast<std::uint64_t>(retry)));
    LinearEmbedding e{g, {}};
    for (Vertex v : g.vertices()) {
      Point3 p;
      p.x = detail::bounded_draw(rng, -kCoordinateBound, kCoordinateBound);
      p.y = detail::bounded_draw(rng, -kCoordinateBound, kCoordinateBound);
      p.z = detail::bounded_draw(rng, -kCoordinateBound, kCoordinateBound);
      e.coords[v] = p;
    }
    if (!general_position_violation(e)) return e;
  }
  fail(ErrorCode::degenerate_geometry,
       "no general-position embedding after " + std::to_string(kEmbeddingRetries) + " retries");
}

Direction3 projection_direction(int k) {
  if (k < 0) fail(ErrorCode::invalid_argument, "negative direction index");
  if (k == 0) return {0, 0, 1};
  const long m = k + 1;
  return {1, m, m * m};
}

Diagram project_to_diagram(const LinearEmbedding& e, const Direction3& direction) {
  const Q3 d{direction.x, direction.y, direction.z};
  if (d.x == 0 && d.y == 0 && d.z == 0) fail(ErrorCode::invalid_argument, "zero projection direction");
  Q3 u;
  for (const Q3& axis : {Q3{1, 0, 0}, Q3{0, 1, 0}, Q3{0, 0, 1}}) {
    u = cross_q(d, axis);
    if (u.x != 0 || u.y != 0 || u.z != 0) break;
  }
  const Q3 w = cross_q(d, u);
  Placement placement;
  std::map<Vertex, Rational> height;
  for (const auto& [v, p] : e.coords) {
    const Q3 q{p.x, p.y, p.z};
    placement[v] = {dot_q(q, u), dot_q(q, w)};
    height[v] = dot_q(q, d);
  }
  auto level = [&](const StrandPosition& h) -> Rational {
    const Rational& a = height.at(h.edge.u);
    const Rational& b = height.at(h.edge.v);
    return a + h.t * (b - a);
  };
  return Diagram::create(e.host, placement, {}, [&](const Crossing& c) {
    const Rational ha = level(c.key.a);
    const Rational hb = level(c.key.b);
    if (ha == hb) fail(ErrorCode::degenerate_geometry, "strands " + c.key.to_string() + " meet in space");
    return ha > hb;
  });
}

std::pair<Diagram, int> project_generic(const LinearEmbedding& e, int first) {
  constexpr int kDirections = 64;
  for (int k = first; k < first + kDirections; ++k) {
    try {
      return {project_to_diagram(e, projection_direction(k)), k};
    } catch (const Error& err) {
      if (err.code() != ErrorCode::degenerate_geometry) throw;
    }
  }
  fail(ErrorCode::degenerate_geometry, "no generic projection direction found");
}

int linking_number_linear(const LinearEmbedding& e, const CyclePair& pair) {
  return linking_number(project_generic(e).first, pair);
}

}  // namespace linkset
