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
#include <cstdlib>

#include "doctest.h"
#include "linkset/cycles.hpp"
#include "linkset/embedding.hpp"
#include "linkset/error.hpp"
#include "oracles.hpp"

using namespace linkset;

namespace {

LinearEmbedding two_triangles(std::vector<Point3> pts) {
  LinearEmbedding e;
  e.host = Graph({1, 2, 3, 4, 5, 6}, {Edge(1, 2), Edge(2, 3), Edge(1, 3), Edge(4, 5), Edge(5, 6), Edge(4, 6)});
  for (Vertex v = 1; v <= 6; ++v) e.coords[v] = pts[v - 1];
  return e;
}

int cone_lk(const LinearEmbedding& e, const CyclePair& p, bool& ok) {
  return oracle::cone_linking_number(oracle::polygon(e, p.first().vertices()),
                                     oracle::polygon(e, p.second().vertices()), ok);
}

}  // namespace

TEST_CASE("random embeddings are deterministic and generic") {
  const Graph k6 = complete_graph(6);
  const auto a = random_linear_embedding(k6, 42);
  const auto b = random_linear_embedding(k6, 42);
  const auto c = random_linear_embedding(k6, 43);
  CHECK(a.coords == b.coords);
  CHECK(a.coords != c.coords);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto e = random_linear_embedding(k6, seed);
    CHECK_FALSE(general_position_violation(e).has_value());
    for (const auto& [v, p] : e.coords) {
      CHECK(std::llabs(p.x) <= kCoordinateBound);
      CHECK(std::llabs(p.y) <= kCoordinateBound);
      CHECK(std::llabs(p.z) <= kCoordinateBound);
    }
  }
}

TEST_CASE("general position validator") {
  auto e = two_triangles({{0, 0, 0}, {1, 0, 0}, {2, 0, 0}, {0, 5, 1}, {1, 7, 3}, {4, 4, 9}});
  CHECK(general_position_violation(e).has_value());  // 1, 2, 3 collinear
  e = two_triangles({{0, 0, 0}, {4, 0, 0}, {0, 4, 0}, {9, 9, 0}, {12, 9, 0}, {9, 13, 5}});
  CHECK(general_position_violation(e).has_value());  // 12 and 45 coplanar
}

TEST_CASE("projection") {
  SUBCASE("planar drawing along z") {
    LinearEmbedding e;
    e.host = Graph({1, 2, 3, 4}, {Edge(1, 2), Edge(1, 3), Edge(1, 4)});
    e.coords = {{1, {0, 0, 0}}, {2, {5, 0, 0}}, {3, {0, 5, 0}}, {4, {-3, -4, 0}}};
    CHECK(project_to_diagram(e, projection_direction(0)).crossings().empty());
  }
  SUBCASE("direction along an edge is rejected") {
    LinearEmbedding e;
    e.host = Graph({1, 2, 3}, {Edge(1, 2), Edge(2, 3)});
    e.coords = {{1, {0, 0, 0}}, {2, {0, 0, 5}}, {3, {3, 1, 2}}};
    CHECK_THROWS_AS(project_to_diagram(e, projection_direction(0)), Error);
  }
  SUBCASE("direction sequence") {
    const Direction3 d = projection_direction(2);
    CHECK(d.x == 1);
    CHECK(d.y == 3);
    CHECK(d.z == 9);
  }
}

TEST_CASE("linking numbers of simple triangle pairs") {
  const CyclePair p = parse_pair("[1 2 3]U[4 5 6]");
  const auto split = two_triangles({{0, 0, 0}, {10, 0, 0}, {0, 10, 0}, {50, 50, 3}, {60, 51, 7}, {52, 61, -2}});
  CHECK(linking_number_linear(split, p) == 0);

  const auto linked = two_triangles({{0, 0, 0}, {10, 0, 0}, {0, 10, 0}, {3, 3, -5}, {3, 3, 5}, {20, 21, 1}});
  const int lk = linking_number_linear(linked, p);
  CHECK(std::abs(lk) == 1);
  bool ok = false;
  CHECK(std::abs(cone_lk(linked, p, ok)) == 1);
  CHECK(ok);
  // Same answer from the cone over the other component.
  const int swapped = oracle::cone_linking_number(oracle::polygon(linked, p.second().vertices()),
                                                  oracle::polygon(linked, p.first().vertices()), ok);
  CHECK(ok);
  CHECK(swapped == cone_lk(linked, p, ok));
  // Along z the vertical edge 45 collapses to a point.
  CHECK_THROWS_AS(project_to_diagram(linked, projection_direction(0)), Error);
  for (int k = 1; k < 5; ++k) CHECK(linking_number(project_to_diagram(linked, projection_direction(k)), p) == lk);
}

TEST_CASE("diagram linking numbers agree with the cone oracle") {
  const Graph k6 = complete_graph(6);
  const auto pairs = enumerate_pairs(k6, {std::pair<std::size_t, std::size_t>{3, 3}, false});
  int convention = 0;  // fixed global sign between the two orientations conventions
  int nonzero = 0;
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const auto e = random_linear_embedding(k6, seed);
    const Diagram d = project_generic(e).first;
    for (const auto& p : pairs) {
      bool ok = false;
      const int expected = cone_lk(e, p, ok);
      if (!ok) continue;
      const int got = linking_number(d, p);
      CHECK(std::abs(got) == std::abs(expected));
      if (expected == 0) continue;
      ++nonzero;
      const int s = got == expected ? 1 : -1;
      if (convention == 0) convention = s;
      CHECK(s == convention);
    }
  }
  CHECK(nonzero > 0);
}

TEST_CASE("two projection directions agree") {
  const Graph k6 = complete_graph(6);
  const auto pairs = enumerate_pairs(k6, {std::pair<std::size_t, std::size_t>{3, 3}, false});
  for (std::uint64_t seed = 100; seed < 130; ++seed) {
    const auto e = random_linear_embedding(k6, seed);
    const auto [d1, k1] = project_generic(e, 0);
    const auto [d2, k2] = project_generic(e, k1 + 1);
    CHECK(k2 > k1);
    for (const auto& p : pairs) CHECK(linking_number(d1, p) == linking_number(d2, p));
  }
}
