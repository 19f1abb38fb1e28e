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
#include <algorithm>

#include "doctest.h"
#include "linkset/catalog.hpp"
#include "linkset/error.hpp"
#include "linkset/graph.hpp"
#include "linkset/minor.hpp"
#include "linkset/permutation.hpp"
#include "linkset/transforms.hpp"
#include "oracles.hpp"

using namespace linkset;

TEST_CASE("complete graphs have C(n,2) edges") {
  CHECK(complete_graph(6).edge_count() == 15);
  CHECK(complete_graph(1).edge_count() == 0);
  CHECK(complete_graph(10).edge_count() == 45);
  CHECK(complete_graph(10).vertex_count() == 10);
}

TEST_CASE("graph construction rejects malformed input") {
  CHECK_THROWS_AS(Graph({1, 2}, {Edge(1, 1)}), Error);
  CHECK_THROWS_AS(Graph({1, 2}, {Edge(1, 2), Edge(2, 1)}), Error);
  CHECK_THROWS_AS(Graph({1, 2}, {Edge(1, 3)}), Error);
  CHECK_THROWS_AS(Graph({0, 1}, {}), Error);
  const Graph g({3, 1, 2}, {Edge(2, 1), Edge(3, 2)});
  CHECK(g.vertices() == std::vector<Vertex>{1, 2, 3});
  CHECK(g.edges().front() == Edge(1, 2));
  CHECK(g.neighbors(2) == std::vector<Vertex>{1, 3});
}

TEST_CASE("catalog graphs") {
  SUBCASE("Q7 is K6 with the triangle 123 replaced by vertex 7") {
    const Graph q7 = catalog_graph("Q7");
    CHECK(q7.edge_count() == 15);
    CHECK(q7.neighbors(7) == std::vector<Vertex>{1, 2, 3});
    CHECK_FALSE(q7.has_edge(1, 2));
    CHECK(q7.has_edge(4, 5));
    CHECK(is_isomorphic(q7, delta_y(complete_graph(6), {1, 2, 3}, 7)).has_value());
  }
  SUBCASE("P10 is the Petersen graph") {
    const Graph p10 = catalog_graph("P10");
    CHECK(p10.edge_count() == 15);
    for (Vertex v : p10.vertices()) CHECK(p10.degree(v) == 3);
    CHECK(enumerate_cycles(p10, 3).empty());
    CHECK(enumerate_cycles(p10, 4).empty());
    CHECK(p10.neighbors(10) == std::vector<Vertex>{2, 4, 7});
    // Kneser graph K(5,2): 2-subsets of {1..5}, adjacent when disjoint.
    std::vector<std::pair<int, int>> subsets;
    for (int a = 1; a <= 5; ++a)
      for (int b = a + 1; b <= 5; ++b) subsets.emplace_back(a, b);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < subsets.size(); ++i)
      for (std::size_t j = i + 1; j < subsets.size(); ++j) {
        const auto [a, b] = subsets[i];
        const auto [c, d] = subsets[j];
        if (a != c && a != d && b != c && b != d) edges.emplace_back(int(i) + 1, int(j) + 1);
      }
    CHECK(is_isomorphic(p10, Graph::from_edges(edges)).has_value());
  }
  SUBCASE("gadget edge counts") {
    CHECK(catalog_graph("G8").edge_count() == 22);
    CHECK(catalog_graph("G9").edge_count() == 19);
    CHECK(catalog_graph("G10").edge_count() == 29);
    const Graph g8 = catalog_graph("G8");
    CHECK(g8.neighbors(7) == std::vector<Vertex>{1, 2, 3, 8});
    CHECK(g8.neighbors(8) == std::vector<Vertex>{1, 2, 3, 7});
  }
  SUBCASE("Petersen family members are pairwise non-isomorphic with 15 edges") {
    const auto& names = petersen_family_names();
    for (std::size_t i = 0; i < names.size(); ++i) {
      CHECK(catalog_graph(names[i]).edge_count() == 15);
      for (std::size_t j = i + 1; j < names.size(); ++j)
        CHECK_FALSE(is_isomorphic(catalog_graph(names[i]), catalog_graph(names[j])).has_value());
    }
  }
  CHECK_THROWS_AS(catalog_graph("K7"), Error);
}

TEST_CASE("catalog integrity checks all pass") {
  const auto checks = catalog_integrity();
  CHECK(checks.size() > 30);
  for (const IntegrityCheck& c : checks) {
    INFO(c.graph << ": " << c.description);
    CHECK(c.passed);
  }
}

TEST_CASE("ΔY and YΔ") {
  const Graph k6 = complete_graph(6);
  const Graph q7 = delta_y(k6, {1, 2, 3}, 7);
  CHECK(q7.vertex_count() == 7);
  CHECK(q7.edge_count() == 15);
  CHECK(y_delta(q7, 7) == k6);
  const Graph q8 = delta_y(q7, {4, 5, 6}, 8);
  CHECK(q8.edge_count() == 15);
  CHECK(is_isomorphic(q8, catalog_graph("Q8")).has_value());
  CHECK_THROWS_AS(delta_y(q7, {1, 2, 3}, 9), Error);  // 123 is no longer a triangle
  CHECK_THROWS_AS(y_delta(k6, 1), Error);             // degree 5
}

TEST_CASE("isomorphism") {
  const Graph k6 = complete_graph(6);
  const Graph shifted = apply_permutation(VertexPermutation::from_cycles("(1 4)(2 6 3)", k6.vertices()), k6);
  CHECK(is_isomorphic(k6, shifted).has_value());
  CHECK_FALSE(is_isomorphic(catalog_graph("Q7"), catalog_graph("P7")).has_value());
  const auto w = is_isomorphic(catalog_graph("P7"), catalog_graph("P7"));
  REQUIRE(w.has_value());
  CHECK(w->is_automorphism_of(catalog_graph("P7")));
}

TEST_CASE("subdivision and contraction") {
  const Graph g8 = catalog_graph("G8");
  auto [g, m] = subdivide_edge(g8, Edge(7, 8), 1, 9);
  CHECK(g.vertex_count() == 9);
  CHECK(g.edge_count() == 23);
  CHECK(m.path(Edge(7, 8)) == std::vector<Vertex>{7, 9, 8});
  CHECK(contract_edge(g, Edge(7, 9)) == g8);

  auto [g10s, m10] = subdivide_edge(catalog_graph("G10"), Edge(9, 10), 2, 11);
  CHECK(g10s.vertex_count() == 12);
  CHECK(m10.path(Edge(9, 10)) == std::vector<Vertex>{9, 11, 12, 10});

  CHECK_THROWS_AS(subdivide_edge(g8, Edge(7, 8), 0, 9), Error);
  CHECK_THROWS_AS(subdivide_edge(g8, Edge(7, 8), 1, 8), Error);
  CHECK_THROWS_AS(subdivide_edge(g8, Edge(4, 7), 1, 9), Error);

  const Graph c78 = contract_edge(g8, Edge(7, 8));
  CHECK(c78.edge_count() == 18);
  CHECK(c78.neighbors(7) == std::vector<Vertex>{1, 2, 3});
  const Graph k6c = contract_edge(complete_graph(6), Edge(1, 2));
  CHECK(k6c.vertices() == std::vector<Vertex>{1, 3, 4, 5, 6});
  CHECK(k6c.edge_count() == 10);
  CHECK_THROWS_AS(contract_edge(g8, Edge(4, 7)), Error);
}

TEST_CASE("vertex splittings") {
  const Graph p10 = catalog_graph("P10");
  const auto s3 = vertex_splittings(p10, 1);
  CHECK(s3.size() == 4);
  for (const auto& s : s3) CHECK((s.trivial || s.leaf));

  const Graph p7 = catalog_graph("P7");
  const auto s4 = vertex_splittings(p7, 1);  // degree 4
  CHECK(p7.degree(1) == 4);
  CHECK(std::count_if(s4.begin(), s4.end(), [](const VertexSplitting& s) { return !s.trivial; }) == 3);

  const auto s5 = vertex_splittings(complete_graph(6), 3);
  CHECK(std::count_if(s5.begin(), s5.end(), [](const VertexSplitting& s) { return !s.trivial; }) == 10);
  for (const auto& s : s5) {
    CHECK(s.graph.edge_count() == 16);
    CHECK(s.graph.has_edge(s.kept, s.new_vertex));
    CHECK(s.side_a.size() + s.side_b.size() == 5);
  }
}

TEST_CASE("connectivity report") {
  const auto k6 = connectivity_report(complete_graph(6));
  CHECK(k6.components == 1);
  CHECK(k6.cut_edges.empty());
  const Graph two({1, 2, 3, 4, 5, 6}, {Edge(1, 2), Edge(2, 3), Edge(1, 3), Edge(4, 5), Edge(5, 6), Edge(4, 6)});
  const auto r = connectivity_report(two);
  CHECK(r.components == 2);
  CHECK(r.cut_edges.empty());
  CHECK(connectivity_report(catalog_graph("P10")).cut_edges.empty());
  const Graph path({1, 2, 3}, {Edge(1, 2), Edge(2, 3)});
  CHECK(connectivity_report(path).cut_edges.size() == 2);
}
