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
#include <set>

#include "doctest.h"
#include "linkset/catalog.hpp"
#include "linkset/error.hpp"
#include "linkset/minor.hpp"
#include "linkset/permutation.hpp"

using namespace linkset;

TEST_CASE("identity minor map") {
  const Graph g8 = catalog_graph("G8");
  const MinorMap id = identity_minor_map(g8);
  CHECK(id.is_identity());
  CHECK_NOTHROW(id.validate());
  CHECK(id.subgraph() == g8);
  const LambdaSet lam = catalog_lambda("Λ(G8)");
  for (const auto& p : lam.pairs) CHECK(psi_pair_map(id, p) == p);
}

TEST_CASE("psi along a subdivision") {
  const Graph g8 = catalog_graph("G8");
  const auto [g, m] = subdivide_edge(g8, Edge(7, 8), 1, 9);
  CHECK(psi_pair_map(m, parse_pair("[1 2 3 8 7]U[4 5 6]")) == parse_pair("[1 2 3 8 9 7]U[4 5 6]"));
  const LambdaSet lifted = psi_lambda(m, catalog_lambda("Λ(G8)"), "x");
  CHECK(lifted.size() == 12);
  for (const auto& p : lifted.pairs) CHECK(p.is_hamiltonian_in(g));
}

TEST_CASE("composition and re-hosting") {
  const Graph g10 = catalog_graph("G10");
  const auto [g1, m1] = subdivide_edge(g10, Edge(7, 8), 1, 11);
  const auto [g2, m2] = subdivide_edge(g1, Edge(9, 10), 1, 12);
  const MinorMap m = compose(m1, m2);
  CHECK_NOTHROW(m.validate());
  CHECK(m.path(Edge(7, 8)) == std::vector<Vertex>{7, 11, 8});
  CHECK(m.path(Edge(9, 10)) == std::vector<Vertex>{9, 12, 10});
  const MinorMap k = into_complete_graph(m, 12);
  CHECK(k.host == complete_graph(12));
  CHECK(k.subgraph() == g2);
  CHECK_THROWS_AS(into_complete_graph(m, 11), Error);
  const LambdaSet lam = catalog_lambda("Λ(G10)");
  const LambdaSet lifted = psi_lambda(k, lam, "x");
  CHECK(lifted.size() == 18);
  std::set<CyclePair> images;
  for (const auto& p : lam.pairs) images.insert(psi_pair_map(k, p));
  CHECK(images.size() == lam.size());
}

TEST_CASE("validate rejects broken maps") {
  const auto [g, m] = subdivide_edge(catalog_graph("G8"), Edge(7, 8), 1, 9);
  MinorMap bad = m;
  bad.expansion[Edge(7, 8)] = {7, 4, 8};  // path vertex already used as an image
  CHECK_THROWS_AS(bad.validate(), Error);
  MinorMap missing = m;
  missing.subgraph_edges.pop_back();
  CHECK_THROWS_AS(missing.validate(), Error);
}

TEST_CASE("complete graph constructions") {
  const auto c53 = lambda_for_complete(5, 3);
  CHECK(c53.gadget == "G8");
  CHECK(c53.host == complete_graph(8));
  CHECK(c53.lambda.size() == 12);
  for (const auto& p : c53.lambda.pairs) CHECK(p.type() == std::pair<std::size_t, std::size_t>{5, 3});

  const auto c34 = lambda_for_complete(3, 4);
  CHECK(c34.gadget == "P7");
  CHECK(c34.lambda.size() == 9);
  CHECK(c34.lambda.pairs ==
        enumerate_pairs(catalog_graph("P7"), {std::pair<std::size_t, std::size_t>{4, 3}, false}));

  const auto c65 = lambda_for_complete(6, 5);
  CHECK(c65.host.vertex_count() == 11);
  CHECK(c65.lambda.size() == 18);
  const auto& p78 = c65.map.path(Edge(7, 8));
  CHECK(p78.size() == 3);
  for (const auto& p : c65.lambda.pairs) {
    CHECK(p.type() == std::pair<std::size_t, std::size_t>{6, 5});
    CHECK(p.is_hamiltonian_in(c65.host));
    const Edge a(p78[0], p78[1]);
    const Edge b(p78[1], p78[2]);
    const bool has78 = p.first().has_edge(a) && p.first().has_edge(b);
    const bool has910 = p.second().has_edge(Edge(9, 10));
    CHECK(has78);
    CHECK(has910);
  }
  CHECK(lambda_for_complete(4, 7).lambda.size() == 9);
  CHECK(lambda_prime_k10().lambda.size() == 6);
  CHECK(lambda_for_complete(4, 3).gadget == "P7");
  CHECK_THROWS_AS(lambda_for_complete(4, 2), Error);
  CHECK_THROWS_AS(lambda_for_complete(3, 3), Error);
}
