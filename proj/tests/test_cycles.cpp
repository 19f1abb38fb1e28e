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
#include "linkset/cycles.hpp"
#include "linkset/error.hpp"
#include "oracles.hpp"

using namespace linkset;

namespace {

std::set<std::set<std::pair<Vertex, Vertex>>> as_edge_sets(const std::vector<Cycle>& cs) {
  std::set<std::set<std::pair<Vertex, Vertex>>> out;
  for (const Cycle& c : cs) {
    std::set<std::pair<Vertex, Vertex>> es;
    for (const Edge& e : c.edges()) es.insert({e.u, e.v});
    out.insert(es);
  }
  return out;
}

}  // namespace

TEST_CASE("cycle canonical form") {
  CHECK(Cycle({3, 1, 2}).vertices() == std::vector<Vertex>{1, 2, 3});
  CHECK(Cycle({2, 8, 7, 1, 3}).vertices() == std::vector<Vertex>{1, 3, 2, 8, 7});
  CHECK(Cycle({5, 4, 3, 2, 1}) == Cycle({1, 2, 3, 4, 5}));
  CHECK(Cycle({1, 2, 3}).to_string() == "[1 2 3]");
  CHECK_THROWS_AS(Cycle({1, 2}), Error);
  CHECK_THROWS_AS(Cycle({1, 2, 1}), Error);
  const Cycle c({1, 3, 2});
  CHECK(c.vertices() == std::vector<Vertex>{1, 2, 3});
  CHECK(c.direction(Edge(1, 2)) == 1);
  CHECK(c.direction(Edge(2, 3)) == 1);
  CHECK(c.direction(Edge(1, 3)) == -1);
  CHECK(c.direction(Edge(1, 4)) == 0);
  CHECK(Cycle({1, 2, 3, 4}).direction(Edge(1, 4)) == -1);
  CHECK(Cycle({1, 2, 3, 4}).direction(Edge(3, 4)) == 1);
}

TEST_CASE("pair ordering and parsing") {
  const CyclePair p = parse_pair("[4 5 6]∪[1 8 7 2 3]");
  CHECK(p.first().length() == 5);
  CHECK(p.to_string() == "[1 3 2 7 8]∪[4 5 6]");
  CHECK(parse_pair("[1 3 5]U[2 4 6]") == parse_pair("[2 4 6]u[5 3 1]"));
  CHECK(parse_pair("[1 3 5]U[2 4 6]").first() == Cycle({1, 3, 5}));
  CHECK_THROWS_AS(parse_pair("[1 2 3]U[3 4 5]"), Error);
  CHECK_THROWS_AS(parse_cycle("1 2 3"), Error);
  CHECK_THROWS_AS(parse_cycle("[1 2 x]"), Error);
  CHECK(p.separates(Edge(1, 3), Edge(4, 5)));
  CHECK_FALSE(p.separates(Edge(1, 3), Edge(2, 7)));
  CHECK_FALSE(p.separates(Edge(1, 4), Edge(5, 6)));
  CHECK(p.component_of(Edge(5, 6)) == 1);
  CHECK(p.component_of(Edge(1, 2)) == -1);
}

TEST_CASE("cycle enumeration matches brute force") {
  const Graph k6 = complete_graph(6);
  CHECK(enumerate_cycles(k6, 3).size() == 20);
  CHECK(enumerate_cycles(k6).size() == 197);
  CHECK(as_edge_sets(enumerate_cycles(k6)) == oracle::cycles(k6));
  CHECK(enumerate_cycles(catalog_graph("P10"), 3).empty());
  for (const char* name : {"Q7", "P7", "G8", "P9"}) {
    INFO(name);
    const Graph g = catalog_graph(name);
    const auto cs = enumerate_cycles(g);
    CHECK(as_edge_sets(cs) == oracle::cycles(g));
    CHECK(std::is_sorted(cs.begin(), cs.end()));
    for (const Cycle& c : cs) CHECK(c.is_valid_in(g));
  }
}

TEST_CASE("pair enumeration") {
  const Graph k6 = complete_graph(6);
  CHECK(enumerate_pairs(k6, {std::pair<std::size_t, std::size_t>{3, 3}, false}).size() == 10);
  CHECK(enumerate_pairs(k6).size() == oracle::pair_count(k6));
  CHECK(enumerate_pairs(complete_graph(7), {std::pair<std::size_t, std::size_t>{4, 3}, true}).size() == 105);
  CHECK(enumerate_pairs(complete_graph(7), {std::pair<std::size_t, std::size_t>{3, 4}, true}).size() == 105);
  CHECK(enumerate_pairs(catalog_graph("P7"), {std::pair<std::size_t, std::size_t>{4, 3}, false}).size() == 9);
  CHECK(enumerate_pairs(catalog_graph("Q8"), {std::pair<std::size_t, std::size_t>{4, 4}, false}).size() == 9);
  for (const auto& name : petersen_family_names()) {
    INFO(name);
    const Graph g = catalog_graph(name);
    CHECK(enumerate_pairs(g).size() == oracle::pair_count(g));
  }
  CHECK(all_pairs(catalog_graph("P10"), "x").size() == 6);
  CHECK_THROWS_AS(enumerate_pairs(complete_graph(13)), Error);
}

TEST_CASE("catalog lambda sets") {
  const LambdaSet g8 = catalog_lambda("Λ(G8)");
  CHECK(g8.size() == 12);
  for (const auto& p : g8.pairs) {
    CHECK(p.type() == std::pair<std::size_t, std::size_t>{5, 3});
    CHECK(p.is_hamiltonian_in(g8.host));
  }
  const LambdaSet g9 = catalog_lambda("Λ(G9)");
  CHECK(g9.size() == 9);
  for (const auto& p : g9.pairs) CHECK(p.type() == std::pair<std::size_t, std::size_t>{5, 4});
  const LambdaSet g10 = catalog_lambda("Λ(G10)");
  CHECK(g10.size() == 18);
  for (const auto& p : g10.pairs) {
    CHECK(p.type() == std::pair<std::size_t, std::size_t>{5, 5});
    CHECK(p.is_hamiltonian_in(g10.host));
  }
  CHECK(catalog_lambda("Γ⁽²⁾(P10)").size() == 6);
  CHECK(catalog_lambda("Λ′(K10)").size() == 6);
  CHECK(catalog_lambda_names().size() == 11);
  CHECK(g8.without(g8.pairs.front()).size() == 11);
  CHECK_THROWS_AS(LambdaSet("bad", complete_graph(5), {parse_pair("[1 2 3]U[4 5 6]")}), Error);
}
