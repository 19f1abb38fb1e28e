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
#include "linkset/assets.hpp"
#include "linkset/catalog.hpp"
#include "linkset/diagram.hpp"
#include "linkset/error.hpp"
#include "linkset/permutation.hpp"

using namespace linkset;

namespace {

Point2 pt(long x, long y) { return {Rational(x), Rational(y)}; }

const Graph& two_triangles() {
  static const Graph g({1, 2, 3, 4, 5, 6},
                       {Edge(1, 2), Edge(2, 3), Edge(1, 3), Edge(4, 5), Edge(5, 6), Edge(4, 6)});
  return g;
}

const CyclePair& triangles() {
  static const CyclePair p = parse_pair("[1 2 3]U[4 5 6]");
  return p;
}

Placement hopf_placement() {
  return {{1, pt(0, 0)}, {2, pt(4, 0)}, {3, pt(2, 3)}, {4, pt(2, 1)}, {5, pt(2, -2)}, {6, pt(6, 1)}};
}

// Triangle 123 over at the crossing with edge 12, under at the other one.
Diagram hopf() {
  return Diagram::create(two_triangles(), hopf_placement(), {},
                         [](const Crossing& c) { return c.key.a.edge == Edge(1, 2); });
}

// Edge 45 bends across edge 12 and back: one R2 bigon.
Diagram bigon(bool a_over) {
  const Placement pl{{1, pt(0, 0)}, {2, pt(4, 0)}, {3, pt(2, 3)}, {4, pt(1, -3)}, {5, pt(3, -3)}, {6, pt(2, -5)}};
  const Routes routes{{Edge(4, 5), {pt(1, -3), pt(2, 1), pt(3, -3)}}};
  return Diagram::create(two_triangles(), pl, routes, [a_over](const Crossing&) { return a_over; });
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no exception");
  return ErrorCode::io_error;
}

}  // namespace

TEST_CASE("plane trees have no crossings") {
  const Graph star({1, 2, 3, 4}, {Edge(1, 2), Edge(1, 3), Edge(1, 4)});
  const Diagram d = Diagram::create(star, {{1, pt(0, 0)}, {2, pt(1, 0)}, {3, pt(0, 1)}, {4, pt(-1, -1)}}, {},
                                    std::map<std::string, std::string>{});
  CHECK(d.crossings().empty());
  CHECK(validate_diagram(d).empty());
}

TEST_CASE("Hopf diagram") {
  const Diagram d = hopf();
  REQUIRE(d.crossings().size() == 2);
  CHECK(inter_component_crossings(d, triangles()).size() == 2);
  const int lk = linking_number(d, triangles());
  CHECK((lk == 1 || lk == -1));
  CHECK(split_certify(d, triangles()).verdict == SplitVerdict::unknown);

  const Diagram mirrored = flip_crossings(d, {d.crossings()[0].key, d.crossings()[1].key});
  CHECK(linking_number(mirrored, triangles()) == -lk);
  const Diagram one = flip_crossing(d, d.crossings()[0].key);
  CHECK(linking_number(one, triangles()) == 0);
  CHECK(split_certify(one, triangles()).verdict == SplitVerdict::layered);
  CHECK(flip_crossing(one, d.crossings()[0].key) == d);
  CHECK(validate_diagram(one).size() == 2);
}

TEST_CASE("disjoint drawing is zero-crossing split") {
  const Placement pl{{1, pt(0, 0)}, {2, pt(1, 0)}, {3, pt(0, 1)}, {4, pt(5, 5)}, {5, pt(6, 5)}, {6, pt(5, 6)}};
  const Diagram d = Diagram::create(two_triangles(), pl, {}, std::map<std::string, std::string>{});
  CHECK(linking_number(d, triangles()) == 0);
  const SplitCertificate c = split_certify(d, triangles());
  CHECK(c.verdict == SplitVerdict::zero_inter_crossings);
  CHECK(c.is_split());
}

TEST_CASE("one R2 bigon cancels") {
  for (bool a_over : {true, false}) {
    const Diagram d = bigon(a_over);
    CHECK(d.crossings().size() == 2);
    CHECK(linking_number(d, triangles()) == 0);
    const SplitCertificate c = split_certify(d, triangles());
    CHECK(c.verdict == SplitVerdict::r2_reduced);
    CHECK(c.r2_steps == 1);
  }
  const Diagram d = bigon(true);
  const Diagram twisted = flip_crossing(d, d.crossings()[0].key);
  CHECK(split_certify(twisted, triangles()).verdict == SplitVerdict::unknown);
  CHECK(std::abs(linking_number(twisted, triangles())) == 1);
}

TEST_CASE("degenerate drawings are rejected") {
  const Graph three({1, 2, 3, 4, 5, 6}, {Edge(1, 2), Edge(3, 4), Edge(5, 6)});
  const Placement concurrent{{1, pt(-1, 0)}, {2, pt(1, 0)}, {3, pt(0, -1)}, {4, pt(0, 1)}, {5, pt(-1, -1)},
                             {6, pt(1, 1)}};
  CHECK(code_of([&] { find_crossings(three, concurrent, {}); }) == ErrorCode::degenerate_geometry);

  const Graph two({1, 2, 3, 4}, {Edge(1, 2), Edge(3, 4)});
  const Placement on_strand{{1, pt(-1, 0)}, {2, pt(1, 0)}, {3, pt(0, 0)}, {4, pt(0, 1)}};
  CHECK(code_of([&] { find_crossings(two, on_strand, {}); }) == ErrorCode::degenerate_geometry);
  const Placement overlap{{1, pt(0, 0)}, {2, pt(2, 0)}, {3, pt(1, 0)}, {4, pt(3, 0)}};
  CHECK(code_of([&] { find_crossings(two, overlap, {}); }) == ErrorCode::degenerate_geometry);

  // Over data must name exactly the geometric crossings.
  CHECK(code_of([&] {
          Diagram::create(two_triangles(), hopf_placement(), {}, std::map<std::string, std::string>{});
        }) == ErrorCode::invalid_argument);
  CHECK(code_of([&] { Diagram::create(two_triangles(), {{1, pt(0, 0)}}, {}, std::map<std::string, std::string>{}); }) ==
        ErrorCode::invalid_argument);
}

TEST_CASE("crossing keys round-trip") {
  const Diagram d = bigon(true);
  for (const Crossing& c : d.crossings()) {
    CHECK(CrossingKey::parse(c.key.to_string()) == c.key);
    CHECK(&d.crossing(c.key) == &c);
    CHECK(d.crossing_at(c.location) == &c);
    CHECK(c.key.a < c.key.b);
  }
  CHECK(d.crossings()[0].key.to_string().find('|') != std::string::npos);
  CHECK_THROWS_AS(CrossingKey::parse("1-2#0@1/2"), Error);
  CHECK(Diagram::create(d.host(), d.placement(), d.routes(), d.over_map()) == d);
}

TEST_CASE("flip law on a shipped witness") {
  const Diagram w = load_witness("G8");
  const LambdaSet lam = catalog_lambda("Λ(G8)");
  for (const Crossing& c : w.crossings()) {
    const Diagram f = flip_crossing(w, c.key);
    for (const auto& p : lam.pairs) {
      const int before = linking_number(w, p);
      const int after = linking_number(f, p);
      const bool inter = p.separates(c.key.a.edge, c.key.b.edge);
      CHECK(std::abs(after - before) == (inter ? 1 : 0));
    }
  }
}

TEST_CASE("extend_diagram") {
  const Diagram w = load_witness("G8");
  CHECK(extend_diagram(w, identity_minor_map(w.host())) == w);

  const auto c = lambda_for_complete(5, 3);
  const Diagram k8 = extend_diagram(w, c.map);
  CHECK(k8.host() == complete_graph(8));
  CHECK_NOTHROW(validate_diagram(k8));
  const LambdaSet lam = catalog_lambda("Λ(G8)");
  const Graph sub = c.map.subgraph();
  for (const auto& p : lam.pairs) {
    const CyclePair q = psi_pair_map(c.map, p);
    CHECK(linking_number(k8, q) == linking_number(w, p));
    CHECK(split_certify(k8, q).is_split() == split_certify(w, p).is_split());
    for (const Crossing* x : inter_component_crossings(k8, q)) {
      CHECK(sub.has_edge(x->key.a.edge));
      CHECK(sub.has_edge(x->key.b.edge));
    }
  }
  for (const Crossing& x : w.crossings()) {
    const CrossingKey k = corresponding_key(w, k8, x.key);
    CHECK(k8.crossing(k).location == x.location);
  }

  const auto [g9, m9] = subdivide_edge(w.host(), Edge(7, 8), 1, 9);
  const Diagram sub9 = extend_diagram(w, m9);
  CHECK(sub9.crossings().size() == w.crossings().size());
  for (const auto& p : lam.pairs) CHECK(linking_number(sub9, psi_pair_map(m9, p)) == linking_number(w, p));
}
