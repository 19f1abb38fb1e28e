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
// Randomized invariant checks with fixed seeds.
#include <algorithm>
#include <cstdlib>
#include <random>
#include <set>

#include "doctest.h"
#include "linkset/assets.hpp"
#include "linkset/catalog.hpp"
#include "linkset/certificates.hpp"
#include "linkset/embedding.hpp"
#include "linkset/permutation.hpp"
#include "linkset/transforms.hpp"

using namespace linkset;

TEST_CASE("canonical form is idempotent and rotation/reflection invariant") {
  std::mt19937 rng(11);
  for (int iter = 0; iter < 300; ++iter) {
    const int n = 3 + int(rng() % 8);
    std::vector<Vertex> seq(n);
    for (int i = 0; i < n; ++i) seq[i] = i + 1 + int(rng() % 3) * 20;
    std::sort(seq.begin(), seq.end());
    seq.erase(std::unique(seq.begin(), seq.end()), seq.end());
    if (seq.size() < 3) continue;
    std::shuffle(seq.begin(), seq.end(), rng);
    const auto c = canonical_cycle(seq);
    CHECK(canonical_cycle(c) == c);
    auto rot = seq;
    std::rotate(rot.begin(), rot.begin() + rng() % rot.size(), rot.end());
    CHECK(canonical_cycle(rot) == c);
    std::reverse(rot.begin(), rot.end());
    CHECK(canonical_cycle(rot) == c);
    CHECK(c.front() == *std::min_element(c.begin(), c.end()));
    CHECK(c[1] < c.back());
  }
}

TEST_CASE("automorphisms permute the pair set") {
  for (const char* name : {"Q7", "P8", "P9", "G9"}) {
    INFO(name);
    const Graph g = catalog_graph(name);
    const auto pairs = enumerate_pairs(g);
    const std::set<CyclePair> all(pairs.begin(), pairs.end());
    for (const auto& s : automorphism_group(g)) {
      std::set<CyclePair> image;
      for (const auto& p : pairs) {
        const CyclePair q = apply_permutation(s, p);
        CHECK(all.count(q) == 1);
        image.insert(q);
      }
      CHECK(image == all);
    }
  }
}

TEST_CASE("psi is injective and subdivision is undone by contraction") {
  std::mt19937 rng(5);
  for (const auto& name : catalog_graph_names()) {
    INFO(name);
    const Graph g = catalog_graph(name);
    for (int iter = 0; iter < 3; ++iter) {
      const Edge e = g.edges()[rng() % g.edge_count()];
      const int k = 1 + int(rng() % 2);
      auto [h, m] = subdivide_edge(g, e, k, g.max_label() + 1);
      CHECK(h.edge_count() == g.edge_count() + std::size_t(k));
      Graph back = h;
      for (int i = 0; i < k; ++i) back = contract_edge(back, Edge(e.u, g.max_label() + 1 + i));
      CHECK(is_isomorphic(back, g).has_value());
      const LambdaSet lam = catalog_lambda(default_lambda_for(name));
      std::set<CyclePair> images;
      for (const auto& p : lam.pairs) {
        const CyclePair q = psi_pair_map(m, p);
        CHECK(q.is_valid_in(h));
        images.insert(q);
      }
      CHECK(images.size() == lam.size());
    }
  }
}

TEST_CASE("delta-Y preserves edge count and adds a vertex") {
  for (const auto& name : petersen_family_names()) {
    const Graph g = catalog_graph(name);
    for (const Cycle& t : enumerate_cycles(g, 3)) {
      const auto& v = t.vertices();
      const Graph h = delta_y(g, {v[0], v[1], v[2]}, g.max_label() + 1);
      CHECK(h.edge_count() == 15);
      CHECK(h.vertex_count() == g.vertex_count() + 1);
      CHECK(y_delta(h, g.max_label() + 1) == g);
    }
  }
}

TEST_CASE("linking laws on random projections") {
  const LambdaSet lam = catalog_lambda("Λ(G8)");
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto e = random_linear_embedding(lam.host, seed * 977);
    const Diagram d = project_generic(e).first;
    int sum = 0;
    for (const auto& p : lam.pairs) {
      int signs = 0;
      for (const Crossing* c : inter_component_crossings(d, p)) signs += crossing_sign(*c, p);
      CHECK(signs % 2 == 0);
      const int lk = linking_number(d, p);
      CHECK(2 * lk == signs);
      if (split_certify(d, p).is_split()) CHECK(lk == 0);
      sum += lk;
    }
    CHECK(std::abs(sum) % 2 == 1);
    if (d.crossings().empty()) continue;
    const Crossing& c = d.crossings()[seed % d.crossings().size()];
    const Diagram f = flip_crossing(d, c.key);
    for (const auto& p : lam.pairs) {
      const int delta = std::abs(linking_number(f, p) - linking_number(d, p));
      CHECK(delta == (p.separates(c.key.a.edge, c.key.b.edge) ? 1 : 0));
    }
  }
}

TEST_CASE("flip-free specs read linking numbers off the base diagram") {
  for (const char* name : {"P9", "G8"}) {
    const CertificateBundle b = load_bundle(name);
    const MinimalReport r = verify_minimal(b.graph, b.lambda, b.as_battery());
    REQUIRE(r.specs.size() == b.battery.size());
    for (std::size_t i = 0; i < r.specs.size(); ++i) {
      const WitnessSpec& s = b.battery[i];
      CHECK(r.specs[i].image == apply_permutation(s.sigma, s.target));
      if (s.flips.empty()) CHECK(r.specs[i].lk == linking_number(b.witness, r.specs[i].image));
    }
  }
}

TEST_CASE("linked witnesses give sigma one on random embeddings") {
  for (const char* name : {"Q7", "P9"}) {
    const LambdaSet lam = catalog_lambda(default_lambda_for(name));
    REQUIRE(verify_linked(lam.host, lam, load_witness(name)).passed());
    CHECK(monte_carlo_sigma(lam.host, lam, 25, 99, 2).constant_one());
  }
}
