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
#include "linkset/catalog.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "linkset/error.hpp"
#include "linkset/permutation.hpp"
#include "linkset/transforms.hpp"

namespace linkset {

namespace {

std::vector<Edge> edges_of(std::initializer_list<std::pair<Vertex, Vertex>> list) {
  std::vector<Edge> out;
  for (auto [a, b] : list) out.emplace_back(a, b);
  return out;
}

std::vector<Edge> join(Vertex v, std::initializer_list<Vertex> nbrs) {
  std::vector<Edge> out;
  for (Vertex w : nbrs) out.emplace_back(v, w);
  return out;
}

std::vector<Edge> bipartite(std::initializer_list<Vertex> left, std::initializer_list<Vertex> right) {
  std::vector<Edge> out;
  for (Vertex a : left)
    for (Vertex b : right) out.emplace_back(a, b);
  return out;
}

Graph with_edges(const Graph& base, std::vector<std::vector<Edge>> groups) {
  std::vector<Edge> added;
  for (auto& g : groups) added.insert(added.end(), g.begin(), g.end());
  return edit_edges(base, {}, added);
}

Graph build_graph(const std::string& name) {
  if (name == "K6") return complete_graph(6);
  if (name == "Q7") return delta_y(complete_graph(6), {1, 2, 3}, 7);
  if (name == "Q8") return delta_y(build_graph("Q7"), {4, 5, 6}, 8);
  if (name == "P7") {
    auto es = bipartite({1, 2, 3}, {4, 5, 6});
    auto apex = join(7, {1, 2, 3, 4, 5, 6});
    es.insert(es.end(), apex.begin(), apex.end());
    return Graph::from_edges(es);
  }
  if (name == "P8") return delta_y(build_graph("P7"), {1, 6, 7}, 8);
  if (name == "P9") {
    return Graph::from_edges(edges_of({{1, 8}, {8, 6}, {6, 3}, {3, 9}, {9, 5}, {5, 1},  // hexagon
                                       {2, 7}, {7, 4}, {4, 2},                          // triangle
                                       {2, 5}, {2, 6}, {4, 1}, {4, 3}, {7, 8}, {7, 9}}));
  }
  if (name == "P10") return delta_y(build_graph("P9"), {2, 7, 4}, 10);
  const auto gadget = [] { return std::vector<std::vector<Edge>>{join(7, {1, 2, 3, 8}), join(8, {1, 2, 3})}; };
  if (name == "G8") return with_edges(complete_graph(6), gadget());
  if (name == "G9") {
    auto groups = gadget();
    groups.push_back(join(9, {4, 5, 6}));
    return with_edges(Graph::from_edges(bipartite({1, 2, 3}, {4, 5, 6})), groups);
  }
  if (name == "G10") {
    auto groups = gadget();
    groups.push_back(join(9, {4, 5, 6, 10}));
    groups.push_back(join(10, {4, 5, 6}));
    return with_edges(complete_graph(6), groups);
  }
  fail(ErrorCode::not_found, "unknown catalog graph '" + name + "'");
}

std::vector<CyclePair> pairs_of(std::initializer_list<const char*> texts) {
  std::vector<CyclePair> out;
  for (const char* t : texts) out.push_back(parse_pair(t));
  return out;
}

// Transcribed in the order they are listed in the source.
const std::vector<CyclePair>& lambda_g8_pairs() {
  static const auto v = pairs_of({
      "[1 8 7 2 3]U[4 5 6]", "[1 2 8 7 3]U[4 5 6]", "[1 2 3 8 7]U[4 5 6]",
      "[1 8 7 2 4]U[3 5 6]", "[1 8 7 2 5]U[4 3 6]", "[1 8 7 2 6]U[4 5 3]",
      "[6 2 8 7 3]U[4 5 1]", "[5 2 8 7 3]U[4 1 6]", "[4 2 8 7 3]U[1 5 6]",
      "[1 4 3 8 7]U[2 5 6]", "[1 5 3 8 7]U[4 2 6]", "[1 6 3 8 7]U[4 5 2]",
  });
  return v;
}

const std::vector<CyclePair>& lambda_g9_pairs() {
  static const auto v = pairs_of({
      "[1 8 7 2 6]U[4 9 5 3]", "[1 8 7 2 4]U[3 5 9 6]", "[1 8 7 2 5]U[4 3 6 9]",
      "[6 2 8 7 3]U[4 9 5 1]", "[4 2 8 7 3]U[1 5 9 6]", "[5 2 8 7 3]U[4 1 6 9]",
      "[1 6 3 8 7]U[4 9 5 2]", "[1 4 3 8 7]U[2 5 9 6]", "[1 5 3 8 7]U[4 2 6 9]",
  });
  return v;
}

const std::vector<CyclePair>& lambda_g10_pairs() {
  static const auto v = pairs_of({
      "[1 8 7 2 3]U[4 10 9 5 6]", "[1 8 7 2 3]U[4 5 10 9 6]", "[1 8 7 2 3]U[4 5 6 10 9]",
      "[1 2 8 7 3]U[4 10 9 5 6]", "[1 2 8 7 3]U[4 5 10 9 6]", "[1 2 8 7 3]U[4 5 6 10 9]",
      "[1 2 3 8 7]U[4 10 9 5 6]", "[1 2 3 8 7]U[4 5 10 9 6]", "[1 2 3 8 7]U[4 5 6 10 9]",
      "[1 8 7 2 6]U[4 10 9 5 3]", "[1 8 7 2 4]U[3 5 10 9 6]", "[1 8 7 2 5]U[4 3 6 10 9]",
      "[6 2 8 7 3]U[4 10 9 5 1]", "[4 2 8 7 3]U[1 5 10 9 6]", "[5 2 8 7 3]U[4 1 6 10 9]",
      "[1 6 3 8 7]U[4 10 9 5 2]", "[1 4 3 8 7]U[2 5 10 9 6]", "[1 5 3 8 7]U[4 2 6 10 9]",
  });
  return v;
}

const std::map<std::string, std::string>& ascii_names() {
  static const std::map<std::string, std::string> m = [] {
    std::map<std::string, std::string> out;
    for (const char* g : {"G8", "G9", "G10"}) {
      out[std::string("Lambda(") + g + ")"] = std::string("Λ(") + g + ")";
      out[std::string("L(") + g + ")"] = std::string("Λ(") + g + ")";
    }
    for (const auto& p : petersen_family_names()) {
      out["Gamma2(" + p + ")"] = "Γ⁽²⁾(" + p + ")";
      out["Γ(2)(" + p + ")"] = "Γ⁽²⁾(" + p + ")";
    }
    out["Lambda'(K10)"] = "Λ′(K10)";
    out["Lambda_prime(K10)"] = "Λ′(K10)";
    out["Λ'(K10)"] = "Λ′(K10)";
    return out;
  }();
  return m;
}

}  // namespace

const std::vector<std::string>& catalog_graph_names() {
  static const std::vector<std::string> v{"K6", "Q7", "Q8", "P7", "P8", "P9", "P10", "G8", "G9", "G10"};
  return v;
}

const std::vector<std::string>& petersen_family_names() {
  static const std::vector<std::string> v{"K6", "Q7", "Q8", "P7", "P8", "P9", "P10"};
  return v;
}

const std::vector<std::string>& catalog_lambda_names() {
  static const std::vector<std::string> v = [] {
    std::vector<std::string> out{"Λ(G8)", "Λ(G9)", "Λ(G10)"};
    for (const auto& p : petersen_family_names()) out.push_back("Γ⁽²⁾(" + p + ")");
    out.push_back("Λ′(K10)");
    return out;
  }();
  return v;
}

Graph catalog_graph(const std::string& name) { return build_graph(name); }

std::string normalize_lambda_name(const std::string& name) {
  auto it = ascii_names().find(name);
  return it == ascii_names().end() ? name : it->second;
}

LambdaSet catalog_lambda(const std::string& raw) {
  const std::string name = normalize_lambda_name(raw);
  if (name == "Λ(G8)") return LambdaSet(name, catalog_graph("G8"), lambda_g8_pairs());
  if (name == "Λ(G9)") return LambdaSet(name, catalog_graph("G9"), lambda_g9_pairs());
  if (name == "Λ(G10)") return LambdaSet(name, catalog_graph("G10"), lambda_g10_pairs());
  if (name == "Λ′(K10)") return lambda_prime_k10().lambda;
  for (const auto& p : petersen_family_names())
    if (name == "Γ⁽²⁾(" + p + ")") return all_pairs(catalog_graph(p), name);
  fail(ErrorCode::not_found, "unknown catalog lambda set '" + raw + "'");
}

std::string default_lambda_for(const std::string& graph_name) {
  catalog_graph(graph_name);
  if (graph_name[0] == 'G') return "Λ(" + graph_name + ")";
  return "Γ⁽²⁾(" + graph_name + ")";
}

std::string catalog_note(const std::string& graph_name) {
  if (graph_name == "G8" || graph_name == "G9" || graph_name == "G10")
    return "edge set reconstructed as the union of edges used by the Λ list and the proofs; "
           "a drawing with extra edges would only add host edges, which certificates push forward along";
  return {};
}

std::size_t ProofRecipe::class_of(const CyclePair& pair) const {
  if (classes.size() == 1) return 0;
  if (graph == "P8") return pair.type() == std::pair<std::size_t, std::size_t>{5, 3} ? 0 : 1;
  if (graph == "P9") return pair.type() == std::pair<std::size_t, std::size_t>{5, 4} ? 0 : 1;
  if (graph == "G8") return pair.second() == Cycle({4, 5, 6}) ? 1 : 0;
  if (graph == "G10") {
    const auto holds_123 = [](const Cycle& c) { return c.contains(1) && c.contains(2) && c.contains(3); };
    return holds_123(pair.first()) || holds_123(pair.second()) ? 1 : 0;
  }
  fail(ErrorCode::invalid_argument, "no class rule for " + graph);
}

ProofRecipe proof_recipe(const std::string& g) {
  ProofRecipe r;
  r.graph = g;
  r.lambda = default_lambda_for(g);
  const std::vector<std::string> s3xs3{"(1 2 3)", "(4 5 6)"};
  const std::vector<std::string> p9{"(1 6 9)(8 3 5)(2 7 4)", "(4 7 2)(1 8 6 3 9 5)"};
  if (g == "K6") {
    r.classes.push_back({{}, parse_pair("[1 3 5]U[2 4 6]"), std::nullopt});
  } else if (g == "Q7") {
    r.classes.push_back({s3xs3, parse_pair("[1 7 3 5]U[2 4 6]"), std::nullopt});
  } else if (g == "P7") {
    r.classes.push_back({s3xs3, parse_pair("[1 5 2 6]U[7 3 4]"), std::nullopt});
  } else if (g == "Q8") {
    r.classes.push_back({s3xs3, parse_pair("[1 7 3 5]U[2 4 8 6]"), std::nullopt});
  } else if (g == "P8") {
    r.classes.push_back({{"(2 3)", "(4 5)"}, parse_pair("[1 5 2 6 8]U[7 3 4]"), std::nullopt});
    r.classes.push_back({{"(2 3)", "(4 5)", "(1 6)(3 4)(2 5)"}, parse_pair("[8 1 5 7]U[4 2 6 3]"),
                         std::pair{Edge(1, 5), Edge(3, 4)}});
  } else if (g == "P9") {
    r.classes.push_back({p9, parse_pair("[1 8 6 3 4]U[5 2 7 9]"), std::nullopt});
    r.classes.push_back({{"()"}, parse_pair("[1 8 6 3 9 5]U[2 7 4]"), std::pair{Edge(2, 7), Edge(8, 6)}});
  } else if (g == "P10") {
    r.classes.push_back({p9, parse_pair("[1 8 6 3 4]U[5 2 10 7 9]"), std::nullopt});
  } else if (g == "G8") {
    r.classes.push_back({s3xs3, parse_pair("[1 5 3 8 7]U[4 2 6]"), std::nullopt});
    r.classes.push_back({{"(1 2 3)"}, parse_pair("[1 2 3 8 7]U[4 5 6]"), std::pair{Edge(3, 8), Edge(4, 6)}});
  } else if (g == "G9") {
    r.classes.push_back({s3xs3, parse_pair("[1 5 3 8 7]U[4 2 6 9]"), std::nullopt});
  } else if (g == "G10") {
    r.classes.push_back({s3xs3, parse_pair("[1 5 3 8 7]U[4 2 6 10 9]"), std::nullopt});
    r.classes.push_back({s3xs3, parse_pair("[1 2 3 8 7]U[4 5 6 10 9]"), std::pair{Edge(6, 10), Edge(3, 8)}});
  } else {
    fail(ErrorCode::not_found, "no proof recipe for '" + g + "'");
  }
  return r;
}

namespace {

// ΔY and edge-preserving YΔ moves from K6, up to isomorphism.
std::vector<Graph> petersen_closure() {
  std::vector<Graph> family{complete_graph(6)};
  auto known = [&](const Graph& h) {
    return std::any_of(family.begin(), family.end(), [&](const Graph& f) { return is_isomorphic(f, h).has_value(); });
  };
  for (std::size_t i = 0; i < family.size(); ++i) {
    const Graph g = family[i];
    std::vector<Graph> next;
    const auto& vs = g.vertices();
    for (std::size_t a = 0; a < vs.size(); ++a)
      for (std::size_t b = a + 1; b < vs.size(); ++b)
        for (std::size_t c = b + 1; c < vs.size(); ++c)
          if (g.has_edge(vs[a], vs[b]) && g.has_edge(vs[b], vs[c]) && g.has_edge(vs[a], vs[c]))
            next.push_back(delta_y(g, {vs[a], vs[b], vs[c]}, g.max_label() + 1));
    for (Vertex v : vs) {
      const auto& n = g.neighbors(v);
      if (n.size() == 3 && !g.has_edge(n[0], n[1]) && !g.has_edge(n[1], n[2]) && !g.has_edge(n[0], n[2])) {
        // Relabel so the vertex set stays 1..k.
        Graph h = y_delta(g, v);
        std::map<Vertex, Vertex> relabel;
        Vertex next_label = 1;
        for (Vertex x : h.vertices()) relabel[x] = next_label++;
        next.push_back(apply_permutation(VertexPermutation(relabel), h));
      }
    }
    for (Graph& h : next)
      if (!known(h)) family.push_back(std::move(h));
  }
  return family;
}

}  // namespace

std::vector<IntegrityCheck> catalog_integrity() {
  std::vector<IntegrityCheck> out;
  auto check = [&](const std::string& g, std::string what, bool ok) { out.push_back({g, std::move(what), ok}); };

  const std::vector<Graph> closure = petersen_closure();
  check("*", "ΔY/YΔ closure of K6 has exactly 7 isomorphism classes", closure.size() == 7);
  std::set<std::size_t> classes_hit;
  for (const auto& name : petersen_family_names()) {
    const Graph g = catalog_graph(name);
    check(name, "15 edges", g.edge_count() == 15);
    std::size_t hit = closure.size();
    for (std::size_t i = 0; i < closure.size(); ++i)
      if (is_isomorphic(g, closure[i])) hit = i;
    check(name, "isomorphic to a member of the ΔY/YΔ closure of K6", hit < closure.size());
    classes_hit.insert(hit);
  }
  check("*", "Petersen members are pairwise non-isomorphic", classes_hit.size() == 7);
  check("G8", "22 edges", catalog_graph("G8").edge_count() == 22);
  check("G9", "19 edges", catalog_graph("G9").edge_count() == 19);
  check("G10", "29 edges", catalog_graph("G10").edge_count() == 29);

  for (const auto& name : catalog_graph_names()) {
    const Graph g = catalog_graph(name);
    const ProofRecipe r = proof_recipe(name);
    const LambdaSet lam = catalog_lambda(r.lambda);
    std::vector<std::vector<VertexPermutation>> groups;
    for (const WitnessClass& wc : r.classes) {
      check(name, "quoted pair " + wc.representative.to_string() + " exists", wc.representative.is_valid_in(g));
      check(name, "quoted pair " + wc.representative.to_string() + " is in " + r.lambda, lam.contains(wc.representative));
      std::vector<VertexPermutation> gens;
      for (const auto& text : wc.generators) {
        gens.push_back(VertexPermutation::from_cycles(text, g.vertices()));
        check(name, "quoted permutation " + text + " is an automorphism", gens.back().is_automorphism_of(g));
      }
      groups.push_back(wc.generators.empty() ? automorphism_group(g) : generate_group(gens, g.vertices()));
    }
    bool transitive = true;
    for (const CyclePair& p : lam.pairs) {
      const std::size_t c = r.class_of(p);
      transitive = transitive && find_mapping(groups[c], p, r.classes[c].representative).has_value();
    }
    check(name, "every pair of " + r.lambda + " is carried onto its class representative", transitive);
    for (const WitnessClass& wc : r.classes) {
      if (!wc.flip_edges) continue;
      std::vector<CyclePair> separating;
      for (const CyclePair& p : lam.pairs)
        if (p.separates(wc.flip_edges->first, wc.flip_edges->second)) separating.push_back(p);
      std::vector<CyclePair> expected{r.classes[0].representative, wc.representative};
      std::sort(expected.begin(), expected.end());
      check(name,
            "only the two representatives separate edges " + wc.flip_edges->first.id() + " and " +
                wc.flip_edges->second.id(),
            separating == expected);
    }
  }

  for (const char* name : {"G8", "G9", "G10"}) {
    const LambdaSet lam = catalog_lambda(std::string("Λ(") + name + ")");
    const auto type = lam.pairs.front().type();
    bool uniform = true;
    for (const CyclePair& p : lam.pairs) uniform = uniform && p.type() == type && p.is_hamiltonian_in(lam.host);
    check(name, "all pairs of the Λ list are Hamiltonian of one type", uniform);
    check(name, "Λ list is a proper subset of its Γ_{p,q}",
          lam.size() < enumerate_pairs(lam.host, {type, true}).size());
  }
  {
    const auto gamma = enumerate_pairs(catalog_graph("P9"));
    const CyclePair mu = parse_pair("[1 8 6 3 9 5]U[2 7 4]");
    const auto only54 = std::count_if(gamma.begin(), gamma.end(), [](const CyclePair& p) {
      return p.type() == std::pair<std::size_t, std::size_t>{5, 4};
    });
    check("P9", "Γ⁽²⁾(P9) is Γ_{5,4}(P9) plus the single (6,3) pair", std::find(gamma.begin(), gamma.end(), mu) != gamma.end() &&
                                                                       static_cast<std::size_t>(only54) + 1 == gamma.size());
  }
  return out;
}

CompleteConstruction lambda_for_complete(int p, int q) {
  auto supported = [](int a, int b) { return (a >= 5 && b == 3) || (a >= 3 && b == 4) || (a >= 5 && b >= 5); };
  if (!supported(p, q) && supported(q, p)) std::swap(p, q);
  if (!supported(p, q))
    fail(ErrorCode::invalid_argument, "no construction for (" + std::to_string(p) + "," + std::to_string(q) + ")");
  CompleteConstruction c;
  c.type = {p, q};
  const int n = p + q;
  std::string gadget;
  if (q == 3) gadget = "G8";
  else if (q == 4 && p == 3) gadget = "P7";
  else if (q == 4 && p == 4) gadget = "Q8";
  else if (q == 4) gadget = "G9";
  else gadget = "G10";
  c.gadget = gadget;
  const Graph base = catalog_graph(gadget);
  MinorMap m = identity_minor_map(base);
  Graph current = base;
  Vertex next_label = base.max_label() + 1;
  auto subdivide = [&](const Edge& e, int k) {
    if (k <= 0) return;
    auto [g2, step] = subdivide_edge(current, e, k, next_label);
    m = compose(m, step);
    current = g2;
    next_label += k;
  };
  if (gadget[0] == 'G') subdivide(Edge(7, 8), p - 5);
  if (gadget == "G10") subdivide(Edge(9, 10), q - 5);
  c.map = into_complete_graph(m, n);
  c.host = c.map.host;
  const LambdaSet minor_lambda = catalog_lambda(default_lambda_for(gadget));
  c.lambda = psi_lambda(c.map, minor_lambda, "Λ(K" + std::to_string(n) + ";" + std::to_string(p) + "," + std::to_string(q) + ")");
  return c;
}

CompleteConstruction lambda_prime_k10() {
  CompleteConstruction c;
  c.gadget = "P10";
  c.type = {5, 5};
  c.map = into_complete_graph(identity_minor_map(catalog_graph("P10")), 10);
  c.host = c.map.host;
  c.lambda = psi_lambda(c.map, all_pairs(catalog_graph("P10"), "Γ⁽²⁾(P10)"), "Λ′(K10)");
  return c;
}

}  // namespace linkset
