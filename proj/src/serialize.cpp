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
#include "linkset/serialize.hpp"

#include <fstream>
#include <sstream>

#include "linkset/error.hpp"
#include "linkset/permutation.hpp"

namespace linkset {

namespace {

template <class Fn>
auto guarded(const char* what, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Json::exception& e) {
    fail(ErrorCode::parse_error, std::string("malformed ") + what + ": " + e.what());
  }
}

Json edge_json(const Edge& e) { return Json::array({e.u, e.v}); }

Edge edge_from(const Json& j) {
  if (!j.is_array() || j.size() != 2) fail(ErrorCode::parse_error, "edge must be a two-element array");
  return Edge(j[0].get<int>(), j[1].get<int>());
}

Edge edge_from_id(const std::string& id) {
  const auto dash = id.find('-');
  if (dash == std::string::npos) fail(ErrorCode::parse_error, "bad edge id '" + id + "'");
  try {
    return Edge(std::stoi(id.substr(0, dash)), std::stoi(id.substr(dash + 1)));
  } catch (const std::logic_error&) {
    fail(ErrorCode::parse_error, "bad edge id '" + id + "'");
  }
}

Json point_json(const Point2& p) { return Json::array({format_rational(p.x), format_rational(p.y)}); }

Point2 point_from(const Json& j) {
  if (!j.is_array() || j.size() != 2) fail(ErrorCode::parse_error, "point must be a two-element array");
  return {parse_rational(j[0].get<std::string>()), parse_rational(j[1].get<std::string>())};
}

Json mapping_json(const std::map<Vertex, Vertex>& m) {
  Json out = Json::array();
  for (const auto& [a, b] : m) out.push_back(Json::array({a, b}));
  return out;
}

std::map<Vertex, Vertex> mapping_from(const Json& j) {
  std::map<Vertex, Vertex> out;
  for (const Json& kv : j) {
    if (!kv.is_array() || kv.size() != 2) fail(ErrorCode::parse_error, "mapping entries must be [from, to]");
    if (!out.emplace(kv[0].get<int>(), kv[1].get<int>()).second)
      fail(ErrorCode::parse_error, "mapping lists a vertex twice");
  }
  return out;
}

std::string edge_pair_text(const EdgePair& p) { return p.first.id() + "/" + p.second.id(); }

}  // namespace

Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back(edge_json(e));
  return {{"vertices", g.vertices()}, {"edges", edges}};
}

Graph graph_from_json(const Json& j) {
  return guarded("graph", [&] {
    std::vector<Edge> edges;
    for (const Json& e : j.at("edges")) edges.push_back(edge_from(e));
    return Graph(j.at("vertices").get<std::vector<Vertex>>(), edges);
  });
}

Json to_json(const Cycle& c) { return c.vertices(); }

Json to_json(const CyclePair& p) { return Json::array({to_json(p.first()), to_json(p.second())}); }

CyclePair pair_from_json(const Json& j) {
  return guarded("cycle pair", [&] {
    if (!j.is_array() || j.size() != 2) fail(ErrorCode::parse_error, "pair must hold two cycles");
    return CyclePair(Cycle(j[0].get<std::vector<Vertex>>()), Cycle(j[1].get<std::vector<Vertex>>()));
  });
}

Json to_json(const LambdaSet& lam) {
  Json pairs = Json::array();
  for (const CyclePair& p : lam.pairs) pairs.push_back(to_json(p));
  return {{"name", lam.name}, {"graph", to_json(lam.host)}, {"pairs", pairs}};
}

LambdaSet lambda_from_json(const Json& j) {
  return guarded("lambda set", [&] {
    std::vector<CyclePair> pairs;
    for (const Json& p : j.at("pairs")) pairs.push_back(pair_from_json(p));
    return LambdaSet(j.at("name").get<std::string>(), graph_from_json(j.at("graph")), pairs);
  });
}

Json to_json(const Diagram& d) {
  Json placement = Json::object();
  for (const auto& [v, p] : d.placement()) placement[std::to_string(v)] = point_json(p);
  Json routes = Json::object();
  for (const auto& [e, pts] : d.routes()) {
    Json line = Json::array();
    for (const Point2& p : pts) line.push_back(point_json(p));
    routes[e.id()] = line;
  }
  Json over = Json::object();
  for (const auto& [k, v] : d.over_map()) over[k] = v;
  return {{"graph", to_json(d.host())}, {"placement", placement}, {"routes", routes}, {"over", over}};
}

Diagram diagram_from_json(const Json& j) {
  return guarded("diagram", [&] {
    Graph g = graph_from_json(j.at("graph"));
    Placement placement;
    for (const auto& [k, v] : j.at("placement").items()) {
      try {
        placement[std::stoi(k)] = point_from(v);
      } catch (const std::logic_error&) {
        fail(ErrorCode::parse_error, "bad vertex label '" + k + "'");
      }
    }
    Routes routes;
    for (const auto& [k, v] : j.at("routes").items()) {
      std::vector<Point2> pts;
      for (const Json& p : v) pts.push_back(point_from(p));
      routes[edge_from_id(k)] = pts;
    }
    std::map<std::string, std::string> over;
    for (const auto& [k, v] : j.at("over").items()) over[k] = v.get<std::string>();
    return Diagram::create(std::move(g), std::move(placement), std::move(routes), over);
  });
}

Json to_json(const MinorMap& m) {
  Json sub = Json::array();
  for (const Edge& e : m.subgraph_edges) sub.push_back(edge_json(e));
  Json expansion = Json::object();
  for (const auto& [e, path] : m.expansion) expansion[e.id()] = path;
  return {{"minor", to_json(m.minor)},
          {"host", to_json(m.host)},
          {"subgraphEdges", sub},
          {"expansion", expansion},
          {"vertexImage", mapping_json(m.vertex_image)}};
}

MinorMap minor_map_from_json(const Json& j) {
  return guarded("minor map", [&] {
    MinorMap m;
    m.minor = graph_from_json(j.at("minor"));
    m.host = graph_from_json(j.at("host"));
    for (const Json& e : j.at("subgraphEdges")) m.subgraph_edges.push_back(edge_from(e));
    for (const auto& [k, v] : j.at("expansion").items()) m.expansion[edge_from_id(k)] = v.get<std::vector<Vertex>>();
    m.vertex_image = mapping_from(j.at("vertexImage"));
    m.validate();
    return m;
  });
}

Json parity_digest(const ParityTable& t) {
  Json out = Json::array();
  for (const auto& [key, n] : t.counts)
    out.push_back(Json::array({Json::array({edge_json(key.first), edge_json(key.second)}), n}));
  return out;
}

Json to_json(const CertificateBundle& b) {
  Json battery = Json::array();
  for (const WitnessSpec& s : b.battery) {
    Json flips = Json::array();
    for (const CrossingKey& k : s.flips) flips.push_back(k.to_string());
    battery.push_back({{"target", to_json(s.target)}, {"sigma", mapping_json(s.sigma.mapping())}, {"flips", flips}});
  }
  return {{"graph", to_json(b.graph)},
          {"lambda", to_json(b.lambda)},
          {"witnessDiagram", to_json(b.witness)},
          {"parityDigest", parity_digest(parity_table(b.graph, b.lambda))},
          {"battery", battery}};
}

CertificateBundle bundle_from_json(const Json& j) {
  return guarded("certificate bundle", [&] {
    CertificateBundle b;
    b.graph = graph_from_json(j.at("graph"));
    b.lambda = lambda_from_json(j.at("lambda"));
    b.witness = diagram_from_json(j.at("witnessDiagram"));
    b.parity_digest = j.value("parityDigest", Json::array());
    for (const Json& s : j.at("battery")) {
      WitnessSpec spec{pair_from_json(s.at("target")), VertexPermutation(mapping_from(s.at("sigma"))), {}};
      for (const Json& k : s.at("flips")) spec.flips.push_back(CrossingKey::parse(k.get<std::string>()));
      b.battery.push_back(std::move(spec));
    }
    return b;
  });
}

Json to_json(const LinkedReport& r) {
  Json odd = Json::array();
  for (const EdgePair& p : r.parity.odd_pairs()) odd.push_back(edge_pair_text(p));
  Json pairs = Json::array();
  for (const PairVerdict& v : r.pairs)
    pairs.push_back({{"pair", v.pair.to_string()}, {"lk", v.lk}, {"split", v.split.to_string()}});
  return {{"kind", "linked"},
          {"passed", r.passed()},
          {"lambda", r.parity.lambda},
          {"lambdaSize", r.pairs.size()},
          {"parityEven", r.parity_even},
          {"oddEdgePairs", odd},
          {"witnessSum", r.witness_sum},
          {"strictProfile", r.strict_profile},
          {"pairs", pairs}};
}

Json to_json(const MinimalReport& r) {
  Json specs = Json::array();
  for (const SpecResult& s : r.specs) {
    Json unsplit = Json::array();
    for (const auto& [p, c] : s.unsplit) unsplit.push_back({{"pair", p.to_string()}, {"verdict", c.to_string()}});
    Json entry = {{"target", s.target.to_string()},
                  {"image", s.image.to_string()},
                  {"lk", s.lk},
                  {"passed", s.passed()},
                  {"unsplit", unsplit}};
    if (!s.problem.empty()) entry["problem"] = s.problem;
    specs.push_back(entry);
  }
  return {{"kind", "minimal"}, {"passed", r.passed()}, {"problems", r.problems}, {"specs", specs}};
}

Json to_json(const SplittingReport& r) {
  Json rows = Json::array();
  for (const SplittingRow& row : r.rows)
    rows.push_back({{"vertex", row.vertex}, {"sideA", row.side_a}, {"sideB", row.side_b}, {"count", row.count}});
  return {{"kind", "splitting-count"},
          {"passed", r.passed()},
          {"baseCount", r.base_count},
          {"splittings", r.rows.size()},
          {"rows", rows}};
}

Json to_json(const MonteCarloReport& r) {
  Json hist = Json::object();
  for (const auto& [s, n] : r.histogram) hist[std::to_string(s)] = n;
  return {{"kind", "montecarlo"},
          {"passed", r.constant_one()},
          {"parityEven", r.parity_even},
          {"trials", r.sigma.size()},
          {"masterSeed", r.master_seed},
          {"histogram", hist}};
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    fail(ErrorCode::parse_error, std::string("invalid JSON: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::io_error, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::io_error, "cannot write " + path);
  out << text;
  if (!out) fail(ErrorCode::io_error, "write to " + path + " failed");
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace linkset
