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
#include "linkset/commands.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "linkset/assets.hpp"
#include "linkset/catalog.hpp"
#include "linkset/certificates.hpp"
#include "linkset/error.hpp"

namespace linkset {

namespace {

std::string lambda_host_name(const std::string& lambda) {
  const auto open = lambda.find('(');
  const auto close = lambda.rfind(')');
  return lambda.substr(open + 1, close - open - 1);
}

std::size_t expected_size(const std::string& gadget) {
  if (gadget == "G8") return 12;
  if (gadget == "G10") return 18;
  if (gadget == "P10") return 6;
  return 9;
}

std::string scalar_text(const Json& x) { return x.is_string() ? x.get<std::string>() : x.dump(); }

std::string one_line(const Json& obj) {
  std::string line;
  for (const auto& [k, v] : obj.items()) {
    if (!line.empty()) line += ", ";
    if (k == "passed") line += v.get<bool>() ? "PASS" : "FAIL";
    else if (!v.is_structured()) line += k + " " + scalar_text(v);
    else if (v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& y) { return !y.is_structured(); })) {
      line += k;
      for (const Json& y : v) line += " " + scalar_text(y);
    } else line += k + " (" + std::to_string(v.size()) + ")";
  }
  return line;
}

void render(std::ostringstream& out, const Json& j, int depth) {
  constexpr std::size_t kListed = 20;
  const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  for (const auto& [key, value] : j.items()) {
    if (key == "kind" || key == "passed") continue;
    if (value.is_object()) {
      out << pad << key;
      if (value.contains("passed")) out << ": " << (value["passed"].get<bool>() ? "PASS" : "FAIL");
      out << "\n";
      render(out, value, depth + 1);
    } else if (value.is_array()) {
      const bool scalars = std::all_of(value.begin(), value.end(), [](const Json& x) { return !x.is_structured(); });
      if (value.empty()) {
        out << pad << key << ": none\n";
      } else if (scalars && value.size() <= 12) {
        out << pad << key << ":";
        for (const Json& x : value) out << " " << scalar_text(x);
        out << "\n";
      } else {
        out << pad << key << ": " << value.size() << " entries\n";
        std::size_t shown = 0;
        for (const Json& x : value) {
          const bool failed = x.is_object() && x.contains("passed") && !x["passed"].get<bool>();
          if (value.size() > kListed && !failed) continue;
          if (++shown > kListed) break;
          out << pad << "  - " << (x.is_object() ? one_line(x) : scalar_text(x)) << "\n";
        }
      }
    } else {
      out << pad << key << ": " << scalar_text(value) << "\n";
    }
  }
}

Json with_kind(const std::string& kind, bool passed, Json body) {
  Json out = {{"kind", kind}, {"passed", passed}};
  for (auto& [k, v] : body.items())
    if (k != "kind" && k != "passed") out[k] = std::move(v);
  return out;
}

bool same_pairs(const LambdaSet& a, const LambdaSet& b) { return a.host == b.host && a.pairs == b.pairs; }

}  // namespace

Json Report::to_json() const { return with_kind(kind, passed, body); }

std::string Report::text() const {
  std::ostringstream out;
  out << kind << ": " << (passed ? "PASS" : "FAIL") << "\n";
  render(out, body, 1);
  return out.str();
}

std::string digest_hex(const std::string& data) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : data) h = (h ^ c) * 1099511628211ULL;
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Json catalog_listing() {
  Json graphs = Json::array();
  for (const std::string& name : catalog_graph_names()) {
    const Graph g = catalog_graph(name);
    Json entry = {{"name", name},
                  {"vertices", g.vertex_count()},
                  {"edges", g.edge_count()},
                  {"lambda", default_lambda_for(name)}};
    if (!catalog_note(name).empty()) entry["note"] = catalog_note(name);
    graphs.push_back(entry);
  }
  Json lambdas = Json::array();
  for (const std::string& name : catalog_lambda_names())
    lambdas.push_back({{"name", name}, {"graph", lambda_host_name(name)}, {"size", catalog_lambda(name).size()}});
  return {{"graphs", graphs}, {"lambdas", lambdas}};
}

Json catalog_export(const std::string& name) {
  const auto& graphs = catalog_graph_names();
  if (std::find(graphs.begin(), graphs.end(), name) != graphs.end()) {
    Json j = to_json(catalog_graph(name));
    if (!catalog_note(name).empty()) j["note"] = catalog_note(name);
    return j;
  }
  if (name.rfind("h_", 0) == 0) return to_json(load_witness(name.substr(2)));
  const std::string suffix = ".battery";
  if (name.size() > suffix.size() && name.compare(name.size() - suffix.size(), suffix.size(), suffix) == 0)
    return to_json(load_bundle(name.substr(0, name.size() - suffix.size())));
  return to_json(catalog_lambda(name));
}

Json enumerate(const Graph& g, std::optional<std::pair<int, int>> type, bool hamiltonian_only,
               std::optional<int> cycle_length) {
  Json out = {{"vertices", g.vertex_count()}, {"edges", g.edge_count()}};
  if (cycle_length) {
    Json cycles = Json::array();
    std::optional<std::size_t> len;
    if (*cycle_length > 0) len = static_cast<std::size_t>(*cycle_length);
    for (const Cycle& c : enumerate_cycles(g, len)) cycles.push_back(c.to_string());
    out["count"] = cycles.size();
    out["cycles"] = cycles;
    return out;
  }
  PairFilter f;
  if (type) {
    auto [p, q] = *type;
    if (p < q) std::swap(p, q);
    f.type = std::pair<std::size_t, std::size_t>(static_cast<std::size_t>(p), static_cast<std::size_t>(q));
  }
  f.hamiltonian_only = hamiltonian_only;
  Json pairs = Json::array();
  for (const CyclePair& p : enumerate_pairs(g, f)) pairs.push_back(p.to_string());
  out["count"] = pairs.size();
  out["pairs"] = pairs;
  return out;
}

Report run_verify_linked(const Graph& g, const LambdaSet& lam, const Diagram& witness) {
  const LinkedReport r = verify_linked(g, lam, witness);
  Json body = to_json(r);
  body["inputsDigest"] = digest_hex(to_json(g).dump() + to_json(lam).dump() + to_json(witness).dump());
  return {"linked", r.passed(), body};
}

Report run_verify_minimal(const Graph& g, const CertificateBundle& bundle, int jobs) {
  Json body;
  body["inputsDigest"] = digest_hex(to_json(g).dump() + to_json(bundle).dump());
  if (!(bundle.graph == g) || !(bundle.lambda.host == g))
    fail(ErrorCode::invalid_argument, "bundle is not built on the given graph");
  const LinkedReport linked = verify_linked(g, bundle.lambda, bundle.witness);
  const MinimalReport minimal = verify_minimal(g, bundle.lambda, bundle.as_battery(), jobs);
  const bool digest_ok = bundle.parity_digest.empty() || bundle.parity_digest == parity_digest(linked.parity);
  body["lambda"] = bundle.lambda.name;
  body["parityDigestMatches"] = digest_ok;
  body["linked"] = to_json(linked);
  body["battery"] = to_json(minimal);
  return {"minimal", linked.passed() && minimal.passed() && digest_ok, body};
}

Report run_splitting_count(const Graph& g) {
  const SplittingReport r = splitting_count_check(g);
  Json body = to_json(r);
  body["inputsDigest"] = digest_hex(to_json(g).dump());
  return {"splitting-count", r.passed(), body};
}

Report run_monte_carlo(const Graph& g, const LambdaSet& lam, std::size_t trials, std::uint64_t seed, int jobs) {
  const MonteCarloReport r = monte_carlo_sigma(g, lam, trials, seed, jobs);
  Json body = to_json(r);
  body["lambda"] = lam.name;
  body["inputsDigest"] = digest_hex(to_json(g).dump() + to_json(lam).dump());
  return {"montecarlo", r.constant_one(), body};
}

namespace {

struct ConstructionOutcome {
  Json report;
  Json file;
  bool passed = false;
};

ConstructionOutcome build_one(const CompleteConstruction& c, const Bounds& bounds, int jobs) {
  ConstructionOutcome out;
  const int n = static_cast<int>(c.host.vertex_count());
  const std::size_t want = expected_size(c.gadget);
  bool ok = c.lambda.size() == want;
  bool types_ok = true;
  const int longer = std::max(c.type.first, c.type.second);
  const int shorter = std::min(c.type.first, c.type.second);
  for (const CyclePair& p : c.lambda.pairs) {
    const auto t = p.type();  // longer cycle first
    types_ok = types_ok && static_cast<int>(t.first) == longer && static_cast<int>(t.second) == shorter &&
               p.is_hamiltonian_in(c.host);
  }
  ok = ok && types_ok;
  out.report = {{"type", {c.type.first, c.type.second}},
                {"gadget", c.gadget},
                {"host", "K" + std::to_string(n)},
                {"lambda", c.lambda.name},
                {"lambdaSize", c.lambda.size()},
                {"expectedSize", want},
                {"hamiltonianOfType", types_ok}};
  if (n <= bounds.parity_max_n) {
    const bool even = parity_table(c.host, c.lambda).all_even();
    out.report["parity"] = even ? "all even" : "odd counts";
    ok = ok && even;
  } else {
    out.report["parity"] = "skipped";
  }
  out.file = {{"type", {c.type.first, c.type.second}},
              {"gadget", c.gadget},
              {"lambda", to_json(c.lambda)},
              {"minorMap", to_json(c.map)}};
  if (n <= bounds.battery_max_n) {
    const CertificateBundle minor = load_bundle(c.gadget);
    const LiftResult lifted = lift_battery(c.map, minor.as_certificate(), minor.as_battery(), c.lambda.name, jobs);
    const bool same = same_pairs(lifted.certificate.lambda, c.lambda);
    out.report["certificates"] = lifted.passed() && same ? "lifted and re-verified" : "lift failed";
    out.report["linked"] = {{"passed", lifted.linked.passed()},
                            {"witnessSum", lifted.linked.witness_sum},
                            {"strictProfile", lifted.linked.strict_profile}};
    out.report["battery"] = {{"passed", lifted.minimal.passed()}, {"specs", lifted.minimal.specs.size()}};
    ok = ok && same && lifted.passed();
    out.file["certificates"] =
        to_json(CertificateBundle{c.host, lifted.certificate.lambda, lifted.certificate.witness, lifted.battery.specs, {}});
  } else {
    out.report["certificates"] = "skipped";
  }
  out.report["passed"] = ok;
  out.passed = ok;
  return out;
}

}  // namespace

Report run_construct(int p, int q, const Bounds& bounds, int jobs, Json* output) {
  std::vector<CompleteConstruction> todo{lambda_for_complete(p, q)};
  if (todo.front().type == std::pair<int, int>{5, 5}) todo.push_back(lambda_prime_k10());
  Json reports = Json::array();
  Json files = Json::array();
  bool passed = true;
  for (const CompleteConstruction& c : todo) {
    ConstructionOutcome o = build_one(c, bounds, jobs);
    passed = passed && o.passed;
    reports.push_back(std::move(o.report));
    files.push_back(std::move(o.file));
  }
  if (output) *output = {{"constructions", files}};
  return {"construct", passed, {{"requested", {p, q}}, {"constructions", reports}}};
}

Report run_verify_lift(const Json& file, const Bounds& bounds, int jobs) {
  Json reports = Json::array();
  bool passed = true;
  const Json list = file.is_object() && file.contains("constructions") ? file.at("constructions") : Json::array({file});
  for (const Json& entry : list) {
    const LambdaSet lam = lambda_from_json(entry.at("lambda"));
    const MinorMap m = minor_map_from_json(entry.at("minorMap"));
    const std::string gadget = entry.at("gadget").get<std::string>();
    const LambdaSet pushed = psi_lambda(m, catalog_lambda(default_lambda_for(gadget)), lam.name);
    const bool image_ok = same_pairs(pushed, lam) && m.minor == catalog_graph(gadget);
    const int n = static_cast<int>(lam.host.vertex_count());
    Json r = {{"gadget", gadget}, {"lambda", lam.name}, {"lambdaSize", lam.size()}, {"isPsiImage", image_ok}};
    bool ok = image_ok;
    if (n <= bounds.parity_max_n) {
      const bool even = parity_table(lam.host, lam).all_even();
      r["parity"] = even ? "all even" : "odd counts";
      ok = ok && even;
    } else {
      r["parity"] = "skipped";
    }
    if (entry.contains("certificates")) {
      const CertificateBundle b = bundle_from_json(entry.at("certificates"));
      const Report v = run_verify_minimal(lam.host, b, jobs);
      const bool same = same_pairs(b.lambda, lam);
      r["certificates"] = v.passed && same ? "re-verified" : "failed";
      ok = ok && same && v.passed;
    } else {
      r["certificates"] = "absent";
    }
    r["passed"] = ok;
    passed = passed && ok;
    reports.push_back(r);
  }
  return {"lift", passed, {{"inputsDigest", digest_hex(file.dump())}, {"constructions", reports}}};
}

}  // namespace linkset
