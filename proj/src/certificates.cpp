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
#include "linkset/certificates.hpp"

#include <algorithm>
#include <set>

#include "linkset/embedding.hpp"
#include "linkset/error.hpp"
#include "linkset/transforms.hpp"
#include "parallel.hpp"
#include "prng.hpp"

namespace linkset {

bool ParityTable::all_even() const {
  return std::all_of(counts.begin(), counts.end(), [](const auto& kv) { return kv.second % 2 == 0; });
}

std::vector<EdgePair> ParityTable::odd_pairs() const {
  std::vector<EdgePair> out;
  for (const auto& [key, n] : counts)
    if (n % 2 != 0) out.push_back(key);
  return out;
}

ParityTable parity_table(const Graph& g, const LambdaSet& lam) {
  if (!(lam.host == g)) fail(ErrorCode::invalid_argument, lam.name + " is not hosted on the given graph");
  ParityTable t{g, lam.name, {}};
  const auto& edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j)
      if (!edges[i].shares_vertex(edges[j])) t.counts[{edges[i], edges[j]}] = 0;
  for (const CyclePair& p : lam.pairs) {
    for (const Edge& e : p.first().edges())
      for (const Edge& f : p.second().edges()) ++t.counts.at(e < f ? EdgePair{e, f} : EdgePair{f, e});
  }
  return t;
}

LinkedReport verify_linked(const Graph& g, const LambdaSet& lam, const Diagram& witness) {
  if (!(witness.host() == g)) fail(ErrorCode::invalid_argument, "witness diagram is not drawn on the given graph");
  validate_diagram(witness);
  LinkedReport r;
  r.parity = parity_table(g, lam);
  r.parity_even = r.parity.all_even();
  int sum = 0;
  int hopf = 0;
  bool others_split = true;
  for (const CyclePair& p : lam.pairs) {
    PairVerdict v{p, linking_number(witness, p), split_certify(witness, p)};
    sum += v.lk;
    if (v.lk == 1 || v.lk == -1) ++hopf;
    else if (!v.split.is_split()) others_split = false;
    r.pairs.push_back(std::move(v));
  }
  r.witness_sum = ((sum % 2) + 2) % 2;
  r.strict_profile = hopf == 1 && others_split;
  return r;
}

bool MinimalReport::passed() const {
  return problems.empty() && !specs.empty() &&
         std::all_of(specs.begin(), specs.end(), [](const SpecResult& s) { return s.passed(); });
}

MinimalReport verify_minimal(const Graph& g, const LambdaSet& lam, const MinimalityBattery& battery, int jobs) {
  MinimalReport r;
  if (!(lam.host == g)) r.problems.push_back(lam.name + " is not hosted on the given graph");
  if (!(battery.base.host() == g)) r.problems.push_back("base diagram is not drawn on the given graph");
  if (!r.problems.empty()) return r;
  try {
    validate_diagram(battery.base);
  } catch (const Error& e) {
    r.problems.push_back(std::string("invalid base diagram: ") + e.what());
    return r;
  }
  std::map<CyclePair, const WitnessSpec*> by_target;
  for (const WitnessSpec& s : battery.specs) {
    if (!lam.contains(s.target)) r.problems.push_back("spec target " + s.target.to_string() + " is not in " + lam.name);
    else if (!by_target.emplace(s.target, &s).second)
      r.problems.push_back("two specs for " + s.target.to_string());
  }
  for (const CyclePair& p : lam.pairs)
    if (!by_target.count(p)) r.problems.push_back("no witness spec for " + p.to_string());
  if (!r.problems.empty()) return r;

  r.specs.resize(lam.size());
  detail::parallel_for(lam.size(), jobs, [&](std::size_t i) {
    const WitnessSpec& spec = *by_target.at(lam.pairs[i]);
    SpecResult& out = r.specs[i];
    out.target = spec.target;
    if (!spec.sigma.is_automorphism_of(g)) {
      out.problem = "sigma " + spec.sigma.to_cycle_notation() + " is not an automorphism";
      return;
    }
    Diagram d;
    try {
      d = flip_crossings(battery.base, spec.flips);
    } catch (const Error& e) {
      out.problem = e.what();
      return;
    }
    out.image = apply_permutation(spec.sigma, spec.target);
    out.lk = linking_number(d, out.image);
    for (const CyclePair& other : lam.pairs) {
      if (other == spec.target) continue;
      const SplitCertificate c = split_certify(d, apply_permutation(spec.sigma, other));
      if (!c.is_split()) out.unsplit.emplace_back(other, c);
    }
  });
  return r;
}

MinimalityBattery build_battery(const ProofRecipe& recipe, const LambdaSet& lam, const Diagram& base) {
  const Graph& g = lam.host;
  std::vector<std::vector<VertexPermutation>> groups;
  std::vector<std::vector<CrossingKey>> flips;
  for (const WitnessClass& c : recipe.classes) {
    if (c.generators.empty()) {
      groups.push_back(automorphism_group(g));
    } else {
      std::vector<VertexPermutation> gens;
      for (const std::string& s : c.generators) gens.push_back(VertexPermutation::from_cycles(s, g.vertices()));
      groups.push_back(generate_group(gens, g.vertices()));
    }
    std::vector<CrossingKey> keys;
    if (c.flip_edges) {
      const auto [e, f] = *c.flip_edges;
      for (const Crossing& x : base.crossings()) {
        const Edge& a = x.key.a.edge;
        const Edge& b = x.key.b.edge;
        if ((a == e && b == f) || (a == f && b == e)) keys.push_back(x.key);
      }
      if (keys.size() != 1)
        fail(ErrorCode::verification_failed, "expected one crossing between " + e.id() + " and " + f.id() + ", found " +
                                                 std::to_string(keys.size()));
    }
    flips.push_back(std::move(keys));
  }
  MinimalityBattery b{lam, base, {}};
  for (const CyclePair& p : lam.pairs) {
    const std::size_t k = recipe.class_of(p);
    const auto sigma = find_mapping(groups[k], p, recipe.classes[k].representative);
    if (!sigma)
      fail(ErrorCode::verification_failed, "no group element sends " + p.to_string() + " to " +
                                               recipe.classes[k].representative.to_string());
    b.specs.push_back({p, *sigma, flips[k]});
  }
  return b;
}

VertexPermutation lift_permutation(const MinorMap& m, const VertexPermutation& sigma) {
  std::map<Vertex, Vertex> img;
  for (Vertex v : m.host.vertices()) img[v] = v;
  for (Vertex v : m.minor.vertices()) img[m.image(v)] = m.image(sigma(v));
  for (const Edge& e : m.minor.edges()) {
    const std::vector<Vertex>& from = m.path(e);
    const Edge target(sigma(e.u), sigma(e.v));
    if (!m.minor.has_edge(target)) fail(ErrorCode::verification_failed, "sigma is not an automorphism of the minor");
    const std::vector<Vertex>& to = m.path(target);
    if (from.size() != to.size())
      fail(ErrorCode::verification_failed, "sigma sends edge " + e.id() + " to " + target.id() +
                                               " whose subdivision differs");
    const bool same = sigma(e.u) == target.u;
    for (std::size_t j = 1; j + 1 < from.size(); ++j) img[from[j]] = same ? to[j] : to[to.size() - 1 - j];
  }
  VertexPermutation out(img);
  if (!out.is_automorphism_of(m.host))
    fail(ErrorCode::verification_failed, "lifted permutation is not an automorphism of the host");
  return out;
}

LiftResult lift_battery(const MinorMap& m, const LinkednessCertificate& cert, const MinimalityBattery& battery,
                        std::string lambda_name, int jobs) {
  LiftResult r;
  r.certificate.lambda = psi_lambda(m, cert.lambda, lambda_name);
  r.certificate.witness = extend_diagram(cert.witness, m);
  r.battery.lambda = psi_lambda(m, battery.lambda, std::move(lambda_name));
  r.battery.base = battery.base == cert.witness ? r.certificate.witness : extend_diagram(battery.base, m);
  for (const WitnessSpec& s : battery.specs) {
    WitnessSpec lifted{psi_pair_map(m, s.target), lift_permutation(m, s.sigma), {}};
    for (const CrossingKey& k : s.flips) lifted.flips.push_back(corresponding_key(battery.base, r.battery.base, k));
    r.battery.specs.push_back(std::move(lifted));
  }
  r.linked = verify_linked(m.host, r.certificate.lambda, r.certificate.witness);
  r.minimal = verify_minimal(m.host, r.battery.lambda, r.battery, jobs);
  return r;
}

bool SplittingReport::passed() const {
  return std::all_of(rows.begin(), rows.end(), [&](const SplittingRow& row) { return row.count > base_count; });
}

SplittingReport splitting_count_check(const Graph& p) {
  SplittingReport r;
  r.base_count = enumerate_pairs(p).size();
  for (Vertex v : p.vertices()) {
    if (p.degree(v) < 4) continue;
    for (const VertexSplitting& s : vertex_splittings(p, v)) {
      if (s.trivial || s.leaf) continue;
      r.rows.push_back({v, s.side_a, s.side_b, enumerate_pairs(s.graph).size()});
    }
  }
  return r;
}

std::uint64_t trial_seed(std::uint64_t master, std::uint64_t i) {
  return detail::splitmix64(detail::splitmix64(master) ^ i);
}

MonteCarloReport monte_carlo_sigma(const Graph& g, const LambdaSet& lam, std::size_t trials, std::uint64_t master_seed,
                                   int jobs) {
  MonteCarloReport r;
  r.master_seed = master_seed;
  r.parity_even = parity_table(g, lam).all_even();
  r.sigma.assign(trials, 0);
  detail::parallel_for(trials, jobs, [&](std::size_t i) {
    const LinearEmbedding e = random_linear_embedding(g, trial_seed(master_seed, i));
    const Diagram d = project_generic(e).first;
    int sum = 0;
    for (const CyclePair& p : lam.pairs) sum += linking_number(d, p);
    r.sigma[i] = ((sum % 2) + 2) % 2;
  });
  for (int s : r.sigma) ++r.histogram[s];
  return r;
}

}  // namespace linkset
