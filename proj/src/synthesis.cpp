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
#include "linkset/synthesis.hpp"

#include <boost/dynamic_bitset.hpp>
#include <optional>
#include <random>
#include <set>

#include "linkset/error.hpp"
#include "prng.hpp"

namespace linkset {

namespace {

using Row = boost::dynamic_bitset<>;  // variables, then the right-hand side in the last bit

/// Solution of the system with free variables drawn from rng, or nothing when
/// it is inconsistent.
std::optional<std::vector<bool>> solve_gf2(std::vector<Row> rows, std::size_t vars, std::mt19937_64& rng) {
  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < vars && rank < rows.size(); ++col) {
    std::size_t pick = rank;
    while (pick < rows.size() && !rows[pick][col]) ++pick;
    if (pick == rows.size()) continue;
    std::swap(rows[rank], rows[pick]);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != rank && rows[r][col]) rows[r] ^= rows[rank];
    pivot_col.push_back(col);
    ++rank;
  }
  for (std::size_t r = rank; r < rows.size(); ++r)
    if (rows[r][vars]) return std::nullopt;
  std::vector<bool> x(vars);
  std::vector<bool> is_pivot(vars, false);
  for (std::size_t c : pivot_col) is_pivot[c] = true;
  for (std::size_t c = 0; c < vars; ++c)
    if (!is_pivot[c]) x[c] = detail::bounded_draw(rng, 0, 1) == 1;
  for (std::size_t r = 0; r < rank; ++r) {
    bool v = rows[r][vars];
    for (std::size_t c = 0; c < vars; ++c)
      if (c != pivot_col[r] && rows[r][c] && x[c]) v = !v;
    x[pivot_col[r]] = v;
  }
  return x;
}

struct Task {
  CyclePair designated;
  std::optional<std::size_t> toggled;  // crossing flipped in this variant
};

}  // namespace

SynthesisResult synthesize_witness(const ProofRecipe& recipe, const LambdaSet& lam, const SynthesisOptions& options) {
  const Graph& g = lam.host;
  std::optional<CyclePair> base_designated;
  for (const WitnessClass& c : recipe.classes) {
    if (c.flip_edges) continue;
    if (base_designated && !(*base_designated == c.representative))
      fail(ErrorCode::invalid_argument, "recipe has two unflipped classes with different representatives");
    base_designated = c.representative;
  }
  if (!base_designated) fail(ErrorCode::invalid_argument, "recipe has no unflipped class");

  std::mt19937_64 rng(detail::splitmix64(options.seed));
  for (int attempt = 1; attempt <= options.max_tries; ++attempt) {
    Placement placement;
    std::set<std::pair<long, long>> used;
    for (Vertex v : g.vertices()) {
      std::pair<long, long> p;
      do {
        p = {static_cast<long>(detail::bounded_draw(rng, 0, options.grid)),
             static_cast<long>(detail::bounded_draw(rng, 0, options.grid))};
      } while (!used.insert(p).second);
      placement[v] = {p.first, p.second};
    }
    std::vector<Crossing> xs;
    try {
      xs = find_crossings(g, placement, {});
    } catch (const Error& e) {
      if (e.code() != ErrorCode::degenerate_geometry) throw;
      continue;
    }
    std::vector<Task> tasks{{*base_designated, std::nullopt}};
    bool flips_found = true;
    for (const WitnessClass& c : recipe.classes) {
      if (!c.flip_edges) continue;
      std::optional<std::size_t> hit;
      for (std::size_t k = 0; k < xs.size(); ++k) {
        const Edge& a = xs[k].key.a.edge;
        const Edge& b = xs[k].key.b.edge;
        if ((a == c.flip_edges->first && b == c.flip_edges->second) ||
            (a == c.flip_edges->second && b == c.flip_edges->first))
          hit = k;
      }
      if (!hit) flips_found = false;
      tasks.push_back({c.representative, hit});
    }
    if (!flips_found) continue;

    const std::size_t nv = xs.size();
    std::vector<Row> rows;
    for (const Task& t : tasks) {
      for (const CyclePair& p : lam.pairs) {
        if (p == t.designated) continue;
        std::vector<std::pair<std::size_t, bool>> inter;  // crossing, whether component 0 is over when a is over
        for (std::size_t k = 0; k < nv; ++k) {
          const int ca = p.component_of(xs[k].key.a.edge);
          const int cb = p.component_of(xs[k].key.b.edge);
          if (ca < 0 || cb < 0 || ca == cb) continue;
          inter.emplace_back(k, (ca == 0) != (t.toggled == k));
        }
        for (std::size_t i = 0; i + 1 < inter.size(); ++i) {
          Row r(nv + 1);
          r.set(inter[i].first);
          r.flip(inter[i + 1].first);
          r[nv] = inter[i].second != inter[i + 1].second;
          rows.push_back(std::move(r));
        }
      }
    }
    const auto x = solve_gf2(std::move(rows), nv, rng);
    if (!x) continue;
    std::map<CrossingKey, bool> a_over;
    for (std::size_t k = 0; k < nv; ++k) a_over[xs[k].key] = (*x)[k];
    Diagram d = Diagram::create(g, placement, {}, [&](const Crossing& c) { return a_over.at(c.key); });

    const LinkedReport linked = verify_linked(g, lam, d);
    if (!linked.passed() || !linked.strict_profile) continue;
    MinimalityBattery battery = build_battery(recipe, lam, d);
    if (!verify_minimal(g, lam, battery).passed()) continue;
    return {std::move(d), std::move(battery), attempt};
  }
  fail(ErrorCode::verification_failed,
       "no witness found for " + recipe.graph + " in " + std::to_string(options.max_tries) + " tries");
}

}  // namespace linkset
