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
#include "linkset/cycles.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <sstream>

#include "linkset/error.hpp"

namespace linkset {

std::vector<Vertex> canonical_cycle(const std::vector<Vertex>& sequence) {
  if (sequence.size() < 3) fail(ErrorCode::invalid_argument, "a cycle needs at least three vertices");
  std::set<Vertex> distinct(sequence.begin(), sequence.end());
  if (distinct.size() != sequence.size()) fail(ErrorCode::invalid_argument, "cycle repeats a vertex");
  const std::size_t n = sequence.size();
  const auto start = static_cast<std::size_t>(std::min_element(sequence.begin(), sequence.end()) - sequence.begin());
  const Vertex next = sequence[(start + 1) % n];
  const Vertex prev = sequence[(start + n - 1) % n];
  std::vector<Vertex> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    out.push_back(next < prev ? sequence[(start + k) % n] : sequence[(start + n - k) % n]);
  }
  return out;
}

Cycle::Cycle(std::vector<Vertex> sequence) : seq_(canonical_cycle(sequence)) {}

bool Cycle::contains(Vertex v) const { return std::find(seq_.begin(), seq_.end(), v) != seq_.end(); }

std::vector<Edge> Cycle::edges() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < seq_.size(); ++i) out.emplace_back(seq_[i], seq_[(i + 1) % seq_.size()]);
  return out;
}

bool Cycle::has_edge(const Edge& e) const { return direction(e) != 0; }

int Cycle::direction(const Edge& e) const {
  const std::size_t n = seq_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex a = seq_[i];
    const Vertex b = seq_[(i + 1) % n];
    if (a == e.u && b == e.v) return 1;
    if (a == e.v && b == e.u) return -1;
  }
  return 0;
}

bool Cycle::is_valid_in(const Graph& g) const {
  if (seq_.size() < 3) return false;
  for (const Edge& e : edges())
    if (!g.has_edge(e)) return false;
  return true;
}

std::string Cycle::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < seq_.size(); ++i) os << (i ? " " : "") << seq_[i];
  os << ']';
  return os.str();
}

CyclePair::CyclePair(Cycle a, Cycle b) {
  for (Vertex v : a.vertices())
    if (b.contains(v)) fail(ErrorCode::invalid_argument, "cycles " + a.to_string() + " and " + b.to_string() + " share vertex " + std::to_string(v));
  const bool swap = a.length() < b.length() || (a.length() == b.length() && b < a);
  first_ = swap ? std::move(b) : std::move(a);
  second_ = swap ? std::move(a) : std::move(b);
}

bool CyclePair::is_hamiltonian_in(const Graph& g) const {
  return first_.length() + second_.length() == g.vertex_count() && is_valid_in(g);
}

bool CyclePair::is_valid_in(const Graph& g) const {
  if (!first_.is_valid_in(g) || !second_.is_valid_in(g)) return false;
  for (Vertex v : first_.vertices())
    if (second_.contains(v)) return false;
  return true;
}

int CyclePair::component_of(const Edge& e) const {
  if (first_.has_edge(e)) return 0;
  if (second_.has_edge(e)) return 1;
  return -1;
}

bool CyclePair::separates(const Edge& e, const Edge& f) const {
  const int ce = component_of(e);
  const int cf = component_of(f);
  return ce >= 0 && cf >= 0 && ce != cf;
}

std::string CyclePair::to_string() const { return first_.to_string() + "∪" + second_.to_string(); }

LambdaSet::LambdaSet(std::string n, Graph h, std::vector<CyclePair> ps)
    : name(std::move(n)), host(std::move(h)), pairs(std::move(ps)) {
  for (const CyclePair& p : pairs)
    if (!p.is_valid_in(host)) fail(ErrorCode::invalid_argument, "pair " + p.to_string() + " is not a disjoint cycle pair of the host graph");
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
}

bool LambdaSet::contains(const CyclePair& p) const { return std::binary_search(pairs.begin(), pairs.end(), p); }

LambdaSet LambdaSet::without(const CyclePair& p) const {
  LambdaSet out = *this;
  auto it = std::lower_bound(out.pairs.begin(), out.pairs.end(), p);
  if (it == out.pairs.end() || *it != p) fail(ErrorCode::not_found, "pair " + p.to_string() + " is not in " + name);
  out.pairs.erase(it);
  return out;
}

Cycle parse_cycle(const std::string& text) {
  const auto open = text.find('[');
  const auto close = text.find(']');
  if (open == std::string::npos || close == std::string::npos || close < open)
    fail(ErrorCode::parse_error, "expected a cycle like [1 2 3], got '" + text + "'");
  std::istringstream is(text.substr(open + 1, close - open - 1));
  std::vector<Vertex> seq;
  Vertex v = 0;
  while (is >> v) seq.push_back(v);
  if (!is.eof()) fail(ErrorCode::parse_error, "bad vertex label in '" + text + "'");
  return Cycle(seq);
}

CyclePair parse_pair(const std::string& text) {
  const auto mid = text.find(']');
  if (mid == std::string::npos) fail(ErrorCode::parse_error, "expected a pair like [1 2 3]U[4 5 6]");
  const auto second_open = text.find('[', mid);
  if (second_open == std::string::npos) fail(ErrorCode::parse_error, "pair '" + text + "' has only one cycle");
  return CyclePair(parse_cycle(text.substr(0, mid + 1)), parse_cycle(text.substr(second_open)));
}

namespace {

struct Indexed {
  std::vector<Vertex> labels;
  std::vector<std::uint64_t> adj;
};

Indexed index_graph(const Graph& g) {
  if (g.vertex_count() > 64) fail(ErrorCode::size_limit, "cycle enumeration supports at most 64 vertices");
  Indexed ix;
  ix.labels = g.vertices();
  ix.adj.assign(ix.labels.size(), 0);
  for (const Edge& e : g.edges()) {
    const auto a = g.index_of(e.u);
    const auto b = g.index_of(e.v);
    ix.adj[a] |= std::uint64_t{1} << b;
    ix.adj[b] |= std::uint64_t{1} << a;
  }
  return ix;
}

struct RawCycle {
  std::vector<std::size_t> path;
  std::uint64_t mask = 0;
};

// Cycles whose smallest index is the DFS root; the direction test keeps one
// orientation, so each cycle is produced once and already canonical.
void extend(const Indexed& ix, std::size_t root, std::vector<std::size_t>& path, std::uint64_t mask,
            std::size_t min_len, std::size_t max_len, std::vector<RawCycle>& out) {
  const std::size_t u = path.back();
  if (path.size() >= min_len && path.size() >= 3 && (ix.adj[u] >> root & 1U) && path[1] < path.back())
    out.push_back({path, mask});
  if (path.size() == max_len) return;
  std::uint64_t next = ix.adj[u] & ~mask & ~((std::uint64_t{2} << root) - 1);
  while (next) {
    const auto w = static_cast<std::size_t>(__builtin_ctzll(next));
    next &= next - 1;
    path.push_back(w);
    extend(ix, root, path, mask | (std::uint64_t{1} << w), min_len, max_len, out);
    path.pop_back();
  }
}

std::vector<RawCycle> raw_cycles(const Indexed& ix, std::size_t min_len, std::size_t max_len) {
  std::vector<RawCycle> out;
  std::vector<std::size_t> path;
  for (std::size_t s = 0; s < ix.labels.size(); ++s) {
    path.assign(1, s);
    extend(ix, s, path, std::uint64_t{1} << s, min_len, max_len, out);
  }
  return out;
}

Cycle to_cycle(const Indexed& ix, const RawCycle& rc) {
  std::vector<Vertex> seq;
  for (std::size_t i : rc.path) seq.push_back(ix.labels[i]);
  return Cycle(std::move(seq));
}

}  // namespace

std::vector<Cycle> enumerate_cycles(const Graph& g, std::optional<std::size_t> length) {
  const Indexed ix = index_graph(g);
  const std::size_t lo = length.value_or(3);
  const std::size_t hi = length.value_or(ix.labels.size());
  std::vector<Cycle> out;
  if (lo < 3 || lo > ix.labels.size()) return out;
  for (const RawCycle& rc : raw_cycles(ix, lo, hi))
    if (rc.path.size() >= lo && rc.path.size() <= hi) out.push_back(to_cycle(ix, rc));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CyclePair> enumerate_pairs(const Graph& g, PairFilter filter) {
  if (g.vertex_count() > kEnumerationLimit)
    fail(ErrorCode::size_limit, "pair enumeration is bounded at " + std::to_string(kEnumerationLimit) + " vertices");
  const Indexed ix = index_graph(g);
  const std::size_t n = ix.labels.size();
  if (filter.type && filter.type->first < filter.type->second) std::swap(filter.type->first, filter.type->second);

  std::size_t lo = 3;
  std::size_t hi = n >= 3 ? n - 3 : 0;
  if (filter.type) {
    lo = filter.type->second;
    hi = filter.type->first;
  }
  std::vector<RawCycle> cycles;
  if (lo >= 3 && lo <= hi) cycles = raw_cycles(ix, lo, hi);
  if (filter.type) {
    std::erase_if(cycles, [&](const RawCycle& c) {
      return c.path.size() != filter.type->first && c.path.size() != filter.type->second;
    });
  }
  const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  std::vector<CyclePair> out;
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    for (std::size_t j = i + 1; j < cycles.size(); ++j) {
      const RawCycle& a = cycles[i];
      const RawCycle& b = cycles[j];
      if (a.mask & b.mask) continue;
      if (filter.type) {
        const auto la = a.path.size();
        const auto lb = b.path.size();
        const auto [p, q] = *filter.type;
        if (!((la == p && lb == q) || (la == q && lb == p))) continue;
      }
      if (filter.hamiltonian_only && (a.mask | b.mask) != full) continue;
      out.emplace_back(to_cycle(ix, a), to_cycle(ix, b));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

LambdaSet all_pairs(const Graph& g, std::string name) {
  LambdaSet out;
  out.name = std::move(name);
  out.host = g;
  out.pairs = enumerate_pairs(g);
  return out;
}

}  // namespace linkset
