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
#include "linkset/diagram.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "linkset/error.hpp"

namespace linkset {

namespace {

std::string point_str(const Point2& p) {
  return "(" + format_rational(p.x) + ", " + format_rational(p.y) + ")";
}

[[noreturn]] void degenerate(const std::string& what, const Point2& at) {
  fail(ErrorCode::degenerate_geometry, what + " at " + point_str(at));
}

Edge parse_edge_id(const std::string& text) {
  const auto dash = text.find('-');
  if (dash == std::string::npos || dash == 0) fail(ErrorCode::parse_error, "bad edge id '" + text + "'");
  try {
    std::size_t used_a = 0;
    std::size_t used_b = 0;
    const std::string a = text.substr(0, dash);
    const std::string b = text.substr(dash + 1);
    const int u = std::stoi(a, &used_a);
    const int v = std::stoi(b, &used_b);
    if (used_a != a.size() || used_b != b.size() || u >= v) throw std::invalid_argument("order");
    return Edge(u, v);
  } catch (const std::logic_error&) {
    fail(ErrorCode::parse_error, "bad edge id '" + text + "'");
  }
}

StrandPosition parse_position(const std::string& text) {
  const auto hash = text.find('#');
  const auto at = text.find('@');
  if (hash == std::string::npos || at == std::string::npos || at < hash)
    fail(ErrorCode::parse_error, "bad strand position '" + text + "'");
  StrandPosition p;
  p.edge = parse_edge_id(text.substr(0, hash));
  const std::string seg = text.substr(hash + 1, at - hash - 1);
  if (seg.empty() || !std::all_of(seg.begin(), seg.end(), [](char c) { return c >= '0' && c <= '9'; }))
    fail(ErrorCode::parse_error, "bad segment index in '" + text + "'");
  p.segment = std::stoul(seg);
  p.t = parse_rational(text.substr(at + 1));
  return p;
}

struct Segment {
  Edge edge;
  std::size_t index;
  std::size_t count;
  Point2 p;
  Point2 q;
};

bool on_closed_segment(const Point2& x, const Segment& s) {
  if (cross(s.q - s.p, x - s.p) != 0) return false;
  const Rational d = dot(x - s.p, s.q - s.p);
  return d >= 0 && d <= dot(s.q - s.p, s.q - s.p);
}

/// What a segment endpoint is: a graph vertex (route terminal) or a bend
/// between two consecutive segments of one route.
struct EndRole {
  bool vertex;
  Vertex w;
  Edge edge;
  std::size_t junction;
  bool operator==(const EndRole&) const = default;
};

std::optional<EndRole> role_at(const Segment& s, const Point2& x) {
  if (x == s.p) {
    if (s.index == 0) return EndRole{true, s.edge.u, {}, 0};
    return EndRole{false, 0, s.edge, s.index};
  }
  if (x == s.q) {
    if (s.index + 1 == s.count) return EndRole{true, s.edge.v, {}, 0};
    return EndRole{false, 0, s.edge, s.index + 1};
  }
  return std::nullopt;
}

/// Incremental generic-position checker: routes are added one at a time and
/// rejected (without side effects) when they break genericity.
class Arrangement {
 public:
  explicit Arrangement(Placement placement) : placement_(std::move(placement)) {
    std::set<Point2> seen;
    for (const auto& [v, p] : placement_)
      if (!seen.insert(p).second) degenerate("two vertices placed at the same point", p);
  }

  const Placement& placement() const { return placement_; }

  /// Adds the route or throws degenerate_geometry.
  void add(const Edge& e, const std::vector<Point2>& pts) {
    if (pts.size() < 2) fail(ErrorCode::invalid_argument, "route of " + e.id() + " needs two points");
    const auto pu = placement_.find(e.u);
    const auto pv = placement_.find(e.v);
    if (pu == placement_.end() || pv == placement_.end())
      fail(ErrorCode::invalid_argument, "edge " + e.id() + " has an unplaced endpoint");
    if (!(pts.front() == pu->second) || !(pts.back() == pv->second))
      fail(ErrorCode::invalid_argument, "route of " + e.id() + " does not start and end at its vertices");
    std::vector<Segment> fresh;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
      if (pts[i] == pts[i + 1]) degenerate("zero-length segment on " + e.id(), pts[i]);
      fresh.push_back({e, i, pts.size() - 1, pts[i], pts[i + 1]});
    }
    std::vector<Crossing> found;
    for (std::size_t i = 0; i < fresh.size(); ++i) {
      check_vertices(fresh[i]);
      for (const Segment& old : segments_) meet(old, fresh[i], found);
      for (std::size_t j = 0; j < i; ++j) meet(fresh[j], fresh[i], found);
    }
    std::set<Point2> spots;
    for (const Crossing& c : found) {
      if (locations_.count(c.location) || !spots.insert(c.location).second)
        degenerate("three strands through one point", c.location);
    }
    for (Crossing& c : found) {
      locations_.insert(c.location);
      crossings_.push_back(std::move(c));
    }
    segments_.insert(segments_.end(), fresh.begin(), fresh.end());
  }

  bool try_add(const Edge& e, const std::vector<Point2>& pts) {
    try {
      add(e, pts);
      return true;
    } catch (const Error& err) {
      if (err.code() != ErrorCode::degenerate_geometry) throw;
      return false;
    }
  }

  std::vector<Crossing> take_crossings() {
    std::sort(crossings_.begin(), crossings_.end(), [](const Crossing& a, const Crossing& b) { return a.key < b.key; });
    return std::move(crossings_);
  }

 private:
  void check_vertices(const Segment& s) const {
    for (const auto& [w, p] : placement_) {
      if (!on_closed_segment(p, s)) continue;
      const auto role = role_at(s, p);
      if (!role || !role->vertex || role->w != w)
        degenerate("vertex " + std::to_string(w) + " lies on strand " + s.edge.id(), p);
    }
  }

  void touch(const Segment& a, const Segment& b, const Point2& x) const {
    const auto ra = role_at(a, x);
    const auto rb = role_at(b, x);
    if (!ra || !rb || !(*ra == *rb))
      degenerate("strands " + a.edge.id() + " and " + b.edge.id() + " touch without crossing", x);
  }

  void meet(const Segment& a, const Segment& b, std::vector<Crossing>& out) const {
    const Point2 r = a.q - a.p;
    const Point2 s = b.q - b.p;
    const Point2 w = b.p - a.p;
    const Rational denom = cross(r, s);
    if (denom == 0) {
      if (cross(w, r) != 0) return;
      const Rational rr = dot(r, r);
      Rational t0 = dot(w, r) / rr;
      Rational t1 = dot(b.q - a.p, r) / rr;
      if (t1 < t0) std::swap(t0, t1);
      const Rational lo = std::max(t0, Rational(0));
      const Rational hi = std::min(t1, Rational(1));
      if (lo > hi) return;
      if (lo < hi)
        degenerate("strands " + a.edge.id() + " and " + b.edge.id() + " overlap", a.p + lo * r);
      touch(a, b, a.p + lo * r);
      return;
    }
    const Rational t = cross(w, s) / denom;
    const Rational u = cross(w, r) / denom;
    if (t < 0 || t > 1 || u < 0 || u > 1) return;
    const Point2 x = a.p + t * r;
    if (t == 0 || t == 1 || u == 0 || u == 1) {
      touch(a, b, x);
      return;
    }
    Crossing c;
    c.location = x;
    StrandPosition ha{a.edge, a.index, t};
    StrandPosition hb{b.edge, b.index, u};
    if (hb < ha) {
      c.key = {hb, ha};
      c.direction_a = s;
      c.direction_b = r;
    } else {
      c.key = {ha, hb};
      c.direction_a = r;
      c.direction_b = s;
    }
    out.push_back(std::move(c));
  }

  Placement placement_;
  std::vector<Segment> segments_;
  std::vector<Crossing> crossings_;
  std::set<Point2> locations_;
};

Routes complete_routes(const Graph& host, const Placement& placement, Routes routes) {
  for (const auto& [e, pts] : routes) {
    if (!host.has_edge(e)) fail(ErrorCode::invalid_argument, "route for non-edge " + e.id());
  }
  for (Vertex v : host.vertices()) {
    if (!placement.count(v)) fail(ErrorCode::invalid_argument, "vertex " + std::to_string(v) + " is not placed");
  }
  for (const auto& [v, p] : placement) {
    if (!host.has_vertex(v)) fail(ErrorCode::invalid_argument, "placement for unknown vertex " + std::to_string(v));
  }
  for (const Edge& e : host.edges()) {
    if (!routes.count(e)) routes[e] = {placement.at(e.u), placement.at(e.v)};
  }
  return routes;
}

std::vector<Crossing> geometry(const Graph& host, const Placement& placement, const Routes& routes) {
  Arrangement arr(placement);
  for (const Edge& e : host.edges()) arr.add(e, routes.at(e));
  return arr.take_crossings();
}

void apply_over_map(std::vector<Crossing>& crossings, const std::map<std::string, std::string>& over) {
  std::set<std::string> used;
  for (Crossing& c : crossings) {
    const std::string key = c.key.to_string();
    const auto it = over.find(key);
    if (it == over.end()) fail(ErrorCode::invalid_argument, "no over/under entry for crossing " + key);
    used.insert(key);
    if (c.key.a.edge != c.key.b.edge) {
      if (it->second == c.key.a.edge.id()) c.a_over = true;
      else if (it->second == c.key.b.edge.id()) c.a_over = false;
      else fail(ErrorCode::invalid_argument, "over entry '" + it->second + "' names neither strand of " + key);
    } else {
      if (it->second == c.key.a.to_string()) c.a_over = true;
      else if (it->second == c.key.b.to_string()) c.a_over = false;
      else fail(ErrorCode::invalid_argument, "over entry '" + it->second + "' names neither strand of " + key);
    }
  }
  for (const auto& [key, value] : over) {
    if (!used.count(key)) fail(ErrorCode::invalid_argument, "over/under entry '" + key + "' matches no crossing");
  }
}

}  // namespace

std::string StrandPosition::to_string() const {
  return edge.id() + "#" + std::to_string(segment) + "@" + format_rational(t);
}

bool StrandPosition::operator<(const StrandPosition& o) const {
  if (edge != o.edge) return edge < o.edge;
  if (segment != o.segment) return segment < o.segment;
  return t < o.t;
}

std::string CrossingKey::to_string() const { return a.to_string() + "|" + b.to_string(); }

CrossingKey CrossingKey::parse(const std::string& text) {
  const auto bar = text.find('|');
  if (bar == std::string::npos) fail(ErrorCode::parse_error, "bad crossing key '" + text + "'");
  CrossingKey k{parse_position(text.substr(0, bar)), parse_position(text.substr(bar + 1))};
  if (!(k.a < k.b)) fail(ErrorCode::parse_error, "crossing key halves out of order in '" + text + "'");
  return k;
}

std::string Crossing::over_id() const {
  if (key.a.edge != key.b.edge) return over().edge.id();
  return over().to_string();
}

std::vector<Crossing> find_crossings(const Graph& host, const Placement& placement, const Routes& routes) {
  return geometry(host, placement, complete_routes(host, placement, routes));
}

Diagram Diagram::create(Graph host, Placement placement, Routes routes,
                        const std::map<std::string, std::string>& over) {
  Diagram d;
  d.routes_ = complete_routes(host, placement, std::move(routes));
  d.crossings_ = geometry(host, placement, d.routes_);
  apply_over_map(d.crossings_, over);
  d.host_ = std::move(host);
  d.placement_ = std::move(placement);
  return d;
}

Diagram Diagram::create(Graph host, Placement placement, Routes routes,
                        const std::function<bool(const Crossing&)>& a_over) {
  Diagram d;
  d.routes_ = complete_routes(host, placement, std::move(routes));
  d.crossings_ = geometry(host, placement, d.routes_);
  for (Crossing& c : d.crossings_) c.a_over = a_over(c);
  d.host_ = std::move(host);
  d.placement_ = std::move(placement);
  return d;
}

const Crossing& Diagram::crossing(const CrossingKey& key) const {
  const auto it = std::lower_bound(crossings_.begin(), crossings_.end(), key,
                                   [](const Crossing& c, const CrossingKey& k) { return c.key < k; });
  if (it == crossings_.end() || !(it->key == key)) fail(ErrorCode::not_found, "no crossing " + key.to_string());
  return *it;
}

const Crossing* Diagram::crossing_at(const Point2& p) const {
  for (const Crossing& c : crossings_)
    if (c.location == p) return &c;
  return nullptr;
}

std::map<std::string, std::string> Diagram::over_map() const {
  std::map<std::string, std::string> out;
  for (const Crossing& c : crossings_) out[c.key.to_string()] = c.over_id();
  return out;
}

bool Diagram::operator==(const Diagram& o) const {
  if (!(host_ == o.host_) || !(placement_ == o.placement_) || routes_ != o.routes_) return false;
  if (crossings_.size() != o.crossings_.size()) return false;
  for (std::size_t i = 0; i < crossings_.size(); ++i) {
    if (!(crossings_[i].key == o.crossings_[i].key) || crossings_[i].a_over != o.crossings_[i].a_over) return false;
  }
  return true;
}

std::vector<Crossing> validate_diagram(const Diagram& d) {
  std::vector<Crossing> found = find_crossings(d.host(), d.placement(), d.routes());
  apply_over_map(found, d.over_map());
  return found;
}

int crossing_sign(const Crossing& c, const CyclePair& pair) {
  auto oriented = [&](const StrandPosition& h, const Point2& dir) {
    int s = pair.first().direction(h.edge);
    if (s == 0) s = pair.second().direction(h.edge);
    if (s == 0) fail(ErrorCode::invalid_argument, "crossing strand " + h.edge.id() + " is not on the pair");
    return s > 0 ? dir : Rational(-1) * dir;
  };
  const Point2 da = oriented(c.key.a, c.direction_a);
  const Point2 db = oriented(c.key.b, c.direction_b);
  const int s = c.a_over ? sgn(cross(da, db)) : sgn(cross(db, da));
  return s;
}

std::vector<const Crossing*> inter_component_crossings(const Diagram& d, const CyclePair& pair) {
  std::vector<const Crossing*> out;
  for (const Crossing& c : d.crossings()) {
    const int ca = pair.component_of(c.key.a.edge);
    const int cb = pair.component_of(c.key.b.edge);
    if (ca >= 0 && cb >= 0 && ca != cb) out.push_back(&c);
  }
  return out;
}

int linking_number(const Diagram& d, const CyclePair& pair) {
  if (!pair.is_valid_in(d.host())) fail(ErrorCode::invalid_argument, "pair " + pair.to_string() + " is not in the graph");
  int sum = 0;
  for (const Crossing* c : inter_component_crossings(d, pair)) sum += crossing_sign(*c, pair);
  if (sum % 2 != 0) fail(ErrorCode::verification_failed, "odd signed crossing sum for " + pair.to_string());
  return sum / 2;
}

Diagram flip_crossings(const Diagram& d, const std::vector<CrossingKey>& keys) {
  Diagram out = d;
  for (const CrossingKey& key : keys) {
    const auto it = std::lower_bound(out.crossings_.begin(), out.crossings_.end(), key,
                                     [](const Crossing& c, const CrossingKey& k) { return c.key < k; });
    if (it == out.crossings_.end() || !(it->key == key)) fail(ErrorCode::not_found, "no crossing " + key.to_string());
    it->a_over = !it->a_over;
  }
  return out;
}

Diagram flip_crossing(const Diagram& d, const CrossingKey& key) { return flip_crossings(d, {key}); }

std::string SplitCertificate::to_string() const {
  switch (verdict) {
    case SplitVerdict::zero_inter_crossings:
      return "ZeroInterCrossings";
    case SplitVerdict::r2_reduced:
      return "R2Reduced(" + std::to_string(r2_steps) + ")";
    case SplitVerdict::layered:
      return "Layered(" + std::to_string(r2_steps) + ")";
    case SplitVerdict::unknown:
      break;
  }
  return "Unknown";
}

SplitCertificate split_certify(const Diagram& d, const CyclePair& pair) {
  if (!pair.is_valid_in(d.host())) fail(ErrorCode::invalid_argument, "pair " + pair.to_string() + " is not in the graph");
  const auto& cs = d.crossings();
  std::vector<int> over_side(cs.size(), -1);  // component on top, inter crossings only
  std::vector<std::vector<std::size_t>> events(2);
  for (int side = 0; side < 2; ++side) {
    const Cycle& cyc = side == 0 ? pair.first() : pair.second();
    for (const Edge& e : cyc.edges()) {
      std::vector<std::pair<const StrandPosition*, std::size_t>> here;
      for (std::size_t i = 0; i < cs.size(); ++i) {
        const int ca = pair.component_of(cs[i].key.a.edge);
        const int cb = pair.component_of(cs[i].key.b.edge);
        if (ca < 0 || cb < 0) continue;
        if (cs[i].key.a.edge == e) here.emplace_back(&cs[i].key.a, i);
        if (cs[i].key.b.edge == e) here.emplace_back(&cs[i].key.b, i);
        if (ca != cb) over_side[i] = pair.component_of(cs[i].over().edge);
      }
      std::sort(here.begin(), here.end(), [](const auto& x, const auto& y) { return *x.first < *y.first; });
      if (cyc.direction(e) < 0) std::reverse(here.begin(), here.end());
      for (const auto& h : here) events[side].push_back(h.second);
    }
  }
  auto edges_of = [&](std::size_t i) { return std::make_pair(cs[i].key.a.edge, cs[i].key.b.edge); };
  std::vector<bool> active(cs.size(), true);
  auto live = [&](int side) {
    std::vector<std::size_t> out;
    for (std::size_t i : events[side])
      if (active[i]) out.push_back(i);
    return out;
  };
  auto adjacent = [](const std::vector<std::size_t>& list, std::size_t x, std::size_t y) {
    const std::size_t n = list.size();
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t a = list[k];
      const std::size_t b = list[(k + 1) % n];
      if ((a == x && b == y) || (a == y && b == x)) return true;
    }
    return false;
  };
  int steps = 0;
  for (bool progress = true; progress;) {
    progress = false;
    const auto l0 = live(0);
    const auto l1 = live(1);
    for (std::size_t k = 0; k < l0.size() && !progress; ++k) {
      const std::size_t x = l0[k];
      const std::size_t y = l0[(k + 1) % l0.size()];
      if (x == y || over_side[x] < 0 || over_side[y] < 0) continue;
      if (edges_of(x) != edges_of(y) || over_side[x] != over_side[y]) continue;
      if (!adjacent(l1, x, y)) continue;
      active[x] = active[y] = false;
      ++steps;
      progress = true;
    }
  }
  std::set<int> tops;
  for (std::size_t i = 0; i < cs.size(); ++i)
    if (active[i] && over_side[i] >= 0) tops.insert(over_side[i]);
  SplitCertificate cert;
  cert.r2_steps = steps;
  if (tops.empty()) cert.verdict = steps == 0 ? SplitVerdict::zero_inter_crossings : SplitVerdict::r2_reduced;
  else if (tops.size() == 1) cert.verdict = SplitVerdict::layered;
  return cert;
}

namespace {

/// Strand rank for extend_diagram: 0 for strands carried over from the minor,
/// i + 1 for the i-th fresh edge.
using RankMap = std::map<Edge, int>;

std::vector<Point2> reversed(std::vector<Point2> pts) {
  std::reverse(pts.begin(), pts.end());
  return pts;
}

bool parallel(const Point2& a, const Point2& b) { return cross(a, b) == 0; }

}  // namespace

Diagram extend_diagram(const Diagram& d, const MinorMap& m) {
  if (!(d.host() == m.minor)) fail(ErrorCode::invalid_argument, "diagram is not drawn on the minor of the map");
  m.validate();
  const Graph& host = m.host;
  Placement placement;
  for (const auto& [v, p] : d.placement()) placement[m.image(v)] = p;
  Routes routes;
  RankMap rank;
  for (const Edge& e : m.minor.edges()) {
    const std::vector<Vertex>& path = m.path(e);
    const std::vector<Point2>& pts = d.routes().at(e);  // from e.u to e.v; path runs image(e.u) -> image(e.v)
    const std::size_t k = path.size() - 2;
    if (k == 0) {
      const Edge he(path.front(), path.back());
      routes[he] = path.front() < path.back() ? pts : reversed(pts);
      rank[he] = 0;
      continue;
    }
    Rational stop = 1;
    for (const Crossing& c : d.crossings()) {
      for (const StrandPosition* h : {&c.key.a, &c.key.b})
        if (h->edge == e && h->segment == 0 && h->t < stop) stop = h->t;
    }
    std::vector<Point2> spots{pts[0]};
    for (std::size_t j = 1; j <= k; ++j) {
      const Point2 x = pts[0] + (stop * Rational(static_cast<long>(j), static_cast<long>(k + 1))) * (pts[1] - pts[0]);
      placement[path[j]] = x;
      spots.push_back(x);
    }
    for (std::size_t j = 0; j < k; ++j) {
      const Edge he(path[j], path[j + 1]);
      std::vector<Point2> piece{spots[j], spots[j + 1]};
      routes[he] = path[j] < path[j + 1] ? piece : reversed(piece);
      rank[he] = 0;
    }
    std::vector<Point2> tail{spots[k]};
    tail.insert(tail.end(), pts.begin() + 1, pts.end());
    const Edge he(path[k], path[k + 1]);
    routes[he] = path[k] < path[k + 1] ? tail : reversed(tail);
    rank[he] = 0;
  }
  // Vertices of the host outside G' go to a free column right of the drawing.
  Rational right = 0;
  Rational top = 0;
  for (const auto& [e, pts] : routes)
    for (const Point2& p : pts) {
      right = std::max(right, p.x);
      top = std::max(top, p.y);
    }
  for (const auto& [v, p] : placement) {
    right = std::max(right, p.x);
    top = std::max(top, p.y);
  }
  int spare = 0;
  for (Vertex v : host.vertices()) {
    if (placement.count(v)) continue;
    ++spare;
    placement[v] = {right + spare, top + spare * spare + 1};
  }

  Arrangement arr(placement);
  for (const auto& [e, pts] : routes) arr.add(e, pts);
  int fresh = 0;
  for (const Edge& e : host.edges()) {
    if (routes.count(e)) continue;
    rank[e] = ++fresh;
    const Point2 a = placement.at(e.u);
    const Point2 b = placement.at(e.v);
    std::vector<Point2> route{a, b};
    bool placed = arr.try_add(e, route);
    const Point2 mid = Rational(1, 2) * (a + b);
    const Point2 perp{b.y - a.y, a.x - b.x};
    for (int attempt = 1; !placed && attempt <= 400; ++attempt) {
      const Rational offset = Rational(attempt % 2 ? 1 : -1) * (Rational((attempt + 1) / 2, 5) + Rational(1, 97));
      route = {a, mid + offset * perp, b};
      placed = arr.try_add(e, route);
    }
    if (!placed) fail(ErrorCode::degenerate_geometry, "could not route fresh edge " + e.id() + " generically");
    routes[e] = route;
  }

  return Diagram::create(host, placement, routes, [&](const Crossing& c) {
    const int ra = rank.at(c.key.a.edge);
    const int rb = rank.at(c.key.b.edge);
    if (ra != rb) return ra < rb;
    if (ra != 0) return true;
    const Crossing* old = d.crossing_at(c.location);
    if (!old) fail(ErrorCode::verification_failed, "lifted crossing has no counterpart at " + point_str(c.location));
    const Point2& over_dir = old->a_over ? old->direction_a : old->direction_b;
    return parallel(over_dir, c.direction_a);
  });
}

CrossingKey corresponding_key(const Diagram& from, const Diagram& to, const CrossingKey& key) {
  const Crossing* c = to.crossing_at(from.crossing(key).location);
  if (!c) fail(ErrorCode::not_found, "no crossing at the location of " + key.to_string());
  return c->key;
}

}  // namespace linkset
