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
#pragma once

#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "linkset/cycles.hpp"
#include "linkset/graph.hpp"
#include "linkset/minor.hpp"
#include "linkset/rational.hpp"

namespace linkset {

/// A point on one strand: edge, segment index along its route (routes run
/// from the smaller label to the larger), parameter in (0, 1) on that segment.
struct StrandPosition {
  Edge edge;
  std::size_t segment = 0;
  Rational t;

  std::string to_string() const;  // "u-v#i@t"
  bool operator==(const StrandPosition& o) const { return edge == o.edge && segment == o.segment && t == o.t; }
  bool operator<(const StrandPosition& o) const;
};

/// Canonical crossing key: the two strand positions in increasing order.
struct CrossingKey {
  StrandPosition a;
  StrandPosition b;

  std::string to_string() const;  // "u-v#i@t|x-y#j@s"
  static CrossingKey parse(const std::string& text);
  bool operator==(const CrossingKey& o) const { return a == o.a && b == o.b; }
  bool operator<(const CrossingKey& o) const { return a < o.a || (a == o.a && b < o.b); }
};

/// A transverse crossing of two strands in the plane.
struct Crossing {
  CrossingKey key;
  Point2 location;
  Point2 direction_a;  // segment direction of key.a along its route
  Point2 direction_b;
  bool a_over = true;

  const StrandPosition& over() const { return a_over ? key.a : key.b; }
  const StrandPosition& under() const { return a_over ? key.b : key.a; }
  /// Over-strand identifier as serialized: the edge id, or the full strand
  /// position when both strands belong to the same edge.
  std::string over_id() const;
};

using Placement = std::map<Vertex, Point2>;
using Routes = std::map<Edge, std::vector<Point2>>;

/// Planar polyline drawing of a graph with over/under data: the concrete
/// stand-in for a spatial embedding. Always generic and complete once built.
class Diagram {
 public:
  /// Empty diagram of the empty graph.
  Diagram() = default;

  /// Validates genericity and that `over` names exactly the geometric
  /// crossings (keys as CrossingKey strings, values as in Crossing::over_id).
  /// Edges missing from `routes` are drawn as straight segments.
  static Diagram create(Graph host, Placement placement, Routes routes, const std::map<std::string, std::string>& over);
  /// Same geometry checks; over/under decided by `a_over` per crossing.
  static Diagram create(Graph host, Placement placement, Routes routes,
                        const std::function<bool(const Crossing&)>& a_over);

  const Graph& host() const { return host_; }
  const Placement& placement() const { return placement_; }
  const Routes& routes() const { return routes_; }
  const std::vector<Crossing>& crossings() const { return crossings_; }
  const Crossing& crossing(const CrossingKey& key) const;
  /// Crossing at exactly this point, if any.
  const Crossing* crossing_at(const Point2& p) const;
  std::map<std::string, std::string> over_map() const;

  bool operator==(const Diagram& o) const;

 private:
  friend Diagram flip_crossings(const Diagram& d, const std::vector<CrossingKey>& keys);
  Graph host_;
  Placement placement_;
  Routes routes_;
  std::vector<Crossing> crossings_;  // sorted by key
};

/// Recomputes every crossing from the raw geometry and checks genericity with
/// exact arithmetic. Throws degenerate_geometry with the offending
/// coordinates, or invalid_argument for missing/extra over entries.
std::vector<Crossing> validate_diagram(const Diagram& d);

/// Geometry-only pass used by validate_diagram and the builders: all crossings
/// with a_over unset.
std::vector<Crossing> find_crossings(const Graph& host, const Placement& placement, const Routes& routes);

/// Crossing sign for the pair's canonical orientations: +1 when turning the
/// over direction 90° counterclockwise gives the under direction.
int crossing_sign(const Crossing& c, const CyclePair& pair);

/// Crossings with one strand on each component of the pair.
std::vector<const Crossing*> inter_component_crossings(const Diagram& d, const CyclePair& pair);

/// Half the signed count of inter-component crossings.
int linking_number(const Diagram& d, const CyclePair& pair);

Diagram flip_crossings(const Diagram& d, const std::vector<CrossingKey>& keys);
/// Toggles the over strand of one crossing; geometry unchanged.
Diagram flip_crossing(const Diagram& d, const CrossingKey& key);

enum class SplitVerdict { zero_inter_crossings, r2_reduced, layered, unknown };

/// Sufficient certificate that the pair's link is split. Unknown asserts
/// nothing.
struct SplitCertificate {
  SplitVerdict verdict = SplitVerdict::unknown;
  int r2_steps = 0;

  bool is_split() const { return verdict != SplitVerdict::unknown; }
  std::string to_string() const;
};

/// Greedy cancellation of Reidemeister II bigons between the components (two
/// crossings of the same two edges, consecutive along both components and with
/// the same component on top), then: no mutual crossings left gives
/// ZeroInterCrossings / R2Reduced, one component over at every remaining
/// mutual crossing gives Layered.
SplitCertificate split_certify(const Diagram& d, const CyclePair& pair);

/// Lifts a diagram of m.minor to one of m.host: subdivision vertices sit on
/// the existing polylines, every other host edge is drawn afterwards in
/// lexicographic order passing under everything already drawn.
Diagram extend_diagram(const Diagram& d, const MinorMap& m);

/// Key of the crossing of `to` sitting where `key` sits in `from`.
CrossingKey corresponding_key(const Diagram& from, const Diagram& to, const CrossingKey& key);

}  // namespace linkset
