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

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "linkset/cycles.hpp"
#include "linkset/diagram.hpp"
#include "linkset/graph.hpp"
#include "linkset/rational.hpp"

namespace linkset {

struct Point3 {
  std::int64_t x = 0;
  std::int64_t y = 0;
  std::int64_t z = 0;

  bool operator==(const Point3&) const = default;
};

struct Direction3 {
  Rational x;
  Rational y;
  Rational z;
};

/// Straight-line embedding with integer vertex coordinates.
struct LinearEmbedding {
  Graph host;
  std::map<Vertex, Point3> coords;
};

inline constexpr std::int64_t kCoordinateBound = 1000000;
inline constexpr int kEmbeddingRetries = 64;

/// Reason the embedding is not in general position, if any: three collinear
/// vertices, or the four endpoints of two disjoint edges coplanar (which rules
/// out any intersection between disjoint edges).
std::optional<std::string> general_position_violation(const LinearEmbedding& e);

/// Uniform integer coordinates in [-10^6, 10^6]^3 from a seeded PRNG,
/// resampled with a retry counter mixed into the seed until in general
/// position. Throws degenerate_geometry after kEmbeddingRetries attempts.
LinearEmbedding random_linear_embedding(const Graph& g, std::uint64_t seed);

/// The k-th projection direction: (0,0,1), then (1, k+1, (k+1)^2).
Direction3 projection_direction(int k);

/// Orthogonal projection along `direction` in a right-handed frame; a strand
/// is over when it is higher along `direction`. Throws degenerate_geometry
/// when the direction is not generic for e.
Diagram project_to_diagram(const LinearEmbedding& e, const Direction3& direction);

/// Projection along the first generic direction of the fixed sequence,
/// starting at index `first`. Returns the diagram and the index used.
std::pair<Diagram, int> project_generic(const LinearEmbedding& e, int first = 0);

int linking_number_linear(const LinearEmbedding& e, const CyclePair& pair);

}  // namespace linkset
