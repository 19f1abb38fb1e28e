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

#include <array>
#include <cstddef>
#include <vector>

#include "linkset/graph.hpp"

namespace linkset {

/// Deletes the triangle's three edges and joins a new vertex to its corners.
Graph delta_y(const Graph& g, std::array<Vertex, 3> triangle, Vertex new_label);
/// Deletes a degree-3 vertex and joins its neighbours pairwise (adding only
/// the missing edges).
Graph y_delta(const Graph& g, Vertex v);

struct VertexSplitting {
  Graph graph;
  Vertex kept = 0;       // keeps the original label, adjacent to side_a
  Vertex new_vertex = 0; // max label + 1, adjacent to side_b
  std::vector<Vertex> side_a;
  std::vector<Vertex> side_b;
  bool trivial = false;  // min(|A|, |B|) <= 1
  bool leaf = false;     // one side empty: creates a degree-1 vertex, not a valid splitting
};

/// Every unordered partition (A, B) of N(v), A holding the smallest
/// neighbour: 2^(deg-1) entries including the single leaf partition.
std::vector<VertexSplitting> vertex_splittings(const Graph& g, Vertex v);

struct ConnectivityReport {
  std::size_t components = 0;
  std::vector<Edge> cut_edges;
};

ConnectivityReport connectivity_report(const Graph& g);

}  // namespace linkset
