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

#include <string>

#include "linkset/diagram.hpp"
#include "linkset/serialize.hpp"

namespace linkset {

/// LINKSET_ASSET_DIR when set, otherwise the directory fixed at build time.
std::string asset_dir();

/// Path of the shipped witness diagram h_<graph>.json.
std::string witness_path(const std::string& graph_name);
/// Path of the shipped certificate bundle <graph>.battery.json.
std::string battery_path(const std::string& graph_name);

Diagram load_witness(const std::string& graph_name);
CertificateBundle load_bundle(const std::string& graph_name);

/// Reads a diagram from a file holding either a diagram or a whole bundle.
Diagram read_diagram_file(const std::string& path);

}  // namespace linkset
