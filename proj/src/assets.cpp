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
#include "linkset/assets.hpp"

#include <cstdlib>

#ifndef LINKSET_DEFAULT_ASSET_DIR
#define LINKSET_DEFAULT_ASSET_DIR "assets"
#endif

namespace linkset {

std::string asset_dir() {
  const char* env = std::getenv("LINKSET_ASSET_DIR");
  return env && *env ? env : LINKSET_DEFAULT_ASSET_DIR;
}

std::string witness_path(const std::string& graph_name) { return asset_dir() + "/h_" + graph_name + ".json"; }

std::string battery_path(const std::string& graph_name) { return asset_dir() + "/" + graph_name + ".battery.json"; }

Diagram load_witness(const std::string& graph_name) { return read_diagram_file(witness_path(graph_name)); }

CertificateBundle load_bundle(const std::string& graph_name) {
  return bundle_from_json(read_json_file(battery_path(graph_name)));
}

Diagram read_diagram_file(const std::string& path) {
  const Json j = read_json_file(path);
  if (j.is_object() && j.contains("witnessDiagram")) return diagram_from_json(j.at("witnessDiagram"));
  return diagram_from_json(j);
}

}  // namespace linkset
