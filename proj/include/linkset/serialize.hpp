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

#include "json.hpp"
#include "linkset/certificates.hpp"
#include "linkset/cycles.hpp"
#include "linkset/diagram.hpp"
#include "linkset/graph.hpp"
#include "linkset/minor.hpp"

namespace linkset {

using Json = nlohmann::json;

/// Certificate bundle: a Λ set with one witness diagram and a battery whose
/// specs all refer to that diagram.
struct CertificateBundle {
  Graph graph;
  LambdaSet lambda;
  Diagram witness;
  std::vector<WitnessSpec> battery;
  /// As read from a file; recomputed on write.
  Json parity_digest;

  MinimalityBattery as_battery() const { return {lambda, witness, battery}; }
  LinkednessCertificate as_certificate() const { return {lambda, witness}; }
};

Json to_json(const Graph& g);
Graph graph_from_json(const Json& j);

Json to_json(const Cycle& c);
Json to_json(const CyclePair& p);
CyclePair pair_from_json(const Json& j);

Json to_json(const LambdaSet& lam);
LambdaSet lambda_from_json(const Json& j);

Json to_json(const Diagram& d);
Diagram diagram_from_json(const Json& j);

Json to_json(const MinorMap& m);
MinorMap minor_map_from_json(const Json& j);

/// Sorted [[[u,v],[x,y]], count] entries.
Json parity_digest(const ParityTable& t);

Json to_json(const CertificateBundle& b);
CertificateBundle bundle_from_json(const Json& j);

Json to_json(const LinkedReport& r);
Json to_json(const MinimalReport& r);
Json to_json(const SplittingReport& r);
Json to_json(const MonteCarloReport& r);

/// Parses text, mapping JSON syntax errors to parse_error.
Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

/// Canonical text form used for files: two-space indent, trailing newline.
std::string dump(const Json& j);

}  // namespace linkset
