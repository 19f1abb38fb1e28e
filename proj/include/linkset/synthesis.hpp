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

#include "linkset/catalog.hpp"
#include "linkset/certificates.hpp"
#include "linkset/diagram.hpp"

namespace linkset {

struct SynthesisOptions {
  std::uint64_t seed = 1;
  int max_tries = 50000;
  int grid = 40;  // vertex coordinates drawn from {0..grid}^2
};

struct SynthesisResult {
  Diagram witness;
  MinimalityBattery battery;
  int tries = 0;
};

/// Searches for a straight-line witness diagram for a proof recipe: random
/// grid placements, with over/under data solved as a linear system over GF(2)
/// so every pair but the designated one is layered (in the base diagram and
/// after each class's crossing change). Returns only diagrams whose witness
/// and battery pass verification; throws verification_failed when the tries
/// run out.
SynthesisResult synthesize_witness(const ProofRecipe& recipe, const LambdaSet& lam, const SynthesisOptions& options);

}  // namespace linkset
