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
// Regenerates the shipped witness diagrams and batteries:
//   synthesize_witnesses <out-dir> [graph...]

#include <chrono>
#include <iostream>

#include "linkset/assets.hpp"
#include "linkset/catalog.hpp"
#include "linkset/error.hpp"
#include "linkset/synthesis.hpp"

namespace {

std::uint64_t seed_for(const std::string& name) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : name) h = (h ^ c) * 1099511628211ULL;
  return h;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace linkset;
  if (argc < 2) {
    std::cerr << "usage: synthesize_witnesses <out-dir> [graph...]\n";
    return 2;
  }
  const std::string out = argv[1];
  std::vector<std::string> names(argv + 2, argv + argc);
  if (names.empty()) names = catalog_graph_names();
  try {
    for (const std::string& name : names) {
      const auto start = std::chrono::steady_clock::now();
      const ProofRecipe recipe = proof_recipe(name);
      const LambdaSet lam = catalog_lambda(recipe.lambda);
      SynthesisOptions opt;
      opt.seed = seed_for(name);
      opt.max_tries = 200000;
      const SynthesisResult r = synthesize_witness(recipe, lam, opt);
      CertificateBundle b{lam.host, lam, r.witness, r.battery.specs, {}};
      write_text_file(out + "/h_" + name + ".json", dump(to_json(r.witness)));
      write_text_file(out + "/" + name + ".battery.json", dump(to_json(b)));
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      std::cout << name << ": " << r.tries << " tries, " << r.witness.crossings().size() << " crossings, " << secs
                << " s\n";
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
