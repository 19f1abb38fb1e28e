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
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "linkset/linkset.h"

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInputError = 2;

using Json = nlohmann::json;

/// Thrown for bad flags or unreadable inputs; maps to exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(ls_status s, const std::string& context) {
  if (s == LS_OK) return;
  const std::string msg = context + ": " + ls_last_error();
  if (s == LS_ERR_VERIFICATION_FAILED) throw std::runtime_error(msg);
  throw InputError(msg);
}

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using GraphPtr = std::unique_ptr<ls_graph, Deleter<ls_graph, ls_graph_free>>;
using LambdaPtr = std::unique_ptr<ls_lambda, Deleter<ls_lambda, ls_lambda_free>>;
using DiagramPtr = std::unique_ptr<ls_diagram, Deleter<ls_diagram, ls_diagram_free>>;
using BundlePtr = std::unique_ptr<ls_bundle, Deleter<ls_bundle, ls_bundle_free>>;
using ReportPtr = std::unique_ptr<ls_report, Deleter<ls_report, ls_report_free>>;

std::string take(char* s) {
  std::string out(s ? s : "");
  ls_string_free(s);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out || !(out << text)) throw InputError("cannot write " + path);
}

bool is_file(const std::string& s) { return std::filesystem::is_regular_file(s); }

struct Options {
  std::string format = "text";
  std::string graph;
  std::string lambda;
  std::string witness;
  std::string battery;
  std::string bundle;
  std::string out;
  std::string export_name;
  std::string type;
  std::uint64_t seed = 1;
  std::uint64_t trials = 1000;
  int jobs = 1;
  int max_n = 0;
  int cycles = -1;
  int p = 0;
  int q = 0;
  bool hamiltonian = false;
  bool no_timing = false;
};

GraphPtr load_graph(const std::string& spec) {
  if (spec.empty()) throw InputError("--graph is required");
  ls_graph* g = nullptr;
  if (is_file(spec)) check(ls_graph_from_json(read_file(spec).c_str(), &g), "reading graph " + spec);
  else check(ls_graph_catalog(spec.c_str(), &g), "graph " + spec);
  return GraphPtr(g);
}

LambdaPtr load_lambda(const std::string& spec, const std::string& graph) {
  ls_lambda* lam = nullptr;
  if (spec.empty()) check(ls_lambda_default_for(graph.c_str(), &lam), "default Λ set for " + graph);
  else if (is_file(spec)) check(ls_lambda_from_json(read_file(spec).c_str(), &lam), "reading Λ set " + spec);
  else check(ls_lambda_catalog(spec.c_str(), &lam), "Λ set " + spec);
  return LambdaPtr(lam);
}

class Runner {
 public:
  Runner(Options& opt, std::string command) : opt_(opt), command_(std::move(command)) {}

  int catalog() {
    char* s = nullptr;
    if (!opt_.export_name.empty()) {
      check(ls_catalog_export(opt_.export_name.c_str(), &s), "export " + opt_.export_name);
      return emit_raw(take(s));
    }
    check(ls_catalog_json(&s), "catalog");
    const Json listing = Json::parse(take(s));
    if (opt_.format == "json") {
      std::cout << listing.dump(2) << "\n";
      return kPass;
    }
    std::cout << "graphs (" << listing["graphs"].size() << ")\n";
    for (const Json& g : listing["graphs"]) {
      std::cout << "  " << g["name"].get<std::string>() << ": " << g["vertices"] << " vertices, " << g["edges"]
                << " edges, certified with " << g["lambda"].get<std::string>() << "\n";
      if (g.contains("note")) std::cout << "    note: " << g["note"].get<std::string>() << "\n";
    }
    std::cout << "lambda sets (" << listing["lambdas"].size() << ")\n";
    for (const Json& l : listing["lambdas"])
      std::cout << "  " << l["name"].get<std::string>() << ": " << l["size"] << " pairs on "
                << l["graph"].get<std::string>() << "\n";
    return kPass;
  }

  int enumerate() {
    GraphPtr g = load_graph(opt_.graph);
    char* s = nullptr;
    if (opt_.cycles >= 0) {
      check(ls_enumerate_cycles(g.get(), opt_.cycles, &s), "enumerate cycles");
    } else {
      int p = 0;
      int q = 0;
      if (!opt_.type.empty()) parse_type(opt_.type, p, q);
      check(ls_enumerate_pairs(g.get(), p, q, opt_.hamiltonian ? 1 : 0, &s), "enumerate pairs");
    }
    const Json j = Json::parse(take(s));
    if (opt_.format == "json") {
      std::cout << j.dump(2) << "\n";
      return kPass;
    }
    const char* list = j.contains("cycles") ? "cycles" : "pairs";
    std::cout << list << ": " << j["count"] << "\n";
    for (const Json& x : j[list]) std::cout << "  " << x.get<std::string>() << "\n";
    return kPass;
  }

  int verify_linked() {
    GraphPtr g = load_graph(opt_.graph);
    LambdaPtr lam = load_lambda(opt_.lambda, opt_.graph);
    const std::string path = opt_.witness.empty() ? asset("h_" + opt_.graph + ".json") : opt_.witness;
    ls_diagram* d = nullptr;
    check(ls_diagram_load(path.c_str(), &d), "witness " + path);
    DiagramPtr dp(d);
    return report([&](ls_report** r) { return ls_verify_linked(g.get(), lam.get(), dp.get(), r); });
  }

  int verify_minimal() {
    GraphPtr g = load_graph(opt_.graph);
    const std::string path = opt_.battery.empty() ? asset(opt_.graph + ".battery.json") : opt_.battery;
    ls_bundle* b = nullptr;
    check(ls_bundle_load(path.c_str(), &b), "battery " + path);
    BundlePtr bp(b);
    if (!opt_.lambda.empty()) {
      LambdaPtr want = load_lambda(opt_.lambda, opt_.graph);
      char* a = nullptr;
      char* c = nullptr;
      check(ls_lambda_to_json(want.get(), &a), "lambda");
      check(ls_bundle_to_json(bp.get(), &c), "bundle");
      const Json lam = Json::parse(take(a));
      const Json bundle = Json::parse(take(c));
      if (lam["pairs"] != bundle["lambda"]["pairs"])
        throw InputError("battery is built for " + bundle["lambda"]["name"].get<std::string>() + ", not " +
                         lam["name"].get<std::string>());
    }
    return report([&](ls_report** r) { return ls_verify_minimal(g.get(), bp.get(), opt_.jobs, r); });
  }

  int verify_lift() {
    if (opt_.bundle.empty()) throw InputError("verify lift needs --bundle");
    const std::string text = read_file(opt_.bundle);
    const auto [battery, parity] = bounds();
    return report([&](ls_report** r) { return ls_verify_lift(text.c_str(), battery, parity, opt_.jobs, r); });
  }

  int splitting_count() {
    GraphPtr g = load_graph(opt_.graph);
    return report([&](ls_report** r) { return ls_splitting_count(g.get(), r); });
  }

  int construct() {
    const auto [battery, parity] = bounds();
    char* file = nullptr;
    const int code = report([&](ls_report** r) {
      return ls_construct(opt_.p, opt_.q, battery, parity, opt_.jobs, r, opt_.out.empty() ? nullptr : &file);
    });
    if (file) write_file(opt_.out, take(file));
    return code;
  }

  int montecarlo() {
    GraphPtr g = load_graph(opt_.graph);
    LambdaPtr lam = load_lambda(opt_.lambda, opt_.graph);
    return report(
        [&](ls_report** r) { return ls_monte_carlo(g.get(), lam.get(), opt_.trials, opt_.seed, opt_.jobs, r); },
        true);
  }

 private:
  static void parse_type(const std::string& text, int& p, int& q) {
    const auto comma = text.find(',');
    try {
      if (comma == std::string::npos) throw std::invalid_argument("no comma");
      p = std::stoi(text.substr(0, comma));
      q = std::stoi(text.substr(comma + 1));
    } catch (const std::logic_error&) {
      throw InputError("--type expects p,q");
    }
  }

  static std::string asset(const std::string& file) {
    const char* env = std::getenv("LINKSET_ASSET_DIR");
    return std::string(env && *env ? env : LINKSET_DEFAULT_ASSET_DIR) + "/" + file;
  }

  std::pair<int, int> bounds() const {
    if (opt_.max_n <= 0) return {10, 12};
    std::cerr << "warning: --max-n " << opt_.max_n << " overrides the default size bounds (battery n <= 10, parity n <= 12)\n";
    return {opt_.max_n, std::max(opt_.max_n, 12)};
  }

  int emit_raw(const std::string& text) {
    if (opt_.out.empty()) std::cout << text;
    else write_file(opt_.out, text);
    return kPass;
  }

  template <class Call>
  int report(Call&& call, bool seeded = false) {
    const auto start = std::chrono::steady_clock::now();
    ls_report* raw = nullptr;
    check(call(&raw), command_);
    ReportPtr r(raw);
    const double ms =
        opt_.no_timing ? 0.0 : std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    const bool passed = ls_report_passed(r.get()) != 0;
    char* s = nullptr;
    if (opt_.format == "json") {
      check(ls_report_json(r.get(), &s), "report");
      Json j = Json::parse(take(s));
      j["command"] = command_;
      j["seed"] = seeded ? Json(opt_.seed) : Json(nullptr);
      j["timingMs"] = ms;
      std::cout << j.dump(2) << "\n";
    } else {
      check(ls_report_text(r.get(), &s), "report");
      std::cout << "command: " << command_ << "\n" << take(s);
      if (seeded) std::cout << "seed: " << opt_.seed << "\n";
      std::cout << "time: " << ms << " ms\n";
    }
    return passed ? kPass : kFail;
  }

  Options& opt_;
  std::string command_;
};

std::string echo(int argc, char** argv) {
  std::string out = "linkset";
  for (int i = 1; i < argc; ++i) out += std::string(" ") + argv[i];
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"Certificates for linked and minimally linked sets of cycle pairs in spatial graphs", "linkset"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--jobs", opt.jobs, "Worker threads for trials and battery specs")->check(CLI::Range(1, 256));
  app.add_option("--max-n", opt.max_n, "Raise the battery and parity size bounds to n");
  app.add_flag("--no-timing", opt.no_timing, "Report zero elapsed time (byte-stable output)");

  auto* catalog = app.add_subcommand("catalog", "List or export catalog graphs, Λ sets, witnesses and batteries");
  catalog->add_option("--export", opt.export_name, "Name to export: graph, Λ set, h_<graph> or <graph>.battery");
  catalog->add_option("--out", opt.out, "Write the export to a file");

  auto* enumerate = app.add_subcommand("enumerate", "Enumerate disjoint cycle pairs or cycles");
  enumerate->add_option("--graph", opt.graph, "Catalog name or graph JSON file")->required();
  enumerate->add_option("--type", opt.type, "Pair type p,q");
  enumerate->add_flag("--hamiltonian", opt.hamiltonian, "Only Hamiltonian pairs");
  enumerate->add_option("--cycles", opt.cycles, "List cycles of this length instead (0 = all)");

  auto* verify = app.add_subcommand("verify", "Verify certificates");
  verify->require_subcommand(1);
  auto* linked = verify->add_subcommand("linked", "Parity table plus witness diagram");
  linked->add_option("--graph", opt.graph, "Catalog name or graph JSON file")->required();
  linked->add_option("--lambda", opt.lambda, "Λ set name or JSON file (default: the graph's catalog set)");
  linked->add_option("--witness", opt.witness, "Diagram or bundle JSON (default: shipped witness)");
  auto* minimal = verify->add_subcommand("minimal", "Witness battery for minimal linkedness");
  minimal->add_option("--graph", opt.graph, "Catalog name or graph JSON file")->required();
  minimal->add_option("--lambda", opt.lambda, "Expected Λ set");
  minimal->add_option("--battery", opt.battery, "Bundle JSON (default: shipped battery)");
  auto* lift = verify->add_subcommand("lift", "Re-verify a construction file produced by construct");
  lift->add_option("--bundle", opt.bundle, "Construction JSON")->required();
  auto* splitting = verify->add_subcommand("splitting-count", "Vertex splittings increase the number of cycle pairs");
  splitting->add_option("--graph", opt.graph, "Catalog name or graph JSON file")->required();

  auto* construct = app.add_subcommand("construct", "Build the minimally linked set of Γ_{p,q}(K_{p+q})");
  construct->add_option("p", opt.p, "Length of the longer cycle")->required();
  construct->add_option("q", opt.q, "Length of the shorter cycle")->required();
  construct->add_option("--out", opt.out, "Write graph, Λ, minor map and certificates here");

  auto* montecarlo = app.add_subcommand("montecarlo", "ς over seeded random linear embeddings");
  montecarlo->add_option("--graph", opt.graph, "Catalog name or graph JSON file")->required();
  montecarlo->add_option("--lambda", opt.lambda, "Λ set name or JSON file");
  montecarlo->add_option("--trials", opt.trials, "Number of embeddings");
  montecarlo->add_option("--seed", opt.seed, "Master seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInputError;
  }

  Runner run(opt, echo(argc, argv));
  try {
    if (*catalog) return run.catalog();
    if (*enumerate) return run.enumerate();
    if (*linked) return run.verify_linked();
    if (*minimal) return run.verify_minimal();
    if (*lift) return run.verify_lift();
    if (*splitting) return run.splitting_count();
    if (*construct) return run.construct();
    if (*montecarlo) return run.montecarlo();
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kInputError;
}
