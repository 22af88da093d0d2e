// Copyright 2026 The OrbitWeave Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "orbitweave/cli.hpp"

#include <functional>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "orbitweave/errors.hpp"
#include "orbitweave/graph_io.hpp"
#include "orbitweave/knop_action.hpp"
#include "orbitweave/lattice.hpp"
#include "orbitweave/models.hpp"
#include "orbitweave/path_analysis.hpp"
#include "orbitweave/reports.hpp"

namespace orbitweave {

namespace {

struct Context {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  bool pretty = false;
};

void emit(Context& ctx, const Json& doc) { ctx.out << doc.dump(2) << "\n"; }

std::vector<CertificationReport> certify_all(const OrbitGraph& g,
                                             const ValidationOptions& options) {
  std::vector<CertificationReport> layers;
  layers.push_back(validate_structure(g, options));
  bool structural = layers.front().passed();

  CertificationReport paths;
  CertificationReport action;
  paths.layer = "paths";
  action.layer = "action";
  if (!structural) {
    paths.add("skipped", Severity::kError, "structure layer failed");
    action.add("skipped", Severity::kError, "structure layer failed");
  } else {
    WeylGroup weyl(g.cartan());
    paths = certify_paths(g, weyl);
    try {
      action = certify_action(build_action(g), g.cartan());
    } catch (const CertificationError& e) {
      action.add("trichotomy", Severity::kError, e.what(), e.witness());
    }
  }
  layers.push_back(std::move(paths));
  layers.push_back(std::move(action));
  return layers;
}

int cmd_validate(Context& ctx, const std::string& file, bool truncated) {
  OrbitGraph g = load_graph(file, ctx.in);
  auto layers = certify_all(g, {truncated});
  bool passed = true;
  for (const auto& layer : layers) passed = passed && layer.passed();
  if (ctx.pretty) {
    ctx.out << pretty(layers) << (passed ? "certified" : "NOT certified")
            << "\n";
  } else {
    Json doc;
    doc["passed"] = passed;
    doc["layers"] = Json::array();
    for (const auto& layer : layers) doc["layers"].push_back(to_json(layer));
    emit(ctx, doc);
  }
  return passed ? kExitPass : kExitFail;
}

int cmd_analyze(Context& ctx, const std::string& file,
                const std::string& vertex) {
  OrbitGraph g = load_graph(file, ctx.in);
  WeylGroup weyl(g.cartan());
  g.index_of(vertex);
  ExpansionReport report = schubert_expansion(g, weyl, vertex);
  if (ctx.pretty) {
    ctx.out << pretty(report, weyl);
  } else {
    emit(ctx, to_json(report, weyl));
  }
  return kExitPass;
}

int cmd_model(Context& ctx, const std::string& kind, const std::string& type,
              const std::vector<std::size_t>& parabolic,
              const std::string& atom) {
  std::optional<OrbitGraph> g;
  if (kind == "group") {
    g = group_case(CartanDatum::parse(type));
  } else if (kind == "flag") {
    g = flag_case(CartanDatum::parse(type), parabolic);
  } else {
    g = sl2_atom(atom_kind_from_string(atom));
  }
  ctx.out << (ctx.pretty ? export_dot(*g) : write_graph_json(*g));
  return kExitPass;
}

int cmd_induce(Context& ctx, const std::string& type,
               const std::vector<std::size_t>& subset,
               const std::string& base_file) {
  OrbitGraph base = load_graph(base_file, ctx.in);
  OrbitGraph g = parabolic_induction(CartanDatum::parse(type), subset, base);
  ctx.out << (ctx.pretty ? export_dot(g) : write_graph_json(g));
  return kExitPass;
}

int cmd_knop(Context& ctx, const std::string& file, const std::string& lattice,
             const std::string& top) {
  OrbitGraph g = load_graph(file, ctx.in);
  WeylGroup weyl(g.cartan());
  Json doc;
  CertificationReport action;
  action.layer = "action";
  std::optional<ActionTable> table;
  try {
    table = build_action(g);
    action = certify_action(*table, g.cartan());
  } catch (const CertificationError& e) {
    action.add("trichotomy", Severity::kError, e.what(), e.witness());
  }
  doc["action"] = to_json(action);
  if (!action.passed()) {
    doc["passed"] = false;
    if (ctx.pretty) {
      ctx.out << pretty({action});
    } else {
      emit(ctx, doc);
    }
    return kExitFail;
  }

  CertificationReport orbit;
  orbit.layer = "max_rank_orbit";
  Json orbit_ids = Json::array();
  try {
    for (VertexIndex v : max_rank_orbit(*table, g)) {
      orbit_ids.push_back(g.vertex(v).id);
    }
  } catch (const CertificationError& e) {
    orbit.add("orbit", Severity::kError, e.what(), e.witness());
  }
  doc["max_rank_orbit"] = orbit_ids;
  doc["orbit_check"] = to_json(orbit);

  StabilizerReport report =
      stabilizer(*table, g, weyl,
                 top.empty() ? std::nullopt : std::optional<std::string>(top));
  std::optional<WeightLattice> weights;
  if (!lattice.empty()) weights.emplace(g.cartan(), parse_weights(lattice));
  report.generators = classify_generators(report, weyl, weights);
  CertificationReport minimal = prop_minimal_check(*table, g, weyl, report);
  doc["stabilizer"] = to_json(report, weyl);
  doc["prop_minimal"] = to_json(minimal);
  bool passed = orbit.passed() && report.decomposition.passed() &&
                minimal.passed() && report.generators->found;
  doc["passed"] = passed;
  if (ctx.pretty) {
    ctx.out << pretty(report, weyl) << pretty({action, orbit, minimal});
  } else {
    emit(ctx, doc);
  }
  return passed ? kExitPass : kExitFail;
}

int cmd_fixtures(Context& ctx, const std::string& action,
                 const std::string& name) {
  if (action == "list") {
    if (ctx.pretty) {
      for (const auto& n : fixture_names()) ctx.out << n << "\n";
    } else {
      emit(ctx, Json(fixture_names()));
    }
    return kExitPass;
  }
  if (name.empty()) throw Error("fixtures get needs a fixture name");
  ctx.out << write_graph_json(fixture(name));
  return kExitPass;
}

int cmd_export_dot(Context& ctx, const std::string& file) {
  ctx.out << export_dot(load_graph(file, ctx.in));
  return kExitPass;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err) {
  Context ctx{in, out, err};
  CLI::App app{"Weak-order graphs of spherical varieties", "orbitweave"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_flag("--pretty", ctx.pretty, "Human-readable tables");

  std::function<int()> run;
  std::string file;
  std::string vertex;
  std::string type;
  std::string kind;
  std::string atom = "U";
  std::string lattice;
  std::string top;
  std::string action;
  std::string name;
  std::vector<std::size_t> subset;
  bool truncated = false;

  auto* validate = app.add_subcommand("validate", "Certify a graph file");
  validate->add_option("file", file, "Graph JSON ('-' for stdin)")->required();
  validate->add_flag("--allow-truncated", truncated,
                     "Single-source T edges are warnings");
  validate->callback([&] { run = [&] { return cmd_validate(ctx, file, truncated); }; });

  auto* analyze = app.add_subcommand("analyze", "W(Y) and Schubert expansion");
  analyze->add_option("file", file)->required();
  analyze->add_option("--vertex", vertex, "Vertex id")->required();
  analyze->callback([&] { run = [&] { return cmd_analyze(ctx, file, vertex); }; });

  auto* model = app.add_subcommand("model", "Build a model graph");
  model->add_option("kind", kind, "group, flag or atom")
      ->required()
      ->check(CLI::IsMember({"group", "flag", "atom"}));
  model->add_option("--type", type, "Cartan type, e.g. A2 or A1+A1");
  model->add_option("--parabolic", subset, "Simple roots of I (flag case)")
      ->delimiter(',');
  model->add_option("--atom", atom, "Atom kind U, T or N")
      ->check(CLI::IsMember({"U", "T", "N"}));
  model->callback([&] {
    if (kind != "atom" && type.empty()) {
      throw CLI::RequiredError("--type");
    }
    run = [&] { return cmd_model(ctx, kind, type, subset, atom); };
  });

  auto* induce = app.add_subcommand("induce", "Parabolic induction");
  induce->add_option("--type", type)->required();
  induce->add_option("--subset", subset)->delimiter(',');
  induce->add_option("--base", file, "Base graph ('-' for stdin)")->required();
  induce->callback([&] { run = [&] { return cmd_induce(ctx, type, subset, file); }; });

  auto* knop = app.add_subcommand("knop", "Knop action and stabilizer");
  knop->add_option("file", file)->required();
  knop->add_option("--lattice", lattice,
                   "Weight lattice generators, e.g. \"1,1;2,0\" (root basis)");
  knop->add_option("--top", top, "Top vertex when the graph has several");
  knop->callback([&] { run = [&] { return cmd_knop(ctx, file, lattice, top); }; });

  auto* fixtures = app.add_subcommand("fixtures", "Shipped fixtures");
  fixtures->add_option("action", action, "list or get")
      ->required()
      ->check(CLI::IsMember({"list", "get"}));
  fixtures->add_option("name", name);
  fixtures->callback([&] { run = [&] { return cmd_fixtures(ctx, action, name); }; });

  auto* dot = app.add_subcommand("export-dot", "Graphviz rendering");
  dot->add_option("file", file)->required();
  dot->callback([&] { run = [&] { return cmd_export_dot(ctx, file); }; });

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    return run();
  } catch (const SchemaError& e) {
    err << "schema error " << e.what() << "\n";
    return kExitUsage;
  } catch (const CertificationError& e) {
    err << "certification failure: " << e.what() << "\n";
    for (const auto& w : e.witness()) err << "  " << w << "\n";
    return kExitFail;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace orbitweave
