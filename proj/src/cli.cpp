// Copyright 2026 The rfdgraph Authors
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

#include "rfd/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "rfd/dot.hpp"
#include "rfd/report.hpp"

namespace rfd {

namespace {

// Raised for any problem with the user's input; maps to exit status 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string format = "human";
  std::string output;
  std::string file;
  std::string text;
  std::string point;
  std::string dot;
  std::string report;
  std::size_t stem_bound = 4;
  std::size_t exclusion_bound = 3;
  std::size_t orbit_cap = 64;
  std::uint64_t expand_bound = 3;
  std::uint64_t seed = 0;
  std::size_t vertices = 4;
  double density = 0.3;
  double omega = 0.1;
  std::size_t primitives = 2;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

GraphPresentation load(const RunConfig& c) {
  if (c.file.empty() == c.text.empty()) {
    throw InputError("give exactly one of a presentation file or --text");
  }
  const std::string source = c.file.empty() ? c.text : read_file(c.file);
  try {
    return parse(source);
  } catch (const ParseError& e) {
    throw InputError((c.file.empty() ? std::string("<text>") : c.file) + ":" + e.what());
  }
}

BoundaryPoint load_point(const GraphPresentation& g, const std::string& text) {
  try {
    return parse_point(g, text);
  } catch (const std::invalid_argument& e) {
    throw InputError("bad point '" + text + "': " + e.what());
  }
}

bool use_color(bool tty, const RunConfig& c) {
  const char* env = std::getenv("RFD_COLOR");
  const std::string mode = env ? env : "auto";
  if (mode == "always") return true;
  if (mode == "never") return false;
  if (mode != "auto") throw InputError("RFD_COLOR must be auto, never or always");
  return tty && c.output.empty();
}

class Emitter {
 public:
  Emitter(const RunConfig& c, std::ostream& out) : config_(c), out_(out) {}

  bool structured() const { return config_.format == "structured"; }

  void emit(const std::string& text) {
    if (config_.output.empty()) {
      out_ << text;
      return;
    }
    std::ofstream f(config_.output, std::ios::binary);
    if (!f || !(f << text)) throw InputError("cannot write " + config_.output);
  }

  void emit(const Json& j, const std::string& human) { emit(structured() ? dump(j) : human); }

 private:
  const RunConfig& config_;
  std::ostream& out_;
};

std::vector<Witness> failing_witnesses(const ConditionReport& r) {
  std::vector<Witness> out;
  for (const ConditionResult* c : {&r.a, &r.b, &r.c, &r.d}) {
    if (c->witness) out.push_back(*c->witness);
  }
  return out;
}

int cmd_check(const RunConfig& c, Emitter& em, bool color) {
  const GraphPresentation g = load(c);
  const ConditionReport r = decide_rfd(g);
  if (!c.dot.empty()) {
    std::ofstream f(c.dot, std::ios::binary);
    if (!f || !(f << dot_export(g, failing_witnesses(r)))) throw InputError("cannot write " + c.dot);
  }
  em.emit(to_json(g, r), human_conditions(g, r, color));
  return r.rfd ? kExitOk : kExitNegative;
}

int cmd_density(const RunConfig& c, Emitter& em, std::ostream& err, bool color) {
  const GraphPresentation g = load(c);
  const DensityReport d = periodic_density_check(g, {c.stem_bound, c.exclusion_bound, c.orbit_cap});
  const ConditionReport r = decide_rfd(g);
  const bool agree = d.dense == r.rfd;
  Json j = to_json(g, d);
  j["verdict"] = to_json(g, r);
  j["agreement"] = agree;
  std::string human = human_density(g, d, color);
  if (!agree) {
    human += "\nverdict:\n" + human_conditions(g, r, color);
    human += "DISAGREEMENT: the conditions say RFD " + std::string(r.rfd ? "yes" : "no") +
             " but periodic points are " + (d.dense ? "dense" : "not dense") +
             " at these bounds\n";
  }
  em.emit(j, human);
  if (!agree) {
    err << "error: density check disagrees with the condition verdict "
           "(a bug, or bounds too small for this presentation)\n";
    return kExitDisagreement;
  }
  return d.dense ? kExitOk : kExitNegative;
}

int cmd_orbit(const RunConfig& c, Emitter& em) {
  const GraphPresentation g = load(c);
  const BoundaryPoint x = load_point(g, c.point);
  const OrbitReport o = orbit(g, x, c.orbit_cap);
  em.emit(orbit_json(g, x, o), human_orbit(g, x, o));
  return kExitOk;
}

int cmd_isotropy(const RunConfig& c, Emitter& em) {
  const GraphPresentation g = load(c);
  const BoundaryPoint x = load_point(g, c.point);
  const IsotropyGroup i = isotropy(x);
  em.emit(isotropy_json(g, x, i), format_point(g, x) + ": " + format_isotropy(i) + "\n");
  return kExitOk;
}

int cmd_expand(const RunConfig& c, Emitter& em) {
  const GraphPresentation g = load(c);
  const TruncatedExpansion t = expand(g, c.expand_bound);
  std::ostringstream human;
  human << "bound " << t.bound << ": " << t.vertices.size() << " vertices, " << t.edges.size()
        << " edges\n";
  for (const ExplicitEdge& e : t.edges) {
    human << "  " << g.name(e.origin) << ": " << g.name(t.vertices[e.source]) << " -> "
          << g.name(t.vertices[e.target]) << '\n';
  }
  em.emit(expansion_json(g, t), human.str());
  return kExitOk;
}

int cmd_validate(const RunConfig& c, Emitter& em) {
  const GraphPresentation g = load(c);
  std::vector<std::pair<std::string, Witness>> witnesses;
  if (c.report.empty()) {
    const ConditionReport r = decide_rfd(g);
    const std::pair<const char*, const ConditionResult*> parts[] = {
        {"a", &r.a}, {"b", &r.b}, {"c", &r.c}, {"d", &r.d}};
    for (const auto& [key, res] : parts) {
      if (res->witness) witnesses.emplace_back(key, *res->witness);
    }
  } else {
    Json doc;
    try {
      doc = Json::parse(read_file(c.report));
      for (const char* key : {"a", "b", "c", "d"}) {
        const Json& w = doc.at("conditions").at(key).at("witness");
        if (!w.is_null()) witnesses.emplace_back(key, witness_from_json(g, w));
      }
    } catch (const InputError&) {
      throw;
    } catch (const std::exception& e) {
      throw InputError("bad report " + c.report + ": " + e.what());
    }
  }
  Json j = Json::object();
  j["kind"] = "Validation";
  Json results = Json::array();
  std::ostringstream human;
  bool all_valid = true;
  for (const auto& [key, w] : witnesses) {
    const std::string error = validate(g, w);
    all_valid = all_valid && error.empty();
    Json x = Json::object();
    x["condition"] = key;
    x["type"] = witness_kind(w);
    x["valid"] = error.empty();
    x["error"] = error.empty() ? Json(nullptr) : Json(error);
    results.push_back(std::move(x));
    human << key << ") " << witness_kind(w) << ": " << (error.empty() ? "valid" : error) << '\n';
  }
  if (witnesses.empty()) human << "no witnesses to check\n";
  j["valid"] = all_valid;
  j["witnesses"] = results;
  em.emit(j, human.str());
  return all_valid ? kExitOk : kExitNegative;
}

int cmd_random(const RunConfig& c, Emitter& em) {
  RandomSpec spec;
  spec.seed = c.seed;
  spec.max_vertices = c.vertices;
  spec.density = c.density;
  spec.omega_probability = c.omega;
  spec.max_primitives = {1, 1, 1, 1};
  spec.max_total_primitives = c.primitives;
  const GraphPresentation g = random_presentation(spec);
  const std::string text = serialize(g);
  Json j = Json::object();
  j["kind"] = "RandomPresentation";
  j["seed"] = c.seed;
  j["presentation"] = text;
  em.emit(j, text);
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err, bool tty) {
  RunConfig c;
  CLI::App app{"Decide residual finite-dimensionality of graph C*-algebras", "rfdcheck"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", c.format, "Report format")
      ->check(CLI::IsMember({"human", "structured"}));
  app.add_option("--output", c.output, "Write the report to this file");

  auto input = [&](CLI::App* sub) {
    sub->add_option("file", c.file, "Presentation file");
    sub->add_option("--text", c.text, "Presentation source given inline");
  };
  CLI::App* check = app.add_subcommand("check", "Evaluate the four conditions");
  input(check);
  check->add_option("--dot", c.dot, "Also write a Graphviz rendering with witnesses");

  CLI::App* density = app.add_subcommand("density", "Check density of periodic points");
  input(density);
  density->add_option("--stem-bound", c.stem_bound, "Longest cylinder base (L)")
      ->check(CLI::NonNegativeNumber);
  density->add_option("--exclusion-bound", c.exclusion_bound, "Largest exclusion set (f)")
      ->check(CLI::NonNegativeNumber);
  density->add_option("--orbit-cap", c.orbit_cap, "Orbit enumeration cap (K)")
      ->check(CLI::PositiveNumber);

  CLI::App* orbit_cmd = app.add_subcommand("orbit", "Analyse the orbit of a boundary point");
  orbit_cmd->add_option("file", c.file, "Presentation file");
  orbit_cmd->add_option("point", c.point, "Point, e.g. e1.(c1.c2)^inf");
  orbit_cmd->add_option("--text", c.text, "Presentation source given inline");
  orbit_cmd->add_option("--orbit-cap", c.orbit_cap, "Orbit enumeration cap")
      ->check(CLI::PositiveNumber);

  CLI::App* iso = app.add_subcommand("isotropy", "Isotropy group of a boundary point");
  iso->add_option("file", c.file, "Presentation file");
  iso->add_option("point", c.point, "Point");
  iso->add_option("--text", c.text, "Presentation source given inline");

  CLI::App* exp = app.add_subcommand("expand", "Explicit truncation of the graph");
  input(exp);
  exp->add_option("--expand-bound", c.expand_bound, "Members kept per infinite family (B)")
      ->check(CLI::PositiveNumber);

  CLI::App* val = app.add_subcommand("validate", "Re-check witnesses against a presentation");
  input(val);
  val->add_option("--report", c.report, "Structured check report whose witnesses to verify");

  CLI::App* rnd = app.add_subcommand("random", "Generate a random presentation");
  rnd->add_option("--seed", c.seed, "Random seed");
  rnd->add_option("--vertices", c.vertices, "Maximum core vertices")->check(CLI::PositiveNumber);
  rnd->add_option("--density", c.density, "Arc probability")->check(CLI::Range(0.0, 1.0));
  rnd->add_option("--omega", c.omega, "Probability of omega multiplicity")
      ->check(CLI::Range(0.0, 1.0));
  rnd->add_option("--primitives", c.primitives, "Maximum primitives");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  // With --text the only positional argument is the point.
  if ((orbit_cmd->parsed() || iso->parsed()) && c.point.empty()) {
    if (c.text.empty()) {
      err << "error: a boundary point is required\n";
      return kExitInputError;
    }
    std::swap(c.point, c.file);
  }

  try {
    Emitter em(c, out);
    const bool color = !em.structured() && use_color(tty, c);
    if (check->parsed()) return cmd_check(c, em, color);
    if (density->parsed()) return cmd_density(c, em, err, color);
    if (orbit_cmd->parsed()) return cmd_orbit(c, em);
    if (iso->parsed()) return cmd_isotropy(c, em);
    if (exp->parsed()) return cmd_expand(c, em);
    if (val->parsed()) return cmd_validate(c, em);
    return cmd_random(c, em);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
}

}  // namespace rfd
