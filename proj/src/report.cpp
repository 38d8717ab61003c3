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

#include "rfd/report.hpp"

#include <sstream>
#include <stdexcept>

namespace rfd {

namespace {

Json names(const GraphPresentation& g, const Path& p) {
  Json out = Json::array();
  for (const EdgeRef& e : p) out.push_back(g.name(e));
  return out;
}

Json vertex_names(const GraphPresentation& g, const std::vector<std::size_t>& vs) {
  Json out = Json::array();
  for (std::size_t v : vs) out.push_back(g.vertex_name(v));
  return out;
}

Json points(const GraphPresentation& g, const std::vector<BoundaryPoint>& xs) {
  Json out = Json::array();
  for (const BoundaryPoint& x : xs) out.push_back(format_point(g, x));
  return out;
}

Json conditions_json(const GraphPresentation& g, const ConditionReport& r) {
  Json c = Json::object();
  const std::pair<const char*, const ConditionResult*> parts[] = {
      {"a", &r.a}, {"b", &r.b}, {"c", &r.c}, {"d", &r.d}};
  for (const auto& [key, res] : parts) {
    Json entry = Json::object();
    entry["holds"] = res->holds;
    entry["witness"] = res->witness ? to_json(g, *res->witness) : Json(nullptr);
    c[key] = std::move(entry);
  }
  return c;
}

std::string paint(const std::string& s, const char* code, bool color) {
  if (!color) return s;
  return std::string("\x1b[") + code + "m" + s + "\x1b[0m";
}

std::string yes_no(bool b, bool color) { return b ? paint("yes", "32", color) : paint("no", "31", color); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw std::invalid_argument(std::string("witness is missing '") + key + "'");
  }
  return j.at(key);
}

Cycle cycle_from_json(const GraphPresentation& g, const Json& j) {
  Cycle c;
  for (const Json& e : field(j, "edges")) c.edges.push_back(g.parse_edge(e.get<std::string>()));
  for (const Json& v : field(j, "vertices")) {
    auto id = g.find_vertex(v.get<std::string>());
    if (!id) throw std::invalid_argument("unknown cycle vertex " + v.get<std::string>());
    c.vertices.push_back(*id);
  }
  return c;
}

}  // namespace

Json to_json(const ExtNat& n) {
  if (n.is_omega()) return "omega";
  return n.value();
}

Json to_json(const GraphPresentation& g, const Cycle& c) {
  Json j = Json::object();
  j["edges"] = names(g, c.edges);
  j["vertices"] = vertex_names(g, c.vertices);
  return j;
}

Json to_json(const GraphPresentation& g, const Witness& w) {
  Json j = Json::object();
  j["type"] = witness_kind(w);
  if (const auto* r = std::get_if<InfiniteReceiver>(&w)) {
    j["vertex"] = g.name(r->vertex);
    j["sample_in_edges"] = names(g, r->sample_in_edges);
  } else if (const auto* c = std::get_if<CycleWithExit>(&w)) {
    j["cycle"] = to_json(g, c->cycle);
    j["exit"] = g.name(c->exit);
    j["position"] = c->position;
  } else if (const auto* b = std::get_if<BackwardChainGen>(&w)) {
    j["backray"] = b->backray ? Json(g.primitive(*b->backray).tag) : Json(nullptr);
    j["omega_cycle"] = b->omega_cycle ? to_json(g, *b->omega_cycle) : Json(nullptr);
  } else {
    const auto& s = std::get<StrandedVertex>(w);
    j["vertex"] = g.name(s.vertex);
    j["closure_core"] = vertex_names(g, s.closure_core);
    Json rays = Json::array();
    for (std::size_t p : s.closure_rays) rays.push_back(g.primitive(p).tag);
    j["closure_rays"] = rays;
  }
  return j;
}

Witness witness_from_json(const GraphPresentation& g, const Json& j) {
  const std::string type = field(j, "type").get<std::string>();
  if (type == "InfiniteReceiver") {
    InfiniteReceiver w{g.parse_vertex(field(j, "vertex").get<std::string>()), {}};
    for (const Json& e : field(j, "sample_in_edges")) {
      w.sample_in_edges.push_back(g.parse_edge(e.get<std::string>()));
    }
    return w;
  }
  if (type == "CycleWithExit") {
    return CycleWithExit{cycle_from_json(g, field(j, "cycle")),
                         g.parse_edge(field(j, "exit").get<std::string>()),
                         field(j, "position").get<std::size_t>()};
  }
  if (type == "BackwardChainGen") {
    BackwardChainGen w;
    if (const Json& b = field(j, "backray"); !b.is_null()) {
      auto p = g.find_primitive(b.get<std::string>());
      if (!p) throw std::invalid_argument("unknown backward ray " + b.get<std::string>());
      w.backray = *p;
    }
    if (const Json& c = field(j, "omega_cycle"); !c.is_null()) w.omega_cycle = cycle_from_json(g, c);
    return w;
  }
  if (type == "StrandedVertex") {
    StrandedVertex w{g.parse_vertex(field(j, "vertex").get<std::string>()), {}, {}};
    for (const Json& v : field(j, "closure_core")) {
      auto id = g.find_vertex(v.get<std::string>());
      if (!id) throw std::invalid_argument("unknown vertex " + v.get<std::string>());
      w.closure_core.push_back(*id);
    }
    for (const Json& r : field(j, "closure_rays")) {
      auto p = g.find_primitive(r.get<std::string>());
      if (!p) throw std::invalid_argument("unknown ray " + r.get<std::string>());
      w.closure_rays.push_back(*p);
    }
    return w;
  }
  throw std::invalid_argument("unknown witness type '" + type + "'");
}

Json to_json(const GraphPresentation& g, const ConditionReport& r) {
  Json j = Json::object();
  j["kind"] = "ConditionReport";
  j["rfd"] = r.rfd;
  j["conditions"] = conditions_json(g, r);
  Json parts = Json::array();
  for (const ComponentReport& c : r.components) {
    Json p = Json::object();
    Json vs = Json::array();
    for (std::size_t v = 0; v < c.graph.vertex_count(); ++v) vs.push_back(c.graph.vertex_name(v));
    p["vertices"] = vs;
    p["rfd"] = c.report.rfd;
    p["conditions"] = conditions_json(c.graph, c.report);
    parts.push_back(std::move(p));
  }
  j["components"] = parts;
  return j;
}

Json to_json(const IsotropyGroup& i) {
  Json j = Json::object();
  if (const auto* c = std::get_if<InfiniteCyclic>(&i)) {
    j["type"] = "InfiniteCyclic";
    j["period"] = c->period;
  } else {
    j["type"] = "Trivial";
  }
  return j;
}

Json to_json(const GraphPresentation& g, const OrbitCertificate& c) {
  Json j = Json::object();
  j["type"] = certificate_name(c.kind);
  j["edges"] = names(g, c.edges);
  j["exit"] = c.exit ? Json(g.name(*c.exit)) : Json(nullptr);
  j["vertex"] = c.vertex ? Json(g.name(*c.vertex)) : Json(nullptr);
  j["samples"] = points(g, c.samples);
  return j;
}

Json to_json(const GraphPresentation& g, const NotDenseCertificate& c) {
  Json j = Json::object();
  j["condition"] = std::string(1, c.condition);
  j["witness"] = c.witness ? to_json(g, *c.witness) : Json(nullptr);
  j["cylinder"] = format_cylinder(g, c.cylinder);
  j["probe"] = format_point(g, c.probe);
  j["certificate"] = to_json(g, c.certificate);
  return j;
}

Json to_json(const GraphPresentation& g, const DensityReport& r) {
  Json j = Json::object();
  j["kind"] = "DensityReport";
  Json params = Json::object();
  params["stem_bound"] = r.params.stem_bound;
  params["exclusion_bound"] = r.params.exclusion_bound;
  params["orbit_cap"] = r.params.orbit_cap;
  j["parameters"] = params;
  j["outcome"] = r.dense ? "Dense" : "NotDense";
  j["cylinders_examined"] = r.cylinders;
  Json entries = Json::array();
  for (const DensityEntry& e : r.entries) {
    Json x = Json::object();
    x["cylinder"] = format_cylinder(g, e.cylinder);
    x["point"] = format_point(g, e.point);
    x["orbit_size"] = to_json(e.orbit_size);
    x["isotropy"] = to_json(e.isotropy);
    entries.push_back(std::move(x));
  }
  j["periodic_points"] = entries;
  j["certificate"] = r.failure ? to_json(g, *r.failure) : Json(nullptr);
  return j;
}

Json orbit_json(const GraphPresentation& g, const BoundaryPoint& x, const OrbitReport& r) {
  Json j = Json::object();
  j["kind"] = "OrbitReport";
  j["point"] = format_point(g, x);
  j["finite"] = r.finite;
  j["size"] = to_json(r.size);
  j["members"] = points(g, r.members);
  j["cap_exceeded"] = r.cap_exceeded;
  j["certificate"] = r.certificate ? to_json(g, *r.certificate) : Json(nullptr);
  return j;
}

Json isotropy_json(const GraphPresentation& g, const BoundaryPoint& x, const IsotropyGroup& i) {
  Json j = Json::object();
  j["kind"] = "Isotropy";
  j["point"] = format_point(g, x);
  j["group"] = to_json(i);
  return j;
}

Json expansion_json(const GraphPresentation& g, const TruncatedExpansion& t) {
  Json j = Json::object();
  j["kind"] = "Expansion";
  j["bound"] = t.bound;
  Json vs = Json::array();
  for (const VertexRef& v : t.vertices) vs.push_back(g.name(v));
  j["vertices"] = vs;
  Json es = Json::array();
  for (const ExplicitEdge& e : t.edges) {
    Json x = Json::object();
    x["edge"] = g.name(e.origin);
    x["source"] = g.name(t.vertices[e.source]);
    x["target"] = g.name(t.vertices[e.target]);
    es.push_back(std::move(x));
  }
  j["edges"] = es;
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------------------
// Human text

std::string describe(const GraphPresentation& g, const Witness& w) {
  std::ostringstream out;
  if (const auto* r = std::get_if<InfiniteReceiver>(&w)) {
    out << "InfiniteReceiver at " << g.name(r->vertex) << " (in-edges";
    for (const EdgeRef& e : r->sample_in_edges) out << ' ' << g.name(e);
    out << ", ...)";
  } else if (const auto* c = std::get_if<CycleWithExit>(&w)) {
    out << "CycleWithExit: cycle " << g.name(c->cycle.edges) << ", exit " << g.name(c->exit)
        << " at " << g.vertex_name(c->cycle.vertices[c->position]);
  } else if (const auto* b = std::get_if<BackwardChainGen>(&w)) {
    out << "BackwardChainGen: ";
    if (b->backray) {
      out << "backward ray " << g.primitive(*b->backray).tag << " into "
          << g.vertex_name(g.primitive(*b->backray).anchor);
    } else {
      out << "omega cycle " << g.name(b->omega_cycle->edges);
    }
  } else {
    const auto& s = std::get<StrandedVertex>(w);
    out << "StrandedVertex " << g.name(s.vertex)
        << ": no path to a sink, a cycle or an infinite emitter";
  }
  return out.str();
}

std::string describe(const GraphPresentation& g, const OrbitCertificate& c) {
  std::ostringstream out;
  out << certificate_name(c.kind);
  if (!c.edges.empty()) out << " [" << g.name(c.edges) << "]";
  if (c.exit) out << " exit " << g.name(*c.exit);
  if (c.vertex) out << " at " << g.name(*c.vertex);
  out << "; members";
  for (const BoundaryPoint& x : c.samples) out << ' ' << format_point(g, x);
  out << " ...";
  return out.str();
}

std::string human_conditions(const GraphPresentation& g, const ConditionReport& r, bool color) {
  static constexpr const char* kLabels[] = {"a) no infinite receiver",
                                            "b) no cycle with an exit",
                                            "c) no infinite backward chain",
                                            "d) every vertex reaches a sink, cycle or emitter"};
  const ConditionResult* parts[] = {&r.a, &r.b, &r.c, &r.d};
  std::ostringstream out;
  for (std::size_t i = 0; i < 4; ++i) {
    std::string label = kLabels[i];
    label.resize(50, ' ');
    out << label << yes_no(parts[i]->holds, color) << '\n';
    if (parts[i]->witness) out << "     " << describe(g, *parts[i]->witness) << '\n';
  }
  if (r.components.size() > 1) {
    out << "components: " << r.components.size() << '\n';
    for (const ComponentReport& c : r.components) {
      out << "  {";
      for (std::size_t v = 0; v < c.graph.vertex_count(); ++v) {
        out << (v ? ", " : "") << c.graph.vertex_name(v);
      }
      out << "}  RFD: " << (c.report.rfd ? "yes" : "no") << '\n';
    }
  }
  out << "RFD: " << yes_no(r.rfd, color) << '\n';
  return out.str();
}

std::string human_density(const GraphPresentation& g, const DensityReport& r, bool color) {
  constexpr std::size_t kShown = 20;
  std::ostringstream out;
  out << "bounds: stem " << r.params.stem_bound << ", exclusions " << r.params.exclusion_bound
      << ", orbit cap " << r.params.orbit_cap << '\n';
  out << "cylinders examined: " << r.cylinders << '\n';
  if (r.dense) {
    out << "periodic points: " << r.entries.size() << '\n';
    for (std::size_t i = 0; i < r.entries.size() && i < kShown; ++i) {
      const DensityEntry& e = r.entries[i];
      out << "  " << format_cylinder(g, e.cylinder) << "  ->  " << format_point(g, e.point)
          << "  orbit " << e.orbit_size.to_string() << ", " << format_isotropy(e.isotropy) << '\n';
    }
    if (r.entries.size() > kShown) out << "  ... " << r.entries.size() - kShown << " more\n";
  } else {
    const NotDenseCertificate& c = *r.failure;
    out << "no periodic point in " << format_cylinder(g, c.cylinder) << " (condition "
        << c.condition << ")\n";
    if (c.witness) out << "  " << describe(g, *c.witness) << '\n';
    out << "  probe " << format_point(g, c.probe) << ": " << describe(g, c.certificate) << '\n';
  }
  out << "periodic points dense: " << yes_no(r.dense, color) << '\n';
  return out.str();
}

std::string human_orbit(const GraphPresentation& g, const BoundaryPoint& x, const OrbitReport& r) {
  std::ostringstream out;
  out << "point: " << format_point(g, x) << '\n';
  if (r.finite) {
    out << "orbit: finite, size " << r.size.to_string() << '\n';
    for (const BoundaryPoint& m : r.members) out << "  " << format_point(g, m) << '\n';
    if (r.cap_exceeded) out << "  (enumeration stopped at the orbit cap)\n";
  } else {
    out << "orbit: infinite\n  " << describe(g, *r.certificate) << '\n';
  }
  return out.str();
}

}  // namespace rfd
