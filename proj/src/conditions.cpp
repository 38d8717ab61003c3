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

#include "rfd/conditions.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

namespace rfd {

namespace {

using ArcFilter = std::function<bool(const Arc&)>;

bool any_arc(const Arc&) { return true; }
bool omega_arc(const Arc& a) { return a.multiplicity.is_omega(); }

// Successor lists of the simple digraph underlying the core: for each vertex,
// (successor, smallest arc) sorted by successor index.
std::vector<std::vector<std::pair<std::size_t, std::size_t>>> simple_successors(
    const GraphPresentation& g, const ArcFilter& keep) {
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> succ(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    for (std::size_t a : g.out_arcs(v)) {
      if (!keep(g.arc(a))) continue;
      const std::size_t w = g.arc(a).target;
      auto it = std::find_if(succ[v].begin(), succ[v].end(),
                             [w](const auto& p) { return p.first == w; });
      if (it == succ[v].end()) succ[v].emplace_back(w, a);
    }
    std::sort(succ[v].begin(), succ[v].end());
  }
  return succ;
}

CycleEnumeration enumerate_filtered(const GraphPresentation& g, const ArcFilter& keep,
                                    std::size_t cap) {
  const auto succ = simple_successors(g, keep);
  CycleEnumeration out;
  const std::size_t n = g.vertex_count();
  std::vector<bool> on_path(n, false);
  std::vector<std::size_t> vertex_stack;
  std::vector<std::size_t> arc_stack;

  // Iterative DFS would obscure the structure; depth is bounded by n.
  std::function<bool(std::size_t, std::size_t)> dfs = [&](std::size_t root,
                                                          std::size_t v) -> bool {
    for (const auto& [w, a] : succ[v]) {
      if (w < root) continue;
      if (w == root) {
        if (out.cycles.size() >= cap) {
          out.truncated = true;
          return false;
        }
        Cycle c;
        c.vertices = vertex_stack;
        for (std::size_t x : arc_stack) c.edges.push_back(EdgeRef::copy(x));
        c.edges.push_back(EdgeRef::copy(a));
        out.cycles.push_back(std::move(c));
        continue;
      }
      if (on_path[w]) continue;
      on_path[w] = true;
      vertex_stack.push_back(w);
      arc_stack.push_back(a);
      const bool go_on = dfs(root, w);
      vertex_stack.pop_back();
      arc_stack.pop_back();
      on_path[w] = false;
      if (!go_on) return false;
    }
    return true;
  };

  for (std::size_t root = 0; root < n; ++root) {
    on_path[root] = true;
    vertex_stack = {root};
    arc_stack.clear();
    const bool go_on = dfs(root, root);
    on_path[root] = false;
    if (!go_on) break;
  }
  return out;
}

// Tarjan's strongly connected components, iterative.
std::vector<std::size_t> scc_filtered(const GraphPresentation& g, const ArcFilter& keep) {
  const std::size_t n = g.vertex_count();
  const auto succ = simple_successors(g, keep);
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, kUnset), low(n, 0), comp(n, kUnset);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::size_t> comp_size;
  std::size_t counter = 0;

  for (std::size_t start = 0; start < n; ++start) {
    if (index[start] != kUnset) continue;
    std::vector<std::pair<std::size_t, std::size_t>> work{{start, 0}};
    while (!work.empty()) {
      auto& [v, next] = work.back();
      if (next == 0 && index[v] == kUnset) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = true;
      }
      if (next < succ[v].size()) {
        const std::size_t w = succ[v][next++].first;
        if (index[w] == kUnset) {
          work.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        const std::size_t id = comp_size.size();
        comp_size.push_back(0);
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = id;
          ++comp_size[id];
        } while (w != v);
      }
      const std::size_t done = v;
      work.pop_back();
      if (!work.empty()) {
        const std::size_t parent = work.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
    }
  }

  return comp;
}

std::vector<bool> on_some_cycle(const GraphPresentation& g, const ArcFilter& keep) {
  const std::size_t n = g.vertex_count();
  const auto succ = simple_successors(g, keep);
  const std::vector<std::size_t> comp = scc_filtered(g, keep);
  std::vector<std::size_t> comp_size(n, 0);
  for (std::size_t c : comp) ++comp_size[c];
  std::vector<bool> out(n, false);
  for (std::size_t v = 0; v < n; ++v) {
    if (comp_size[comp[v]] > 1) out[v] = true;
    for (const auto& [w, a] : succ[v]) {
      if (w == v) out[v] = true;
    }
  }
  return out;
}

std::optional<Cycle> shortest_cycle_through(const GraphPresentation& g, std::size_t v,
                                            const ArcFilter& keep) {
  const auto succ = simple_successors(g, keep);
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> parent_arc(g.vertex_count(), kUnset);
  std::vector<bool> seen(g.vertex_count(), false);
  std::deque<std::size_t> queue{v};
  seen[v] = true;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (const auto& [w, a] : succ[u]) {
      if (w == v) {
        std::vector<std::size_t> arcs{a};
        for (std::size_t x = u; x != v; x = g.arc(parent_arc[x]).source) {
          arcs.push_back(parent_arc[x]);
        }
        std::reverse(arcs.begin(), arcs.end());
        Cycle c;
        for (std::size_t x : arcs) {
          c.vertices.push_back(g.arc(x).source);
          c.edges.push_back(EdgeRef::copy(x));
        }
        return c;
      }
      if (!seen[w]) {
        seen[w] = true;
        parent_arc[w] = a;
        queue.push_back(w);
      }
    }
  }
  return std::nullopt;
}

std::string validate_cycle(const GraphPresentation& g, const Cycle& c) {
  const std::size_t n = c.edges.size();
  if (n == 0 || c.vertices.size() != n) return "cycle is empty or malformed";
  std::set<std::size_t> distinct;
  for (std::size_t i = 0; i < n; ++i) {
    if (!g.contains(c.edges[i]) || c.edges[i].derived) return "cycle edge is not a core edge";
    if (g.source(c.edges[i]) != VertexRef::core(c.vertices[i])) {
      return "cycle edge " + g.name(c.edges[i]) + " does not leave the listed vertex";
    }
    if (g.target(c.edges[i]) != VertexRef::core(c.vertices[(i + 1) % n])) {
      return "cycle edges do not compose at " + g.name(c.edges[i]);
    }
    distinct.insert(c.vertices[i]);
  }
  if (distinct.size() != n) return "cycle repeats a vertex";
  return {};
}

// Forward closure of a core vertex: reachable core vertices plus the forward
// rays anchored among them.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> forward_summary(
    const GraphPresentation& g, std::size_t v) {
  std::vector<std::size_t> core = core_reachable(g, v), rays;
  for (std::size_t u : core) {
    for (std::size_t p : g.anchored(u)) {
      if (g.primitive(p).kind == PrimitiveKind::FwdRay) rays.push_back(p);
    }
  }
  std::sort(rays.begin(), rays.end());
  return {core, rays};
}

}  // namespace

CycleEnumeration enumerate_cycles(const GraphPresentation& g, std::size_t cap) {
  return enumerate_filtered(g, any_arc, cap);
}

CycleEnumeration enumerate_omega_cycles(const GraphPresentation& g, std::size_t cap) {
  return enumerate_filtered(g, omega_arc, cap);
}

std::vector<bool> cycle_vertices(const GraphPresentation& g) {
  return on_some_cycle(g, any_arc);
}

std::vector<std::size_t> strongly_connected_components(const GraphPresentation& g) {
  return scc_filtered(g, any_arc);
}

std::optional<Cycle> cycle_through(const GraphPresentation& g, std::size_t v) {
  if (v >= g.vertex_count()) throw UnknownReference("unknown vertex");
  return shortest_cycle_through(g, v, any_arc);
}

std::vector<bool> terminal_vertices(const GraphPresentation& g) {
  std::vector<bool> good = cycle_vertices(g);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (g.is_singular(VertexRef::core(v))) good[v] = true;
  }
  return good;
}

std::string witness_kind(const Witness& w) {
  static constexpr const char* kNames[] = {"InfiniteReceiver", "CycleWithExit",
                                           "BackwardChainGen", "StrandedVertex"};
  return kNames[w.index()];
}

bool ConditionReport::operator==(const ConditionReport& o) const {
  return a == o.a && b == o.b && c == o.c && d == o.d && rfd == o.rfd &&
         components == o.components;
}

// ---------------------------------------------------------------------------
// Deciders

ConditionResult check_no_infinite_receiver(const GraphPresentation& g) {
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (!g.in_degree(v).is_omega()) continue;
    InfiniteReceiver w{VertexRef::core(v), {}};
    // Samples come from one infinite family so they also exhibit infinitude.
    for (std::size_t a : g.in_arcs(v)) {
      if (g.arc(a).multiplicity.is_omega()) {
        for (std::uint64_t k = 0; k < 3; ++k) w.sample_in_edges.push_back(EdgeRef::copy(a, k));
        break;
      }
    }
    if (w.sample_in_edges.empty()) {
      for (std::size_t p : g.anchored(v)) {
        if (g.primitive(p).kind == PrimitiveKind::InStar) {
          for (std::uint64_t k = 1; k <= 3; ++k) w.sample_in_edges.push_back(EdgeRef::member(p, k));
          break;
        }
      }
    }
    return {false, Witness{std::move(w)}};
  }
  return {};
}

ConditionResult check_no_cycle_with_exit(const GraphPresentation& g) {
  const std::vector<bool> on_cycle = cycle_vertices(g);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (!on_cycle[v] || g.out_degree(v) < ExtNat(2)) continue;
    Cycle c = *cycle_through(g, v);
    const EdgeRef own = c.edges.front();
    for (const EdgeRef& e : g.out_edges(VertexRef::core(v), 2)) {
      if (e != own) return {false, Witness{CycleWithExit{std::move(c), e, 0}}};
    }
  }
  return {};
}

ConditionResult check_no_infinite_backward_chain(const GraphPresentation& g) {
  for (std::size_t p = 0; p < g.primitive_count(); ++p) {
    if (g.primitive(p).kind == PrimitiveKind::BackRay) {
      return {false, Witness{BackwardChainGen{p, std::nullopt}}};
    }
  }
  const std::vector<bool> omega_cyclic = on_some_cycle(g, omega_arc);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (omega_cyclic[v]) {
      return {false, Witness{BackwardChainGen{std::nullopt,
                                              shortest_cycle_through(g, v, omega_arc)}}};
    }
  }
  return {};
}

ConditionResult check_reaches_terminal(const GraphPresentation& g) {
  for (std::size_t p = 0; p < g.primitive_count(); ++p) {
    if (g.primitive(p).kind == PrimitiveKind::FwdRay) {
      return {false, Witness{StrandedVertex{VertexRef::member(p, 1), {}, {p}}}};
    }
  }
  const std::vector<bool> good = terminal_vertices(g);
  std::vector<std::size_t> seeds;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (good[v]) seeds.push_back(v);
  }
  const std::vector<bool> covered = core_coreachable_mask(g, seeds);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (!covered[v]) {
      auto [core, rays] = forward_summary(g, v);
      return {false, Witness{StrandedVertex{VertexRef::core(v), core, rays}}};
    }
  }
  return {};
}

namespace {

ConditionReport run_checks(const GraphPresentation& g) {
  ConditionReport r;
  r.a = check_no_infinite_receiver(g);
  r.b = check_no_cycle_with_exit(g);
  r.c = check_no_infinite_backward_chain(g);
  r.d = check_reaches_terminal(g);
  r.rfd = r.a.holds && r.b.holds && r.c.holds && r.d.holds;
  return r;
}

}  // namespace

ConditionReport decide_rfd(const GraphPresentation& g) {
  ConditionReport report = run_checks(g);
  for (GraphPresentation& part : components(g)) {
    ConditionReport sub = run_checks(part);
    report.components.push_back({std::move(part), std::move(sub)});
  }
  return report;
}

// ---------------------------------------------------------------------------
// Witness validation

std::string validate(const GraphPresentation& g, const Witness& witness) {
  struct Visitor {
    const GraphPresentation& g;

    std::string operator()(const InfiniteReceiver& w) const {
      if (!g.contains(w.vertex)) return "unknown receiver vertex";
      if (!g.in_degree(w.vertex).is_omega()) return "receiver has finite in-degree";
      if (w.sample_in_edges.size() < 3) return "fewer than three sample in-edges";
      std::set<EdgeRef> distinct(w.sample_in_edges.begin(), w.sample_in_edges.end());
      if (distinct.size() != w.sample_in_edges.size()) return "sample in-edges repeat";
      for (const EdgeRef& e : w.sample_in_edges) {
        if (!g.contains(e) || g.target(e) != w.vertex) return "sample edge misses the receiver";
      }
      return {};
    }

    std::string operator()(const CycleWithExit& w) const {
      if (auto err = validate_cycle(g, w.cycle); !err.empty()) return err;
      if (w.position >= w.cycle.length()) return "exit position out of range";
      if (!g.contains(w.exit)) return "unknown exit edge";
      if (g.source(w.exit) != VertexRef::core(w.cycle.vertices[w.position])) {
        return "exit edge does not share a source with the cycle edge";
      }
      if (w.exit == w.cycle.edges[w.position]) return "exit edge equals the cycle edge";
      return {};
    }

    std::string operator()(const BackwardChainGen& w) const {
      if (w.backray.has_value() == w.omega_cycle.has_value()) {
        return "exactly one generator must be given";
      }
      if (w.backray) {
        if (*w.backray >= g.primitive_count() ||
            g.primitive(*w.backray).kind != PrimitiveKind::BackRay) {
          return "generator is not a backward ray";
        }
        return {};
      }
      if (auto err = validate_cycle(g, *w.omega_cycle); !err.empty()) return err;
      for (const EdgeRef& e : w.omega_cycle->edges) {
        if (!g.arc(e.owner).multiplicity.is_omega()) return "cycle arc has finite multiplicity";
      }
      return {};
    }

    std::string operator()(const StrandedVertex& w) const {
      if (!g.contains(w.vertex)) return "unknown stranded vertex";
      std::vector<std::size_t> core, rays;
      if (w.vertex.derived) {
        if (g.primitive(w.vertex.owner).kind != PrimitiveKind::FwdRay) {
          return "derived stranded vertex must lie on a forward ray";
        }
        rays = {w.vertex.owner};
      } else {
        std::tie(core, rays) = forward_summary(g, w.vertex.owner);
      }
      if (core != w.closure_core || rays != w.closure_rays) {
        return "closure summary does not match the forward closure";
      }
      const std::vector<bool> good = terminal_vertices(g);
      for (std::size_t u : core) {
        if (good[u]) return "closure reaches " + g.vertex_name(u);
      }
      return {};
    }
  };
  return std::visit(Visitor{g}, witness);
}

}  // namespace rfd
