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

#include "rfd/oracle.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>

namespace rfd {

std::optional<std::size_t> TruncatedExpansion::find(const VertexRef& v) const {
  auto it = index.find(v);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

std::size_t TruncatedExpansion::out_count(std::size_t v) const {
  return static_cast<std::size_t>(
      std::count_if(edges.begin(), edges.end(), [&](const ExplicitEdge& e) { return e.source == v; }));
}

std::size_t TruncatedExpansion::in_count(std::size_t v) const {
  return static_cast<std::size_t>(
      std::count_if(edges.begin(), edges.end(), [&](const ExplicitEdge& e) { return e.target == v; }));
}

TruncatedExpansion expand(const GraphPresentation& g, std::uint64_t bound) {
  TruncatedExpansion t;
  t.bound = bound;
  auto add_vertex = [&](VertexRef v) {
    t.index.emplace(v, t.vertices.size());
    t.vertices.push_back(v);
  };
  for (std::size_t v = 0; v < g.vertex_count(); ++v) add_vertex(VertexRef::core(v));
  for (std::size_t p = 0; p < g.primitive_count(); ++p) {
    const bool back = g.primitive(p).kind == PrimitiveKind::BackRay;
    for (std::uint64_t i = 1; i <= bound; ++i) {
      const auto k = static_cast<std::int64_t>(i);
      add_vertex(VertexRef::member(p, back ? -k : k));
    }
  }
  auto add_edge = [&](EdgeRef e, VertexRef s, VertexRef r) {
    t.edges.push_back({e, t.index.at(s), t.index.at(r)});
  };
  for (std::size_t a = 0; a < g.arc_count(); ++a) {
    const Arc& arc = g.arc(a);
    const std::uint64_t n = arc.multiplicity.is_omega() ? bound : arc.multiplicity.value();
    for (std::uint64_t k = 0; k < n; ++k) {
      add_edge(EdgeRef::copy(a, k), VertexRef::core(arc.source), VertexRef::core(arc.target));
    }
  }
  for (std::size_t p = 0; p < g.primitive_count(); ++p) {
    const Primitive& prim = g.primitive(p);
    const VertexRef anchor = VertexRef::core(prim.anchor);
    for (std::uint64_t i = 1; i <= bound; ++i) {
      const auto k = static_cast<std::int64_t>(i);
      const EdgeRef e = EdgeRef::member(p, i);
      switch (prim.kind) {
        case PrimitiveKind::InStar: add_edge(e, VertexRef::member(p, k), anchor); break;
        case PrimitiveKind::OutStar: add_edge(e, anchor, VertexRef::member(p, k)); break;
        case PrimitiveKind::BackRay:
          add_edge(e, VertexRef::member(p, -k), i == 1 ? anchor : VertexRef::member(p, -(k - 1)));
          break;
        case PrimitiveKind::FwdRay:
          add_edge(e, i == 1 ? anchor : VertexRef::member(p, k - 1), VertexRef::member(p, k));
          break;
      }
    }
  }
  return t;
}

std::vector<Path> enumerate_paths(const TruncatedExpansion& t, const VertexRef& to,
                                  std::size_t max_length) {
  const std::size_t target = t.index.at(to);
  std::vector<Path> out;
  Path rev;
  auto grow = [&](auto&& self, std::size_t at) -> void {
    out.emplace_back(rev.rbegin(), rev.rend());
    if (rev.size() == max_length) return;
    for (const ExplicitEdge& e : t.edges) {
      if (e.target != at) continue;
      rev.push_back(e.origin);
      self(self, e.source);
      rev.pop_back();
    }
  };
  grow(grow, target);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Depth-first search for backward paths with distinct edges. Only the least
// unused member of each parallel family is tried; any chain can be relabelled
// to use those, so the search stays exhaustive.
struct ChainSearch {
  const TruncatedExpansion& t;
  std::size_t goal;
  std::vector<bool> used;
  std::vector<std::vector<std::size_t>> in;  // explicit in-edges per vertex
  Path rev, best;

  ChainSearch(const TruncatedExpansion& te, std::size_t g)
      : t(te), goal(g), used(te.edges.size(), false), in(te.vertices.size()) {
    for (std::size_t i = 0; i < t.edges.size(); ++i) in[t.edges[i].target].push_back(i);
  }

  bool run(std::size_t at) {
    if (rev.size() > best.size()) best = rev;
    if (best.size() >= goal) return true;
    std::set<std::pair<bool, std::size_t>> tried;
    for (std::size_t i : in[at]) {
      if (used[i]) continue;
      const EdgeRef& o = t.edges[i].origin;
      const std::pair<bool, std::size_t> family{o.derived, o.owner};
      // Parallel copies of one arc are interchangeable; star members are not
      // (their sources differ).
      if (!o.derived && !tried.insert(family).second) continue;
      used[i] = true;
      rev.push_back(o);
      const bool done = run(t.edges[i].source);
      rev.pop_back();
      used[i] = false;
      if (done) return true;
    }
    return false;
  }
};

}  // namespace

std::optional<Path> brute_backward_chain(const TruncatedExpansion& t, std::size_t min_length) {
  if (min_length == 0) return Path{};
  ChainSearch s(t, min_length);
  for (std::size_t v = 0; v < t.vertices.size(); ++v) {
    if (s.run(v)) return Path(s.best.rbegin(), s.best.rend());
  }
  return std::nullopt;
}

std::size_t longest_backward_chain(const TruncatedExpansion& t, std::size_t cap) {
  ChainSearch s(t, cap);
  for (std::size_t v = 0; v < t.vertices.size(); ++v) {
    if (t.vertices[v].derived) continue;
    if (s.run(v)) break;
  }
  return s.best.size();
}

GraphPresentation random_presentation(const RandomSpec& spec) {
  std::mt19937_64 rng(spec.seed);
  auto uniform = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  GraphPresentation g;
  const std::size_t n = 1 + static_cast<std::size_t>(rng() % std::max<std::size_t>(spec.max_vertices, 1));
  for (std::size_t v = 0; v < n; ++v) g.add_vertex("v" + std::to_string(v));
  std::size_t arcs = 0;
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t r = 0; r < n; ++r) {
      if (uniform() >= spec.density) continue;
      ExtNat m = uniform() < spec.omega_probability
                     ? ExtNat::omega()
                     : ExtNat(1 + rng() % std::max<std::uint64_t>(spec.max_multiplicity, 1));
      g.add_arc("e" + std::to_string(arcs++), "v" + std::to_string(s), "v" + std::to_string(r), m);
    }
  }
  static constexpr PrimitiveKind kKinds[] = {PrimitiveKind::InStar, PrimitiveKind::OutStar,
                                             PrimitiveKind::BackRay, PrimitiveKind::FwdRay};
  std::size_t prims = 0;
  for (std::size_t k = 0; k < 4; ++k) {
    const std::size_t count = rng() % (spec.max_primitives[k] + 1);
    for (std::size_t i = 0; i < count && prims < spec.max_total_primitives; ++i) {
      const std::size_t anchor = rng() % n;
      g.add_primitive(kKinds[k], "p" + std::to_string(prims++), "v" + std::to_string(anchor));
    }
  }
  return g;
}

}  // namespace rfd
