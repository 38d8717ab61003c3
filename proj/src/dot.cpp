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

#include "rfd/dot.hpp"

#include <set>
#include <sstream>

namespace rfd {

namespace {

constexpr std::uint64_t kShown = 3;

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

struct Highlights {
  std::set<EdgeRef> edges;
  std::set<VertexRef> vertices;
};

Highlights collect(const std::vector<Witness>& witnesses) {
  Highlights h;
  for (const Witness& w : witnesses) {
    if (const auto* r = std::get_if<InfiniteReceiver>(&w)) {
      h.vertices.insert(r->vertex);
      h.edges.insert(r->sample_in_edges.begin(), r->sample_in_edges.end());
    } else if (const auto* c = std::get_if<CycleWithExit>(&w)) {
      h.edges.insert(c->cycle.edges.begin(), c->cycle.edges.end());
      h.edges.insert(c->exit);
    } else if (const auto* b = std::get_if<BackwardChainGen>(&w)) {
      if (b->backray) {
        for (std::uint64_t i = 1; i <= kShown; ++i) h.edges.insert(EdgeRef::member(*b->backray, i));
      } else {
        h.edges.insert(b->omega_cycle->edges.begin(), b->omega_cycle->edges.end());
      }
    } else {
      h.vertices.insert(std::get<StrandedVertex>(w).vertex);
    }
  }
  return h;
}

}  // namespace

std::string dot_export(const GraphPresentation& g, const std::vector<Witness>& witnesses) {
  const Highlights hl = collect(witnesses);
  std::ostringstream out;
  out << "digraph G {\n"
      << "  rankdir=LR;\n"
      << "  node [shape=circle, style=filled, fillcolor=lightgray];\n";
  auto vertex_attrs = [&](const VertexRef& v) {
    return hl.vertices.count(v) ? std::string(", color=red, penwidth=2") : std::string();
  };
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const VertexRef ref = VertexRef::core(v);
    out << "  " << quote(g.vertex_name(v)) << " [label=" << quote(g.vertex_name(v))
        << vertex_attrs(ref) << "];\n";
  }
  auto edge = [&](const std::string& s, const std::string& t, const EdgeRef& e) {
    out << "  " << quote(s) << " -> " << quote(t) << " [label=" << quote(g.name(e));
    if (hl.edges.count(e)) out << ", color=red, penwidth=2";
    out << "];\n";
  };
  auto dotted = [&](const std::string& s, const std::string& t) {
    out << "  " << quote(s) << " -> " << quote(t) << " [style=dotted, label=\"...\"];\n";
  };
  auto small = [&](const std::string& id, const VertexRef& v) {
    out << "  " << quote(id) << " [shape=point, style=solid" << vertex_attrs(v) << "];\n";
  };

  for (std::size_t a = 0; a < g.arc_count(); ++a) {
    const Arc& arc = g.arc(a);
    const std::string& s = g.vertex_name(arc.source);
    const std::string& t = g.vertex_name(arc.target);
    const bool omega = arc.multiplicity.is_omega();
    const std::uint64_t n = omega ? kShown : arc.multiplicity.value();
    for (std::uint64_t k = 0; k < n; ++k) edge(s, t, EdgeRef::copy(a, k));
    if (omega) dotted(s, t);
  }
  for (std::size_t p = 0; p < g.primitive_count(); ++p) {
    const Primitive& prim = g.primitive(p);
    const std::string anchor = g.vertex_name(prim.anchor);
    auto member = [&](std::int64_t i) {
      const VertexRef v = VertexRef::member(p, i);
      return std::make_pair(g.name(v), v);
    };
    const std::string more = prim.tag + "[...]";
    out << "  " << quote(more) << " [shape=none, style=solid, label=\"...\"];\n";
    switch (prim.kind) {
      case PrimitiveKind::InStar:
      case PrimitiveKind::OutStar:
        for (std::uint64_t i = 1; i <= kShown; ++i) {
          auto [id, v] = member(static_cast<std::int64_t>(i));
          small(id, v);
          if (prim.kind == PrimitiveKind::InStar) {
            edge(id, anchor, EdgeRef::member(p, i));
          } else {
            edge(anchor, id, EdgeRef::member(p, i));
          }
        }
        if (prim.kind == PrimitiveKind::InStar) {
          dotted(more, anchor);
        } else {
          dotted(anchor, more);
        }
        break;
      case PrimitiveKind::BackRay: {
        std::string next = anchor;
        for (std::uint64_t i = 1; i <= kShown; ++i) {
          auto [id, v] = member(-static_cast<std::int64_t>(i));
          small(id, v);
          edge(id, next, EdgeRef::member(p, i));
          next = id;
        }
        dotted(more, next);
        break;
      }
      case PrimitiveKind::FwdRay: {
        std::string prev = anchor;
        for (std::uint64_t i = 1; i <= kShown; ++i) {
          auto [id, v] = member(static_cast<std::int64_t>(i));
          small(id, v);
          edge(prev, id, EdgeRef::member(p, i));
          prev = id;
        }
        dotted(prev, more);
        break;
      }
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace rfd
