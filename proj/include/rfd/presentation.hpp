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

// Finite presentations of countable directed multigraphs.
//
// A presentation is a finite core multigraph (arcs carry a multiplicity that
// may be omega) plus four kinds of infinite attachments anchored at core
// vertices:
//
//   instar  t: v   fresh sources t[1], t[2], ... with edges t#i : t[i] -> v
//   outstar t: v   fresh sinks   t[1], t[2], ... with edges t#i : v -> t[i]
//   backray t: v   fresh vertices t[-1], t[-2], ... with edges
//                  t#1 : t[-1] -> v and t#i : t[-i] -> t[-i+1]
//   fwdray  t: v   fresh vertices t[1], t[2], ... with edges
//                  t#1 : v -> t[1] and t#i : t[i-1] -> t[i]
//
// Vertices and edges of the presented countable graph are addressed
// symbolically through VertexRef and EdgeRef; nothing infinite is ever
// materialized.

#ifndef RFD_PRESENTATION_HPP_
#define RFD_PRESENTATION_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "rfd/ext_nat.hpp"

namespace rfd {

enum class PrimitiveKind : std::uint8_t { InStar, OutStar, BackRay, FwdRay };

std::string_view keyword(PrimitiveKind kind);

struct Arc {
  std::string id;
  std::size_t source = 0;
  std::size_t target = 0;
  ExtNat multiplicity{1};

  bool operator==(const Arc&) const = default;
};

struct Primitive {
  PrimitiveKind kind = PrimitiveKind::InStar;
  std::string tag;
  std::size_t anchor = 0;

  bool operator==(const Primitive&) const = default;
};

// A vertex of the presented graph. Core vertices are indexed by declaration
// order; derived vertices by (primitive index, family index). Family indices
// are negative for backward rays and positive otherwise.
struct VertexRef {
  bool derived = false;
  std::size_t owner = 0;
  std::int64_t index = 0;

  static VertexRef core(std::size_t v) { return {false, v, 0}; }
  static VertexRef member(std::size_t primitive, std::int64_t i) {
    return {true, primitive, i};
  }

  auto operator<=>(const VertexRef&) const = default;
};

// An edge of the presented graph: copy `index` of core arc `owner`, or the
// edge numbered `index` (starting at 1) of primitive `owner`.
struct EdgeRef {
  bool derived = false;
  std::size_t owner = 0;
  std::uint64_t index = 0;

  static EdgeRef copy(std::size_t arc, std::uint64_t i = 0) {
    return {false, arc, i};
  }
  static EdgeRef member(std::size_t primitive, std::uint64_t i) {
    return {true, primitive, i};
  }

  auto operator<=>(const EdgeRef&) const = default;
};

using Path = std::vector<EdgeRef>;

// Raised for malformed presentation text and for invalid declarations. Line
// and column are 1-based; both are 0 when the error has no source position.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Raised when a vertex or edge reference does not exist in a presentation.
class UnknownReference : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class GraphPresentation {
 public:
  enum class DeclKind : std::uint8_t { Vertex, Arc, Primitive };
  struct Declaration {
    DeclKind kind;
    std::size_t index;
    bool operator==(const Declaration&) const = default;
  };

  // Builders. Each validates its declaration and throws ParseError (without
  // position) on duplicate ids, undeclared endpoints or multiplicity zero.
  std::size_t add_vertex(std::string id);
  std::size_t add_arc(std::string id, std::string_view source,
                      std::string_view target, ExtNat multiplicity = 1);
  std::size_t add_primitive(PrimitiveKind kind, std::string tag,
                            std::string_view anchor);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t arc_count() const { return arcs_.size(); }
  std::size_t primitive_count() const { return primitives_.size(); }
  bool empty() const { return vertices_.empty(); }

  const std::string& vertex_name(std::size_t v) const { return vertices_.at(v); }
  const Arc& arc(std::size_t a) const { return arcs_.at(a); }
  const Primitive& primitive(std::size_t p) const { return primitives_.at(p); }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const std::vector<Primitive>& primitives() const { return primitives_; }
  const std::vector<Declaration>& declarations() const { return decls_; }

  std::optional<std::size_t> find_vertex(std::string_view id) const;
  std::optional<std::size_t> find_arc(std::string_view id) const;
  std::optional<std::size_t> find_primitive(std::string_view tag) const;

  // Core arcs leaving / entering a core vertex, in declaration order.
  const std::vector<std::size_t>& out_arcs(std::size_t v) const { return out_.at(v); }
  const std::vector<std::size_t>& in_arcs(std::size_t v) const { return in_.at(v); }
  // Primitives anchored at a core vertex, in declaration order.
  const std::vector<std::size_t>& anchored(std::size_t v) const { return anchored_.at(v); }

  bool contains(const VertexRef& v) const;
  bool contains(const EdgeRef& e) const;

  VertexRef source(const EdgeRef& e) const;
  VertexRef target(const EdgeRef& e) const;

  // |s^{-1}(v)| and |r^{-1}(v)| in the presented countable graph.
  ExtNat out_degree(const VertexRef& v) const;
  ExtNat in_degree(const VertexRef& v) const;
  ExtNat out_degree(std::size_t v) const { return out_degree(VertexRef::core(v)); }
  ExtNat in_degree(std::size_t v) const { return in_degree(VertexRef::core(v)); }

  bool is_sink(const VertexRef& v) const { return out_degree(v) == ExtNat(0); }
  bool is_singular(const VertexRef& v) const {
    const ExtNat d = out_degree(v);
    return d == ExtNat(0) || d.is_omega();
  }

  // Out-/in-edges of a vertex in canonical order (core copies by arc then
  // copy index, then primitive edges). Infinite families are sampled: only
  // the first `width` members of an omega arc or a star are listed. Finite
  // multiplicities are always listed in full.
  std::vector<EdgeRef> out_edges(const VertexRef& v, std::uint64_t width) const;
  std::vector<EdgeRef> in_edges(const VertexRef& v, std::uint64_t width) const;

  // Notation: core vertex `v`, derived vertex `tag[i]`; edge `e` (copy 0),
  // `e#k` (copy k), primitive edge `tag#i`.
  std::string name(const VertexRef& v) const;
  std::string name(const EdgeRef& e) const;
  std::string name(const Path& p) const;  // dot-separated
  VertexRef parse_vertex(std::string_view text) const;
  EdgeRef parse_edge(std::string_view text) const;

  bool operator==(const GraphPresentation&) const;

 private:
  void check_fresh(const std::string& id) const;
  std::size_t require_vertex(std::string_view id) const;

  std::vector<std::string> vertices_;
  std::vector<Arc> arcs_;
  std::vector<Primitive> primitives_;
  std::vector<Declaration> decls_;
  std::vector<std::vector<std::size_t>> out_, in_, anchored_;
  std::unordered_map<std::string, std::size_t> vertex_ids_, arc_ids_, primitive_ids_;
};

// Parses the line-oriented presentation language:
//   vertex <id>
//   edge <id>: <src> -> <dst> [mult=<n|omega>]
//   instar|outstar|backray|fwdray <tag>: <vertex>
// `#` starts a comment. Throws ParseError with line/column on failure.
GraphPresentation parse(std::string_view text);

// Emits declarations in input order; parse(serialize(g)) == g.
std::string serialize(const GraphPresentation& g);

// Weakly connected components of the core; primitives follow their anchors.
// Ids and relative declaration order are preserved.
std::vector<GraphPresentation> components(const GraphPresentation& g);

// Forward / backward closure over core arcs, including the start vertex.
// Returned as sorted core vertex indices.
std::vector<std::size_t> core_reachable(const GraphPresentation& g, std::size_t from);
std::vector<std::size_t> core_coreachable(const GraphPresentation& g, std::size_t to);
std::vector<bool> core_reachable_mask(const GraphPresentation& g,
                                      const std::vector<std::size_t>& from);
std::vector<bool> core_coreachable_mask(const GraphPresentation& g,
                                        const std::vector<std::size_t>& to);

}  // namespace rfd

#endif  // RFD_PRESENTATION_HPP_
