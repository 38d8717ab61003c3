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

#include "rfd/presentation.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <numeric>
#include <sstream>

namespace rfd {

namespace {

bool is_token_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == '_';
}

bool is_token(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), is_token_char);
}

template <typename Int>
std::optional<Int> parse_int(std::string_view s) {
  Int value{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

}  // namespace

std::string_view keyword(PrimitiveKind kind) {
  switch (kind) {
    case PrimitiveKind::InStar: return "instar";
    case PrimitiveKind::OutStar: return "outstar";
    case PrimitiveKind::BackRay: return "backray";
    case PrimitiveKind::FwdRay: return "fwdray";
  }
  return "?";
}

ParseError::ParseError(const std::string& what, std::size_t line,
                       std::size_t column)
    : std::runtime_error(line == 0 ? what
                                   : std::to_string(line) + ":" +
                                         std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

// ---------------------------------------------------------------------------
// Builders

void GraphPresentation::check_fresh(const std::string& id) const {
  if (!is_token(id)) throw ParseError("invalid identifier '" + id + "'", 0, 0);
  if (vertex_ids_.count(id) || arc_ids_.count(id) || primitive_ids_.count(id)) {
    throw ParseError("duplicate id '" + id + "'", 0, 0);
  }
}

std::size_t GraphPresentation::require_vertex(std::string_view id) const {
  auto v = find_vertex(id);
  if (!v) throw ParseError("undeclared vertex '" + std::string(id) + "'", 0, 0);
  return *v;
}

std::size_t GraphPresentation::add_vertex(std::string id) {
  check_fresh(id);
  const std::size_t v = vertices_.size();
  vertex_ids_.emplace(id, v);
  vertices_.push_back(std::move(id));
  out_.emplace_back();
  in_.emplace_back();
  anchored_.emplace_back();
  decls_.push_back({DeclKind::Vertex, v});
  return v;
}

std::size_t GraphPresentation::add_arc(std::string id, std::string_view source,
                                       std::string_view target,
                                       ExtNat multiplicity) {
  check_fresh(id);
  const std::size_t s = require_vertex(source);
  const std::size_t t = require_vertex(target);
  if (multiplicity == ExtNat(0)) {
    throw ParseError("multiplicity 0 on edge '" + id + "'", 0, 0);
  }
  const std::size_t a = arcs_.size();
  arc_ids_.emplace(id, a);
  arcs_.push_back({std::move(id), s, t, multiplicity});
  out_[s].push_back(a);
  in_[t].push_back(a);
  decls_.push_back({DeclKind::Arc, a});
  return a;
}

std::size_t GraphPresentation::add_primitive(PrimitiveKind kind, std::string tag,
                                             std::string_view anchor) {
  check_fresh(tag);
  const std::size_t v = require_vertex(anchor);
  const std::size_t p = primitives_.size();
  primitive_ids_.emplace(tag, p);
  primitives_.push_back({kind, std::move(tag), v});
  anchored_[v].push_back(p);
  decls_.push_back({DeclKind::Primitive, p});
  return p;
}

std::optional<std::size_t> GraphPresentation::find_vertex(std::string_view id) const {
  auto it = vertex_ids_.find(std::string(id));
  if (it == vertex_ids_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> GraphPresentation::find_arc(std::string_view id) const {
  auto it = arc_ids_.find(std::string(id));
  if (it == arc_ids_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> GraphPresentation::find_primitive(std::string_view tag) const {
  auto it = primitive_ids_.find(std::string(tag));
  if (it == primitive_ids_.end()) return std::nullopt;
  return it->second;
}

bool GraphPresentation::operator==(const GraphPresentation& o) const {
  return vertices_ == o.vertices_ && arcs_ == o.arcs_ &&
         primitives_ == o.primitives_ && decls_ == o.decls_;
}

// ---------------------------------------------------------------------------
// Incidence

bool GraphPresentation::contains(const VertexRef& v) const {
  if (!v.derived) return v.owner < vertices_.size() && v.index == 0;
  if (v.owner >= primitives_.size()) return false;
  return primitives_[v.owner].kind == PrimitiveKind::BackRay ? v.index < 0
                                                             : v.index > 0;
}

bool GraphPresentation::contains(const EdgeRef& e) const {
  if (!e.derived) {
    if (e.owner >= arcs_.size()) return false;
    const ExtNat m = arcs_[e.owner].multiplicity;
    return m.is_omega() || e.index < m.value();
  }
  return e.owner < primitives_.size() && e.index >= 1;
}

VertexRef GraphPresentation::source(const EdgeRef& e) const {
  if (!contains(e)) throw UnknownReference("unknown edge");
  if (!e.derived) return VertexRef::core(arcs_[e.owner].source);
  const Primitive& p = primitives_[e.owner];
  const auto i = static_cast<std::int64_t>(e.index);
  switch (p.kind) {
    case PrimitiveKind::InStar: return VertexRef::member(e.owner, i);
    case PrimitiveKind::OutStar: return VertexRef::core(p.anchor);
    case PrimitiveKind::BackRay: return VertexRef::member(e.owner, -i);
    case PrimitiveKind::FwdRay:
      return i == 1 ? VertexRef::core(p.anchor) : VertexRef::member(e.owner, i - 1);
  }
  return {};
}

VertexRef GraphPresentation::target(const EdgeRef& e) const {
  if (!contains(e)) throw UnknownReference("unknown edge");
  if (!e.derived) return VertexRef::core(arcs_[e.owner].target);
  const Primitive& p = primitives_[e.owner];
  const auto i = static_cast<std::int64_t>(e.index);
  switch (p.kind) {
    case PrimitiveKind::InStar: return VertexRef::core(p.anchor);
    case PrimitiveKind::OutStar: return VertexRef::member(e.owner, i);
    case PrimitiveKind::BackRay:
      return i == 1 ? VertexRef::core(p.anchor) : VertexRef::member(e.owner, -(i - 1));
    case PrimitiveKind::FwdRay: return VertexRef::member(e.owner, i);
  }
  return {};
}

ExtNat GraphPresentation::out_degree(const VertexRef& v) const {
  if (!contains(v)) throw UnknownReference("unknown vertex");
  if (v.derived) {
    return primitives_[v.owner].kind == PrimitiveKind::OutStar ? 0 : 1;
  }
  ExtNat d = 0;
  for (std::size_t a : out_[v.owner]) d += arcs_[a].multiplicity;
  for (std::size_t p : anchored_[v.owner]) {
    if (primitives_[p].kind == PrimitiveKind::OutStar) d += ExtNat::omega();
    if (primitives_[p].kind == PrimitiveKind::FwdRay) d += 1;
  }
  return d;
}

ExtNat GraphPresentation::in_degree(const VertexRef& v) const {
  if (!contains(v)) throw UnknownReference("unknown vertex");
  if (v.derived) {
    return primitives_[v.owner].kind == PrimitiveKind::InStar ? 0 : 1;
  }
  ExtNat d = 0;
  for (std::size_t a : in_[v.owner]) d += arcs_[a].multiplicity;
  for (std::size_t p : anchored_[v.owner]) {
    if (primitives_[p].kind == PrimitiveKind::InStar) d += ExtNat::omega();
    if (primitives_[p].kind == PrimitiveKind::BackRay) d += 1;
  }
  return d;
}

namespace {

std::uint64_t sampled(ExtNat m, std::uint64_t width) {
  return m.is_omega() ? width : m.value();
}

}  // namespace

std::vector<EdgeRef> GraphPresentation::out_edges(const VertexRef& v,
                                                  std::uint64_t width) const {
  if (!contains(v)) throw UnknownReference("unknown vertex");
  std::vector<EdgeRef> out;
  if (v.derived) {
    const auto i = static_cast<std::uint64_t>(v.index < 0 ? -v.index : v.index);
    switch (primitives_[v.owner].kind) {
      case PrimitiveKind::InStar:
      case PrimitiveKind::BackRay: out.push_back(EdgeRef::member(v.owner, i)); break;
      case PrimitiveKind::OutStar: break;
      case PrimitiveKind::FwdRay: out.push_back(EdgeRef::member(v.owner, i + 1)); break;
    }
    return out;
  }
  for (std::size_t a : out_[v.owner]) {
    const std::uint64_t n = sampled(arcs_[a].multiplicity, width);
    for (std::uint64_t k = 0; k < n; ++k) out.push_back(EdgeRef::copy(a, k));
  }
  for (std::size_t p : anchored_[v.owner]) {
    if (primitives_[p].kind == PrimitiveKind::OutStar) {
      for (std::uint64_t k = 1; k <= width; ++k) out.push_back(EdgeRef::member(p, k));
    } else if (primitives_[p].kind == PrimitiveKind::FwdRay) {
      out.push_back(EdgeRef::member(p, 1));
    }
  }
  return out;
}

std::vector<EdgeRef> GraphPresentation::in_edges(const VertexRef& v,
                                                 std::uint64_t width) const {
  if (!contains(v)) throw UnknownReference("unknown vertex");
  std::vector<EdgeRef> in;
  if (v.derived) {
    const auto i = static_cast<std::uint64_t>(v.index < 0 ? -v.index : v.index);
    switch (primitives_[v.owner].kind) {
      case PrimitiveKind::InStar: break;
      case PrimitiveKind::OutStar:
      case PrimitiveKind::FwdRay: in.push_back(EdgeRef::member(v.owner, i)); break;
      case PrimitiveKind::BackRay: in.push_back(EdgeRef::member(v.owner, i + 1)); break;
    }
    return in;
  }
  for (std::size_t a : in_[v.owner]) {
    const std::uint64_t n = sampled(arcs_[a].multiplicity, width);
    for (std::uint64_t k = 0; k < n; ++k) in.push_back(EdgeRef::copy(a, k));
  }
  for (std::size_t p : anchored_[v.owner]) {
    if (primitives_[p].kind == PrimitiveKind::InStar) {
      for (std::uint64_t k = 1; k <= width; ++k) in.push_back(EdgeRef::member(p, k));
    } else if (primitives_[p].kind == PrimitiveKind::BackRay) {
      in.push_back(EdgeRef::member(p, 1));
    }
  }
  return in;
}

// ---------------------------------------------------------------------------
// Names

std::string GraphPresentation::name(const VertexRef& v) const {
  if (!contains(v)) throw UnknownReference("unknown vertex");
  if (!v.derived) return vertices_[v.owner];
  return primitives_[v.owner].tag + "[" + std::to_string(v.index) + "]";
}

std::string GraphPresentation::name(const EdgeRef& e) const {
  if (!contains(e)) throw UnknownReference("unknown edge");
  if (!e.derived) {
    const std::string& id = arcs_[e.owner].id;
    return e.index == 0 ? id : id + "#" + std::to_string(e.index);
  }
  return primitives_[e.owner].tag + "#" + std::to_string(e.index);
}

std::string GraphPresentation::name(const Path& p) const {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += '.';
    out += name(p[i]);
  }
  return out;
}

VertexRef GraphPresentation::parse_vertex(std::string_view text) const {
  const auto bracket = text.find('[');
  if (bracket == std::string_view::npos) {
    if (auto v = find_vertex(text)) return VertexRef::core(*v);
    throw UnknownReference("unknown vertex '" + std::string(text) + "'");
  }
  if (text.back() != ']') {
    throw UnknownReference("malformed vertex '" + std::string(text) + "'");
  }
  auto p = find_primitive(text.substr(0, bracket));
  auto i = parse_int<std::int64_t>(text.substr(bracket + 1, text.size() - bracket - 2));
  VertexRef v;
  if (p && i) v = VertexRef::member(*p, *i);
  if (!p || !i || !contains(v)) {
    throw UnknownReference("unknown vertex '" + std::string(text) + "'");
  }
  return v;
}

EdgeRef GraphPresentation::parse_edge(std::string_view text) const {
  const auto hash = text.find('#');
  const std::string_view id = text.substr(0, hash);
  std::optional<std::uint64_t> index = 0;
  if (hash != std::string_view::npos) index = parse_int<std::uint64_t>(text.substr(hash + 1));
  EdgeRef e;
  bool ok = false;
  if (index) {
    if (auto a = find_arc(id)) {
      e = EdgeRef::copy(*a, *index);
      ok = contains(e);
    } else if (auto p = find_primitive(id); p && hash != std::string_view::npos) {
      e = EdgeRef::member(*p, *index);
      ok = contains(e);
    }
  }
  if (!ok) throw UnknownReference("unknown edge '" + std::string(text) + "'");
  return e;
}

// ---------------------------------------------------------------------------
// Text format

namespace {

class LineLexer {
 public:
  LineLexer(std::string_view line, std::size_t line_no)
      : line_(line), line_no_(line_no) {}

  void skip_space() {
    while (pos_ < line_.size() && (line_[pos_] == ' ' || line_[pos_] == '\t' ||
                                   line_[pos_] == '\r')) {
      ++pos_;
    }
  }
  bool at_end() {
    skip_space();
    return pos_ >= line_.size();
  }
  std::size_t column() const { return pos_ + 1; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, line_no_, pos_ + 1);
  }

  std::string_view token(const char* what) {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < line_.size() && is_token_char(line_[pos_])) ++pos_;
    if (start == pos_) {
      pos_ = start;
      fail(std::string("expected ") + what);
    }
    return line_.substr(start, pos_ - start);
  }

  void expect(std::string_view punct) {
    skip_space();
    if (line_.substr(pos_, punct.size()) != punct) {
      fail("expected '" + std::string(punct) + "'");
    }
    pos_ += punct.size();
  }

  bool accept(std::string_view punct) {
    skip_space();
    if (line_.substr(pos_, punct.size()) == punct) {
      pos_ += punct.size();
      return true;
    }
    return false;
  }

 private:
  std::string_view line_;
  std::size_t line_no_;
  std::size_t pos_ = 0;
};

// Runs a builder call, attaching the position of the declaration to any
// validation error it raises.
template <typename F>
void at_position(std::size_t line, std::size_t column, F&& f) {
  try {
    f();
  } catch (const ParseError& e) {
    if (e.line() != 0) throw;
    throw ParseError(e.what(), line, column);
  }
}

}  // namespace

GraphPresentation parse(std::string_view text) {
  GraphPresentation g;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    LineLexer lex(line, line_no);
    if (lex.at_end()) {
      if (end == text.size()) break;
      continue;
    }
    const std::size_t decl_col = lex.column();
    const std::string_view kw = lex.token("declaration keyword");
    if (kw == "vertex") {
      const std::size_t col = lex.column();
      std::string id(lex.token("vertex id"));
      if (!lex.at_end()) lex.fail("unexpected trailing input");
      at_position(line_no, col, [&] { g.add_vertex(std::move(id)); });
    } else if (kw == "edge") {
      const std::size_t col = lex.column();
      std::string id(lex.token("edge id"));
      lex.expect(":");
      lex.skip_space();
      const std::size_t src_col = lex.column();
      std::string_view src = lex.token("source vertex");
      lex.expect("->");
      lex.skip_space();
      const std::size_t dst_col = lex.column();
      std::string_view dst = lex.token("target vertex");
      ExtNat mult = 1;
      std::size_t mult_col = col;
      if (lex.accept("[")) {
        if (lex.token("'mult'") != "mult") lex.fail("expected 'mult'");
        lex.expect("=");
        lex.skip_space();
        mult_col = lex.column();
        std::string_view m = lex.token("multiplicity");
        if (m == "omega") {
          mult = ExtNat::omega();
        } else if (auto n = parse_int<std::uint64_t>(m)) {
          mult = *n;
        } else {
          lex.fail("multiplicity must be a natural number or 'omega'");
        }
        lex.expect("]");
      }
      if (!lex.at_end()) lex.fail("unexpected trailing input");
      if (!g.find_vertex(src)) {
        throw ParseError("undeclared vertex '" + std::string(src) + "'", line_no, src_col);
      }
      if (!g.find_vertex(dst)) {
        throw ParseError("undeclared vertex '" + std::string(dst) + "'", line_no, dst_col);
      }
      const std::size_t err_col = mult == ExtNat(0) ? mult_col : col;
      at_position(line_no, err_col, [&] { g.add_arc(std::move(id), src, dst, mult); });
    } else if (kw == "instar" || kw == "outstar" || kw == "backray" || kw == "fwdray") {
      const PrimitiveKind kind = kw == "instar"    ? PrimitiveKind::InStar
                                 : kw == "outstar" ? PrimitiveKind::OutStar
                                 : kw == "backray" ? PrimitiveKind::BackRay
                                                   : PrimitiveKind::FwdRay;
      const std::size_t col = lex.column();
      std::string tag(lex.token("tag"));
      lex.expect(":");
      lex.skip_space();
      const std::size_t anchor_col = lex.column();
      std::string_view anchor = lex.token("anchor vertex");
      if (!lex.at_end()) lex.fail("unexpected trailing input");
      if (!g.find_vertex(anchor)) {
        throw ParseError("undeclared vertex '" + std::string(anchor) + "'", line_no,
                         anchor_col);
      }
      at_position(line_no, col, [&] { g.add_primitive(kind, std::move(tag), anchor); });
    } else {
      throw ParseError("unknown declaration '" + std::string(kw) + "'", line_no, decl_col);
    }
    if (end == text.size()) break;
  }
  return g;
}

std::string serialize(const GraphPresentation& g) {
  std::ostringstream out;
  for (const auto& d : g.declarations()) {
    switch (d.kind) {
      case GraphPresentation::DeclKind::Vertex:
        out << "vertex " << g.vertex_name(d.index) << '\n';
        break;
      case GraphPresentation::DeclKind::Arc: {
        const Arc& a = g.arc(d.index);
        out << "edge " << a.id << ": " << g.vertex_name(a.source) << " -> "
            << g.vertex_name(a.target);
        if (a.multiplicity != ExtNat(1)) out << " [mult=" << a.multiplicity.to_string() << ']';
        out << '\n';
        break;
      }
      case GraphPresentation::DeclKind::Primitive: {
        const Primitive& p = g.primitive(d.index);
        out << keyword(p.kind) << ' ' << p.tag << ": " << g.vertex_name(p.anchor) << '\n';
        break;
      }
    }
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Structure

std::vector<GraphPresentation> components(const GraphPresentation& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Arc& a : g.arcs()) {
    const std::size_t x = find(a.source), y = find(a.target);
    if (x != y) parent[std::max(x, y)] = std::min(x, y);
  }
  std::vector<std::size_t> comp_of(n), roots;
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t r = find(v);
    auto it = std::find(roots.begin(), roots.end(), r);
    comp_of[v] = static_cast<std::size_t>(it - roots.begin());
    if (it == roots.end()) roots.push_back(r);
  }
  std::vector<GraphPresentation> out(roots.size());
  for (const auto& d : g.declarations()) {
    switch (d.kind) {
      case GraphPresentation::DeclKind::Vertex:
        out[comp_of[d.index]].add_vertex(g.vertex_name(d.index));
        break;
      case GraphPresentation::DeclKind::Arc: {
        const Arc& a = g.arc(d.index);
        out[comp_of[a.source]].add_arc(a.id, g.vertex_name(a.source),
                                       g.vertex_name(a.target), a.multiplicity);
        break;
      }
      case GraphPresentation::DeclKind::Primitive: {
        const Primitive& p = g.primitive(d.index);
        out[comp_of[p.anchor]].add_primitive(p.kind, p.tag, g.vertex_name(p.anchor));
        break;
      }
    }
  }
  return out;
}

namespace {

std::vector<bool> closure(const GraphPresentation& g,
                          const std::vector<std::size_t>& seeds, bool forward) {
  std::vector<bool> seen(g.vertex_count(), false);
  std::deque<std::size_t> queue;
  for (std::size_t s : seeds) {
    if (s >= g.vertex_count()) throw UnknownReference("unknown vertex");
    if (!seen[s]) {
      seen[s] = true;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    const auto& arcs = forward ? g.out_arcs(v) : g.in_arcs(v);
    for (std::size_t a : arcs) {
      const std::size_t w = forward ? g.arc(a).target : g.arc(a).source;
      if (!seen[w]) {
        seen[w] = true;
        queue.push_back(w);
      }
    }
  }
  return seen;
}

std::vector<std::size_t> indices(const std::vector<bool>& mask) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (mask[i]) out.push_back(i);
  }
  return out;
}

}  // namespace

std::vector<bool> core_reachable_mask(const GraphPresentation& g,
                                      const std::vector<std::size_t>& from) {
  return closure(g, from, true);
}

std::vector<bool> core_coreachable_mask(const GraphPresentation& g,
                                        const std::vector<std::size_t>& to) {
  return closure(g, to, false);
}

std::vector<std::size_t> core_reachable(const GraphPresentation& g, std::size_t from) {
  return indices(closure(g, {from}, true));
}

std::vector<std::size_t> core_coreachable(const GraphPresentation& g, std::size_t to) {
  return indices(closure(g, {to}, false));
}

}  // namespace rfd
