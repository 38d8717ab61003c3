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

#include "rfd/boundary.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <map>
#include <set>

#include "rfd/conditions.hpp"

namespace rfd {

namespace {

void check_path(const GraphPresentation& g, const Path& p) {
  for (const EdgeRef& e : p) {
    if (!g.contains(e)) throw InvalidPoint("unknown edge in path");
  }
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    if (g.target(p[i]) != g.source(p[i + 1])) {
      throw InvalidPoint("edges " + g.name(p[i]) + " and " + g.name(p[i + 1]) +
                         " do not compose");
    }
  }
}

Path concat(Path a, const Path& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' ||
                        s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

Path parse_path(const GraphPresentation& g, std::string_view text) {
  Path p;
  text = trim(text);
  if (text.empty()) return p;
  for (std::string_view tok : split(text, '.')) {
    if (tok.empty()) throw InvalidPoint("empty edge name in '" + std::string(text) + "'");
    p.push_back(g.parse_edge(tok));
  }
  return p;
}

std::uint64_t parse_suffix_index(std::string_view s) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw InvalidPoint("malformed index '" + std::string(s) + "'");
  }
  return v;
}

VertexRef ray_vertex(const GraphPresentation& g, std::size_t ray, std::uint64_t depth) {
  return depth == 0 ? VertexRef::core(g.primitive(ray).anchor)
                    : VertexRef::member(ray, static_cast<std::int64_t>(depth));
}

}  // namespace

// ---------------------------------------------------------------------------
// Canonical constructors

std::pair<Path, std::size_t> canonical_word(const Path& word) {
  const std::size_t n = word.size();
  std::size_t p = n;
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = d; i < n && periodic; ++i) periodic = word[i] == word[i - d];
    if (periodic) {
      p = d;
      break;
    }
  }
  Path root(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(p));
  std::size_t best = 0;
  for (std::size_t r = 1; r < p; ++r) {
    for (std::size_t i = 0; i < p; ++i) {
      const EdgeRef& a = root[(r + i) % p];
      const EdgeRef& b = root[(best + i) % p];
      if (a != b) {
        if (a < b) best = r;
        break;
      }
    }
  }
  Path out(p);
  for (std::size_t i = 0; i < p; ++i) out[i] = root[(best + i) % p];
  return {out, best};
}

BoundaryPoint make_finite_path(const GraphPresentation& g, Path edges,
                               std::optional<VertexRef> terminal) {
  check_path(g, edges);
  VertexRef end;
  if (edges.empty()) {
    if (!terminal) throw InvalidPoint("length-0 path needs a vertex");
    end = *terminal;
  } else {
    end = g.target(edges.back());
    if (terminal && *terminal != end) throw InvalidPoint("terminal does not match path");
  }
  if (!g.contains(end)) throw InvalidPoint("unknown terminal vertex");
  if (!g.is_singular(end)) {
    throw InvalidPoint("finite boundary path must end at a singular vertex, not " +
                       g.name(end));
  }
  return {FinitePath{std::move(edges), end}};
}

BoundaryPoint make_lasso(const GraphPresentation& g, Path stem, Path word,
                         std::size_t phase) {
  if (word.empty()) throw InvalidPoint("lasso word is empty");
  check_path(g, stem);
  check_path(g, word);
  const std::size_t n = word.size();
  if (g.target(word.back()) != g.source(word.front())) {
    throw InvalidPoint("lasso word is not a closed walk");
  }
  if (phase >= n) throw InvalidPoint("lasso phase out of range");
  if (!stem.empty() && g.target(stem.back()) != g.source(word[phase])) {
    throw InvalidPoint("lasso stem does not reach the tail");
  }
  auto [canon, offset] = canonical_word(word);
  const std::size_t p = canon.size();
  std::size_t ph = (phase % p + p - offset) % p;
  while (!stem.empty() && stem.back() == canon[(ph + p - 1) % p]) {
    stem.pop_back();
    ph = (ph + p - 1) % p;
  }
  return {Lasso{std::move(stem), std::move(canon), ph}};
}

BoundaryPoint make_ray_tail(const GraphPresentation& g, Path stem, std::size_t ray,
                            std::uint64_t depth) {
  if (ray >= g.primitive_count() || g.primitive(ray).kind != PrimitiveKind::FwdRay) {
    throw InvalidPoint("ray tail must follow a forward ray");
  }
  check_path(g, stem);
  if (!stem.empty() && g.target(stem.back()) != ray_vertex(g, ray, depth)) {
    throw InvalidPoint("ray tail stem does not reach the ray");
  }
  while (depth >= 1 && !stem.empty() && stem.back() == EdgeRef::member(ray, depth)) {
    stem.pop_back();
    --depth;
  }
  return {RayTail{std::move(stem), ray, depth}};
}

// ---------------------------------------------------------------------------
// Sequence access

VertexRef start_vertex(const GraphPresentation& g, const BoundaryPoint& x) {
  if (x.is_finite()) {
    const FinitePath& f = x.finite();
    return f.edges.empty() ? f.terminal : g.source(f.edges.front());
  }
  const auto e = edge_at(x, 0);
  if (x.is_ray_tail() && x.ray_tail().stem.empty()) {
    return ray_vertex(g, x.ray_tail().ray, x.ray_tail().depth);
  }
  return g.source(*e);
}

std::optional<std::size_t> length(const BoundaryPoint& x) {
  if (x.is_finite()) return x.finite().edges.size();
  return std::nullopt;
}

std::optional<EdgeRef> edge_at(const BoundaryPoint& x, std::uint64_t i) {
  if (x.is_finite()) {
    const Path& e = x.finite().edges;
    if (i < e.size()) return e[i];
    return std::nullopt;
  }
  if (x.is_lasso()) {
    const Lasso& l = x.lasso();
    if (i < l.stem.size()) return l.stem[i];
    return l.word[(l.phase + (i - l.stem.size())) % l.word.size()];
  }
  const RayTail& r = x.ray_tail();
  if (i < r.stem.size()) return r.stem[i];
  return EdgeRef::member(r.ray, r.depth + 1 + (i - r.stem.size()));
}

Path prefix(const BoundaryPoint& x, std::uint64_t n) {
  Path out;
  for (std::uint64_t i = 0; i < n; ++i) {
    auto e = edge_at(x, i);
    if (!e) break;
    out.push_back(*e);
  }
  return out;
}

BoundaryPoint shift(const BoundaryPoint& x, std::uint64_t n) {
  auto drop = [](const Path& p, std::uint64_t k) {
    return Path(p.begin() + static_cast<std::ptrdiff_t>(std::min<std::uint64_t>(k, p.size())),
                p.end());
  };
  if (x.is_finite()) {
    const FinitePath& f = x.finite();
    if (n > f.edges.size()) {
      throw LengthError("cannot shift a path of length " + std::to_string(f.edges.size()) +
                        " by " + std::to_string(n));
    }
    return {FinitePath{drop(f.edges, n), f.terminal}};
  }
  if (x.is_lasso()) {
    const Lasso& l = x.lasso();
    if (n <= l.stem.size()) return {Lasso{drop(l.stem, n), l.word, l.phase}};
    const std::uint64_t extra = n - l.stem.size();
    return {Lasso{{}, l.word, static_cast<std::size_t>((l.phase + extra) % l.word.size())}};
  }
  const RayTail& r = x.ray_tail();
  if (n <= r.stem.size()) return {RayTail{drop(r.stem, n), r.ray, r.depth}};
  return {RayTail{{}, r.ray, r.depth + (n - r.stem.size())}};
}

BoundaryPoint prepend(const GraphPresentation& g, const Path& p, const BoundaryPoint& x) {
  if (p.empty()) return x;
  if (g.target(p.back()) != start_vertex(g, x)) {
    throw InvalidPoint("prepended path does not end at the point's start");
  }
  if (x.is_finite()) return make_finite_path(g, concat(p, x.finite().edges));
  if (x.is_lasso()) {
    const Lasso& l = x.lasso();
    return make_lasso(g, concat(p, l.stem), l.word, l.phase);
  }
  const RayTail& r = x.ray_tail();
  return make_ray_tail(g, concat(p, r.stem), r.ray, r.depth);
}

// ---------------------------------------------------------------------------
// Notation

std::string format_point(const GraphPresentation& g, const BoundaryPoint& x) {
  if (x.is_finite()) {
    const FinitePath& f = x.finite();
    return f.edges.empty() ? g.name(f.terminal) : g.name(f.edges);
  }
  std::string out;
  auto stem_prefix = [&](const Path& stem) {
    if (!stem.empty()) out += g.name(stem) + ".";
  };
  if (x.is_lasso()) {
    const Lasso& l = x.lasso();
    stem_prefix(l.stem);
    out += l.word.size() == 1 ? g.name(l.word) + "^inf" : "(" + g.name(l.word) + ")^inf";
    if (l.phase != 0) out += "@" + std::to_string(l.phase);
    return out;
  }
  const RayTail& r = x.ray_tail();
  stem_prefix(r.stem);
  out += g.primitive(r.ray).tag + "^ray";
  if (r.depth != 0) out += "@" + std::to_string(r.depth);
  return out;
}

BoundaryPoint parse_point(const GraphPresentation& g, std::string_view text) {
  text = trim(text);
  if (text.empty()) throw InvalidPoint("empty point");
  auto split_at = [&](std::string_view marker)
      -> std::optional<std::pair<std::string_view, std::uint64_t>> {
    const std::size_t pos = text.find(marker);
    if (pos == std::string_view::npos) return std::nullopt;
    std::string_view rest = text.substr(pos + marker.size());
    std::uint64_t at = 0;
    if (!rest.empty()) {
      if (rest.front() != '@') throw InvalidPoint("unexpected text after " + std::string(marker));
      at = parse_suffix_index(rest.substr(1));
    }
    return std::make_pair(text.substr(0, pos), at);
  };
  // Splits "a.b.c" into ("a.b", "c"), honoring a parenthesized last group.
  auto split_last = [](std::string_view s) -> std::pair<std::string_view, std::string_view> {
    if (!s.empty() && s.back() == ')') {
      const std::size_t open = s.rfind('(');
      if (open == std::string_view::npos) throw InvalidPoint("unbalanced parentheses");
      std::string_view head = s.substr(0, open);
      if (!head.empty()) {
        if (head.back() != '.') throw InvalidPoint("expected '.' before '('");
        head.remove_suffix(1);
      }
      return {head, s.substr(open + 1, s.size() - open - 2)};
    }
    const std::size_t dot = s.rfind('.');
    if (dot == std::string_view::npos) return {std::string_view{}, s};
    return {s.substr(0, dot), s.substr(dot + 1)};
  };

  if (auto lasso = split_at("^inf")) {
    auto [stem, word] = split_last(lasso->first);
    Path w = parse_path(g, word);
    if (w.empty()) throw InvalidPoint("lasso word is empty");
    return make_lasso(g, parse_path(g, stem), std::move(w),
                      static_cast<std::size_t>(lasso->second % w.size()));
  }
  if (auto ray = split_at("^ray")) {
    auto [stem, tag] = split_last(ray->first);
    auto p = g.find_primitive(tag);
    if (!p) throw InvalidPoint("unknown ray '" + std::string(tag) + "'");
    return make_ray_tail(g, parse_path(g, stem), *p, ray->second);
  }
  if (text.find('.') == std::string_view::npos && text.find('#') == std::string_view::npos &&
      !g.find_arc(text)) {
    return make_finite_path(g, {}, g.parse_vertex(text));
  }
  return make_finite_path(g, parse_path(g, text));
}

// ---------------------------------------------------------------------------
// Cylinders

CylinderSet make_cylinder(const GraphPresentation& g, VertexRef start, Path base,
                          std::vector<EdgeRef> excluded) {
  if (!g.contains(start)) throw InvalidPoint("unknown cylinder start vertex");
  check_path(g, base);
  if (!base.empty() && g.source(base.front()) != start) {
    throw InvalidPoint("cylinder base does not start at the given vertex");
  }
  const VertexRef end = base.empty() ? start : g.target(base.back());
  for (const EdgeRef& e : excluded) {
    if (!g.contains(e) || g.source(e) != end) {
      throw InvalidPoint("excluded edge " + (g.contains(e) ? g.name(e) : std::string("?")) +
                         " does not leave " + g.name(end));
    }
  }
  std::sort(excluded.begin(), excluded.end());
  excluded.erase(std::unique(excluded.begin(), excluded.end()), excluded.end());
  return {start, std::move(base), std::move(excluded)};
}

CylinderSet make_cylinder(const GraphPresentation& g, Path base, std::vector<EdgeRef> excluded) {
  if (base.empty()) throw InvalidPoint("length-0 cylinder base needs a start vertex");
  const VertexRef start = g.source(base.front());
  return make_cylinder(g, start, std::move(base), std::move(excluded));
}

VertexRef cylinder_end(const GraphPresentation& g, const CylinderSet& z) {
  return z.base.empty() ? z.start : g.target(z.base.back());
}

std::string format_cylinder(const GraphPresentation& g, const CylinderSet& z) {
  std::string out = "Z(" + (z.base.empty() ? g.name(z.start) : g.name(z.base));
  if (!z.excluded.empty()) {
    out += " \\ {";
    for (std::size_t i = 0; i < z.excluded.size(); ++i) {
      if (i) out += ",";
      out += g.name(z.excluded[i]);
    }
    out += "}";
  }
  return out + ")";
}

CylinderSet parse_cylinder(const GraphPresentation& g, std::string_view text) {
  text = trim(text);
  if (text.substr(0, 2) != "Z(" || text.empty() || text.back() != ')') {
    throw InvalidPoint("cylinder must have the form Z(...)");
  }
  std::string_view inner = text.substr(2, text.size() - 3);
  std::string_view base_text = inner, excl_text;
  if (const std::size_t bs = inner.find('\\'); bs != std::string_view::npos) {
    base_text = inner.substr(0, bs);
    excl_text = trim(inner.substr(bs + 1));
    if (excl_text.size() < 2 || excl_text.front() != '{' || excl_text.back() != '}') {
      throw InvalidPoint("excluded set must be written {e1,e2}");
    }
    excl_text = excl_text.substr(1, excl_text.size() - 2);
  }
  base_text = trim(base_text);
  std::vector<EdgeRef> excluded;
  if (!trim(excl_text).empty()) {
    for (std::string_view tok : split(excl_text, ',')) excluded.push_back(g.parse_edge(tok));
  }
  if (base_text.find('.') == std::string_view::npos &&
      base_text.find('#') == std::string_view::npos && !g.find_arc(base_text)) {
    return make_cylinder(g, g.parse_vertex(base_text), {}, std::move(excluded));
  }
  return make_cylinder(g, parse_path(g, base_text), std::move(excluded));
}

bool membership(const GraphPresentation& g, const BoundaryPoint& x, const CylinderSet& z) {
  if (start_vertex(g, x) != z.start) return false;
  for (std::size_t i = 0; i < z.base.size(); ++i) {
    auto e = edge_at(x, i);
    if (!e || *e != z.base[i]) return false;
  }
  auto next = edge_at(x, z.base.size());
  return !next || !std::binary_search(z.excluded.begin(), z.excluded.end(), *next);
}

std::optional<EdgeRef> first_available_edge(const GraphPresentation& g, VertexRef v,
                                            const std::vector<EdgeRef>& excluded) {
  auto free = [&](const EdgeRef& e) {
    return std::find(excluded.begin(), excluded.end(), e) == excluded.end();
  };
  if (v.derived) {
    for (const EdgeRef& e : g.out_edges(v, 1)) {
      if (free(e)) return e;
    }
    return std::nullopt;
  }
  // A finite exclusion set leaves a free member among the first |F|+1 of any
  // infinite family.
  const std::uint64_t width = excluded.size() + 1;
  for (const EdgeRef& e : g.out_edges(v, width)) {
    if (free(e)) return e;
  }
  return std::nullopt;
}

BoundaryPoint continue_to_boundary(const GraphPresentation& g, Path path, VertexRef at) {
  if (at.derived && g.primitive(at.owner).kind == PrimitiveKind::FwdRay) {
    return make_ray_tail(g, std::move(path), at.owner, static_cast<std::uint64_t>(at.index));
  }
  const std::vector<bool> on_cycle = cycle_vertices(g);

  // Breadth-first search that never enters forward rays; `goal` decides
  // which vertices end the search.
  auto search = [&](auto goal) -> std::optional<std::pair<Path, VertexRef>> {
    std::map<VertexRef, std::pair<VertexRef, EdgeRef>> parent;
    std::set<VertexRef> seen{at};
    std::deque<VertexRef> queue{at};
    while (!queue.empty()) {
      const VertexRef u = queue.front();
      queue.pop_front();
      if (goal(u)) {
        Path tail;
        for (VertexRef x = u; x != at;) {
          const auto& [prev, e] = parent.at(x);
          tail.push_back(e);
          x = prev;
        }
        std::reverse(tail.begin(), tail.end());
        return std::make_pair(tail, u);
      }
      for (const EdgeRef& e : g.out_edges(u, 1)) {
        if (e.derived && g.primitive(e.owner).kind == PrimitiveKind::FwdRay) continue;
        const VertexRef w = g.target(e);
        if (seen.insert(w).second) {
          parent.emplace(w, std::make_pair(u, e));
          queue.push_back(w);
        }
      }
    }
    return std::nullopt;
  };

  auto terminal = [&](const VertexRef& u) {
    return g.is_singular(u) || (!u.derived && on_cycle[u.owner]);
  };
  if (auto hit = search(terminal)) {
    auto& [tail, u] = *hit;
    path = concat(std::move(path), tail);
    if (g.is_singular(u)) return make_finite_path(g, std::move(path), u);
    Cycle c = *cycle_through(g, u.owner);
    return make_lasso(g, std::move(path), std::move(c.edges), 0);
  }
  auto has_ray = [&](const VertexRef& u) {
    if (u.derived) return false;
    for (std::size_t p : g.anchored(u.owner)) {
      if (g.primitive(p).kind == PrimitiveKind::FwdRay) return true;
    }
    return false;
  };
  if (auto hit = search(has_ray)) {
    auto& [tail, u] = *hit;
    for (std::size_t p : g.anchored(u.owner)) {
      if (g.primitive(p).kind == PrimitiveKind::FwdRay) {
        return make_ray_tail(g, concat(std::move(path), tail), p, 0);
      }
    }
  }
  // Unreachable for valid presentations: a forward path that avoids sinks,
  // emitters and cycles in a finite core must end in a forward ray.
  throw std::logic_error("no boundary continuation from " + g.name(at));
}

NonemptyResult cylinder_nonempty(const GraphPresentation& g, const CylinderSet& z) {
  const VertexRef end = cylinder_end(g, z);
  for (const EdgeRef& e : z.excluded) {
    if (!g.contains(e) || g.source(e) != end) throw InvalidPoint("malformed cylinder");
  }
  if (g.is_sink(end)) return {true, make_finite_path(g, z.base, end)};
  auto next = first_available_edge(g, end, z.excluded);
  if (!next) return {false, std::nullopt};
  Path path = z.base;
  path.push_back(*next);
  return {true, continue_to_boundary(g, std::move(path), g.target(*next))};
}

// ---------------------------------------------------------------------------
// Singular set and enumeration

bool SingularSet::contains(const GraphPresentation& g, const VertexRef& v) const {
  if (v.derived) {
    return g.primitive(v.owner).kind == PrimitiveKind::OutStar;
  }
  return std::binary_search(core.begin(), core.end(), v.owner);
}

SingularSet singular_vertices(const GraphPresentation& g) {
  SingularSet s;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (g.is_singular(VertexRef::core(v))) s.core.push_back(v);
  }
  for (std::size_t p = 0; p < g.primitive_count(); ++p) {
    if (g.primitive(p).kind == PrimitiveKind::OutStar) s.outstars.push_back(p);
  }
  return s;
}

std::vector<BoundaryPoint> enumerate_points(const GraphPresentation& g, VertexRef start,
                                            std::size_t depth, std::uint64_t width) {
  if (!g.contains(start)) throw UnknownReference("unknown vertex");
  // Every rotation of every enumerated cycle, keyed by its first vertex.
  std::vector<std::vector<Path>> tails(g.vertex_count());
  for (const Cycle& c : enumerate_cycles(g).cycles) {
    const std::size_t n = c.length();
    for (std::size_t r = 0; r < n; ++r) {
      Path w(n);
      for (std::size_t i = 0; i < n; ++i) w[i] = c.edges[(r + i) % n];
      tails[c.vertices[r]].push_back(std::move(w));
    }
  }

  std::set<BoundaryPoint> found;
  Path stem;
  auto visit = [&](auto&& self, VertexRef u) -> void {
    if (u.derived && g.primitive(u.owner).kind == PrimitiveKind::FwdRay) {
      found.insert(make_ray_tail(g, stem, u.owner, static_cast<std::uint64_t>(u.index)));
      return;
    }
    if (g.is_singular(u)) found.insert(make_finite_path(g, stem, u));
    if (!u.derived) {
      for (const Path& w : tails[u.owner]) found.insert(make_lasso(g, stem, w, 0));
      for (std::size_t p : g.anchored(u.owner)) {
        if (g.primitive(p).kind == PrimitiveKind::FwdRay) {
          found.insert(make_ray_tail(g, stem, p, 0));
        }
      }
    }
    if (stem.size() >= depth) return;
    for (const EdgeRef& e : g.out_edges(u, width)) {
      if (e.derived && g.primitive(e.owner).kind == PrimitiveKind::FwdRay) continue;
      stem.push_back(e);
      self(self, g.target(e));
      stem.pop_back();
    }
  };
  visit(visit, start);

  // Canonicalization can shorten a stem; the depth bound is on the walk, so
  // keep only points whose canonical stem is within bound (all of them).
  return {found.begin(), found.end()};
}

LocalHomeoReport local_homeo_check(const GraphPresentation& g, VertexRef start,
                                   const Path& base, std::size_t depth) {
  const CylinderSet z = make_cylinder(g, start, base);
  if (depth < base.size()) throw InvalidPoint("depth must be at least the base length");
  std::uint64_t width = 2;
  for (const EdgeRef& e : base) width = std::max<std::uint64_t>(width, e.index + 1);

  std::vector<BoundaryPoint> source;
  for (BoundaryPoint& x : enumerate_points(g, start, depth, width)) {
    if (membership(g, x, z)) source.push_back(std::move(x));
  }
  const std::vector<BoundaryPoint> target =
      enumerate_points(g, cylinder_end(g, z), depth - base.size(), width);

  LocalHomeoReport r;
  r.source_count = source.size();
  r.target_count = target.size();
  std::set<BoundaryPoint> images;
  for (const BoundaryPoint& x : source) {
    BoundaryPoint y = shift(x, base.size());
    if (!std::binary_search(target.begin(), target.end(), y)) {
      r.into = false;
      r.violations.push_back(format_point(g, x) + " maps outside the target: " +
                             format_point(g, y));
    }
    if (!images.insert(y).second) {
      r.injective = false;
      r.violations.push_back("two points map to " + format_point(g, y));
    }
  }
  for (const BoundaryPoint& y : target) {
    if (!images.count(y)) {
      r.onto = false;
      r.violations.push_back(format_point(g, y) + " has no preimage");
    }
  }
  return r;
}

}  // namespace rfd
