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

#include "rfd/groupoid.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>

namespace rfd {

namespace {

constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

Path concat(Path a, const Path& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

Path power(const Path& p, std::size_t k) {
  Path out;
  for (std::size_t i = 0; i < k; ++i) out.insert(out.end(), p.begin(), p.end());
  return out;
}

Path rotate_path(const Path& p, std::size_t start) {
  Path out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = p[(start + i) % p.size()];
  return out;
}

// Shortest forward path over copy-0 core arcs from `from` to a marked vertex.
std::pair<Path, std::size_t> path_to(const GraphPresentation& g, std::size_t from,
                                     const std::vector<bool>& goal) {
  std::vector<std::size_t> parent(g.vertex_count(), kUnset);
  std::vector<bool> seen(g.vertex_count(), false);
  std::deque<std::size_t> queue{from};
  seen[from] = true;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    if (goal[u]) {
      Path p;
      for (std::size_t x = u; x != from; x = g.arc(parent[x]).source) {
        p.push_back(EdgeRef::copy(parent[x]));
      }
      std::reverse(p.begin(), p.end());
      return {p, u};
    }
    for (std::size_t a : g.out_arcs(u)) {
      const std::size_t w = g.arc(a).target;
      if (!seen[w]) {
        seen[w] = true;
        parent[w] = a;
        queue.push_back(w);
      }
    }
  }
  throw std::logic_error("target not reachable");
}

// Backward BFS distances to the marked set.
std::vector<std::size_t> distance_to(const GraphPresentation& g, const std::vector<bool>& goal) {
  std::vector<std::size_t> dist(g.vertex_count(), kUnset);
  std::deque<std::size_t> queue;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (goal[v]) {
      dist[v] = 0;
      queue.push_back(v);
    }
  }
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t a : g.in_arcs(u)) {
      const std::size_t s = g.arc(a).source;
      if (dist[s] == kUnset) {
        dist[s] = dist[u] + 1;
        queue.push_back(s);
      }
    }
  }
  return dist;
}

using ArcSkip = std::function<bool(std::size_t)>;

// Number of paths ending at each vertex of `region` over non-skipped arcs.
// The non-skipped arcs inside the region must form an acyclic graph.
std::vector<ExtNat> path_counts(const GraphPresentation& g, const std::vector<bool>& region,
                                const ArcSkip& skip) {
  const std::vector<std::size_t> comp = strongly_connected_components(g);
  std::vector<std::size_t> order;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (region[v]) order.push_back(v);
  }
  // Component ids grow upstream, so sources are finished first.
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return comp[a] > comp[b]; });
  std::vector<ExtNat> count(g.vertex_count(), ExtNat(0));
  for (std::size_t v : order) {
    ExtNat c = 1;
    for (std::size_t a : g.in_arcs(v)) {
      if (skip(a)) continue;
      c += g.arc(a).multiplicity * count[g.arc(a).source];
    }
    count[v] = c;
  }
  return count;
}

// Sum of M^i for i < |S| where S is everything reaching `root` backwards over
// non-skipped arcs and M its largest in-degree over those arcs.
ExtNat geometric_bound(const GraphPresentation& g, std::size_t root, const ArcSkip& skip) {
  std::vector<bool> seen(g.vertex_count(), false);
  std::deque<std::size_t> queue{root};
  seen[root] = true;
  std::size_t size = 0;
  ExtNat m = 0;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    ++size;
    ExtNat in = 0;
    for (std::size_t a : g.in_arcs(u)) {
      if (skip(a)) continue;
      in += g.arc(a).multiplicity;
      const std::size_t s = g.arc(a).source;
      if (!seen[s]) {
        seen[s] = true;
        queue.push_back(s);
      }
    }
    if (m < in) m = in;
  }
  ExtNat sum = 0, term = 1;
  for (std::size_t i = 0; i < size; ++i) {
    sum += term;
    if (i + 1 < size) term = term * m;
  }
  return sum;
}

// Emits every path over non-skipped core arcs (all copies) ending at v.
// Returns false once emit does.
bool each_path_into(const GraphPresentation& g, std::size_t v, const ArcSkip& skip, Path& rev,
                    const std::function<bool(const Path&)>& emit) {
  Path forward(rev.rbegin(), rev.rend());
  if (!emit(forward)) return false;
  for (std::size_t a : g.in_arcs(v)) {
    if (skip(a)) continue;
    const std::uint64_t n = g.arc(a).multiplicity.value();
    for (std::uint64_t k = 0; k < n; ++k) {
      rev.push_back(EdgeRef::copy(a, k));
      const bool go_on = each_path_into(g, g.arc(a).source, skip, rev, emit);
      rev.pop_back();
      if (!go_on) return false;
    }
  }
  return true;
}

// The part of an orbit question that depends only on a point's tail: the
// core vertices the tail starts from and how prefixes land on it.
struct Tail {
  std::vector<std::size_t> roots;
  std::vector<bool> target;  // roots as a mask
  std::vector<bool> region;  // core vertices coreaching a root
  // Turns a path ending at root x into an orbit member.
  std::function<BoundaryPoint(const Path&, std::size_t)> land;
  Path avoid;  // edges that must not be used to build distinct samples
};

Tail make_tail(const GraphPresentation& g, std::vector<std::size_t> roots) {
  Tail t;
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  t.roots = roots;
  t.target.assign(g.vertex_count(), false);
  for (std::size_t r : roots) t.target[r] = true;
  t.region = core_coreachable_mask(g, roots);
  return t;
}

// Infinite-receiver and backward-ray structure feeding into the tail.
std::optional<OrbitCertificate> backward_certificate(const GraphPresentation& g,
                                                     const Tail& t) {
  auto lead = [&](std::size_t from) { return path_to(g, from, t.target); };
  for (std::size_t p = 0; p < g.primitive_count(); ++p) {
    const Primitive& prim = g.primitive(p);
    if (prim.kind != PrimitiveKind::InStar || !t.region[prim.anchor]) continue;
    auto [pi, x] = lead(prim.anchor);
    OrbitCertificate c{CertificateKind::PrependBackward, {}, std::nullopt,
                       VertexRef::core(prim.anchor), {}};
    for (std::uint64_t k = 1; k <= 3; ++k) {
      c.edges.push_back(EdgeRef::member(p, k));
      c.samples.push_back(t.land(concat({EdgeRef::member(p, k)}, pi), x));
    }
    return c;
  }
  for (std::size_t p = 0; p < g.primitive_count(); ++p) {
    const Primitive& prim = g.primitive(p);
    if (prim.kind != PrimitiveKind::BackRay || !t.region[prim.anchor]) continue;
    auto [pi, x] = lead(prim.anchor);
    OrbitCertificate c{CertificateKind::PrependBackward, {}, std::nullopt,
                       VertexRef::core(prim.anchor), {}};
    Path chain;
    for (std::uint64_t k = 1; k <= 3; ++k) {
      chain.insert(chain.begin(), EdgeRef::member(p, k));
      c.samples.push_back(t.land(concat(chain, pi), x));
    }
    c.edges = chain;
    return c;
  }
  for (std::size_t a = 0; a < g.arc_count(); ++a) {
    const Arc& arc = g.arc(a);
    if (!arc.multiplicity.is_omega() || !t.region[arc.target]) continue;
    auto [pi, x] = lead(arc.target);
    OrbitCertificate c{CertificateKind::PrependBackward, {}, std::nullopt,
                       VertexRef::core(arc.target), {}};
    for (std::uint64_t k = 0; c.edges.size() < 3; ++k) {
      const EdgeRef e = EdgeRef::copy(a, k);
      if (std::find(t.avoid.begin(), t.avoid.end(), e) != t.avoid.end()) continue;
      c.edges.push_back(e);
      c.samples.push_back(t.land(concat({e}, pi), x));
    }
    return c;
  }
  return std::nullopt;
}

struct FiniteTail {
  std::size_t root = 0;
  Path suffix;  // the star edge when the terminal is an outward star target
  VertexRef terminal;
};

FiniteTail finite_tail(const GraphPresentation& g, const VertexRef& w) {
  if (!w.derived) return {w.owner, {}, w};
  const Primitive& p = g.primitive(w.owner);
  if (p.kind != PrimitiveKind::OutStar) throw InvalidPoint("finite point must end at a singular vertex");
  return {p.anchor, {EdgeRef::member(w.owner, static_cast<std::uint64_t>(w.index))}, w};
}

Tail tail_for_finite(const GraphPresentation& g, const FiniteTail& ft) {
  Tail t = make_tail(g, {ft.root});
  t.land = [&g, ft](const Path& p, std::size_t) {
    Path full = concat(p, ft.suffix);
    if (full.empty()) return make_finite_path(g, {}, ft.terminal);
    return make_finite_path(g, std::move(full));
  };
  return t;
}

struct FiniteAnalysis {
  std::optional<OrbitCertificate> certificate;
  ExtNat size{0};
};

FiniteAnalysis analyze_finite(const GraphPresentation& g, const FiniteTail& ft) {
  const Tail t = tail_for_finite(g, ft);
  FiniteAnalysis out;
  out.certificate = backward_certificate(g, t);
  if (out.certificate) return out;

  const std::vector<bool> on_cycle = cycle_vertices(g);
  const std::vector<std::size_t> dist = distance_to(g, t.target);
  std::size_t best = kUnset;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (t.region[v] && on_cycle[v] && (best == kUnset || dist[v] < dist[best])) best = v;
  }
  if (best != kUnset) {
    const Cycle c = *cycle_through(g, best);
    auto [pi, x] = path_to(g, best, t.target);
    OrbitCertificate cert{CertificateKind::PrependCycleExit, c.edges, std::nullopt,
                          VertexRef::core(best), {}};
    if (!pi.empty()) {
      cert.exit = pi.front();
    } else if (!ft.suffix.empty()) {
      cert.exit = ft.suffix.front();
    } else {
      for (const EdgeRef& e : g.out_edges(VertexRef::core(best), 2)) {
        if (e != c.edges.front()) {
          cert.exit = e;
          break;
        }
      }
    }
    for (std::size_t k = 1; k <= 3; ++k) cert.samples.push_back(t.land(concat(power(c.edges, k), pi), x));
    out.certificate = cert;
    return out;
  }
  const auto counts = path_counts(g, t.region, [](std::size_t) { return false; });
  out.size = counts[ft.root];
  if (!ft.suffix.empty()) out.size += 1;
  return out;
}

struct LassoTail {
  Path word;
  std::vector<std::size_t> phase_of;  // first word position leaving each vertex
  std::vector<bool> on_word;
};

LassoTail lasso_tail(const GraphPresentation& g, const Path& word) {
  LassoTail lt{word, std::vector<std::size_t>(g.vertex_count(), kUnset),
               std::vector<bool>(g.vertex_count(), false)};
  for (std::size_t i = 0; i < word.size(); ++i) {
    const std::size_t v = g.source(word[i]).owner;
    if (lt.phase_of[v] == kUnset) lt.phase_of[v] = i;
    lt.on_word[v] = true;
  }
  return lt;
}

struct LassoAnalysis {
  std::optional<OrbitCertificate> certificate;
  ExtNat size{0};  // orbit size: sum of paths into the word vertices
  Tail tail;
};

LassoAnalysis analyze_lasso(const GraphPresentation& g, const LassoTail& lt) {
  std::vector<std::size_t> roots;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (lt.on_word[v]) roots.push_back(v);
  }
  LassoAnalysis out{std::nullopt, ExtNat(0), make_tail(g, roots)};
  Tail& t = out.tail;
  t.avoid = lt.word;
  t.land = [&g, word = lt.word, phase = lt.phase_of](const Path& p, std::size_t x) {
    return make_lasso(g, p, word, phase[x]);
  };
  out.certificate = backward_certificate(g, t);
  if (out.certificate) return out;

  const Path& w = lt.word;
  const std::size_t n = w.size();
  // An edge leaving the word that can come back to it.
  for (std::size_t i = 0; i < n && !out.certificate; ++i) {
    const VertexRef xi = g.source(w[i]);
    for (const EdgeRef& e : g.out_edges(xi, 2)) {
      if (e == w[i]) continue;
      const VertexRef to = g.target(e);
      if (to.derived || !t.region[to.owner]) continue;
      auto [pi, x] = path_to(g, to.owner, t.target);
      Path back;
      for (std::size_t j = lt.phase_of[x]; j % n != i; ++j) back.push_back(w[j % n]);
      const Path loop = concat(concat({e}, pi), back);
      OrbitCertificate cert{CertificateKind::PrependCycleExit, rotate_path(w, i), e, xi, {}};
      for (std::size_t k = 1; k <= 3; ++k) cert.samples.push_back(make_lasso(g, power(loop, k), w, i));
      out.certificate = cert;
      break;
    }
  }
  if (out.certificate) return out;

  // Another cycle feeding into the word.
  const std::vector<bool> on_cycle = cycle_vertices(g);
  const std::vector<std::size_t> dist = distance_to(g, t.target);
  std::size_t best = kUnset;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (t.region[v] && on_cycle[v] && !lt.on_word[v] && (best == kUnset || dist[v] < dist[best])) {
      best = v;
    }
  }
  if (best != kUnset) {
    const Cycle c = *cycle_through(g, best);
    auto [pi, x] = path_to(g, best, t.target);
    OrbitCertificate cert{CertificateKind::PrependCycleExit, c.edges, pi.front(),
                          VertexRef::core(best), {}};
    for (std::size_t k = 1; k <= 3; ++k) cert.samples.push_back(t.land(concat(power(c.edges, k), pi), x));
    out.certificate = cert;
    return out;
  }

  const auto on_word = lt.on_word;
  const ArcSkip internal = [&g, on_word](std::size_t a) {
    return on_word[g.arc(a).source] && on_word[g.arc(a).target];
  };
  const auto counts = path_counts(g, t.region, internal);
  for (std::size_t v : roots) out.size += counts[v];
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Elements

namespace {

std::optional<std::pair<std::uint64_t, std::uint64_t>> tail_alignment(const BoundaryPoint& x,
                                                                     const BoundaryPoint& y) {
  using Shifts = std::pair<std::uint64_t, std::uint64_t>;
  if (x.is_finite() && y.is_finite()) {
    if (x.finite().terminal != y.finite().terminal) return std::nullopt;
    return Shifts{x.finite().edges.size(), y.finite().edges.size()};
  }
  if (x.is_lasso() && y.is_lasso()) {
    const Lasso& a = x.lasso();
    const Lasso& b = y.lasso();
    if (a.word != b.word) return std::nullopt;
    const std::size_t p = a.word.size();
    const std::uint64_t lag = (b.phase + p - a.phase) % p;
    return Shifts{a.stem.size() + lag, b.stem.size()};
  }
  if (x.is_ray_tail() && y.is_ray_tail()) {
    const RayTail& a = x.ray_tail();
    const RayTail& b = y.ray_tail();
    if (a.ray != b.ray) return std::nullopt;
    if (a.depth <= b.depth) return Shifts{a.stem.size() + (b.depth - a.depth), b.stem.size()};
    return Shifts{a.stem.size(), b.stem.size() + (a.depth - b.depth)};
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::pair<std::uint64_t, std::uint64_t>> shift_equivalence_evidence(
    const BoundaryPoint& x, const BoundaryPoint& y) {
  auto shifts = tail_alignment(x, y);
  if (!shifts) return std::nullopt;
  // Drop the common part just before the aligned tails.
  auto& [m, n] = *shifts;
  while (m > 0 && n > 0 && edge_at(x, m - 1) == edge_at(y, n - 1)) {
    --m;
    --n;
  }
  return shifts;
}

GroupoidElement make_element(const BoundaryPoint& x, std::uint64_t m, const BoundaryPoint& y,
                             std::uint64_t n) {
  try {
    if (shift(x, m) != shift(y, n)) throw InvalidElement("shifted points differ");
  } catch (const LengthError& e) {
    throw InvalidElement(e.what());
  }
  return {x, static_cast<std::int64_t>(m) - static_cast<std::int64_t>(n), y, m, n};
}

GroupoidElement unit(const BoundaryPoint& x) { return {x, 0, x, 0, 0}; }

GroupoidElement compose(const GroupoidElement& a, const GroupoidElement& b) {
  if (a.y != b.x) throw NotComposable("range of the first element is not the source of the second");
  const std::uint64_t t = std::max(a.n, b.m);
  return {a.x, a.k + b.k, b.y, a.m + (t - a.n), b.n + (t - b.m)};
}

GroupoidElement invert(const GroupoidElement& a) { return {a.y, -a.k, a.x, a.n, a.m}; }

std::string validate_element(const GroupoidElement& a) {
  if (static_cast<std::int64_t>(a.m) - static_cast<std::int64_t>(a.n) != a.k) {
    return "evidence does not match the lag";
  }
  try {
    if (shift(a.x, a.m) != shift(a.y, a.n)) return "shifted points differ";
  } catch (const LengthError& e) {
    return e.what();
  }
  return {};
}

IsotropyGroup isotropy(const BoundaryPoint& x) {
  if (x.is_lasso()) return InfiniteCyclic{x.lasso().word.size()};
  return Trivial{};
}

std::string format_isotropy(const IsotropyGroup& g) {
  if (const auto* c = std::get_if<InfiniteCyclic>(&g)) {
    return "InfiniteCyclic(" + std::to_string(c->period) + ")";
  }
  return "Trivial";
}

// ---------------------------------------------------------------------------
// Path counts

ExtNat path_count_into(const GraphPresentation& g, const VertexRef& w, CountMode mode) {
  if (!g.contains(w)) throw UnknownReference("unknown vertex");
  const auto none = [](std::size_t) { return false; };
  // Count for a core vertex when its own cycle may be folded (Case 3).
  auto core_count = [&](std::size_t v, bool fold_cycle) -> ExtNat {
    if (!fold_cycle || !cycle_vertices(g)[v]) {
      // Any receiving structure or cycle upstream of v makes the count infinite.
      const std::vector<bool> region = core_coreachable_mask(g, {v});
      const std::vector<bool> on_cycle = cycle_vertices(g);
      for (std::size_t u = 0; u < g.vertex_count(); ++u) {
        if (region[u] && on_cycle[u]) return ExtNat::omega();
      }
      for (const Primitive& p : g.primitives()) {
        const bool receives = p.kind == PrimitiveKind::InStar || p.kind == PrimitiveKind::BackRay;
        if (receives && region[p.anchor]) return ExtNat::omega();
      }
      for (const Arc& a : g.arcs()) {
        if (a.multiplicity.is_omega() && region[a.target]) return ExtNat::omega();
      }
      return mode == CountMode::Exact ? path_counts(g, region, none)[v] : geometric_bound(g, v, none);
    }
    const Cycle c = *cycle_through(g, v);
    const LassoTail lt = lasso_tail(g, c.edges);
    const LassoAnalysis la = analyze_lasso(g, lt);
    if (la.certificate) return ExtNat::omega();
    ExtNat total = c.length();
    if (mode == CountMode::Exact) return total + la.size;
    const auto on_word = lt.on_word;
    const ArcSkip internal = [&g, on_word](std::size_t a) {
      return on_word[g.arc(a).source] && on_word[g.arc(a).target];
    };
    for (std::size_t x : c.vertices) total += geometric_bound(g, x, internal);
    return total;
  };
  if (!w.derived) return core_count(w.owner, true);
  const Primitive& p = g.primitive(w.owner);
  switch (p.kind) {
    case PrimitiveKind::InStar: return 1;
    case PrimitiveKind::BackRay: return ExtNat::omega();
    case PrimitiveKind::OutStar: return ExtNat(1) + core_count(p.anchor, false);
    case PrimitiveKind::FwdRay:
      return ExtNat(static_cast<std::uint64_t>(w.index)) + core_count(p.anchor, false);
  }
  return ExtNat::omega();
}

CountShape count_shape(const GraphPresentation& g, const VertexRef& w) {
  if (!g.contains(w)) throw UnknownReference("unknown vertex");
  const std::size_t root = w.derived ? g.primitive(w.owner).anchor : w.owner;
  const std::vector<bool> region = core_coreachable_mask(g, {root});
  CountShape s;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (!region[v]) continue;
    ++s.vertices;
    const ExtNat d = g.in_degree(v);
    if (s.max_in_degree < d) s.max_in_degree = d;
  }
  return s;
}

// ---------------------------------------------------------------------------
// Orbits

std::string_view certificate_name(CertificateKind k) {
  switch (k) {
    case CertificateKind::PrependBackward: return "PrependBackward";
    case CertificateKind::PrependCycleExit: return "PrependCycleExit";
    case CertificateKind::ShiftEscape: return "ShiftEscape";
  }
  return "?";
}

OrbitReport orbit(const GraphPresentation& g, const BoundaryPoint& x, std::size_t cap) {
  OrbitReport r;
  if (x.is_ray_tail()) {
    const RayTail& rt = x.ray_tail();
    OrbitCertificate c{CertificateKind::ShiftEscape, {}, std::nullopt,
                       rt.depth == 0 ? VertexRef::core(g.primitive(rt.ray).anchor)
                                     : VertexRef::member(rt.ray, static_cast<std::int64_t>(rt.depth)),
                       {}};
    for (std::uint64_t n = 0; n < 3; ++n) c.samples.push_back(shift(x, n));
    r.size = ExtNat::omega();
    r.certificate = c;
    return r;
  }

  std::set<BoundaryPoint> members;
  auto add = [&](BoundaryPoint p) {
    if (members.size() >= cap) {
      r.cap_exceeded = true;
      return false;
    }
    members.insert(std::move(p));
    return true;
  };
  const auto none = [](std::size_t) { return false; };

  if (x.is_finite()) {
    const FiniteTail ft = finite_tail(g, x.finite().terminal);
    const FiniteAnalysis fa = analyze_finite(g, ft);
    if (fa.certificate) {
      r.size = ExtNat::omega();
      r.certificate = fa.certificate;
      return r;
    }
    r.finite = true;
    r.size = fa.size;
    const Tail t = tail_for_finite(g, ft);
    Path rev;
    bool go_on = each_path_into(g, ft.root, none, rev, [&](const Path& p) {
      return add(t.land(p, ft.root));
    });
    if (go_on && !ft.suffix.empty()) add(make_finite_path(g, {}, ft.terminal));
  } else {
    const LassoTail lt = lasso_tail(g, x.lasso().word);
    const LassoAnalysis la = analyze_lasso(g, lt);
    if (la.certificate) {
      r.size = ExtNat::omega();
      r.certificate = la.certificate;
      return r;
    }
    r.finite = true;
    r.size = la.size;
    const Path& w = lt.word;
    bool go_on = true;
    for (std::size_t i = 0; i < w.size() && go_on; ++i) {
      go_on = add(make_lasso(g, {}, w, i));
      const std::size_t xi = g.source(w[i]).owner;
      if (lt.phase_of[xi] != i) continue;
      for (std::size_t a : g.in_arcs(xi)) {
        if (!go_on || lt.on_word[g.arc(a).source]) continue;
        for (std::uint64_t k = 0; k < g.arc(a).multiplicity.value() && go_on; ++k) {
          Path rev{EdgeRef::copy(a, k)};
          go_on = each_path_into(g, g.arc(a).source, none, rev, [&](const Path& p) {
            return add(make_lasso(g, p, w, i));
          });
        }
      }
    }
  }
  r.members.assign(members.begin(), members.end());
  if (r.size.is_finite() && r.members.size() < r.size.value()) r.cap_exceeded = true;
  return r;
}

std::string validate_certificate(const GraphPresentation& g, const BoundaryPoint& x,
                                 const OrbitCertificate& c) {
  if (c.samples.size() < 3) return "fewer than three samples";
  for (std::size_t i = 0; i < c.samples.size(); ++i) {
    for (std::size_t j = i + 1; j < c.samples.size(); ++j) {
      if (c.samples[i] == c.samples[j]) return "samples repeat";
    }
    if (!shift_equivalence_evidence(x, c.samples[i])) {
      return "sample " + format_point(g, c.samples[i]) + " is not in the orbit";
    }
  }
  for (const EdgeRef& e : c.edges) {
    if (!g.contains(e)) return "unknown generator edge";
  }
  if (c.vertex && !g.contains(*c.vertex)) return "unknown certificate vertex";
  switch (c.kind) {
    case CertificateKind::PrependBackward:
      if (c.edges.empty()) return "no prepended edges";
      break;
    case CertificateKind::PrependCycleExit: {
      if (c.edges.empty() || !c.exit) return "cycle or exit missing";
      for (std::size_t i = 0; i < c.edges.size(); ++i) {
        if (g.target(c.edges[i]) != g.source(c.edges[(i + 1) % c.edges.size()])) {
          return "cycle is not a closed walk";
        }
      }
      if (!g.contains(*c.exit)) return "unknown exit edge";
      bool shares = false;
      for (const EdgeRef& e : c.edges) {
        if (e == *c.exit) return "exit lies on the cycle";
        if (g.source(e) == g.source(*c.exit)) shares = true;
      }
      if (!shares) return "exit does not leave the cycle";
      break;
    }
    case CertificateKind::ShiftEscape:
      if (x.is_finite()) return "a finite path cannot escape by shifting";
      break;
  }
  return {};
}

// ---------------------------------------------------------------------------
// Backward chains

Path konig_backward_chain(const GraphPresentation& g, const VertexRef& w0, std::size_t length) {
  if (!g.contains(w0)) throw UnknownReference("unknown vertex");
  Path chain;  // collected backwards
  VertexRef at = w0;
  // Derived starting points walk down to their anchor first.
  if (w0.derived) {
    const Primitive& p = g.primitive(w0.owner);
    const auto idx = static_cast<std::uint64_t>(w0.index < 0 ? -w0.index : w0.index);
    switch (p.kind) {
      case PrimitiveKind::InStar:
        throw KonigPrecondition(KonigPrecondition::Reason::FinitelyManyCoreachable,
                                "only finitely many vertices reach " + g.name(w0));
      case PrimitiveKind::BackRay:
        for (std::uint64_t k = idx + 1; chain.size() < length; ++k) {
          chain.push_back(EdgeRef::member(w0.owner, k));
        }
        return Path(chain.rbegin(), chain.rend());
      case PrimitiveKind::OutStar:
        chain.push_back(EdgeRef::member(w0.owner, idx));
        break;
      case PrimitiveKind::FwdRay:
        for (std::uint64_t k = idx; k >= 1; --k) chain.push_back(EdgeRef::member(w0.owner, k));
        break;
    }
    at = VertexRef::core(p.anchor);
  }

  const std::vector<bool> region = core_coreachable_mask(g, {at.owner});
  const std::vector<bool> on_cycle = cycle_vertices(g);
  std::vector<std::size_t> anchors;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (!region[v]) continue;
    if (on_cycle[v]) {
      throw KonigPrecondition(KonigPrecondition::Reason::CycleFound,
                              "cycle found through " + g.vertex_name(v));
    }
  }
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (region[v] && g.in_degree(v).is_omega()) {
      throw KonigPrecondition(KonigPrecondition::Reason::InfiniteReceiverFound,
                              "infinite receiver found at " + g.vertex_name(v));
    }
  }
  for (std::size_t p = 0; p < g.primitive_count(); ++p) {
    if (g.primitive(p).kind == PrimitiveKind::BackRay && region[g.primitive(p).anchor]) {
      anchors.push_back(g.primitive(p).anchor);
    }
  }
  if (anchors.empty()) {
    throw KonigPrecondition(KonigPrecondition::Reason::FinitelyManyCoreachable,
                            "only finitely many vertices reach " + g.name(w0));
  }
  // Vertices downstream of a backward ray have infinitely many predecessors.
  const std::vector<bool> infinite_past = core_reachable_mask(g, anchors);

  chain.resize(std::min(chain.size(), length));
  while (chain.size() < length) {
    if (at.derived) {  // on a backward ray: keep walking it
      const auto k = static_cast<std::uint64_t>(-at.index) + 1;
      chain.push_back(EdgeRef::member(at.owner, k));
      at = g.source(chain.back());
      continue;
    }
    std::optional<EdgeRef> pick;
    for (const EdgeRef& e : g.in_edges(at, 1)) {
      const VertexRef s = g.source(e);
      const bool good = s.derived ? g.primitive(s.owner).kind == PrimitiveKind::BackRay
                                  : infinite_past[s.owner];
      if (good) {
        pick = e;
        break;
      }
    }
    if (!pick) throw std::logic_error("backward chain ran dry at " + g.name(at));
    chain.push_back(*pick);
    at = g.source(*pick);
  }
  return Path(chain.rbegin(), chain.rend());
}

// ---------------------------------------------------------------------------
// Density

namespace {

// The certificate built from the first failing condition.
std::optional<NotDenseCertificate> condition_certificate(const GraphPresentation& g) {
  auto probe_of = [&](const CylinderSet& z) { return *cylinder_nonempty(g, z).member; };
  if (auto r = check_no_infinite_receiver(g); !r.holds) {
    const auto& w = std::get<InfiniteReceiver>(*r.witness);
    NotDenseCertificate c{'a', r.witness, make_cylinder(g, w.vertex, {}), {}, {}};
    c.probe = probe_of(c.cylinder);
    c.certificate = {CertificateKind::PrependBackward, w.sample_in_edges, std::nullopt, w.vertex, {}};
    for (const EdgeRef& e : w.sample_in_edges) c.certificate.samples.push_back(prepend(g, {e}, c.probe));
    return c;
  }
  if (auto r = check_no_cycle_with_exit(g); !r.holds) {
    const auto& w = std::get<CycleWithExit>(*r.witness);
    NotDenseCertificate c{'b', r.witness, make_cylinder(g, Path{w.exit}), {}, {}};
    c.probe = probe_of(c.cylinder);
    const Path cyc = rotate_path(w.cycle.edges, w.position);
    c.certificate = {CertificateKind::PrependCycleExit, cyc, w.exit,
                     VertexRef::core(w.cycle.vertices[w.position]), {}};
    for (std::size_t k = 1; k <= 3; ++k) c.certificate.samples.push_back(prepend(g, power(cyc, k), c.probe));
    return c;
  }
  if (auto r = check_no_infinite_backward_chain(g); !r.holds) {
    const auto& w = std::get<BackwardChainGen>(*r.witness);
    Path base, chain;
    std::vector<Path> steps;
    if (w.backray) {
      base = {EdgeRef::member(*w.backray, 1)};
      for (std::uint64_t k = 2; k <= 4; ++k) {
        chain.insert(chain.begin(), EdgeRef::member(*w.backray, k));
        steps.push_back(chain);
      }
    } else {
      const Cycle& cyc = *w.omega_cycle;
      const std::size_t n = cyc.length();
      base = {cyc.edges[n - 1]};
      for (std::size_t j = 1; j <= 3; ++j) {
        const std::size_t pos = (n - 1 + n * 3 - j) % n;
        chain.insert(chain.begin(), EdgeRef::copy(cyc.edges[pos].owner, j));
        steps.push_back(chain);
      }
    }
    NotDenseCertificate c{'c', r.witness, make_cylinder(g, base), {}, {}};
    c.probe = probe_of(c.cylinder);
    c.certificate = {CertificateKind::PrependBackward, chain, std::nullopt,
                     g.source(base.front()), {}};
    for (const Path& p : steps) c.certificate.samples.push_back(prepend(g, p, c.probe));
    return c;
  }
  if (auto r = check_reaches_terminal(g); !r.holds) {
    const auto& w = std::get<StrandedVertex>(*r.witness);
    NotDenseCertificate c{'d', r.witness, make_cylinder(g, w.vertex, {}), {}, {}};
    c.probe = probe_of(c.cylinder);
    c.certificate = {CertificateKind::ShiftEscape, {}, std::nullopt, w.vertex, {}};
    for (std::uint64_t n = 0; n < 3; ++n) c.certificate.samples.push_back(shift(c.probe, n));
    return c;
  }
  return std::nullopt;
}

BoundaryPoint tail_key(const BoundaryPoint& y) {
  if (y.is_finite()) return {FinitePath{{}, y.finite().terminal}};
  if (y.is_lasso()) return {Lasso{{}, y.lasso().word, 0}};
  return {RayTail{{}, y.ray_tail().ray, 0}};
}

}  // namespace

DensityReport periodic_density_check(const GraphPresentation& g, DensityParams params) {
  DensityReport report;
  report.params = params;

  std::vector<VertexRef> starts;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) starts.push_back(VertexRef::core(v));
  for (std::size_t p = 0; p < g.primitive_count(); ++p) {
    starts.push_back(VertexRef::member(p, g.primitive(p).kind == PrimitiveKind::BackRay ? -1 : 1));
  }

  std::map<VertexRef, BoundaryPoint> continuation;
  std::map<BoundaryPoint, std::pair<bool, ExtNat>> orbit_cache;
  auto continue_from = [&](const VertexRef& v) -> const BoundaryPoint& {
    auto it = continuation.find(v);
    if (it == continuation.end()) it = continuation.emplace(v, continue_to_boundary(g, {}, v)).first;
    return it->second;
  };
  auto orbit_of = [&](const BoundaryPoint& y) -> const std::pair<bool, ExtNat>& {
    const BoundaryPoint key = tail_key(y);
    auto it = orbit_cache.find(key);
    if (it == orbit_cache.end()) {
      const OrbitReport o = orbit(g, key, 0);
      it = orbit_cache.emplace(key, std::make_pair(o.finite, o.size)).first;
    }
    return it->second;
  };

  std::optional<std::pair<CylinderSet, BoundaryPoint>> failure;
  Path mu;
  // Visits every exclusion set at the end of mu, then extends mu.
  auto visit = [&](auto&& self, const VertexRef& start, const VertexRef& end) -> void {
    if (failure) return;
    // Out-edge families at the end vertex, each sampled past the bound.
    std::vector<std::vector<EdgeRef>> families;
    for (const EdgeRef& e : g.out_edges(end, params.exclusion_bound + 1)) {
      if (families.empty() || families.back().front().derived != e.derived ||
          families.back().front().owner != e.owner) {
        families.push_back({});
      }
      families.back().push_back(e);
    }
    std::vector<std::size_t> take(families.size(), 0);
    auto choose = [&](auto&& again, std::size_t fam, std::size_t budget) -> void {
      if (failure) return;
      if (fam == families.size()) {
        std::vector<EdgeRef> excluded;
        for (std::size_t i = 0; i < families.size(); ++i) {
          excluded.insert(excluded.end(), families[i].begin(),
                          families[i].begin() + static_cast<std::ptrdiff_t>(take[i]));
        }
        CylinderSet z = make_cylinder(g, start, mu, std::move(excluded));
        ++report.cylinders;
        std::optional<BoundaryPoint> y;
        if (g.is_sink(end)) {
          y = make_finite_path(g, mu, end);
        } else if (auto nu = first_available_edge(g, end, z.excluded)) {
          y = prepend(g, concat(mu, {*nu}), continue_from(g.target(*nu)));
        }
        if (!y) return;  // empty cylinder
        const auto& [finite, size] = orbit_of(*y);
        if (!finite) {
          failure.emplace(std::move(z), *y);
          return;
        }
        report.entries.push_back({std::move(z), *y, size, isotropy(*y)});
        return;
      }
      for (std::size_t k = 0; k <= std::min(budget, families[fam].size()); ++k) {
        take[fam] = k;
        again(again, fam + 1, budget - k);
      }
      take[fam] = 0;
    };
    choose(choose, 0, params.exclusion_bound);
    if (mu.size() >= params.stem_bound) return;
    for (const EdgeRef& e : g.out_edges(end, 1)) {
      if (!e.derived && e.index != 0) continue;
      mu.push_back(e);
      self(self, start, g.target(e));
      mu.pop_back();
      if (failure) return;
    }
  };
  for (const VertexRef& s : starts) {
    visit(visit, s, s);
    if (failure) break;
  }

  if (!failure) return report;
  report.dense = false;
  report.entries.clear();
  if (auto c = condition_certificate(g)) {
    report.failure = std::move(*c);
  } else {
    const OrbitReport o = orbit(g, failure->second, 0);
    report.failure = NotDenseCertificate{'?', std::nullopt, failure->first, failure->second,
                                         *o.certificate};
  }
  return report;
}

std::string validate_not_dense(const GraphPresentation& g, const NotDenseCertificate& c) {
  if (c.witness) {
    if (auto err = validate(g, *c.witness); !err.empty()) return "witness: " + err;
    static constexpr char kLetters[] = {'a', 'b', 'c', 'd'};
    if (kLetters[c.witness->index()] != c.condition) return "witness does not match the condition";
  } else if (c.condition != '?') {
    return "condition certificate without a witness";
  }
  if (!cylinder_nonempty(g, c.cylinder).nonempty) return "cylinder is empty";
  if (!membership(g, c.probe, c.cylinder)) return "probe lies outside the cylinder";
  if (orbit(g, c.probe, 0).finite) return "probe has a finite orbit";
  if (auto err = validate_certificate(g, c.probe, c.certificate); !err.empty()) return err;
  return {};
}

std::string validate_density_report(const GraphPresentation& g, const DensityReport& r) {
  if (!r.dense) {
    if (!r.failure) return "NotDense without a certificate";
    return validate_not_dense(g, *r.failure);
  }
  for (const DensityEntry& e : r.entries) {
    const std::string where = format_cylinder(g, e.cylinder);
    if (!membership(g, e.point, e.cylinder)) return where + ": point outside the cylinder";
    const OrbitReport o = orbit(g, e.point, 0);
    if (!o.finite) return where + ": orbit is infinite";
    if (o.size != e.orbit_size) return where + ": orbit size mismatch";
    if (isotropy(e.point) != e.isotropy) return where + ": isotropy mismatch";
  }
  return {};
}

}  // namespace rfd
