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

// Symbolic points of the boundary path space and its basic open sets.
//
// Three shapes of boundary path are representable:
//   FinitePath  a finite path ending at a singular vertex (out-degree 0 or
//               omega), possibly of length 0;
//   Lasso       stem . word^inf, an eventually periodic infinite path;
//   RayTail     stem followed by a forward ray from its vertex [depth] on.
// All three are kept in a canonical form, so structural equality is equality
// of the denoted edge sequences.
//
// Textual notation:
//   v                       length-0 path at v
//   e1.e2.e3                finite path
//   e1.(c1.c2)^inf@1        lasso; @k is the word position where the tail
//                           starts (omitted when 0); `c^inf` for a 1-letter word
//   e1.r^ray@2              ray tail entering ray r at r[2] (or the anchor
//                           when @0)
//   Z(e1.e2 \ {e4,e5})      cylinder; Z(v) for a length-0 base

#ifndef RFD_BOUNDARY_HPP_
#define RFD_BOUNDARY_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "rfd/presentation.hpp"

namespace rfd {

struct FinitePath {
  Path edges;
  VertexRef terminal;
  auto operator<=>(const FinitePath&) const = default;
};

// stem . (word[phase] word[phase+1] ...)^inf. Canonical: word is a primitive
// word in its lexicographically least rotation, and the stem does not end
// with the word letter preceding the tail.
struct Lasso {
  Path stem;
  Path word;
  std::size_t phase = 0;
  auto operator<=>(const Lasso&) const = default;
};

// stem followed by the ray edges depth+1, depth+2, ... of forward ray `ray`.
// Canonical: the stem never ends with a ray edge of that ray.
struct RayTail {
  Path stem;
  std::size_t ray = 0;
  std::uint64_t depth = 0;
  auto operator<=>(const RayTail&) const = default;
};

struct BoundaryPoint {
  std::variant<FinitePath, Lasso, RayTail> value;

  bool is_finite() const { return std::holds_alternative<FinitePath>(value); }
  bool is_lasso() const { return std::holds_alternative<Lasso>(value); }
  bool is_ray_tail() const { return std::holds_alternative<RayTail>(value); }
  const FinitePath& finite() const { return std::get<FinitePath>(value); }
  const Lasso& lasso() const { return std::get<Lasso>(value); }
  const RayTail& ray_tail() const { return std::get<RayTail>(value); }

  auto operator<=>(const BoundaryPoint&) const = default;
};

// Raised for point or cylinder data that does not describe a valid object.
class InvalidPoint : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised by shift when more edges are removed than a finite path has.
class LengthError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Validating, canonicalizing constructors. The terminal of a non-empty finite
// path is its last edge's range; `terminal` is required when edges is empty.
BoundaryPoint make_finite_path(const GraphPresentation& g, Path edges,
                               std::optional<VertexRef> terminal = std::nullopt);
BoundaryPoint make_lasso(const GraphPresentation& g, Path stem, Path word,
                         std::size_t phase = 0);
BoundaryPoint make_ray_tail(const GraphPresentation& g, Path stem, std::size_t ray,
                            std::uint64_t depth = 0);

// Primitive root and least rotation of a cyclic word: returns the canonical
// word and the offset such that rotate(word, offset) starts with it.
std::pair<Path, std::size_t> canonical_word(const Path& word);

VertexRef start_vertex(const GraphPresentation& g, const BoundaryPoint& x);
std::optional<std::size_t> length(const BoundaryPoint& x);  // nullopt: infinite
std::optional<EdgeRef> edge_at(const BoundaryPoint& x, std::uint64_t i);
// First n edges (fewer when x is a shorter finite path).
Path prefix(const BoundaryPoint& x, std::uint64_t n);

// Removes the first n edges; throws LengthError when x is finite and shorter.
BoundaryPoint shift(const BoundaryPoint& x, std::uint64_t n);

// Prepends a path ending at x's start vertex and re-canonicalizes.
BoundaryPoint prepend(const GraphPresentation& g, const Path& p, const BoundaryPoint& x);

std::string format_point(const GraphPresentation& g, const BoundaryPoint& x);
BoundaryPoint parse_point(const GraphPresentation& g, std::string_view text);

// Z(base \ excluded): boundary paths from `start` beginning with `base` whose
// next edge (if any) is not excluded.
struct CylinderSet {
  VertexRef start;
  Path base;
  std::vector<EdgeRef> excluded;  // sorted, distinct
  auto operator<=>(const CylinderSet&) const = default;
};

CylinderSet make_cylinder(const GraphPresentation& g, VertexRef start, Path base,
                          std::vector<EdgeRef> excluded = {});
CylinderSet make_cylinder(const GraphPresentation& g, Path base,
                          std::vector<EdgeRef> excluded = {});
VertexRef cylinder_end(const GraphPresentation& g, const CylinderSet& z);

std::string format_cylinder(const GraphPresentation& g, const CylinderSet& z);
CylinderSet parse_cylinder(const GraphPresentation& g, std::string_view text);

bool membership(const GraphPresentation& g, const BoundaryPoint& x, const CylinderSet& z);

struct NonemptyResult {
  bool nonempty = false;
  std::optional<BoundaryPoint> member;
};

// Empty iff the base ends at a regular vertex whose out-edges are all
// excluded. Otherwise a member is built by extending the base through the
// least non-excluded edge and then along a shortest path to a sink, an
// infinite emitter or a cycle (falling back to a forward ray).
NonemptyResult cylinder_nonempty(const GraphPresentation& g, const CylinderSet& z);

// The continuation used above: extends `path` (ending at `at`) to a boundary
// point by a shortest path to a sink, infinite emitter or cycle, or else into
// a forward ray.
BoundaryPoint continue_to_boundary(const GraphPresentation& g, Path path, VertexRef at);

// Least out-edge of v not in `excluded`, in out_edges order, looking past
// sampled prefixes of infinite families as needed.
std::optional<EdgeRef> first_available_edge(const GraphPresentation& g, VertexRef v,
                                            const std::vector<EdgeRef>& excluded);

// Singular vertices: core vertices of out-degree 0 or omega, together with
// the targets of every outward star.
struct SingularSet {
  std::vector<std::size_t> core;
  std::vector<std::size_t> outstars;
  bool contains(const GraphPresentation& g, const VertexRef& v) const;
};
SingularSet singular_vertices(const GraphPresentation& g);

// All representable boundary points starting at `start` whose canonical stem
// has length <= depth. Lasso tails run around enumerated cycles (copy 0);
// infinite families are sampled to their first `width` members.
std::vector<BoundaryPoint> enumerate_points(const GraphPresentation& g, VertexRef start,
                                            std::size_t depth, std::uint64_t width = 2);

struct LocalHomeoReport {
  std::size_t source_count = 0;
  std::size_t target_count = 0;
  bool injective = true;
  bool into = true;
  bool onto = true;
  std::vector<std::string> violations;
  bool bijective() const { return injective && into && onto; }
};

// Checks that the shift by |base| maps the enumerated part of Z(base)
// bijectively onto the enumerated part of Z(r(base)). Only points with stem
// length <= depth (resp. depth - |base|) are considered.
LocalHomeoReport local_homeo_check(const GraphPresentation& g, VertexRef start,
                                   const Path& base, std::size_t depth);

}  // namespace rfd

#endif  // RFD_BOUNDARY_HPP_
