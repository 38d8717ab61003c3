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

// The graph groupoid of a presentation: triples (x, m - n, y) of boundary
// points with shift^m(x) = shift^n(y), its isotropy, orbits, and the
// periodic-point density check.

#ifndef RFD_GROUPOID_HPP_
#define RFD_GROUPOID_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "rfd/boundary.hpp"
#include "rfd/conditions.hpp"
#include "rfd/ext_nat.hpp"
#include "rfd/presentation.hpp"

namespace rfd {

// (x, k, y) together with the shifts (m, n), m - n = k, that witness it.
// Equality ignores the evidence.
struct GroupoidElement {
  BoundaryPoint x;
  std::int64_t k = 0;
  BoundaryPoint y;
  std::uint64_t m = 0;
  std::uint64_t n = 0;

  bool operator==(const GroupoidElement& o) const {
    return x == o.x && k == o.k && y == o.y;
  }
};

class InvalidElement : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotComposable : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Some (m, n) with shift^m(x) = shift^n(y), or nullopt when x and y are not
// shift-equivalent. m + n is minimal among the candidates with that lag.
std::optional<std::pair<std::uint64_t, std::uint64_t>> shift_equivalence_evidence(
    const BoundaryPoint& x, const BoundaryPoint& y);

// Throws InvalidElement unless shift^m(x) = shift^n(y).
GroupoidElement make_element(const BoundaryPoint& x, std::uint64_t m, const BoundaryPoint& y,
                             std::uint64_t n);
GroupoidElement unit(const BoundaryPoint& x);
GroupoidElement compose(const GroupoidElement& a, const GroupoidElement& b);
GroupoidElement invert(const GroupoidElement& a);
// Empty string when the evidence checks out.
std::string validate_element(const GroupoidElement& a);

struct Trivial {
  bool operator==(const Trivial&) const = default;
};
struct InfiniteCyclic {
  std::size_t period = 1;
  bool operator==(const InfiniteCyclic&) const = default;
};
using IsotropyGroup = std::variant<Trivial, InfiniteCyclic>;

IsotropyGroup isotropy(const BoundaryPoint& x);
std::string format_isotropy(const IsotropyGroup& g);

enum class CountMode : std::uint8_t { Exact, Bound };

// Exact: the number of finite paths ending at w, except that the windings of
// a cycle through w with no re-entering structure are counted once around
// (cycle length plus the paths reaching the cycle from outside). Bound: the
// sum of M^i for i = 0..N over the coreachable vertices, omega when the exact
// count is.
ExtNat path_count_into(const GraphPresentation& g, const VertexRef& w, CountMode mode);

// The coreachable core vertices of w (w's anchor for derived vertices) and
// their maximum in-degree, as used by the bound.
struct CountShape {
  std::size_t vertices = 0;
  ExtNat max_in_degree{0};
};
CountShape count_shape(const GraphPresentation& g, const VertexRef& w);

enum class CertificateKind : std::uint8_t { PrependBackward, PrependCycleExit, ShiftEscape };
std::string_view certificate_name(CertificateKind k);

// Proof that an orbit is infinite: a generator and three pairwise distinct
// orbit members built from it.
struct OrbitCertificate {
  CertificateKind kind = CertificateKind::ShiftEscape;
  Path edges;                     // in-edges, backward chain, or the cycle
  std::optional<EdgeRef> exit;    // PrependCycleExit only
  std::optional<VertexRef> vertex;  // where the prepended material lands / escapes
  std::vector<BoundaryPoint> samples;
  bool operator==(const OrbitCertificate&) const = default;
};

struct OrbitReport {
  bool finite = false;
  ExtNat size{0};                      // omega when infinite
  std::vector<BoundaryPoint> members;  // sorted; all of them unless cap_exceeded
  bool cap_exceeded = false;
  std::optional<OrbitCertificate> certificate;  // present iff !finite
  bool operator==(const OrbitReport&) const = default;
};

inline constexpr std::size_t kDefaultOrbitCap = 64;

OrbitReport orbit(const GraphPresentation& g, const BoundaryPoint& x,
                  std::size_t cap = kDefaultOrbitCap);

// Empty string when every sample is a distinct orbit member of x and the
// generator fits the presentation.
std::string validate_certificate(const GraphPresentation& g, const BoundaryPoint& x,
                                 const OrbitCertificate& c);

class KonigPrecondition : public std::invalid_argument {
 public:
  enum class Reason : std::uint8_t { CycleFound, InfiniteReceiverFound, FinitelyManyCoreachable };
  KonigPrecondition(Reason r, const std::string& what)
      : std::invalid_argument(what), reason_(r) {}
  Reason reason() const { return reason_; }

 private:
  Reason reason_;
};

// A backward path of `length` edges ending at w0, built greedily by always
// stepping to the least in-edge whose source still has infinitely many
// predecessors. Longer calls extend shorter ones at the front.
Path konig_backward_chain(const GraphPresentation& g, const VertexRef& w0, std::size_t length);

struct DensityParams {
  std::size_t stem_bound = 4;       // L
  std::size_t exclusion_bound = 3;  // f
  std::size_t orbit_cap = 64;       // K
  bool operator==(const DensityParams&) const = default;
};

struct DensityEntry {
  CylinderSet cylinder;
  BoundaryPoint point;
  ExtNat orbit_size{0};
  IsotropyGroup isotropy;
  bool operator==(const DensityEntry&) const = default;
};

// A cylinder none of whose points is periodic. `condition` is the failing
// condition letter, or '?' when the conditions all hold (a disagreement).
struct NotDenseCertificate {
  char condition = '?';
  std::optional<Witness> witness;
  CylinderSet cylinder;
  BoundaryPoint probe;
  OrbitCertificate certificate;
  bool operator==(const NotDenseCertificate&) const = default;
};

struct DensityReport {
  DensityParams params;
  bool dense = true;
  std::size_t cylinders = 0;      // basic open sets examined
  std::vector<DensityEntry> entries;  // Dense only
  std::optional<NotDenseCertificate> failure;
  bool operator==(const DensityReport&) const = default;
};

DensityReport periodic_density_check(const GraphPresentation& g, DensityParams params = {});

std::string validate_density_report(const GraphPresentation& g, const DensityReport& r);
std::string validate_not_dense(const GraphPresentation& g, const NotDenseCertificate& c);

}  // namespace rfd

#endif  // RFD_GROUPOID_HPP_
