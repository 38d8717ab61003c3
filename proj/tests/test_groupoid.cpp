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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "rfd/groupoid.hpp"
#include "rfd/oracle.hpp"
#include "support.hpp"

using namespace rfd;
using rfd::testing::fixture;

TEST_CASE("compose and invert") {
  const GraphPresentation loop = fixture("fix_loop");
  const BoundaryPoint x = parse_point(loop, "e^inf");
  CHECK(compose(unit(x), unit(x)) == unit(x));

  const GroupoidElement one = make_element(x, 1, x, 0);
  const GroupoidElement two = compose(one, one);
  CHECK(two.k == 2);
  CHECK(two.m - two.n == 2);
  CHECK(validate_element(two).empty());

  const GraphPresentation chain = parse("vertex u\nvertex v\nedge e: u -> v");
  const BoundaryPoint a = parse_point(chain, "e");
  const BoundaryPoint b = parse_point(chain, "v");
  const GroupoidElement g = make_element(a, 1, b, 0);
  CHECK(g.k == 1);
  const GroupoidElement inv = invert(g);
  CHECK(inv.x == b);
  CHECK(inv.k == -1);
  CHECK(inv.y == a);
  CHECK_THROWS_AS(make_element(a, 0, b, 0), InvalidElement);
  CHECK_THROWS_AS(compose(g, g), NotComposable);
}

TEST_CASE("shift equivalence evidence") {
  const GraphPresentation g = fixture("cycle_exit");
  const BoundaryPoint f = parse_point(g, "f");
  const BoundaryPoint eef = parse_point(g, "e.e.f");
  const auto ev = shift_equivalence_evidence(eef, f);
  REQUIRE(ev.has_value());
  CHECK(ev->first == 2);
  CHECK(ev->second == 0);
  CHECK_FALSE(shift_equivalence_evidence(f, parse_point(g, "e^inf")).has_value());
}

TEST_CASE("isotropy") {
  CHECK(isotropy(parse_point(fixture("fix_loop"), "e^inf")) == IsotropyGroup{InfiniteCyclic{1}});
  CHECK(isotropy(parse_point(fixture("fix_sink"), "v")) == IsotropyGroup{Trivial{}});
  const GraphPresentation two = fixture("two_cycle");
  const BoundaryPoint x = parse_point(two, "(e1.e2)^inf");
  CHECK(isotropy(x) == IsotropyGroup{InfiniteCyclic{2}});
  // No shorter lag returns the tail to itself.
  CHECK(shift(x, 1) != x);
  CHECK(shift(x, 2) == x);
  CHECK(format_isotropy(isotropy(x)) == "InfiniteCyclic(2)");
}

TEST_CASE("path counts") {
  const GraphPresentation chain = parse("vertex u\nvertex v\nedge e: u -> v");
  CHECK(path_count_into(chain, chain.parse_vertex("v"), CountMode::Exact) == ExtNat(2));

  const GraphPresentation l = fixture("in_tree");
  const VertexRef c = l.parse_vertex("c");
  CHECK(path_count_into(l, c, CountMode::Bound) == ExtNat(7));
  CHECK(path_count_into(l, c, CountMode::Exact) == ExtNat(enumerate_paths(expand(l, 2), c, 4).size()));

  const GraphPresentation loop = fixture("fix_loop");
  CHECK(path_count_into(loop, VertexRef::core(0), CountMode::Exact) == ExtNat(2));
  CHECK(path_count_into(loop, VertexRef::core(0), CountMode::Bound) == ExtNat(2));

  const GraphPresentation a = fixture("fix_a");
  CHECK(path_count_into(a, a.parse_vertex("v"), CountMode::Exact).is_omega());
  CHECK(path_count_into(a, a.parse_vertex("v"), CountMode::Bound).is_omega());
  CHECK(path_count_into(a, a.parse_vertex("p0[2]"), CountMode::Exact) == ExtNat(1));
  CHECK(path_count_into(fixture("fix_c"), fixture("fix_c").parse_vertex("r[-1]"), CountMode::Exact).is_omega());

  const GraphPresentation d = fixture("fix_d");
  const ExtNat anchor = path_count_into(d, d.parse_vertex("v2"), CountMode::Exact);
  CHECK(anchor == ExtNat(3));
  CHECK(path_count_into(d, d.parse_vertex("r[2]"), CountMode::Exact) == ExtNat(5));
}

TEST_CASE("orbits") {
  const GraphPresentation loop = fixture("fix_loop");
  const BoundaryPoint e = parse_point(loop, "e^inf");
  const OrbitReport o = orbit(loop, e);
  CHECK(o.finite);
  CHECK(o.size == ExtNat(1));
  CHECK(o.members == std::vector<BoundaryPoint>{e});

  const GraphPresentation a = fixture("fix_a");
  const BoundaryPoint x = continue_to_boundary(a, {}, a.parse_vertex("v"));
  const OrbitReport ao = orbit(a, x);
  CHECK_FALSE(ao.finite);
  REQUIRE(ao.certificate.has_value());
  CHECK(ao.certificate->kind == CertificateKind::PrependBackward);
  CHECK(validate_certificate(a, x, *ao.certificate).empty());

  const GraphPresentation ce = fixture("cycle_exit");
  const BoundaryPoint f = parse_point(ce, "f");
  const OrbitReport co = orbit(ce, f);
  REQUIRE(co.certificate.has_value());
  CHECK(co.certificate->kind == CertificateKind::PrependCycleExit);
  CHECK(ce.name(co.certificate->edges) == "e");
  CHECK(ce.name(*co.certificate->exit) == "f");
  CHECK(validate_certificate(ce, f, *co.certificate).empty());

  const GraphPresentation d = fixture("fix_d");
  const OrbitReport ray = orbit(d, parse_point(d, "r^ray"));
  REQUIRE(ray.certificate.has_value());
  CHECK(ray.certificate->kind == CertificateKind::ShiftEscape);
}

TEST_CASE("orbit cap is reported") {
  const GraphPresentation l = fixture("in_tree");
  const OrbitReport o = orbit(l, parse_point(l, "c"), 3);
  CHECK(o.finite);
  CHECK(o.size == ExtNat(7));
  CHECK(o.cap_exceeded);
  CHECK(o.members.size() == 3);
}

TEST_CASE("finite orbits against enumerated shift-equivalent points") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const GraphPresentation g = rfd::testing::corpus_graph(seed, 4);
    std::vector<BoundaryPoint> all;
    for (const VertexRef& v : rfd::testing::sample_vertices(g, 1)) {
      for (BoundaryPoint& x : enumerate_points(g, v, 3)) all.push_back(std::move(x));
    }
    for (const BoundaryPoint& x : all) {
      const OrbitReport o = orbit(g, x, 256);
      if (!o.finite) {
        REQUIRE(o.certificate.has_value());
        CHECK(validate_certificate(g, x, *o.certificate).empty());
        continue;
      }
      REQUIRE_FALSE(o.cap_exceeded);
      CHECK(o.size == ExtNat(o.members.size()));
      for (const BoundaryPoint& m : o.members) {
        CHECK(shift_equivalence_evidence(x, m).has_value());
        CHECK(isotropy(m) == isotropy(x));
      }
      for (const BoundaryPoint& y : all) {
        if (shift_equivalence_evidence(x, y)) {
          CHECK(std::binary_search(o.members.begin(), o.members.end(), y));
        }
      }
    }
  }
}

TEST_CASE("backward chain construction") {
  const GraphPresentation c = fixture("fix_c");
  CHECK(c.name(konig_backward_chain(c, c.parse_vertex("v"), 5)) == "r#5.r#4.r#3.r#2.r#1");

  const GraphPresentation s = fixture("side_branches");
  const Path p = konig_backward_chain(s, s.parse_vertex("u"), 3);
  CHECK(s.name(p) == "r#3.r#2.r#1");

  const GraphPresentation loop = fixture("fix_loop");
  try {
    konig_backward_chain(loop, VertexRef::core(0), 2);
    FAIL("expected a precondition error");
  } catch (const KonigPrecondition& e) {
    CHECK(e.reason() == KonigPrecondition::Reason::CycleFound);
  }
  const GraphPresentation sink = fixture("fix_sink");
  try {
    konig_backward_chain(sink, VertexRef::core(0), 2);
    FAIL("expected a precondition error");
  } catch (const KonigPrecondition& e) {
    CHECK(e.reason() == KonigPrecondition::Reason::FinitelyManyCoreachable);
  }
}

TEST_CASE("density of periodic points") {
  const GraphPresentation loop = fixture("fix_loop");
  const DensityReport l = periodic_density_check(loop, {2, 3, 64});
  CHECK(l.dense);
  CHECK_FALSE(l.entries.empty());
  for (const DensityEntry& e : l.entries) CHECK(format_point(loop, e.point) == "e^inf");
  CHECK(validate_density_report(loop, l).empty());

  const GraphPresentation d = fixture("fix_d");
  for (std::size_t stem : {0u, 1u, 4u}) {
    const DensityReport r = periodic_density_check(d, {stem, 3, 64});
    CHECK_FALSE(r.dense);
    REQUIRE(r.failure.has_value());
    CHECK(r.failure->certificate.kind == CertificateKind::ShiftEscape);
    CHECK(format_cylinder(d, r.failure->cylinder) == "Z(r[1])");
    CHECK(validate_not_dense(d, *r.failure).empty());
  }

  const GraphPresentation a = fixture("fix_a");
  const DensityReport r = periodic_density_check(a);
  REQUIRE(r.failure.has_value());
  CHECK(r.failure->condition == 'a');
  CHECK(format_cylinder(a, r.failure->cylinder) == "Z(v)");
  CHECK(r.failure->certificate.kind == CertificateKind::PrependBackward);
  CHECK(validate_not_dense(a, *r.failure).empty());
}

TEST_CASE("tampered density certificates are rejected") {
  const GraphPresentation a = fixture("fix_a");
  NotDenseCertificate c = *periodic_density_check(a).failure;
  c.certificate.samples.pop_back();
  c.certificate.samples.push_back(c.certificate.samples.front());
  CHECK_FALSE(validate_not_dense(a, c).empty());
}
