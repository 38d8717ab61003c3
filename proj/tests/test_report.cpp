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

#include "rfd/dot.hpp"
#include "rfd/report.hpp"
#include "support.hpp"

using namespace rfd;
using rfd::testing::fixture;

namespace {

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t at = text.find(needle); at != std::string::npos; at = text.find(needle, at + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("condition report document") {
  const GraphPresentation b = fixture("fix_b");
  const Json j = to_json(b, decide_rfd(b));
  CHECK(j.begin().key() == "kind");
  CHECK(j["kind"] == "ConditionReport");
  CHECK(j["rfd"] == false);
  CHECK(j["conditions"]["a"]["witness"].is_null());
  const Json& w = j["conditions"]["b"]["witness"];
  CHECK(w["type"] == "CycleWithExit");
  CHECK(w["exit"] == "b5");
  CHECK(w["cycle"]["edges"].size() == 4);
  CHECK(j["components"].size() == 1);
}

TEST_CASE("extended naturals") {
  CHECK(to_json(ExtNat(4)) == Json(4));
  CHECK(to_json(ExtNat::omega()) == Json("omega"));
}

TEST_CASE("witnesses survive a trip through json") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const GraphPresentation g = rfd::testing::corpus_graph(seed);
    const ConditionReport r = decide_rfd(g);
    for (const ConditionResult* c : {&r.a, &r.b, &r.c, &r.d}) {
      if (!c->witness) continue;
      const Json j = Json::parse(dump(to_json(g, *c->witness)));
      CHECK(witness_from_json(g, j) == *c->witness);
    }
  }
  const GraphPresentation loop = fixture("fix_loop");
  CHECK_THROWS(witness_from_json(loop, Json::parse(R"({"type":"Nope"})")));
  CHECK_THROWS(witness_from_json(loop, Json::parse(R"({"type":"InfiniteReceiver","vertex":"zz","sample_in_edges":[]})")));
}

TEST_CASE("density document") {
  const GraphPresentation a = fixture("fix_a");
  const Json j = to_json(a, periodic_density_check(a));
  CHECK(j["outcome"] == "NotDense");
  CHECK(j["parameters"]["stem_bound"] == 4);
  CHECK(j["certificate"]["condition"] == "a");
  CHECK(j["certificate"]["certificate"]["type"] == "PrependBackward");
  CHECK(j["certificate"]["certificate"]["samples"].size() == 3);

  const GraphPresentation loop = fixture("fix_loop");
  const Json d = to_json(loop, periodic_density_check(loop));
  CHECK(d["outcome"] == "Dense");
  CHECK(d["certificate"].is_null());
  CHECK(d["periodic_points"][0]["isotropy"]["type"] == "InfiniteCyclic");
  CHECK(d["periodic_points"][0]["orbit_size"] == 1);
}

TEST_CASE("orbit and isotropy documents") {
  const GraphPresentation loop = fixture("fix_loop");
  const BoundaryPoint x = parse_point(loop, "e^inf");
  const Json o = orbit_json(loop, x, orbit(loop, x));
  CHECK(o["size"] == 1);
  CHECK(o["members"] == Json::array({"e^inf"}));
  CHECK(o["certificate"].is_null());
  const Json i = isotropy_json(loop, x, isotropy(x));
  CHECK(i["group"]["period"] == 1);
}

TEST_CASE("dump is canonical") {
  const GraphPresentation c = fixture("fix_c");
  const std::string a = dump(to_json(c, decide_rfd(c)));
  CHECK(a == dump(to_json(c, decide_rfd(c))));
  CHECK(a.back() == '\n');
  CHECK(a == dump(Json::parse(a)));
}

TEST_CASE("human rendering") {
  const GraphPresentation loop = fixture("fix_loop");
  const std::string yes = human_conditions(loop, decide_rfd(loop), false);
  CHECK(yes.find("RFD: yes") != std::string::npos);
  CHECK(yes.find('\x1b') == std::string::npos);
  const GraphPresentation b = fixture("fix_b");
  const std::string no = human_conditions(b, decide_rfd(b), true);
  CHECK(no.find("RFD:") != std::string::npos);
  CHECK(human_conditions(b, decide_rfd(b), false).find("RFD: no") != std::string::npos);
  CHECK(no.find("CycleWithExit") != std::string::npos);
  CHECK(no.find('\x1b') != std::string::npos);
  CHECK(human_density(loop, periodic_density_check(loop), false).find("dense: yes") != std::string::npos);
}

TEST_CASE("dot export") {
  const std::string sink = dot_export(fixture("fix_sink"), {});
  CHECK(count(sink, "->") == 0);
  CHECK(count(sink, "[label=") == 1);

  const GraphPresentation c = fixture("fix_c");
  const std::string cd = dot_export(c, {});
  CHECK(cd.find("\"r[-1]\" -> \"v\"") != std::string::npos);
  CHECK(cd.find("style=dotted") != std::string::npos);

  const GraphPresentation b = fixture("fix_b");
  const std::string bd = dot_export(b, {*decide_rfd(b).b.witness});
  CHECK(bd.find("\"v\" -> \"v4\" [label=\"b5\", color=red") != std::string::npos);
  CHECK(bd.find("[label=\"b7\", color=red") == std::string::npos);
}
