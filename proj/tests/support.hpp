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

// Shared helpers for the test binaries: fixture loading, the pinned random
// corpus, and small explicit-graph oracles.

#ifndef RFD_TESTS_SUPPORT_HPP_
#define RFD_TESTS_SUPPORT_HPP_

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "rfd/oracle.hpp"
#include "rfd/presentation.hpp"

namespace rfd::testing {

inline std::string fixture_text(const std::string& name) {
  std::ifstream in(std::string(FIXTURE_DIR) + "/" + name + ".graph", std::ios::binary);
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline GraphPresentation fixture(const std::string& name) { return parse(fixture_text(name)); }

inline const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = {
      "fix_a", "fix_b",   "fix_c",      "fix_d",      "fix_loop",      "fix_sink",
      "fix_o2", "in_tree", "cycle_exit", "two_cycle", "side_branches"};
  return names;
}

// The pinned random corpus: up to six core vertices and up to two primitives,
// with arc density and primitive count cycling so that sparse and dense
// graphs, with and without primitives, all appear.
inline RandomSpec corpus_spec(std::uint64_t seed, std::size_t max_vertices = 6) {
  RandomSpec s;
  s.seed = seed;
  s.max_vertices = max_vertices;
  s.density = 0.12 + 0.06 * static_cast<double>(seed % 5);
  s.omega_probability = 0.1;
  s.max_multiplicity = 2;
  s.max_primitives = {1, 1, 1, 1};
  s.max_total_primitives = static_cast<std::size_t>(seed % 3);
  return s;
}

inline GraphPresentation corpus_graph(std::uint64_t seed, std::size_t max_vertices = 6) {
  return random_presentation(corpus_spec(seed, max_vertices));
}

// Core vertices plus the first few members of every primitive family.
inline std::vector<VertexRef> sample_vertices(const GraphPresentation& g, std::int64_t members = 2) {
  std::vector<VertexRef> out;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) out.push_back(VertexRef::core(v));
  for (std::size_t p = 0; p < g.primitive_count(); ++p) {
    const bool back = g.primitive(p).kind == PrimitiveKind::BackRay;
    for (std::int64_t i = 1; i <= members; ++i) out.push_back(VertexRef::member(p, back ? -i : i));
  }
  return out;
}

// Vertices of an explicit truncation that can reach `to`, including `to`.
inline std::vector<bool> explicit_coreach(const TruncatedExpansion& t, std::size_t to) {
  std::vector<bool> seen(t.vertices.size(), false);
  std::vector<std::size_t> stack{to};
  seen[to] = true;
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    for (const ExplicitEdge& e : t.edges) {
      if (e.target == u && !seen[e.source]) {
        seen[e.source] = true;
        stack.push_back(e.source);
      }
    }
  }
  return seen;
}

// True when the explicit subgraph induced on `keep` contains a directed cycle.
inline bool explicit_has_cycle(const TruncatedExpansion& t, const std::vector<bool>& keep) {
  std::vector<int> state(t.vertices.size(), 0);
  auto dfs = [&](auto&& self, std::size_t u) -> bool {
    state[u] = 1;
    for (const ExplicitEdge& e : t.edges) {
      if (e.source != u || !keep[e.target]) continue;
      if (state[e.target] == 1) return true;
      if (state[e.target] == 0 && self(self, e.target)) return true;
    }
    state[u] = 2;
    return false;
  };
  for (std::size_t v = 0; v < t.vertices.size(); ++v) {
    if (keep[v] && state[v] == 0 && dfs(dfs, v)) return true;
  }
  return false;
}

}  // namespace rfd::testing

#endif  // RFD_TESTS_SUPPORT_HPP_
