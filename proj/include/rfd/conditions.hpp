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

// Exact deciders for the four graph conditions characterizing residually
// finite-dimensional graph C*-algebras:
//
//   a) no infinite receiver
//   b) no cycle with an exit
//   c) no infinite backward chain
//   d) every vertex has a finite path to a sink, a cycle or an infinite
//      emitter
//
// Every failing decider returns a witness that can be re-checked against the
// presentation with validate().

#ifndef RFD_CONDITIONS_HPP_
#define RFD_CONDITIONS_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rfd/presentation.hpp"

namespace rfd {

// A simple directed cycle of the core. edges[i] leaves vertices[i] and enters
// vertices[(i + 1) % n]; vertices are pairwise distinct.
struct Cycle {
  std::vector<EdgeRef> edges;
  std::vector<std::size_t> vertices;

  std::size_t length() const { return edges.size(); }
  bool operator==(const Cycle&) const = default;
};

struct CycleEnumeration {
  std::vector<Cycle> cycles;
  bool truncated = false;  // cap reached before enumeration finished
};

inline constexpr std::size_t kDefaultCycleCap = 100000;

// All simple cycles of the core multigraph, one per vertex sequence. Each
// cycle starts at its smallest vertex index; between consecutive vertices the
// smallest arc is chosen, copy 0. Primitives never lie on cycles.
CycleEnumeration enumerate_cycles(const GraphPresentation& g,
                                  std::size_t cap = kDefaultCycleCap);

// Cycles restricted to the sub-digraph of omega-multiplicity arcs.
CycleEnumeration enumerate_omega_cycles(const GraphPresentation& g,
                                        std::size_t cap = kDefaultCycleCap);

// Core vertices lying on at least one cycle. Linear time (strongly connected
// components), independent of the enumeration cap.
std::vector<bool> cycle_vertices(const GraphPresentation& g);

// Component id of each core vertex; ids are in reverse topological order.
std::vector<std::size_t> strongly_connected_components(const GraphPresentation& g);

// Some cycle through core vertex v, rotated to start at v; nullopt when v is
// on no cycle. The first cycle in enumerate_cycles order is chosen.
std::optional<Cycle> cycle_through(const GraphPresentation& g, std::size_t v);

struct InfiniteReceiver {
  VertexRef vertex;
  std::vector<EdgeRef> sample_in_edges;
  bool operator==(const InfiniteReceiver&) const = default;
};

struct CycleWithExit {
  Cycle cycle;
  EdgeRef exit;
  std::size_t position = 0;  // index into cycle.vertices of the exit's source
  bool operator==(const CycleWithExit&) const = default;
};

// Generator of an infinite backward chain: a backward ray, or a cycle all of
// whose arcs have multiplicity omega.
struct BackwardChainGen {
  std::optional<std::size_t> backray;
  std::optional<Cycle> omega_cycle;
  bool operator==(const BackwardChainGen&) const = default;
};

// A vertex none of whose forward paths reach a sink, a cycle or an infinite
// emitter. The closure lists the core vertices and forward rays reachable.
struct StrandedVertex {
  VertexRef vertex;
  std::vector<std::size_t> closure_core;
  std::vector<std::size_t> closure_rays;
  bool operator==(const StrandedVertex&) const = default;
};

using Witness = std::variant<InfiniteReceiver, CycleWithExit, BackwardChainGen,
                             StrandedVertex>;

std::string witness_kind(const Witness& w);

struct ConditionResult {
  bool holds = true;
  std::optional<Witness> witness;  // present iff !holds
  bool operator==(const ConditionResult&) const = default;
};

struct ComponentReport;

struct ConditionReport {
  ConditionResult a, b, c, d;
  bool rfd = true;
  // One entry per weakly connected component; empty for the empty graph.
  std::vector<ComponentReport> components;
  bool operator==(const ConditionReport&) const;
};

struct ComponentReport {
  GraphPresentation graph;
  ConditionReport report;  // its own components list is empty
  bool operator==(const ComponentReport&) const = default;
};

ConditionResult check_no_infinite_receiver(const GraphPresentation& g);
ConditionResult check_no_cycle_with_exit(const GraphPresentation& g);
ConditionResult check_no_infinite_backward_chain(const GraphPresentation& g);
ConditionResult check_reaches_terminal(const GraphPresentation& g);

// Runs all four checks (never short-circuits) on g and on each connected
// component. rfd is the conjunction of the four conditions.
ConditionReport decide_rfd(const GraphPresentation& g);

// Re-checks a witness against the presentation. Returns an empty string when
// valid, otherwise a description of the first violated invariant.
std::string validate(const GraphPresentation& g, const Witness& w);

// Core vertices in the "good set": sinks, cycle vertices and infinite
// emitters.
std::vector<bool> terminal_vertices(const GraphPresentation& g);

}  // namespace rfd

#endif  // RFD_CONDITIONS_HPP_
