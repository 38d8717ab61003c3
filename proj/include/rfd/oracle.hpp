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

// Brute-force counterparts of the symbolic layer. Everything here works on an
// explicit finite truncation of the presented graph and recomputes incidence
// from the primitive definitions directly, so it shares no logic with the
// deciders it is used to check.

#ifndef RFD_ORACLE_HPP_
#define RFD_ORACLE_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "rfd/presentation.hpp"

namespace rfd {

struct ExplicitEdge {
  EdgeRef origin;
  std::size_t source = 0;  // indices into TruncatedExpansion::vertices
  std::size_t target = 0;
};

// Every core vertex, derived vertices of index 1..B (backward rays: -1..-B),
// finite multiplicities in full, and the first B members of each omega arc
// and primitive family.
struct TruncatedExpansion {
  std::uint64_t bound = 0;
  std::vector<VertexRef> vertices;
  std::vector<ExplicitEdge> edges;
  std::map<VertexRef, std::size_t> index;

  std::optional<std::size_t> find(const VertexRef& v) const;
  std::size_t out_count(std::size_t v) const;
  std::size_t in_count(std::size_t v) const;
};

TruncatedExpansion expand(const GraphPresentation& g, std::uint64_t bound);

// All walks of length <= max_length ending at `to`, each as its edge
// sequence, in lexicographic order (the length-0 path first).
std::vector<Path> enumerate_paths(const TruncatedExpansion& t, const VertexRef& to,
                                  std::size_t max_length);

// A backward path of at least min_length pairwise distinct edges, in path
// order, or nullopt when none exists in the expansion.
std::optional<Path> brute_backward_chain(const TruncatedExpansion& t, std::size_t min_length);

// Length of the longest backward path of pairwise distinct edges that ends at
// a core vertex, stopping early at `cap`.
std::size_t longest_backward_chain(const TruncatedExpansion& t, std::size_t cap);

struct RandomSpec {
  std::uint64_t seed = 0;
  std::size_t max_vertices = 4;
  double density = 0.3;
  double omega_probability = 0.1;
  std::uint64_t max_multiplicity = 2;
  // Upper bound per kind, in the order instar, outstar, backray, fwdray.
  std::array<std::size_t, 4> max_primitives{0, 0, 0, 0};
  std::size_t max_total_primitives = 2;
};

GraphPresentation random_presentation(const RandomSpec& spec);

}  // namespace rfd

#endif  // RFD_ORACLE_HPP_
