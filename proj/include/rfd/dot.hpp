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

#ifndef RFD_DOT_HPP_
#define RFD_DOT_HPP_

#include <string>
#include <vector>

#include "rfd/conditions.hpp"

namespace rfd {

// Graphviz rendering. Core vertices are filled nodes; every infinite family
// (omega arc, star, ray) is drawn with three representatives and a dotted
// continuation. Edges and vertices named by the witnesses are drawn red.
// Output depends only on the inputs (declaration order throughout).
std::string dot_export(const GraphPresentation& g, const std::vector<Witness>& witnesses = {});

}  // namespace rfd

#endif  // RFD_DOT_HPP_
