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

// Structured (JSON) and human-readable renderings of every report type.
// Structured documents follow schema/report.schema.json: objects carry a
// "kind" tag, unions a "type" tag, and keys are emitted in a fixed order so
// identical inputs give byte-identical output.

#ifndef RFD_REPORT_HPP_
#define RFD_REPORT_HPP_

#include <string>

#include "json.hpp"
#include "rfd/conditions.hpp"
#include "rfd/groupoid.hpp"
#include "rfd/oracle.hpp"

namespace rfd {

using Json = nlohmann::ordered_json;

Json to_json(const ExtNat& n);
Json to_json(const GraphPresentation& g, const Cycle& c);
Json to_json(const GraphPresentation& g, const Witness& w);
Json to_json(const GraphPresentation& g, const ConditionReport& r);
Json to_json(const IsotropyGroup& i);
Json to_json(const GraphPresentation& g, const OrbitCertificate& c);
Json to_json(const GraphPresentation& g, const NotDenseCertificate& c);
Json to_json(const GraphPresentation& g, const DensityReport& r);
Json orbit_json(const GraphPresentation& g, const BoundaryPoint& x, const OrbitReport& r);
Json isotropy_json(const GraphPresentation& g, const BoundaryPoint& x, const IsotropyGroup& i);
Json expansion_json(const GraphPresentation& g, const TruncatedExpansion& t);

// Inverse of to_json for witnesses; throws std::invalid_argument on bad input.
Witness witness_from_json(const GraphPresentation& g, const Json& j);

// Canonical text of a structured document: two-space indent, trailing newline.
std::string dump(const Json& j);

std::string human_conditions(const GraphPresentation& g, const ConditionReport& r, bool color);
std::string human_density(const GraphPresentation& g, const DensityReport& r, bool color);
std::string human_orbit(const GraphPresentation& g, const BoundaryPoint& x, const OrbitReport& r);
std::string describe(const GraphPresentation& g, const Witness& w);
std::string describe(const GraphPresentation& g, const OrbitCertificate& c);

}  // namespace rfd

#endif  // RFD_REPORT_HPP_
