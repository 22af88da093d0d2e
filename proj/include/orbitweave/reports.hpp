// Copyright 2026 The OrbitWeave Authors
//
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

// JSON and plain-text renderings of analysis results. Weyl elements are
// written as their canonical words, i.e. arrays of simple-root indices.

#ifndef ORBITWEAVE_REPORTS_HPP_
#define ORBITWEAVE_REPORTS_HPP_

#include <string>
#include <vector>

#include <json.hpp>

#include "orbitweave/knop_action.hpp"
#include "orbitweave/orbit_graph.hpp"
#include "orbitweave/path_analysis.hpp"
#include "orbitweave/weyl.hpp"

namespace orbitweave {

using Json = nlohmann::ordered_json;

Json to_json(const WeylGroup& weyl, WeylElement w);
Json to_json(const CertificationReport& report);
Json to_json(const ExpansionReport& report, const WeylGroup& weyl);
Json to_json(const GeneratorClassification& gens, const WeylGroup& weyl);
Json to_json(const StabilizerReport& report, const WeylGroup& weyl);

std::string pretty(const std::vector<CertificationReport>& layers);
std::string pretty(const ExpansionReport& report, const WeylGroup& weyl);
std::string pretty(const StabilizerReport& report, const WeylGroup& weyl);

}  // namespace orbitweave

#endif  // ORBITWEAVE_REPORTS_HPP_
