// Copyright 2026 The starwalk Authors
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

#pragma once

#include <json.hpp>
#include <string>

#include "starwalk/experiments.hpp"
#include "starwalk/graph.hpp"
#include "starwalk/spectral.hpp"
#include "starwalk/state.hpp"
#include "starwalk/walk.hpp"

namespace starwalk {

using Json = nlohmann::ordered_json;

/// {"tool", "version", "command", "parameters", "tolerances"}
Json metadata(const std::string& command, Json parameters);

Json to_json(const ExperimentReport& report);
Json to_json(const SpectralReport& report);
Json to_json(const ScalingResult& result);

/// Amplitudes and per-edge probabilities of a simulated state.
Json state_dump(const StarChainGraph& graph, const StateVector& state,
                const ProbabilityReading& reading);

}  // namespace starwalk
