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

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "starwalk/graph.hpp"
#include "starwalk/kernels.hpp"
#include "starwalk/state.hpp"

namespace starwalk {

/// Full-basis simulator bound to one graph. Holds the precomputed step
/// operator; the graph must outlive the walker.
class Walker {
public:
    explicit Walker(const StarChainGraph& graph);

    const StarChainGraph& graph() const { return *graph_; }
    const StepOperator& op() const { return op_; }

    StateVector step(const StateVector& state) const;
    StateVector step_adjoint(const StateVector& state) const;
    /// `steps` applications of U; zero steps returns the input unchanged.
    StateVector evolve(const StateVector& state, std::size_t steps) const;

private:
    void check_dimension(const StateVector& state) const;

    const StarChainGraph* graph_;
    StepOperator op_;
};

StateVector step(const StarChainGraph& graph, const StateVector& state);
StateVector evolve(const StarChainGraph& graph, const StateVector& state, std::size_t steps);

/// +1/sqrt(2N) on the ingoing states of star 1, -1/sqrt(2N) on those of star 2.
StateVector initial_state_two_star(const StarChainGraph& graph);
/// +1/sqrt(3N) on ingoing states of stars 1 and 3, -1/sqrt(3N) on star 2.
StateVector initial_state_three_star(const StarChainGraph& graph);
StateVector initial_state(const StarChainGraph& graph);

struct ProbabilityReading {
    std::vector<double> edge_probabilities;  ///< indexed by edge id
    double path_probability = 0.0;
    double total = 0.0;
    /// P(psi2), P(psi3), P(psi4) of the three-star grouped basis; filled by
    /// measure_grouped() in the reduced module.
    std::optional<std::array<double, 3>> grouped;
};

ProbabilityReading measure(const StarChainGraph& graph, const StateVector& state);

}  // namespace starwalk
