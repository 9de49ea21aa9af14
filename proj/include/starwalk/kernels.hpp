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

#include <cstddef>
#include <span>
#include <vector>

#include "starwalk/graph.hpp"
#include "starwalk/state.hpp"

namespace starwalk {

/// Precomputed one-step scattering operator U for a chain.
///
/// Outgoing states |A, B> arrive at an outer vertex and are routed to a single
/// ingoing state with phase +1 or -1 (reflection or pass-through). Ingoing
/// states |B, A_s> arrive at center A_s, which emits
///     out_l = t * S - (r + t) * in_l,   S = sum_k in_k
/// on every outgoing state of its star. That is the rank-one form of
/// U|k,j> = -r|j,k> + t sum_{l != k} |j,l>.
class StepOperator {
public:
    explicit StepOperator(const StarChainGraph& graph);

    std::size_t dimension() const { return dim_; }
    std::size_t prongs() const { return prongs_; }
    int star_count() const { return static_cast<int>(coefficients_.size()); }
    const ScatterCoefficients& coefficients(int star) const { return coefficients_[star]; }

    /// Target ingoing state and phase for the outgoing state at `index`.
    StateIndex route_target(StateIndex index) const { return route_target_[index]; }
    double route_phase(StateIndex index) const { return route_phase_[index]; }

private:
    std::size_t dim_ = 0;
    std::size_t prongs_ = 0;
    std::vector<ScatterCoefficients> coefficients_;
    std::vector<StateIndex> route_target_;  // valid for outgoing indices
    std::vector<double> route_phase_;
};

/// out = U in. OpenMP-parallel; bit-identical for any thread count.
/// `in` and `out` must not alias.
void apply_step(const StepOperator& op, std::span<const Amplitude> in, std::span<Amplitude> out);

/// out = U^dagger in (U is real orthogonal, so this is U^T).
void apply_step_adjoint(const StepOperator& op, std::span<const Amplitude> in,
                        std::span<Amplitude> out);

/// Serial reference: walks the graph's vertices and applies each local
/// unitary literally, including the O(deg^2) double sum at the centers.
/// Kept for tests and benchmarks.
void apply_step_reference(const StarChainGraph& graph, std::span<const Amplitude> in,
                          std::span<Amplitude> out);

/// Sum of `values`, accumulated in fixed-size
/// chunks combined in index order.
Amplitude chunked_sum(std::span<const Amplitude> values);

}  // namespace starwalk
