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

#include "starwalk/walk.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "starwalk/errors.hpp"

namespace starwalk {

Walker::Walker(const StarChainGraph& graph) : graph_(&graph), op_(graph) {}

void Walker::check_dimension(const StateVector& state) const {
    if (state.size() != graph_->state_count()) {
        throw std::invalid_argument("state has " + std::to_string(state.size()) +
                                    " amplitudes, graph has " +
                                    std::to_string(graph_->state_count()) + " directed states");
    }
}

StateVector Walker::step(const StateVector& state) const {
    check_dimension(state);
    StateVector out(state.size());
    apply_step(op_, state.span(), out.span());
    return out;
}

StateVector Walker::step_adjoint(const StateVector& state) const {
    check_dimension(state);
    StateVector out(state.size());
    apply_step_adjoint(op_, state.span(), out.span());
    return out;
}

StateVector Walker::evolve(const StateVector& state, std::size_t steps) const {
    check_dimension(state);
    StateVector cur = state;
    StateVector next(state.size());
    for (std::size_t k = 0; k < steps; ++k) {
        apply_step(op_, cur.span(), next.span());
        std::swap(cur, next);
    }
    return cur;
}

StateVector step(const StarChainGraph& graph, const StateVector& state) {
    return Walker(graph).step(state);
}

StateVector evolve(const StarChainGraph& graph, const StateVector& state, std::size_t steps) {
    return Walker(graph).evolve(state, steps);
}

namespace {

// Ingoing states of star s get `sign_of(s) / sqrt(stars * N)`.
template <typename SignFn>
StateVector ingoing_superposition(const StarChainGraph& graph, SignFn sign_of) {
    StateVector v(graph.state_count());
    const double amp = 1.0 / std::sqrt(static_cast<double>(graph.star_count() * graph.prongs()));
    for (EdgeId e = 0; e < graph.edges().size(); ++e) {
        v[graph.ingoing_state(e)] = sign_of(graph.edge(e).star) * amp;
    }
    return v;
}

}  // namespace

StateVector initial_state_two_star(const StarChainGraph& graph) {
    if (graph.family() != ChainFamily::TwoStar) {
        throw InvalidParameter("two-star initial state requested for a three-star chain");
    }
    return ingoing_superposition(graph, [](int star) { return star == 0 ? 1.0 : -1.0; });
}

StateVector initial_state_three_star(const StarChainGraph& graph) {
    if (graph.family() != ChainFamily::ThreeStar) {
        throw InvalidParameter("three-star initial state requested for a two-star chain");
    }
    return ingoing_superposition(graph, [](int star) { return star == 1 ? -1.0 : 1.0; });
}

StateVector initial_state(const StarChainGraph& graph) {
    return graph.family() == ChainFamily::TwoStar ? initial_state_two_star(graph)
                                                  : initial_state_three_star(graph);
}

ProbabilityReading measure(const StarChainGraph& graph, const StateVector& state) {
    if (state.size() != graph.state_count()) {
        throw std::invalid_argument("state dimension does not match the graph");
    }
    ProbabilityReading reading;
    reading.edge_probabilities.resize(graph.edges().size());
    for (EdgeId e = 0; e < graph.edges().size(); ++e) {
        const double p = std::norm(state[graph.outgoing_state(e)]) +
                         std::norm(state[graph.ingoing_state(e)]);
        reading.edge_probabilities[e] = p;
        reading.total += p;
    }
    for (EdgeId e : path_edges(graph)) {
        reading.path_probability += reading.edge_probabilities[e];
    }
    return reading;
}

}  // namespace starwalk
