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

#include <Eigen/Dense>
#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "starwalk/graph.hpp"
#include "starwalk/state.hpp"
#include "starwalk/walk.hpp"

namespace starwalk {

/// A normalized real combination of directed edge states.
struct BasisVector {
    std::string label;
    std::vector<std::pair<StateIndex, double>> terms;

    StateVector embed(std::size_t dim) const;
    Amplitude overlap(const StateVector& state) const;  ///< <this|state>
};

/// Collapsed orthonormal basis of grouped edge states.
///
/// Two-star chains use psi1..psi4: plain prongs outgoing and ingoing, then
/// path prongs ingoing and outgoing, star-2 terms negative. Three-star chains
/// use the five ingoing states psi1..psi5: plain prongs of stars 1 and 3, START
/// and END, shared prongs into A1 and A3, shared prongs into A2, plain prongs of
/// star 2.
struct ReducedBasis {
    ChainFamily family = ChainFamily::TwoStar;
    std::size_t dimension = 0;  ///< dimension of the full state space
    std::vector<BasisVector> vectors;

    std::size_t size() const { return vectors.size(); }
    StateVector embed(const Eigen::VectorXcd& coordinates) const;
};

ReducedBasis two_star_basis(const StarChainGraph& graph);
ReducedBasis three_star_basis(const StarChainGraph& graph);
ReducedBasis reduced_basis(const StarChainGraph& graph);

struct Projection {
    Eigen::VectorXcd coordinates;
    double residual_norm = 0.0;
};

Projection project(const ReducedBasis& basis, const StateVector& state);

/// U^2 restricted to span(basis): matrix(i, j) = <psi_i | U^2 psi_j>.
struct ReducedModel {
    ReducedBasis basis;
    Eigen::MatrixXcd matrix;
    ChainFamily family = ChainFamily::TwoStar;
    int prongs = 0;
    std::optional<int> shared;
    double t = 0.0;
    double r = 0.0;
    double mu = 0.0;  ///< sqrt((m-1)(N-m)), three-star only
    double nu = 0.0;  ///< sqrt(2(m-1)(N-2m+2)), three-star only
    double invariance_residual = 0.0;
};

/// Largest tolerated leakage of U^2 psi_j out of the span.
inline constexpr double kInvarianceTolerance = 1e-10;

/// Embeds every basis vector, applies the full step operator twice and
/// projects back. Throws NotInvariantError if any image leaks more than
/// kInvarianceTolerance.
ReducedModel derive_reduced_matrix(const StarChainGraph& graph, const ReducedBasis& basis);
ReducedModel derive_reduced_matrix(const StarChainGraph& graph);

/// Matrix of U^steps on span(basis) together with the worst leakage. No
/// tolerance check; used to inspect single-step actions.
std::pair<Eigen::MatrixXcd, double> projected_step_matrix(const Walker& walker,
                                                          const ReducedBasis& basis, int steps);

/// {psi2, psi3} block of a two-star model: [[r-2t, g], [-g, r-2t]],
/// g = t sqrt(3(N-3)).
Eigen::Matrix2cd two_star_block(const ReducedModel& model);

/// matrix^n * coordinates.
Eigen::VectorXcd reduced_evolve(const ReducedModel& model, const Eigen::VectorXcd& coordinates,
                                std::size_t n);

/// Fills reading.grouped with P(psi2), P(psi3), P(psi4). Three-star basis only.
void measure_grouped(const ReducedBasis& basis, const StateVector& state,
                     ProbabilityReading& reading);

}  // namespace starwalk
