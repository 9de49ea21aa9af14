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

#include "starwalk/reduced.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "starwalk/errors.hpp"

namespace starwalk {

StateVector BasisVector::embed(std::size_t dim) const {
    StateVector v(dim);
    for (const auto& [i, c] : terms) {
        v[i] += c;
    }
    return v;
}

Amplitude BasisVector::overlap(const StateVector& state) const {
    Amplitude s{};
    for (const auto& [i, c] : terms) {
        s += c * state[i];
    }
    return s;
}

StateVector ReducedBasis::embed(const Eigen::VectorXcd& coordinates) const {
    if (static_cast<std::size_t>(coordinates.size()) != vectors.size()) {
        throw std::invalid_argument("coordinate count does not match the basis size");
    }
    StateVector v(dimension);
    for (std::size_t k = 0; k < vectors.size(); ++k) {
        for (const auto& [i, c] : vectors[k].terms) {
            v[i] += c * coordinates[static_cast<Eigen::Index>(k)];
        }
    }
    return v;
}

namespace {

void normalize(BasisVector& v) {
    double s = 0.0;
    for (const auto& term : v.terms) {
        s += term.second * term.second;
    }
    const double inv = 1.0 / std::sqrt(s);
    for (auto& term : v.terms) {
        term.second *= inv;
    }
}

bool on_path(const StarChainGraph& graph, EdgeId e) {
    return graph.vertex(graph.edge(e).outer).kind != VertexKind::ReflectPlus;
}

}  // namespace

ReducedBasis two_star_basis(const StarChainGraph& graph) {
    if (graph.family() != ChainFamily::TwoStar) {
        throw InvalidParameter("two-star basis requested for a three-star chain");
    }
    ReducedBasis basis;
    basis.family = ChainFamily::TwoStar;
    basis.dimension = graph.state_count();
    basis.vectors = {{"psi1", {}}, {"psi2", {}}, {"psi3", {}}, {"psi4", {}}};
    for (EdgeId e = 0; e < graph.edges().size(); ++e) {
        const double sign = graph.edge(e).star == 0 ? 1.0 : -1.0;
        const StateIndex out = graph.outgoing_state(e);
        const StateIndex in = graph.ingoing_state(e);
        if (on_path(graph, e)) {
            basis.vectors[2].terms.emplace_back(in, sign);
            basis.vectors[3].terms.emplace_back(out, sign);
        } else {
            basis.vectors[0].terms.emplace_back(out, sign);
            basis.vectors[1].terms.emplace_back(in, sign);
        }
    }
    for (auto& v : basis.vectors) {
        normalize(v);
    }
    return basis;
}

ReducedBasis three_star_basis(const StarChainGraph& graph) {
    if (graph.family() != ChainFamily::ThreeStar) {
        throw InvalidParameter("three-star basis requested for a two-star chain");
    }
    ReducedBasis basis;
    basis.family = ChainFamily::ThreeStar;
    basis.dimension = graph.state_count();
    basis.vectors = {{"psi1", {}}, {"psi2", {}}, {"psi3", {}}, {"psi4", {}}, {"psi5", {}}};
    for (EdgeId e = 0; e < graph.edges().size(); ++e) {
        const Edge& ed = graph.edge(e);
        const VertexKind kind = graph.vertex(ed.outer).kind;
        const StateIndex in = graph.ingoing_state(e);
        std::size_t slot = 0;
        if (ed.star == 1) {
            slot = kind == VertexKind::PassThrough ? 3 : 4;
        } else if (kind == VertexKind::ReflectMinus) {
            slot = 1;
        } else if (kind == VertexKind::PassThrough) {
            slot = 2;
        } else {
            slot = 0;
        }
        basis.vectors[slot].terms.emplace_back(in, 1.0);
    }
    for (auto& v : basis.vectors) {
        normalize(v);
    }
    return basis;
}

ReducedBasis reduced_basis(const StarChainGraph& graph) {
    return graph.family() == ChainFamily::TwoStar ? two_star_basis(graph)
                                                  : three_star_basis(graph);
}

Projection project(const ReducedBasis& basis, const StateVector& state) {
    if (state.size() != basis.dimension) {
        throw std::invalid_argument("state dimension does not match the basis");
    }
    Projection p;
    p.coordinates.resize(static_cast<Eigen::Index>(basis.size()));
    for (std::size_t k = 0; k < basis.size(); ++k) {
        p.coordinates[static_cast<Eigen::Index>(k)] = basis.vectors[k].overlap(state);
    }
    StateVector rest = state;
    rest -= basis.embed(p.coordinates);
    p.residual_norm = rest.norm();
    return p;
}

std::pair<Eigen::MatrixXcd, double> projected_step_matrix(const Walker& walker,
                                                          const ReducedBasis& basis, int steps) {
    const auto k = static_cast<Eigen::Index>(basis.size());
    Eigen::MatrixXcd m(k, k);
    double worst = 0.0;
    for (Eigen::Index j = 0; j < k; ++j) {
        const StateVector image =
            walker.evolve(basis.vectors[static_cast<std::size_t>(j)].embed(basis.dimension),
                          static_cast<std::size_t>(steps));
        const Projection p = project(basis, image);
        m.col(j) = p.coordinates;
        worst = std::max(worst, p.residual_norm);
    }
    return {m, worst};
}

ReducedModel derive_reduced_matrix(const StarChainGraph& graph, const ReducedBasis& basis) {
    if (basis.dimension != graph.state_count() || basis.family != graph.family()) {
        throw std::invalid_argument("basis was built for a different graph");
    }
    const Walker walker(graph);
    auto [matrix, residual] = projected_step_matrix(walker, basis, 2);
    if (!(residual < kInvarianceTolerance)) {
        std::ostringstream msg;
        msg << "U^2 leaks out of the reduced span: residual " << residual << " > "
            << kInvarianceTolerance;
        throw NotInvariantError(msg.str());
    }

    ReducedModel model;
    model.basis = basis;
    model.matrix = std::move(matrix);
    model.family = graph.family();
    model.prongs = graph.prongs();
    model.shared = graph.shared();
    const auto sc = scatter_coefficients(graph.prongs());
    model.t = sc.t;
    model.r = sc.r;
    if (model.shared) {
        const double n = graph.prongs();
        const double m = *model.shared;
        model.mu = std::sqrt((m - 1.0) * (n - m));
        model.nu = std::sqrt(2.0 * (m - 1.0) * (n - 2.0 * m + 2.0));
    }
    model.invariance_residual = residual;
    return model;
}

ReducedModel derive_reduced_matrix(const StarChainGraph& graph) {
    return derive_reduced_matrix(graph, reduced_basis(graph));
}

Eigen::Matrix2cd two_star_block(const ReducedModel& model) {
    if (model.family != ChainFamily::TwoStar) {
        throw InvalidParameter("two-star block requested for a three-star model");
    }
    return model.matrix.block<2, 2>(1, 1);
}

Eigen::VectorXcd reduced_evolve(const ReducedModel& model, const Eigen::VectorXcd& coordinates,
                                std::size_t n) {
    if (coordinates.size() != model.matrix.cols()) {
        throw std::invalid_argument("coordinate count does not match the reduced model");
    }
    Eigen::VectorXcd c = coordinates;
    for (std::size_t k = 0; k < n; ++k) {
        c = model.matrix * c;
    }
    return c;
}

void measure_grouped(const ReducedBasis& basis, const StateVector& state,
                     ProbabilityReading& reading) {
    if (basis.family != ChainFamily::ThreeStar) {
        throw InvalidParameter("grouped path states are defined for the three-star basis");
    }
    reading.grouped = std::array<double, 3>{std::norm(basis.vectors[1].overlap(state)),
                                            std::norm(basis.vectors[2].overlap(state)),
                                            std::norm(basis.vectors[3].overlap(state))};
}

}  // namespace starwalk
