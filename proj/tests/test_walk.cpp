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

#include <doctest.h>

#include <cmath>
#include <random>

#include "oracle.hpp"
#include "starwalk/errors.hpp"
#include "starwalk/walk.hpp"

using namespace starwalk;
using starwalk::testing::random_state;

namespace {

StateIndex idx(const StarChainGraph& g, VertexLabel from, VertexLabel to) {
    return *g.state_index(*g.find_vertex(from), *g.find_vertex(to));
}

constexpr VertexLabel A1{'A', 1, 0};
constexpr VertexLabel A2{'A', 2, 0};

VertexLabel B(int group, int index) { return {'B', group, index}; }

double support_norm(const StateVector& v, const StarChainGraph& g, bool outgoing) {
    double s = 0.0;
    for (StateIndex i = 0; i < v.size(); ++i) {
        if (g.is_outgoing(i) == outgoing) {
            s += std::norm(v[i]);
        }
    }
    return s;
}

}  // namespace

TEST_CASE("single-step actions") {
    const auto g = StarChainGraph::two_star(5);
    const auto dim = g.state_count();

    SUBCASE("START reflects with -1") {
        const auto out = step(g, basis_state(dim, idx(g, A1, B(1, 1))));
        CHECK(out[idx(g, B(1, 1), A1)] == Amplitude(-1.0));
        CHECK(out.norm() == doctest::Approx(1.0));
    }
    SUBCASE("center of degree 5 scatters") {
        const auto out = step(g, basis_state(dim, idx(g, B(1, 4), A1)));
        CHECK(std::abs(out[idx(g, A1, B(1, 4))] - (-0.6)) < 1e-15);
        for (int j : {1, 2, 3, 5}) {
            CHECK(std::abs(out[idx(g, A1, B(1, j))] - 0.4) < 1e-15);
        }
        double rest = 0.0;
        for (StateIndex i = 0; i < dim; ++i) {
            rest += std::norm(out[i]);
        }
        CHECK(rest == doctest::Approx(0.36 + 4 * 0.16));
    }
    SUBCASE("shared vertex transmits to the next star") {
        const auto out = step(g, basis_state(dim, idx(g, A1, B(1, 2))));
        CHECK(out[idx(g, B(1, 2), A2)] == Amplitude(1.0));
        CHECK(out.norm() == doctest::Approx(1.0));
    }
    SUBCASE("plain prong reflects with +1") {
        const auto out = step(g, basis_state(dim, idx(g, A2, B(2, 5))));
        CHECK(out[idx(g, B(2, 5), A2)] == Amplitude(1.0));
    }
}

TEST_CASE("evolve") {
    std::mt19937_64 rng(1);
    const auto g = StarChainGraph::three_star(20, 3);
    const auto v = random_state(g.state_count(), rng);
    CHECK(evolve(g, v, 0) == v);

    const Walker w(g);
    CHECK(max_abs_diff(w.evolve(v, 3), w.step(w.step(w.step(v)))) == 0.0);

    // Two steps return an ingoing-only state to the ingoing class.
    const auto in = initial_state(g);
    const auto two = w.evolve(in, 2);
    CHECK(support_norm(two, g, true) < 1e-28);
    CHECK(support_norm(w.step(in), g, false) < 1e-28);

    const auto g100 = StarChainGraph::two_star(100);
    CHECK(measure(g100, evolve(g100, initial_state(g100), 10)).path_probability >= 0.9);
}

TEST_CASE("initial states") {
    SUBCASE("two-star N=5") {
        const auto g = StarChainGraph::two_star(5);
        const auto v = initial_state_two_star(g);
        const double a = 1.0 / std::sqrt(10.0);
        int nonzero = 0;
        for (StateIndex i = 0; i < v.size(); ++i) {
            if (g.is_outgoing(i)) {
                CHECK(v[i] == Amplitude(0.0));
                continue;
            }
            ++nonzero;
            const int star = g.edge(g.edge_of(i)).star;
            CHECK(std::abs(v[i] - (star == 0 ? a : -a)) < 1e-15);
        }
        CHECK(nonzero == 10);
        CHECK(v.norm() == doctest::Approx(1.0).epsilon(1e-14));
        CHECK_THROWS_AS(initial_state_three_star(g), InvalidParameter);
    }
    SUBCASE("three-star N=10 m=3") {
        const auto g = StarChainGraph::three_star(10, 3);
        const auto v = initial_state_three_star(g);
        const double a = 1.0 / std::sqrt(30.0);
        int nonzero = 0;
        for (StateIndex i = 0; i < v.size(); ++i) {
            if (std::abs(v[i]) > 0) {
                ++nonzero;
                CHECK(std::abs(std::abs(v[i]) - a) < 1e-15);
            }
        }
        CHECK(nonzero == 30);
        // |B12, A2> belongs to star 2 and is negative, |B12, A1> to star 1.
        CHECK(v[idx(g, B(1, 2), A2)].real() < 0.0);
        CHECK(v[idx(g, B(1, 2), A1)].real() > 0.0);
        const auto perm = g.mirror_permutation();
        for (StateIndex i = 0; i < v.size(); ++i) {
            CHECK(v[perm[i]] == v[i]);
        }
        CHECK_THROWS_AS(initial_state_two_star(g), InvalidParameter);
    }
}

TEST_CASE("measurement") {
    const auto g = StarChainGraph::two_star(8);
    const auto plain = idx(g, A1, B(1, 6));
    const auto r = measure(g, basis_state(g.state_count(), plain));
    CHECK(r.path_probability == 0.0);
    CHECK(r.total == doctest::Approx(1.0));

    // psi3 of the two-star basis, written out from its definition.
    StateVector psi3(g.state_count());
    const double a = 1.0 / std::sqrt(6.0);
    psi3[idx(g, B(1, 1), A1)] = a;
    psi3[idx(g, B(1, 2), A1)] = a;
    psi3[idx(g, B(1, 3), A1)] = a;
    psi3[idx(g, B(2, 1), A2)] = -a;
    psi3[idx(g, B(1, 2), A2)] = -a;
    psi3[idx(g, B(1, 3), A2)] = -a;
    CHECK(measure(g, psi3).path_probability == doctest::Approx(1.0).epsilon(1e-14));

    std::mt19937_64 rng(2);
    const auto g3 = StarChainGraph::three_star(15, 4);
    for (int trial = 0; trial < 10; ++trial) {
        const auto reading = measure(g3, random_state(g3.state_count(), rng));
        double s = 0.0;
        for (double p : reading.edge_probabilities) {
            s += p;
        }
        CHECK(std::abs(s - 1.0) < 1e-10);
        CHECK(reading.path_probability <= 1.0 + 1e-12);
    }
}

TEST_CASE("walk properties on random states") {
    std::mt19937_64 rng(42);
    for (int n : {5, 20, 100}) {
        std::vector<StarChainGraph> graphs{StarChainGraph::two_star(n)};
        if (n > 4) {
            graphs.push_back(StarChainGraph::three_star(n, 2));
            graphs.push_back(StarChainGraph::three_star(n, 3));
        }
        for (const auto& g : graphs) {
            CAPTURE(n);
            const Walker w(g);
            const auto u = random_state(g.state_count(), rng);
            const auto v = random_state(g.state_count(), rng);

            // Unitarity.
            CHECK(std::abs(w.step(u).norm() - 1.0) < 1e-12);

            // Linearity.
            const Amplitude alpha{0.3, -1.1}, beta{-0.7, 0.2};
            const auto lhs = w.step(alpha * u + beta * v);
            const auto rhs = alpha * w.step(u) + beta * w.step(v);
            CHECK(max_abs_diff(lhs, rhs) < 1e-12);

            // Reversibility through the adjoint.
            CHECK(max_abs_diff(w.step_adjoint(w.step(u)), u) < 1e-10);

            // Bipartite parity.
            StateVector ingoing = u;
            for (StateIndex i = 0; i < ingoing.size(); ++i) {
                if (g.is_outgoing(i)) {
                    ingoing[i] = 0.0;
                }
            }
            CHECK(support_norm(w.step(ingoing), g, false) == 0.0);
        }
    }
}

TEST_CASE("mirror symmetry is preserved by the walk") {
    std::mt19937_64 rng(9);
    const auto g = StarChainGraph::three_star(30, 4);
    const auto perm = g.mirror_permutation();
    auto v = random_state(g.state_count(), rng);
    StateVector sym(v.size());
    for (StateIndex i = 0; i < v.size(); ++i) {
        sym[i] = v[i] + v[perm[i]];
    }
    sym *= 1.0 / sym.norm();
    const Walker w(g);
    for (int s = 0; s < 50; ++s) {
        sym = w.step(sym);
        double worst = 0.0;
        for (StateIndex i = 0; i < sym.size(); ++i) {
            worst = std::max(worst, std::abs(sym[i] - sym[perm[i]]));
        }
        CHECK(worst < 1e-10);
    }
}

TEST_CASE("dimension mismatch") {
    const auto g = StarChainGraph::two_star(5);
    CHECK_THROWS_AS(step(g, StateVector(19)), std::invalid_argument);
    CHECK_THROWS_AS(measure(g, StateVector(3)), std::invalid_argument);
}
