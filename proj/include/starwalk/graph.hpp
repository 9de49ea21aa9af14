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
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace starwalk {

/// Local scattering behavior of a vertex.
enum class VertexKind {
    ReflectPlus,   ///< degree-1 outer vertex, reflects with phase +1
    ReflectMinus,  ///< degree-1 START/END vertex, reflects with phase -1
    PassThrough,   ///< degree-2 shared vertex, transmits without reflection
    Scatter,       ///< star center of degree n >= 3
};

const char* to_string(VertexKind kind);

/// Reflection and transmission amplitudes of a degree-n scattering center.
/// Satisfies r^2 + (n-1) t^2 = 1.
struct ScatterCoefficients {
    int degree = 0;
    double r = 0.0;
    double t = 0.0;
};

/// r = (n-2)/n, t = 2/n. Throws InvalidParameter for n < 3.
ScatterCoefficients scatter_coefficients(int degree);

using VertexId = std::uint32_t;
using EdgeId = std::size_t;
using StateIndex = std::size_t;

/// A_s for centers (letter 'A', group = star number, index = 0) and
/// B_{group,index} for outer vertices. Groups and indices are 1-based to
/// match the usual labelling of the chain.
struct VertexLabel {
    char letter = 'B';
    int group = 0;
    int index = 0;

    friend bool operator==(const VertexLabel&, const VertexLabel&) = default;
    friend auto operator<=>(const VertexLabel&, const VertexLabel&) = default;
};

std::string to_string(const VertexLabel& label);

struct Vertex {
    VertexLabel label;
    VertexKind kind = VertexKind::ReflectPlus;
    std::vector<EdgeId> edges;
};

/// Every edge joins a star center to an outer vertex.
struct Edge {
    VertexId center = 0;
    VertexId outer = 0;
    int star = 0;  // 0-based
};

/// |from, to>: the walker travels along the edge from `from` to `to`.
struct DirectedEdgeState {
    VertexId from = 0;
    VertexId to = 0;
    StateIndex index = 0;
};

enum class ChainFamily { TwoStar, ThreeStar };

const char* to_string(ChainFamily family);

/// Two- or three-star chain with START on the first star and END on the last.
///
/// Directed states are indexed star by star. Star s owns the block
/// [2sN, 2sN + 2N): first the N outgoing states |A_s, B> and then the N
/// ingoing states |B, A_s>, both sorted by outer-vertex label. A shared
/// vertex owns one state pair in each star it touches. Edge ids follow the
/// same order, so edge sN + p has outgoing state 2sN + p and ingoing state
/// 2sN + N + p.
///
/// Instances are immutable after construction.
class StarChainGraph {
public:
    /// Two stars of N prongs sharing B_{12} and B_{13}. Requires N >= 4.
    static StarChainGraph two_star(int prongs);

    /// Three stars of N prongs; neighbouring stars share m-1 vertices.
    /// Requires m >= 2 and N > 2m - 2.
    static StarChainGraph three_star(int prongs, int shared);

    ChainFamily family() const { return family_; }
    int star_count() const { return family_ == ChainFamily::TwoStar ? 2 : 3; }
    int prongs() const { return prongs_; }
    /// m for three-star chains; empty for two-star chains.
    std::optional<int> shared() const { return shared_; }

    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const Vertex& vertex(VertexId id) const { return vertices_.at(id); }
    const Edge& edge(EdgeId id) const { return edges_.at(id); }

    std::size_t state_count() const { return 2 * edges_.size(); }
    DirectedEdgeState state(StateIndex index) const;
    std::optional<StateIndex> state_index(VertexId from, VertexId to) const;
    StateIndex reverse(StateIndex index) const;
    EdgeId edge_of(StateIndex index) const;
    bool is_outgoing(StateIndex index) const;

    StateIndex outgoing_state(EdgeId e) const;
    StateIndex ingoing_state(EdgeId e) const;

    VertexId center(int star) const { return static_cast<VertexId>(star); }
    VertexId start_vertex() const { return start_; }
    VertexId end_vertex() const { return end_; }
    std::optional<VertexId> find_vertex(const VertexLabel& label) const;

    /// Star-1 <-> star-3 relabelling (B_{1j} <-> B_{3j}, A_1 <-> A_3) as a
    /// permutation of state indices. Three-star chains only.
    std::vector<StateIndex> mirror_permutation() const;

private:
    StarChainGraph() = default;
    void assemble(std::vector<std::vector<VertexLabel>> star_outer, const VertexLabel& start,
                  const VertexLabel& end);

    ChainFamily family_ = ChainFamily::TwoStar;
    int prongs_ = 0;
    std::optional<int> shared_;
    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
    std::map<VertexLabel, VertexId> by_label_;
    VertexId start_ = 0;
    VertexId end_ = 0;
};

/// Edges lying on some START -> END path: those incident to START, END or a
/// shared vertex. Sorted by edge id.
std::vector<EdgeId> path_edges(const StarChainGraph& graph);

/// Per-state mask (1 on both directions of every path edge).
std::vector<char> path_state_mask(const StarChainGraph& graph);

}  // namespace starwalk
