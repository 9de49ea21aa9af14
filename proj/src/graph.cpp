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

#include "starwalk/graph.hpp"

#include <algorithm>
#include <string>

#include "starwalk/errors.hpp"

namespace starwalk {

const char* to_string(VertexKind kind) {
    switch (kind) {
        case VertexKind::ReflectPlus: return "reflect_plus";
        case VertexKind::ReflectMinus: return "reflect_minus";
        case VertexKind::PassThrough: return "pass_through";
        case VertexKind::Scatter: return "scatter";
    }
    return "unknown";
}

const char* to_string(ChainFamily family) {
    return family == ChainFamily::TwoStar ? "two_star" : "three_star";
}

std::string to_string(const VertexLabel& label) {
    if (label.letter == 'A') {
        return "A" + std::to_string(label.group);
    }
    return "B" + std::to_string(label.group) + "," + std::to_string(label.index);
}

ScatterCoefficients scatter_coefficients(int degree) {
    if (degree < 3) {
        throw InvalidParameter("scattering center needs degree >= 3, got " +
                               std::to_string(degree));
    }
    const double n = degree;
    return {degree, (n - 2.0) / n, 2.0 / n};
}

namespace {

VertexLabel outer(int group, int index) { return {'B', group, index}; }

}  // namespace

StarChainGraph StarChainGraph::two_star(int prongs) {
    if (prongs < 4) {
        throw InvalidParameter("two-star chain needs N >= 4, got N=" + std::to_string(prongs));
    }
    const int n = prongs;
    std::vector<std::vector<VertexLabel>> stars(2);
    for (int j = 1; j <= n; ++j) {
        stars[0].push_back(outer(1, j));
    }
    stars[1] = {outer(2, 1), outer(1, 2), outer(1, 3)};
    for (int j = 4; j <= n; ++j) {
        stars[1].push_back(outer(2, j));
    }

    StarChainGraph g;
    g.family_ = ChainFamily::TwoStar;
    g.prongs_ = n;
    g.assemble(std::move(stars), outer(1, 1), outer(2, 1));
    return g;
}

StarChainGraph StarChainGraph::three_star(int prongs, int shared) {
    const int n = prongs;
    const int m = shared;
    if (m < 2 || n <= 2 * m - 2) {
        throw InvalidParameter("three-star chain needs m >= 2 and N > 2m-2, got N=" +
                               std::to_string(n) + " m=" + std::to_string(m));
    }
    std::vector<std::vector<VertexLabel>> stars(3);
    for (int j = 1; j <= n; ++j) {
        stars[0].push_back(outer(1, j));
        stars[2].push_back(outer(3, j));
    }
    for (int j = 2; j <= m; ++j) {
        stars[1].push_back(outer(1, j));
        stars[1].push_back(outer(3, j));
    }
    for (int j = 1; j <= n - 2 * m + 2; ++j) {
        stars[1].push_back(outer(2, j));
    }

    StarChainGraph g;
    g.family_ = ChainFamily::ThreeStar;
    g.prongs_ = n;
    g.shared_ = m;
    g.assemble(std::move(stars), outer(1, 1), outer(3, 1));
    return g;
}

void StarChainGraph::assemble(std::vector<std::vector<VertexLabel>> star_outer,
                              const VertexLabel& start, const VertexLabel& end) {
    const int stars = static_cast<int>(star_outer.size());
    for (int s = 0; s < stars; ++s) {
        const VertexLabel label{'A', s + 1, 0};
        by_label_.emplace(label, static_cast<VertexId>(vertices_.size()));
        vertices_.push_back({label, VertexKind::Scatter, {}});
    }
    for (int s = 0; s < stars; ++s) {
        auto& labels = star_outer[s];
        std::sort(labels.begin(), labels.end());
        for (const auto& label : labels) {
            auto [it, inserted] =
                by_label_.emplace(label, static_cast<VertexId>(vertices_.size()));
            if (inserted) {
                vertices_.push_back({label, VertexKind::ReflectPlus, {}});
            }
            const EdgeId e = edges_.size();
            edges_.push_back({center(s), it->second, s});
            vertices_[center(s)].edges.push_back(e);
            vertices_[it->second].edges.push_back(e);
        }
    }
    start_ = by_label_.at(start);
    end_ = by_label_.at(end);
    for (auto& v : vertices_) {
        if (v.label.letter == 'A') {
            continue;
        }
        if (v.edges.size() == 2) {
            v.kind = VertexKind::PassThrough;
        } else if (v.label == start || v.label == end) {
            v.kind = VertexKind::ReflectMinus;
        }
    }
}

DirectedEdgeState StarChainGraph::state(StateIndex index) const {
    const EdgeId e = edge_of(index);
    const Edge& ed = edges_[e];
    if (is_outgoing(index)) {
        return {ed.center, ed.outer, index};
    }
    return {ed.outer, ed.center, index};
}

EdgeId StarChainGraph::edge_of(StateIndex index) const {
    if (index >= state_count()) {
        throw std::out_of_range("state index " + std::to_string(index) + " out of range");
    }
    const auto n = static_cast<std::size_t>(prongs_);
    const std::size_t s = index / (2 * n);
    return s * n + index % n;
}

bool StarChainGraph::is_outgoing(StateIndex index) const {
    const auto n = static_cast<std::size_t>(prongs_);
    return index % (2 * n) < n;
}

StateIndex StarChainGraph::outgoing_state(EdgeId e) const {
    const auto n = static_cast<std::size_t>(prongs_);
    return (e / n) * 2 * n + e % n;
}

StateIndex StarChainGraph::ingoing_state(EdgeId e) const { return outgoing_state(e) + prongs_; }

StateIndex StarChainGraph::reverse(StateIndex index) const {
    const EdgeId e = edge_of(index);
    return is_outgoing(index) ? ingoing_state(e) : outgoing_state(e);
}

std::optional<StateIndex> StarChainGraph::state_index(VertexId from, VertexId to) const {
    if (from >= vertices_.size() || to >= vertices_.size()) {
        return std::nullopt;
    }
    const bool from_center = vertices_[from].kind == VertexKind::Scatter;
    const VertexId out = from_center ? to : from;
    const VertexId ctr = from_center ? from : to;
    for (EdgeId e : vertices_[out].edges) {
        if (edges_[e].center == ctr && edges_[e].outer == out) {
            return from_center ? outgoing_state(e) : ingoing_state(e);
        }
    }
    return std::nullopt;
}

std::optional<VertexId> StarChainGraph::find_vertex(const VertexLabel& label) const {
    auto it = by_label_.find(label);
    if (it == by_label_.end()) {
        return std::nullopt;
    }
    return it->second;
}

std::vector<StateIndex> StarChainGraph::mirror_permutation() const {
    if (family_ != ChainFamily::ThreeStar) {
        throw InvalidParameter("mirror permutation is defined for three-star chains only");
    }
    auto mirror = [this](VertexId id) {
        VertexLabel label = vertices_[id].label;
        if (label.group != 2) {
            label.group = 4 - label.group;
        }
        return by_label_.at(label);
    };
    std::vector<StateIndex> perm(state_count());
    for (StateIndex i = 0; i < perm.size(); ++i) {
        const auto st = state(i);
        perm[i] = *state_index(mirror(st.from), mirror(st.to));
    }
    return perm;
}

std::vector<EdgeId> path_edges(const StarChainGraph& graph) {
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < graph.edges().size(); ++e) {
        const Vertex& v = graph.vertex(graph.edge(e).outer);
        if (v.kind == VertexKind::ReflectMinus || v.kind == VertexKind::PassThrough) {
            out.push_back(e);
        }
    }
    return out;
}

std::vector<char> path_state_mask(const StarChainGraph& graph) {
    std::vector<char> mask(graph.state_count(), 0);
    for (EdgeId e : path_edges(graph)) {
        mask[graph.outgoing_state(e)] = 1;
        mask[graph.ingoing_state(e)] = 1;
    }
    return mask;
}

}  // namespace starwalk
