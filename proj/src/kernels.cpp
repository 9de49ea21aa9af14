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

#include "starwalk/kernels.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>

#include "starwalk/errors.hpp"

namespace starwalk {

namespace {

constexpr std::ptrdiff_t kSumChunk = 1024;

void check_spans(const StepOperator& op, std::span<const Amplitude> in, std::span<Amplitude> out) {
    if (in.size() != op.dimension() || out.size() != op.dimension()) {
        throw std::invalid_argument("state dimension does not match the step operator");
    }
}

}  // namespace

StepOperator::StepOperator(const StarChainGraph& graph)
    : dim_(graph.state_count()),
      prongs_(static_cast<std::size_t>(graph.prongs())),
      route_target_(graph.state_count(), 0),
      route_phase_(graph.state_count(), 0.0) {
    for (int s = 0; s < graph.star_count(); ++s) {
        coefficients_.push_back(
            scatter_coefficients(static_cast<int>(graph.vertex(graph.center(s)).edges.size())));
    }
    for (EdgeId e = 0; e < graph.edges().size(); ++e) {
        const Edge& ed = graph.edge(e);
        const Vertex& v = graph.vertex(ed.outer);
        const StateIndex from = graph.outgoing_state(e);
        switch (v.kind) {
            case VertexKind::ReflectPlus:
                route_target_[from] = graph.ingoing_state(e);
                route_phase_[from] = 1.0;
                break;
            case VertexKind::ReflectMinus:
                route_target_[from] = graph.ingoing_state(e);
                route_phase_[from] = -1.0;
                break;
            case VertexKind::PassThrough: {
                const EdgeId other = v.edges[0] == e ? v.edges[1] : v.edges[0];
                route_target_[from] = graph.ingoing_state(other);
                route_phase_[from] = 1.0;
                break;
            }
            case VertexKind::Scatter:
                throw NumericContractViolation("outer vertex marked as scattering center");
        }
    }
}

Amplitude chunked_sum(std::span<const Amplitude> values) {
    const auto n = static_cast<std::ptrdiff_t>(values.size());
    const std::ptrdiff_t chunks = (n + kSumChunk - 1) / kSumChunk;
    if (chunks <= 1) {
        Amplitude s{};
        for (const auto& v : values) {
            s += v;
        }
        return s;
    }
    std::vector<Amplitude> partial(static_cast<std::size_t>(chunks));
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t c = 0; c < chunks; ++c) {
        const std::ptrdiff_t lo = c * kSumChunk;
        const std::ptrdiff_t hi = std::min(n, lo + kSumChunk);
        Amplitude s{};
        for (std::ptrdiff_t i = lo; i < hi; ++i) {
            s += values[static_cast<std::size_t>(i)];
        }
        partial[static_cast<std::size_t>(c)] = s;
    }
    Amplitude total{};
    for (const auto& p : partial) {
        total += p;
    }
    return total;
}

void apply_step(const StepOperator& op, std::span<const Amplitude> in, std::span<Amplitude> out) {
    check_spans(op, in, out);
    const auto n = static_cast<std::ptrdiff_t>(op.prongs());
    for (int s = 0; s < op.star_count(); ++s) {
        const std::ptrdiff_t base = 2 * n * s;
        const auto& sc = op.coefficients(s);
        const Amplitude total = chunked_sum(in.subspan(static_cast<std::size_t>(base + n),
                                                       static_cast<std::size_t>(n)));
        const Amplitude emitted = sc.t * total;
        const double diag = sc.r + sc.t;
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t p = 0; p < n; ++p) {
            const auto o = static_cast<std::size_t>(base + p);
            out[o] = emitted - diag * in[o + static_cast<std::size_t>(n)];
            out[op.route_target(o)] = op.route_phase(o) * in[o];
        }
    }
}

void apply_step_adjoint(const StepOperator& op, std::span<const Amplitude> in,
                        std::span<Amplitude> out) {
    check_spans(op, in, out);
    const auto n = static_cast<std::ptrdiff_t>(op.prongs());
    for (int s = 0; s < op.star_count(); ++s) {
        const std::ptrdiff_t base = 2 * n * s;
        const auto& sc = op.coefficients(s);
        const Amplitude total =
            chunked_sum(in.subspan(static_cast<std::size_t>(base), static_cast<std::size_t>(n)));
        const Amplitude emitted = sc.t * total;
        const double diag = sc.r + sc.t;
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t p = 0; p < n; ++p) {
            const auto o = static_cast<std::size_t>(base + p);
            out[o + static_cast<std::size_t>(n)] = emitted - diag * in[o];
            out[o] = op.route_phase(o) * in[op.route_target(o)];
        }
    }
}

void apply_step_reference(const StarChainGraph& graph, std::span<const Amplitude> in,
                          std::span<Amplitude> out) {
    if (in.size() != graph.state_count() || out.size() != graph.state_count()) {
        throw std::invalid_argument("state dimension does not match the graph");
    }
    std::fill(out.begin(), out.end(), Amplitude{});
    const auto& vertices = graph.vertices();
    for (VertexId j = 0; j < vertices.size(); ++j) {
        const Vertex& v = vertices[j];
        for (EdgeId e_in : v.edges) {
            const Edge& ein = graph.edge(e_in);
            const VertexId k = ein.center == j ? ein.outer : ein.center;
            const Amplitude a = in[*graph.state_index(k, j)];
            switch (v.kind) {
                case VertexKind::Scatter: {
                    const auto sc = scatter_coefficients(static_cast<int>(v.edges.size()));
                    for (EdgeId e_out : v.edges) {
                        const Edge& eo = graph.edge(e_out);
                        const VertexId l = eo.center == j ? eo.outer : eo.center;
                        out[*graph.state_index(j, l)] += (l == k ? -sc.r : sc.t) * a;
                    }
                    break;
                }
                case VertexKind::ReflectPlus:
                    out[*graph.state_index(j, k)] += a;
                    break;
                case VertexKind::ReflectMinus:
                    out[*graph.state_index(j, k)] -= a;
                    break;
                case VertexKind::PassThrough: {
                    const EdgeId e_other = v.edges[0] == e_in ? v.edges[1] : v.edges[0];
                    const Edge& eo = graph.edge(e_other);
                    const VertexId l = eo.center == j ? eo.outer : eo.center;
                    out[*graph.state_index(j, l)] += a;
                    break;
                }
            }
        }
    }
}

}  // namespace starwalk
