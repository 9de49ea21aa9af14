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

#include "starwalk/report_io.hpp"

#include "starwalk/reduced.hpp"

namespace starwalk {

namespace {

Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json config_json(const ExperimentConfig& c) {
    Json j;
    j["stars"] = c.family == ChainFamily::TwoStar ? 2 : 3;
    j["prongs"] = c.prongs;
    if (c.family == ChainFamily::ThreeStar) {
        j["shared"] = c.shared;
    }
    return j;
}

}  // namespace

Json metadata(const std::string& command, Json parameters) {
    Json j;
    j["tool"] = "starwalk";
    j["version"] = STARWALK_VERSION;
    j["command"] = command;
    j["parameters"] = std::move(parameters);
    j["tolerances"] = {{"norm", 1e-12},
                       {"invariance_residual", kInvarianceTolerance},
                       {"solver_agreement", kSolverAgreement}};
    return j;
}

Json to_json(const ExperimentReport& r) {
    Json j;
    j["config"] = config_json(r.config);
    j["max_steps"] = r.max_steps;
    j["predicted_time"] = r.predicted_time;
    j["predicted_step"] = r.predicted_step;
    j["observed_step"] = r.observed_step;
    j["observed_window"] = "even steps up to 1.5 x predicted_step";
    j["max_path_probability"] = r.max_path_probability;
    j["path_probability_at_predicted"] = r.path_probability_at_predicted;
    j["path_probability_at_analytic_time"] = r.path_probability_at_analytic_time;
    if (r.p_plus) {
        j["p_plus"] = {{"operational", r.p_plus->operational},
                       {"asymptotic", r.p_plus->asymptotic}};
    }
    if (r.r_plus) {
        j["r_plus"] = *r.r_plus;
        j["r_plus_step"] = "predicted_step";
        const auto& g = *r.grouped_at_predicted;
        j["grouped_at_predicted"] = {{"psi2", g[0]}, {"psi3", g[1]}, {"psi4", g[2]}};
    }
    Json series = Json::array();
    for (std::size_t k = 0; k < r.path_series.size(); ++k) {
        series.push_back({{"step", 2 * k}, {"path_probability", r.path_series[k]}});
    }
    j["path_series"] = std::move(series);
    j["runtime_seconds"] = r.runtime_seconds;
    return j;
}

Json to_json(const SpectralReport& r) {
    Json j;
    j["family"] = to_string(r.family);
    j["prongs"] = r.prongs;
    if (r.shared) {
        j["shared"] = *r.shared;
    }
    j["t"] = r.t;
    j["solver_agreement"] = r.solver_agreement;
    if (r.gamma) {
        j["gamma"] = *r.gamma;
    }
    if (r.gammas) {
        j["gamma_plus"] = r.gammas->plus;
        j["gamma_minus"] = r.gammas->minus;
    }
    Json table = Json::array();
    for (const auto& e : r.eigenpairs) {
        Json row;
        row["branch"] = e.branch;
        row["exact"] = complex_json(e.exact);
        row["closed_form"] = complex_json(e.closed_form);
        row["asymptotic"] = complex_json(e.predicted);
        row["exact_phase"] = std::arg(e.exact);
        row["asymptotic_phase"] = std::arg(e.predicted);
        row["phase_error"] = e.phase_error;
        Json vec = Json::array();
        for (Eigen::Index i = 0; i < e.vector.size(); ++i) {
            vec.push_back(complex_json(e.vector[i]));
        }
        row["eigenvector"] = std::move(vec);
        table.push_back(std::move(row));
    }
    j["eigenpairs"] = std::move(table);
    if (r.asymptotic) {
        auto vec = [](const AsymptoticEigenvector& v) {
            Json x = Json::array();
            for (const auto& c : v.x) {
                x.push_back(complex_json(c));
            }
            return Json{{"x", x}, {"w", v.w}};
        };
        j["asymptotic_eigenvectors"] = {{"u++", vec(r.asymptotic->plus_plus)},
                                        {"u+-", vec(r.asymptotic->plus_minus)},
                                        {"u-+", vec(r.asymptotic->minus_plus)},
                                        {"u--", vec(r.asymptotic->minus_minus)}};
    }
    if (r.p_plus) {
        j["p_plus"] = {{"operational", r.p_plus->operational},
                       {"asymptotic", r.p_plus->asymptotic}};
    }
    return j;
}

Json to_json(const ScalingResult& r) {
    Json j;
    j["family"] = to_string(r.family);
    if (r.shared) {
        j["shared"] = *r.shared;
    }
    Json pts = Json::array();
    for (std::size_t i = 0; i < r.prongs.size(); ++i) {
        pts.push_back({{"prongs", r.prongs[i]},
                       {"predicted_step", r.predicted_steps[i]},
                       {"observed_step", r.observed_steps[i]}});
    }
    j["points"] = std::move(pts);
    j["exponent"] = r.fit.slope;
    j["log_intercept"] = r.fit.intercept;
    j["r_squared"] = r.fit.r_squared;
    return j;
}

Json state_dump(const StarChainGraph& graph, const StateVector& state,
                const ProbabilityReading& reading) {
    Json j;
    j["norm"] = state.norm();
    j["path_probability"] = reading.path_probability;
    j["total_probability"] = reading.total;
    if (reading.grouped) {
        j["grouped"] = {{"psi2", (*reading.grouped)[0]},
                        {"psi3", (*reading.grouped)[1]},
                        {"psi4", (*reading.grouped)[2]}};
    }
    Json edges = Json::array();
    for (EdgeId e = 0; e < graph.edges().size(); ++e) {
        const Edge& ed = graph.edge(e);
        edges.push_back({{"center", to_string(graph.vertex(ed.center).label)},
                         {"outer", to_string(graph.vertex(ed.outer).label)},
                         {"probability", reading.edge_probabilities[e]},
                         {"outgoing", complex_json(state[graph.outgoing_state(e)])},
                         {"ingoing", complex_json(state[graph.ingoing_state(e)])}});
    }
    j["edges"] = std::move(edges);
    return j;
}

}  // namespace starwalk
