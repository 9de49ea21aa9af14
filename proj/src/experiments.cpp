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

#include "starwalk/experiments.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <numbers>
#include <set>

#include "starwalk/errors.hpp"
#include "starwalk/reduced.hpp"
#include "starwalk/walk.hpp"

namespace starwalk {

double predicted_measurement_time(const StarChainGraph& graph) {
    const double t = scatter_coefficients(graph.prongs()).t;
    if (graph.family() == ChainFamily::TwoStar) {
        const double gamma = t * std::sqrt(3.0 * (graph.prongs() - 3.0));
        return std::numbers::pi / gamma;
    }
    const double gp = gamma_pm(*graph.shared()).plus;
    return 2.0 * std::numbers::pi / std::sqrt(2.0 * gp * t);
}

int round_to_even(double steps) {
    const double half = steps / 2.0;
    const double lower = std::floor(half);
    return 2 * static_cast<int>(half - lower > 0.5 ? lower + 1.0 : lower);
}

int predicted_measurement_step(const StarChainGraph& graph) {
    return round_to_even(predicted_measurement_time(graph));
}

StarChainGraph make_graph(ChainFamily family, int prongs, int shared) {
    return family == ChainFamily::TwoStar ? StarChainGraph::two_star(prongs)
                                          : StarChainGraph::three_star(prongs, shared);
}

namespace {

double masked_probability(const StateVector& state, const std::vector<char>& mask) {
    double p = 0.0;
    for (std::size_t i = 0; i < state.size(); ++i) {
        if (mask[i]) {
            p += std::norm(state[i]);
        }
    }
    return p;
}

// Basis vectors lying on path edges: psi3, psi4 (two-star); psi2..psi4 (three-star).
double reduced_path_probability(ChainFamily family, const Eigen::VectorXcd& c) {
    if (family == ChainFamily::TwoStar) {
        return std::norm(c[2]) + std::norm(c[3]);
    }
    return std::norm(c[1]) + std::norm(c[2]) + std::norm(c[3]);
}

}  // namespace

ExperimentReport run_path_experiment(const ExperimentConfig& config) {
    const auto started = std::chrono::steady_clock::now();
    const StarChainGraph graph = make_graph(config.family, config.prongs, config.shared);

    ExperimentReport rep;
    rep.config = config;
    rep.predicted_time = predicted_measurement_time(graph);
    rep.predicted_step = predicted_measurement_step(graph);
    rep.max_steps = config.max_steps.value_or(2 * rep.predicted_step);
    if (rep.max_steps % 2 != 0 || rep.max_steps < 2 * rep.predicted_step) {
        throw InvalidParameter("max_steps must be even and at least " +
                               std::to_string(2 * rep.predicted_step));
    }

    const Walker walker(graph);
    const ReducedBasis basis = reduced_basis(graph);
    const auto mask = path_state_mask(graph);
    const StateVector start = initial_state(graph);

    StateVector state = start;
    for (int s = 0; s <= rep.max_steps; s += 2) {
        rep.path_series.push_back(masked_probability(state, mask));
        if (s == rep.predicted_step) {
            rep.path_probability_at_predicted = rep.path_series.back();
            if (graph.family() == ChainFamily::ThreeStar) {
                ProbabilityReading reading = measure(graph, state);
                measure_grouped(basis, state, reading);
                rep.grouped_at_predicted = reading.grouped;
                rep.r_plus = (*reading.grouped)[1] / (*reading.grouped)[0];
            }
        }
        if (s < rep.max_steps) {
            state = walker.evolve(state, 2);
        }
    }

    const auto window = static_cast<std::size_t>(std::floor(1.5 * rep.predicted_step) / 2) + 1;
    const auto last = rep.path_series.begin() +
                      static_cast<std::ptrdiff_t>(std::min(window, rep.path_series.size()));
    const auto best = std::max_element(rep.path_series.begin(), last);
    rep.observed_step = 2 * static_cast<int>(best - rep.path_series.begin());
    rep.max_path_probability = *best;

    const ReducedModel model = derive_reduced_matrix(graph, basis);
    const Projection p0 = project(basis, start);
    const Eigen::VectorXcd at_time = evolve_fractional(model, p0.coordinates, rep.predicted_time / 2);
    rep.path_probability_at_analytic_time = reduced_path_probability(graph.family(), at_time);
    if (graph.family() == ChainFamily::ThreeStar) {
        rep.p_plus = p_plus(model);
    }

    rep.runtime_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return rep;
}

std::vector<RatioPoint> ratio_curve(int prongs, int m_first, int m_last) {
    if (m_first > m_last) {
        throw InvalidParameter("empty shared-vertex range");
    }
    std::vector<RatioPoint> out;
    for (int m = m_first; m <= m_last; ++m) {
        const auto rep = run_path_experiment({ChainFamily::ThreeStar, prongs, m, std::nullopt});
        const auto& g = *rep.grouped_at_predicted;
        out.push_back({m, *rep.r_plus, g[0], g[1], g[2]});
    }
    return out;
}

LinearFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2) {
        throw InsufficientData("line fit needs at least two paired points");
    }
    const double n = static_cast<double>(x.size());
    double sx = 0.0, sy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
    }
    const double mx = sx / n, my = sy / n;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
        syy += (y[i] - my) * (y[i] - my);
    }
    if (sxx == 0.0) {
        throw InsufficientData("line fit needs at least two distinct abscissae");
    }
    LinearFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    fit.r_squared = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
    return fit;
}

LinearFit fit_loglog(const std::vector<double>& prongs, const std::vector<double>& steps) {
    if (std::set<double>(steps.begin(), steps.end()).size() < 3) {
        throw InsufficientData("scaling fit needs at least 3 distinct optimal steps");
    }
    std::vector<double> lx, ly;
    for (std::size_t i = 0; i < prongs.size(); ++i) {
        if (!(prongs[i] > 0.0) || !(steps[i] > 0.0)) {
            throw InsufficientData("log-log fit needs positive data");
        }
        lx.push_back(std::log(prongs[i]));
        ly.push_back(std::log(steps[i]));
    }
    return fit_line(lx, ly);
}

ScalingResult scaling_fit(ChainFamily family, const std::vector<int>& prongs, int shared) {
    if (std::set<int>(prongs.begin(), prongs.end()).size() < 4) {
        throw InvalidParameter("scaling fit needs at least four distinct prong counts");
    }
    ScalingResult res;
    res.family = family;
    if (family == ChainFamily::ThreeStar) {
        res.shared = shared;
    }
    std::vector<double> x, y;
    for (int n : prongs) {
        const auto rep = run_path_experiment({family, n, shared, std::nullopt});
        res.prongs.push_back(n);
        res.predicted_steps.push_back(rep.predicted_step);
        res.observed_steps.push_back(rep.observed_step);
        x.push_back(n);
        y.push_back(rep.observed_step);
    }
    res.fit = fit_loglog(x, y);
    return res;
}

std::vector<SweepRow> sweep(const SweepConfig& config) {
    const std::set<int> ns(config.prongs.begin(), config.prongs.end());
    std::set<int> ms(config.shared.begin(), config.shared.end());
    if (ns.empty() || (config.family == ChainFamily::ThreeStar && ms.empty())) {
        throw InvalidParameter("sweep needs at least one prong count and one shared count");
    }
    if (config.jobs < 1) {
        throw InvalidParameter("sweep needs jobs >= 1");
    }
    std::vector<SweepRow> rows;
    for (int n : ns) {
        if (config.family == ChainFamily::TwoStar) {
            rows.push_back({config.family, n, std::nullopt, std::nullopt, {}});
            continue;
        }
        for (int m : ms) {
            rows.push_back({config.family, n, m, std::nullopt, {}});
        }
    }

    const auto count = static_cast<std::ptrdiff_t>(rows.size());
#pragma omp parallel for schedule(dynamic) num_threads(config.jobs)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        auto& row = rows[static_cast<std::size_t>(i)];
        try {
            row.report = run_path_experiment({row.family, row.prongs, row.shared.value_or(3),
                                              std::nullopt});
        } catch (const std::exception& e) {
            row.error = e.what();
        }
    }
    return rows;
}

std::string format_number(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 12);
    return std::string(buf, res.ptr);
}

namespace {

std::string csv_text(std::string s) {
    for (char& c : s) {
        if (c == ',' || c == '\n' || c == '\r' || c == '"') {
            c = c == ',' ? ';' : ' ';
        }
    }
    return s;
}

template <typename T>
std::string join(const T& values) {
    std::string out;
    for (const auto& v : values) {
        out += (out.empty() ? "" : " ") + std::to_string(v);
    }
    return out;
}

}  // namespace

void write_sweep_csv(std::ostream& os, const SweepConfig& config, const std::vector<SweepRow>& rows) {
    os << "# tool: starwalk " << STARWALK_VERSION << '\n'
       << "# command: sweep\n"
       << "# stars: " << (config.family == ChainFamily::TwoStar ? 2 : 3) << '\n'
       << "# prongs: " << join(std::set<int>(config.prongs.begin(), config.prongs.end())) << '\n'
       << "# shared: " << join(std::set<int>(config.shared.begin(), config.shared.end())) << '\n'
       << "# invariance_tolerance: " << format_number(kInvarianceTolerance) << '\n'
       << "# solver_agreement: " << format_number(kSolverAgreement) << '\n'
       << "# observed_window: 1.5 x predicted_step; r_plus at predicted_step\n";
    for (std::size_t i = 0; i < kSweepColumns.size(); ++i) {
        os << (i ? "," : "") << kSweepColumns[i];
    }
    os << '\n';
    for (const auto& row : rows) {
        os << (row.family == ChainFamily::TwoStar ? 2 : 3) << ',' << row.prongs << ','
           << (row.shared ? std::to_string(*row.shared) : "") << ',';
        if (row.report) {
            const auto& r = *row.report;
            os << r.predicted_step << ',' << r.observed_step << ','
               << format_number(r.path_probability_at_predicted) << ','
               << format_number(r.max_path_probability) << ','
               << format_number(r.path_probability_at_analytic_time) << ','
               << (r.p_plus ? format_number(r.p_plus->operational) : "") << ','
               << (r.r_plus ? format_number(*r.r_plus) : "") << ',';
        } else {
            os << ",,,,,,,";
        }
        os << csv_text(row.error) << '\n';
    }
}

void write_ratio_csv(std::ostream& os, int prongs, const std::vector<RatioPoint>& points) {
    os << "# tool: starwalk " << STARWALK_VERSION << '\n'
       << "# command: ratio-curve\n"
       << "# prongs: " << prongs << '\n';
    if (!points.empty()) {
        os << "# shared_range: " << points.front().shared << ':' << points.back().shared << '\n';
    }
    os << "# invariance_tolerance: " << format_number(kInvarianceTolerance) << '\n'
       << "# r_plus measured at the predicted measurement step\n"
       << "shared,r_plus,p_psi2,p_psi3,p_psi4\n";
    for (const auto& p : points) {
        os << p.shared << ',' << format_number(p.r_plus) << ',' << format_number(p.p2) << ','
           << format_number(p.p3) << ',' << format_number(p.p4) << '\n';
    }
}

}  // namespace starwalk
