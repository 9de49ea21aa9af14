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

#include <array>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "starwalk/graph.hpp"
#include "starwalk/spectral.hpp"

namespace starwalk {

/// Analytic measurement time in steps of U: pi/gamma for two stars,
/// 2 pi / sqrt(2 gamma_plus t) for three.
double predicted_measurement_time(const StarChainGraph& graph);

/// Nearest even integer; ties go down.
int round_to_even(double steps);

/// round_to_even(predicted_measurement_time(graph)).
int predicted_measurement_step(const StarChainGraph& graph);

StarChainGraph make_graph(ChainFamily family, int prongs, int shared);

struct ExperimentConfig {
    ChainFamily family = ChainFamily::ThreeStar;
    int prongs = 0;
    int shared = 3;  ///< ignored for two-star chains
    /// Even cap on recorded steps, at least twice the predicted step.
    /// Defaults to exactly twice the predicted step.
    std::optional<int> max_steps;
};

struct ExperimentReport {
    ExperimentConfig config;
    int max_steps = 0;
    double predicted_time = 0.0;
    int predicted_step = 0;
    /// Argmax of the path probability over even steps up to 1.5x the
    /// predicted step; earliest step on ties.
    int observed_step = 0;
    double max_path_probability = 0.0;
    double path_probability_at_predicted = 0.0;
    /// Exact reduced dynamics evaluated at the (fractional) analytic time.
    double path_probability_at_analytic_time = 0.0;
    std::vector<double> path_series;  ///< entry k is step 2k
    std::optional<PPlus> p_plus;
    /// P(psi3)/P(psi2) at the predicted step.
    std::optional<double> r_plus;
    std::optional<std::array<double, 3>> grouped_at_predicted;
    double runtime_seconds = 0.0;
};

ExperimentReport run_path_experiment(const ExperimentConfig& config);

struct RatioPoint {
    int shared = 0;
    double r_plus = 0.0;
    double p2 = 0.0;
    double p3 = 0.0;
    double p4 = 0.0;
};

/// r_plus at the predicted step of each m in [m_first, m_last].
std::vector<RatioPoint> ratio_curve(int prongs, int m_first, int m_last);

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
};

/// Ordinary least squares y = slope x + intercept.
LinearFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

/// Least-squares slope of log(steps) against log(prongs). Throws
/// InsufficientData when fewer than 3 distinct step counts are given.
LinearFit fit_loglog(const std::vector<double>& prongs, const std::vector<double>& steps);

struct ScalingResult {
    ChainFamily family = ChainFamily::TwoStar;
    std::optional<int> shared;
    std::vector<int> prongs;
    std::vector<int> predicted_steps;
    std::vector<int> observed_steps;
    LinearFit fit;  ///< slope is the fitted exponent
};

/// Needs at least four prong counts.
ScalingResult scaling_fit(ChainFamily family, const std::vector<int>& prongs, int shared);

struct SweepConfig {
    ChainFamily family = ChainFamily::ThreeStar;
    std::vector<int> prongs;
    std::vector<int> shared;  ///< ignored for two-star chains
    int jobs = 1;
};

struct SweepRow {
    ChainFamily family = ChainFamily::ThreeStar;
    int prongs = 0;
    std::optional<int> shared;
    std::optional<ExperimentReport> report;
    std::string error;
};

/// One row per (N, m), sorted by N then m. Rows run concurrently on up to
/// `jobs` threads; a failing row records its error and the rest continue.
std::vector<SweepRow> sweep(const SweepConfig& config);

/// Column order of the sweep CSV.
inline constexpr std::array<const char*, 11> kSweepColumns{
    "stars",          "prongs",        "shared",
    "predicted_step", "observed_step", "path_probability_predicted",
    "max_path_probability", "path_probability_analytic", "p_plus",
    "r_plus",         "error"};

/// Writes `# key: value` metadata lines, the header and one line per row.
/// Numbers use 12 significant digits and '\n' line ends.
void write_sweep_csv(std::ostream& os, const SweepConfig& config, const std::vector<SweepRow>& rows);

/// Columns: shared, r_plus, p_psi2, p_psi3, p_psi4.
void write_ratio_csv(std::ostream& os, int prongs, const std::vector<RatioPoint>& points);

/// "%.12g" formatting, independent of the global locale.
std::string format_number(double value);

}  // namespace starwalk
