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

// Command-line front end: simulate, experiment, spectrum, ratio-curve, sweep, scaling.
//
// Exit codes: 0 success, 2 invalid parameters, 3 numeric-contract violation.

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "starwalk/errors.hpp"
#include "starwalk/experiments.hpp"
#include "starwalk/reduced.hpp"
#include "starwalk/report_io.hpp"
#include "starwalk/spectral.hpp"
#include "starwalk/walk.hpp"

namespace {

using namespace starwalk;

constexpr int kExitInvalid = 2;
constexpr int kExitNumeric = 3;

ChainFamily family_of(int stars) {
    if (stars == 2) {
        return ChainFamily::TwoStar;
    }
    if (stars == 3) {
        return ChainFamily::ThreeStar;
    }
    throw InvalidParameter("--stars must be 2 or 3");
}

void emit(const std::string& path, const std::function<void(std::ostream&)>& write) {
    if (path == "-") {
        write(std::cout);
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open " + path + " for writing");
    }
    write(out);
}

void emit_json(const std::string& path, const Json& j) {
    emit(path, [&](std::ostream& os) { os << j.dump(2) << '\n'; });
}

Json chain_parameters(int stars, int prongs, int shared) {
    Json p{{"stars", stars}, {"prongs", prongs}};
    if (stars == 3) {
        p["shared"] = shared;
    }
    return p;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Scattering quantum walks on chains of star graphs"};
    app.set_version_flag("--version", std::string("starwalk ") + STARWALK_VERSION);
    app.require_subcommand(1);

    int stars = 3;
    int prongs = 0;
    int shared = 3;
    int steps = 0;
    int max_steps = 0;
    int jobs = 1;
    std::string out = "-";
    std::string shared_range;
    std::vector<int> prongs_list;
    std::vector<int> shared_list;

    auto* sim = app.add_subcommand("simulate", "Evolve the initial state and dump the state");
    sim->add_option("--stars", stars, "2 or 3")->required();
    sim->add_option("--prongs", prongs, "prongs per star (N)")->required();
    sim->add_option("--shared", shared, "shared-vertex parameter m (three stars)");
    sim->add_option("--steps", steps, "steps of U")->required()->check(CLI::NonNegativeNumber);
    sim->add_option("--out", out, "output JSON file, '-' for stdout");

    auto* exp = app.add_subcommand("experiment", "Path-probability experiment report");
    exp->add_option("--stars", stars, "2 or 3")->required();
    exp->add_option("--prongs", prongs, "prongs per star (N)")->required();
    exp->add_option("--shared", shared, "shared-vertex parameter m (three stars)");
    exp->add_option("--max-steps", max_steps, "even step cap (default 2x predicted)");
    exp->add_option("--out", out, "output JSON file, '-' for stdout");

    auto* spectrum_cmd = app.add_subcommand("spectrum", "Exact vs asymptotic spectrum of the 5x5 model");
    spectrum_cmd->add_option("--prongs", prongs, "prongs per star (N)")->required();
    spectrum_cmd->add_option("--shared", shared, "shared-vertex parameter m")->required();
    spectrum_cmd->add_option("--out", out, "output JSON file, '-' for stdout");

    auto* ratio = app.add_subcommand("ratio-curve", "r_plus = P(psi3)/P(psi2) against m");
    ratio->add_option("--prongs", prongs, "prongs per star (N)")->required();
    ratio->add_option("--shared-range", shared_range, "inclusive range a:b")->required();
    ratio->add_option("--out", out, "output CSV file, '-' for stdout");

    auto* swp = app.add_subcommand("sweep", "Experiment reports over a parameter grid");
    swp->add_option("--stars", stars, "2 or 3")->required();
    swp->add_option("--prongs-list", prongs_list, "prong counts")->required()->delimiter(',');
    swp->add_option("--shared-list", shared_list, "shared-vertex counts")->delimiter(',');
    swp->add_option("--jobs", jobs, "concurrent configurations")->check(CLI::PositiveNumber);
    swp->add_option("--out", out, "output CSV file, '-' for stdout");

    auto* scl = app.add_subcommand("scaling", "Fit the measurement-step exponent against N");
    scl->add_option("--stars", stars, "2 or 3")->required();
    scl->add_option("--prongs-list", prongs_list, "prong counts")->required()->delimiter(',');
    scl->add_option("--shared", shared, "shared-vertex parameter m (three stars)");
    scl->add_option("--out", out, "output JSON file, '-' for stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInvalid;
    }

    try {
        if (sim->parsed()) {
            const StarChainGraph graph = make_graph(family_of(stars), prongs, shared);
            const StateVector state =
                evolve(graph, initial_state(graph), static_cast<std::size_t>(steps));
            ProbabilityReading reading = measure(graph, state);
            if (graph.family() == ChainFamily::ThreeStar && steps % 2 == 0) {
                measure_grouped(three_star_basis(graph), state, reading);
            }
            Json params = chain_parameters(stars, prongs, shared);
            params["steps"] = steps;
            Json j{{"metadata", metadata("simulate", params)}};
            j["result"] = state_dump(graph, state, reading);
            emit_json(out, j);
        } else if (exp->parsed()) {
            ExperimentConfig cfg{family_of(stars), prongs, shared, std::nullopt};
            if (exp->count("--max-steps") > 0) {
                cfg.max_steps = max_steps;
            }
            const auto rep = run_path_experiment(cfg);
            Json params = chain_parameters(stars, prongs, shared);
            params["max_steps"] = rep.max_steps;
            emit_json(out, {{"metadata", metadata("experiment", params)}, {"report", to_json(rep)}});
        } else if (spectrum_cmd->parsed()) {
            const auto model = derive_reduced_matrix(StarChainGraph::three_star(prongs, shared));
            const auto rep = exact_spectrum(model);
            Json j{{"metadata", metadata("spectrum", chain_parameters(3, prongs, shared))}};
            j["invariance_residual"] = model.invariance_residual;
            j["report"] = to_json(rep);
            emit_json(out, j);
        } else if (ratio->parsed()) {
            int a = 0, b = 0;
            char colon = 0;
            std::istringstream in(shared_range);
            if (!(in >> a >> colon >> b) || colon != ':' || !in.eof()) {
                throw InvalidParameter("--shared-range must look like a:b");
            }
            const auto points = ratio_curve(prongs, a, b);
            emit(out, [&](std::ostream& os) { write_ratio_csv(os, prongs, points); });
        } else if (swp->parsed()) {
            SweepConfig cfg{family_of(stars), prongs_list, shared_list, jobs};
            const auto rows = sweep(cfg);
            emit(out, [&](std::ostream& os) { write_sweep_csv(os, cfg, rows); });
        } else if (scl->parsed()) {
            const auto res = scaling_fit(family_of(stars), prongs_list, shared);
            Json params{{"stars", stars}, {"prongs_list", prongs_list}};
            if (stars == 3) {
                params["shared"] = shared;
            }
            emit_json(out, {{"metadata", metadata("scaling", params)}, {"result", to_json(res)}});
        }
    } catch (const InvalidParameter& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const InsufficientData& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const NumericContractViolation& e) {
        std::cerr << "numeric contract violation: " << e.what() << '\n';
        return kExitNumeric;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
