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

// One line per acceptance criterion; nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "starwalk/experiments.hpp"
#include "starwalk/reduced.hpp"
#include "starwalk/spectral.hpp"
#include "starwalk/walk.hpp"

using namespace starwalk;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

StateVector random_unit_state(std::size_t dim, std::mt19937_64& rng) {
    std::normal_distribution<double> nd;
    StateVector s(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        s[i] = {nd(rng), nd(rng)};
    }
    s *= 1.0 / s.norm();
    return s;
}

Outcome unitarity() {
    std::mt19937_64 rng(20260417);
    double worst = 0.0;
    for (int n : {5, 20, 100, 1000}) {
        for (const auto& g : {StarChainGraph::two_star(n), StarChainGraph::three_star(n, 3)}) {
            const Walker w(g);
            const StateVector s = w.evolve(random_unit_state(g.state_count(), rng), 1000);
            worst = std::max(worst, std::abs(s.norm() - 1.0));
        }
    }
    std::ostringstream d;
    d << "max |norm - 1| after 1000 steps = " << worst;
    return {worst <= 1e-10, d.str()};
}

Outcome reduction() {
    double worst = 0.0;
    for (const auto& g : {StarChainGraph::two_star(50), StarChainGraph::three_star(50, 3)}) {
        const auto model = derive_reduced_matrix(g);
        const Walker w(g);
        StateVector full = initial_state(g);
        Eigen::VectorXcd c = project(model.basis, full).coordinates;
        for (int k = 0; k < 200; ++k) {
            full = w.evolve(full, 2);
            c = model.matrix * c;
            worst = std::max(worst, (project(model.basis, full).coordinates - c).cwiseAbs().maxCoeff());
        }
    }
    std::ostringstream d;
    d << "max coordinate gap over 200 U^2 steps = " << worst;
    return {worst <= 1e-9, d.str()};
}

Outcome two_star_localization() {
    ExperimentConfig c;
    c.family = ChainFamily::TwoStar;
    c.prongs = 1000;
    const auto big = run_path_experiment(c);
    c.prongs = 100;
    const auto small = run_path_experiment(c);
    std::ostringstream d;
    d << "N=1000 step " << big.predicted_step << ": " << big.path_probability_at_predicted
      << "; N=100 step " << small.predicted_step << ": " << small.path_probability_at_predicted;
    return {big.path_probability_at_predicted >= 0.98 && small.path_probability_at_predicted >= 0.90,
            d.str()};
}

Outcome char_poly_match() {
    double coeff = 0.0;
    double root = 0.0;
    for (int n : {100, 1000}) {
        for (int m : {2, 3, 5}) {
            const auto model = derive_reduced_matrix(StarChainGraph::three_star(n, m));
            const auto c = characteristic_coefficients(model.matrix);
            const auto p = char_poly(m, model.t);
            for (std::size_t i = 0; i < 6; ++i) {
                coeff = std::max(coeff, std::abs(c[i] - p.coefficients[i]));
            }
            Complex v = 0.0;
            for (const Complex k : c) {
                v = v * -1.0 + k;
            }
            root = std::max(root, std::abs(v));
        }
    }
    std::ostringstream d;
    d << "max coefficient gap = " << coeff << ", max |p(-1)| = " << root;
    return {coeff <= 1e-9 && root <= 1e-12, d.str()};
}

Outcome asymptotics() {
    std::ostringstream d;
    bool ok = true;
    for (const std::string br : {"u++", "u-+"}) {
        std::vector<double> errs;
        for (int n : {250, 500, 1000, 2000}) {
            const auto rep = exact_spectrum(derive_reduced_matrix(StarChainGraph::three_star(n, 3)));
            for (const auto& e : rep.eigenpairs) {
                if (e.branch == br) {
                    errs.push_back(e.phase_error);
                }
            }
        }
        d << (br == "u++" ? "" : "; ") << br << " ratios";
        for (std::size_t i = 1; i < errs.size(); ++i) {
            const double r = errs[i - 1] / errs[i];
            ok = ok && r >= 1.5 && r <= 3.0;
            d << ' ' << r;
        }
    }
    return {ok, d.str()};
}

Outcome weight_and_localization() {
    const double p3 = p_plus(3).operational;
    const double p6 = p_plus(6).operational;
    const double p40 = p_plus(40).operational;
    ExperimentConfig c;
    c.family = ChainFamily::ThreeStar;
    c.prongs = 1000;
    c.shared = 3;
    const auto rep = run_path_experiment(c);
    std::ostringstream d;
    d << "p+(3)=" << p3 << " p+(6)=" << p6 << " p+(40)=" << p40
      << "; N=1000 m=3 path probability at 2n0=" << rep.predicted_time << ": "
      << rep.path_probability_at_analytic_time << ", at optimum step " << rep.observed_step << ": "
      << rep.max_path_probability << " (step " << rep.predicted_step
      << ": " << rep.path_probability_at_predicted << ", not gated)";
    const bool ok = std::abs(p3 - 0.97) <= 0.01 && std::abs(p6 - 0.93) <= 0.01 &&
                    std::abs(p40 - 0.89) <= 0.015 &&
                    std::abs(rep.path_probability_at_analytic_time - 0.98) <= 0.01 &&
                    std::abs(rep.max_path_probability - 0.98) <= 0.01;
    return {ok, d.str()};
}

Outcome ratio_figure() {
    const auto pts = ratio_curve(2000, 3, 12);
    bool increasing = true;
    std::vector<double> x, y;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        x.push_back(pts[i].shared);
        y.push_back(pts[i].r_plus);
        if (i > 0 && !(pts[i].r_plus > pts[i - 1].r_plus)) {
            increasing = false;
        }
    }
    const auto fit = fit_line(x, y);
    std::ostringstream d;
    d << "r+(3)=" << y.front() << " r+(12)=" << y.back() << " strictly increasing="
      << (increasing ? "yes" : "no") << " R^2=" << fit.r_squared;
    return {increasing && fit.r_squared >= 0.9, d.str()};
}

Outcome scaling() {
    const auto two = scaling_fit(ChainFamily::TwoStar, {100, 400, 1600, 6400}, 3);
    const auto three = scaling_fit(ChainFamily::ThreeStar, {250, 1000, 4000, 16000}, 3);
    std::ostringstream d;
    d << "two-star exponent " << two.fit.slope << ", three-star (m=3) exponent " << three.fit.slope;
    return {std::abs(two.fit.slope - 0.5) <= 0.05 && std::abs(three.fit.slope - 0.5) <= 0.07,
            d.str()};
}

Outcome determinism() {
    SweepConfig cfg;
    cfg.family = ChainFamily::ThreeStar;
    cfg.prongs = {400, 1000};
    cfg.shared = {2, 3, 6};
    auto text = [&](int jobs) {
        cfg.jobs = jobs;
        std::ostringstream os;
        write_sweep_csv(os, cfg, sweep(cfg));
        return os.str();
    };
    const std::string a = text(1);
    const std::string b = text(1);
    const std::string c = text(4);
    std::ostringstream d;
    d << a.size() << " bytes, repeat identical=" << (a == b ? "yes" : "no")
      << ", 4 jobs identical=" << (a == c ? "yes" : "no");
    return {a == b && a == c, d.str()};
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        double budget_seconds;  // <= 0 means no runtime bound
        std::function<Outcome()> run;
    };
    const Criterion criteria[] = {
        {"unitarity", 10.0, unitarity},
        {"reduction equivalence", 5.0, reduction},
        {"two-star localization", 1.0, two_star_localization},
        {"characteristic polynomial", 0.0, char_poly_match},
        {"eigenvalue asymptotics", 0.0, asymptotics},
        {"p_plus and three-star localization", 0.0, weight_and_localization},
        {"ratio curve", 30.0, ratio_figure},
        {"scaling exponent", 120.0, scaling},
        {"sweep determinism", 0.0, determinism},
    };
    int failures = 0;
    int index = 0;
    for (const auto& c : criteria) {
        ++index;
        const auto t0 = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool pass = out.pass;
        if (c.budget_seconds > 0 && secs > c.budget_seconds) {
            pass = false;
            out.detail += "; over runtime budget";
        }
        failures += pass ? 0 : 1;
        std::printf("%s %d %s: %s (%.3f s", pass ? "PASS" : "FAIL", index, c.name,
                    out.detail.c_str(), secs);
        if (c.budget_seconds > 0) {
            std::printf(", budget %.0f s", c.budget_seconds);
        }
        std::printf(")\n");
    }
    std::printf("%d/%d criteria passed\n", 9 - failures, 9);
    return failures == 0 ? 0 : 1;
}
