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

#include "starwalk/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "starwalk/errors.hpp"

namespace starwalk {

Complex CharPoly::operator()(Complex lambda) const {
    Complex acc{};
    for (double c : coefficients) {
        acc = acc * lambda + c;
    }
    return acc;
}

CharPoly char_poly(int m, double t) {
    if (m < 2 || !(t > 0.0) || t > 2.0 / 3.0) {
        throw InvalidParameter("char_poly needs m >= 2 and 0 < t <= 2/3");
    }
    const double k = 3.0 * m - 1.0;
    const double c4 = 3.0 - k * t;
    const double c3 = 2.0 - k * t + 4.0 * (m - 1.0) * t * t;
    return CharPoly{{1.0, -c4, c3, c3, -c4, 1.0}};
}

std::vector<Complex> characteristic_coefficients(const Eigen::MatrixXcd& a) {
    const Eigen::Index n = a.rows();
    if (a.cols() != n) {
        throw std::invalid_argument("characteristic polynomial of a non-square matrix");
    }
    std::vector<Complex> coeffs(static_cast<std::size_t>(n) + 1);
    coeffs[0] = 1.0;
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(n, n);
    Eigen::MatrixXcd mk = Eigen::MatrixXcd::Zero(n, n);
    for (Eigen::Index k = 1; k <= n; ++k) {
        mk = a * mk + coeffs[static_cast<std::size_t>(k - 1)] * id;
        coeffs[static_cast<std::size_t>(k)] = -(a * mk).trace() / static_cast<double>(k);
    }
    return coeffs;
}

GammaPair gamma_pm(int m) {
    if (m < 2) {
        throw InvalidParameter("gamma_pm needs m >= 2");
    }
    const double k = 3.0 * m - 1.0;
    const double d = std::sqrt(k * k - 16.0 * (m - 1.0));
    return {k + d, k - d};
}

namespace {

AsymptoticEigenvector leading_eigenvector(int m, double gamma, double sign) {
    const Complex i{0.0, 1.0};
    AsymptoticEigenvector v;
    v.x[0] = 1.0;
    v.x[1] = sign * 2.0 * i / std::sqrt(gamma);
    v.x[2] = sign * i * (gamma - 4.0) / (2.0 * std::sqrt(gamma * (m - 1.0)));
    v.x[3] = -v.x[2];
    v.x[4] = -(std::numbers::sqrt2 / gamma) * (gamma - 4.0);
    const double w2 = (2.0 * (3.0 * m - 1.0) * gamma - 16.0 * (m - 1.0)) /
                      (4.0 * (9.0 * m - 11.0) * gamma - 32.0 * (3.0 * m - 5.0));
    v.w = std::sqrt(w2);
    return v;
}

// <u_{j+}|psi_in> / w_j for psi_in = sqrt(2/3) psi1 - sqrt(1/3) psi5
double initial_weight(double gamma) {
    return std::sqrt(2.0 / 3.0) +
           std::sqrt(1.0 / 3.0) * (std::numbers::sqrt2 / gamma) * (gamma - 4.0);
}

Eigen::VectorXcd align_phase(Eigen::VectorXcd v) {
    v.normalize();
    const double scale = v.cwiseAbs().maxCoeff();
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (std::abs(v[i]) > 1e-8 * scale) {
            v *= std::conj(v[i]) / std::abs(v[i]);
            break;
        }
    }
    return v;
}

std::vector<Complex> quadratic_roots(Complex b, Complex c) {
    // x^2 + b x + c = 0
    const Complex disc = std::sqrt(b * b - 4.0 * c);
    return {(-b + disc) / 2.0, (-b - disc) / 2.0};
}

// Newton on det(lambda I - A): f'/f = tr((lambda I - A)^-1). Clustered roots
// near 1 lose digits in the quadratics; the matrix itself is well conditioned.
Complex polish_root(const Eigen::MatrixXcd& a, Complex lam) {
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(a.rows(), a.cols());
    for (int it = 0; it < 3; ++it) {
        const Eigen::MatrixXcd shifted = lam * id - a;
        const Complex tr = shifted.partialPivLu().inverse().trace();
        const Complex delta = 1.0 / tr;
        if (!std::isfinite(delta.real()) || !std::isfinite(delta.imag())) {
            break;
        }
        lam -= delta;
        if (std::abs(delta) < 1e-15) {
            break;
        }
    }
    return lam;
}

}  // namespace

AsymptoticEigenvectors asymptotic_eigenvectors(int m) {
    if (m < 2) {
        throw InvalidParameter("asymptotic eigenvectors need m >= 2 (sqrt(m-1) in x3)");
    }
    const GammaPair g = gamma_pm(m);
    return {leading_eigenvector(m, g.plus, 1.0), leading_eigenvector(m, g.plus, -1.0),
            leading_eigenvector(m, g.minus, 1.0), leading_eigenvector(m, g.minus, -1.0)};
}

std::vector<Complex> closed_form_eigenvalues(const Eigen::MatrixXcd& a) {
    if (a.rows() != 5 || a.cols() != 5) {
        throw std::invalid_argument("closed-form route is for 5x5 reduced matrices");
    }
    const auto p = characteristic_coefficients(a);
    // Synthetic division by (lambda + 1).
    std::array<Complex, 5> q{};
    q[0] = p[0];
    for (std::size_t i = 1; i < 5; ++i) {
        q[i] = p[i] - q[i - 1];
    }
    const Complex remainder = p[5] - q[4];
    if (std::abs(remainder) > 1e-8) {
        std::ostringstream msg;
        msg << "lambda = -1 is not a root of the characteristic polynomial (remainder "
            << std::abs(remainder) << ")";
        throw NumericContractViolation(msg.str());
    }
    // q = lambda^4 + a3 lambda^3 + a2 lambda^2 + a1 lambda + 1, palindromic:
    // s1 + s2 = -a3, s1 s2 = a2 - 2.
    const Complex a3 = 0.5 * (q[1] + q[3]);
    const Complex a2 = q[2];
    std::vector<Complex> out{Complex{-1.0, 0.0}};
    for (const Complex s : quadratic_roots(a3, a2 - 2.0)) {
        for (const Complex lam : quadratic_roots(-s, 1.0)) {
            out.push_back(polish_root(a, lam));
        }
    }
    return out;
}

std::vector<Complex> generic_eigenvalues(const Eigen::MatrixXcd& a) {
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(a, false);
    if (es.info() != Eigen::Success) {
        throw NumericContractViolation("eigensolver did not converge");
    }
    const auto& v = es.eigenvalues();
    return {v.data(), v.data() + v.size()};
}

double p_plus_asymptotic(int m) {
    const GammaPair g = gamma_pm(m);
    const auto u = asymptotic_eigenvectors(m);
    const double amp = u.plus_plus.w * initial_weight(g.plus);
    return 2.0 * amp * amp;
}

namespace {

// Pairs each generic eigenvalue with the nearest unused closed-form one.
std::vector<Complex> match_to(const std::vector<Complex>& reference,
                              std::vector<Complex> candidates, double& worst) {
    std::vector<Complex> out;
    worst = 0.0;
    for (const Complex ref : reference) {
        auto it = std::min_element(candidates.begin(), candidates.end(),
                                   [&](Complex x, Complex y) {
                                       return std::abs(x - ref) < std::abs(y - ref);
                                   });
        worst = std::max(worst, std::abs(*it - ref));
        out.push_back(*it);
        candidates.erase(it);
    }
    return out;
}

double phase_gap(Complex a, Complex b) { return std::abs(std::arg(a / b)); }

SpectralReport two_star_spectrum(const ReducedModel& model) {
    SpectralReport rep;
    rep.family = ChainFamily::TwoStar;
    rep.prongs = model.prongs;
    rep.t = model.t;
    const Eigen::MatrixXcd block = two_star_block(model);
    const double gamma = model.t * std::sqrt(3.0 * (model.prongs - 3.0));
    rep.gamma = gamma;

    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(block);
    if (es.info() != Eigen::Success) {
        throw NumericContractViolation("eigensolver did not converge");
    }
    const Complex tr = block.trace();
    const Complex det = block.determinant();
    const auto closed = quadratic_roots(-tr, det);
    std::vector<Complex> generic(es.eigenvalues().data(), es.eigenvalues().data() + 2);
    const auto matched = match_to(generic, closed, rep.solver_agreement);
    for (int k = 0; k < 2; ++k) {
        const Complex lam = generic[static_cast<std::size_t>(k)];
        const bool upper = lam.imag() >= 0.0;
        const Complex predicted = std::polar(1.0, upper ? gamma : -gamma);
        rep.eigenpairs.push_back({upper ? "u+" : "u-", lam, matched[static_cast<std::size_t>(k)],
                                  predicted, phase_gap(lam, predicted),
                                  align_phase(es.eigenvectors().col(k))});
    }
    std::sort(rep.eigenpairs.begin(), rep.eigenpairs.end(),
              [](const auto& a, const auto& b) { return a.branch < b.branch; });
    return rep;
}

SpectralReport three_star_spectrum(const ReducedModel& model) {
    SpectralReport rep;
    rep.family = ChainFamily::ThreeStar;
    rep.prongs = model.prongs;
    rep.shared = model.shared;
    rep.t = model.t;
    const int m = *model.shared;
    const GammaPair g = gamma_pm(m);
    rep.gammas = g;
    rep.asymptotic = asymptotic_eigenvectors(m);

    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(model.matrix);
    if (es.info() != Eigen::Success) {
        throw NumericContractViolation("eigensolver did not converge");
    }
    std::vector<Complex> generic(es.eigenvalues().data(), es.eigenvalues().data() + 5);
    const auto matched = match_to(generic, closed_form_eigenvalues(model.matrix),
                                  rep.solver_agreement);

    std::vector<int> order(5);
    for (int k = 0; k < 5; ++k) {
        order[static_cast<std::size_t>(k)] = k;
    }
    const auto minus_one = std::min_element(order.begin(), order.end(), [&](int a, int b) {
        return std::abs(generic[static_cast<std::size_t>(a)] + 1.0) <
               std::abs(generic[static_cast<std::size_t>(b)] + 1.0);
    });
    const int idx_minus_one = *minus_one;
    order.erase(minus_one);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return std::arg(generic[static_cast<std::size_t>(a)]) >
               std::arg(generic[static_cast<std::size_t>(b)]);
    });
    // Phases in descending order: +theta_plus, +theta_minus, -theta_minus, -theta_plus.
    const double th_plus = std::sqrt(g.plus * model.t / 2.0);
    const double th_minus = std::sqrt(g.minus * model.t / 2.0);
    const std::array<std::pair<const char*, double>, 4> branches{
        {{"u++", th_plus}, {"u-+", th_minus}, {"u--", -th_minus}, {"u+-", -th_plus}}};
    for (std::size_t k = 0; k < 4; ++k) {
        const auto idx = static_cast<std::size_t>(order[k]);
        const Complex predicted = std::polar(1.0, branches[k].second);
        rep.eigenpairs.push_back({branches[k].first, generic[idx], matched[idx], predicted,
                                  phase_gap(generic[idx], predicted),
                                  align_phase(es.eigenvectors().col(order[k]))});
    }
    const auto i1 = static_cast<std::size_t>(idx_minus_one);
    rep.eigenpairs.push_back({"-1", generic[i1], matched[i1], Complex{-1.0, 0.0},
                              phase_gap(generic[i1], Complex{-1.0, 0.0}),
                              align_phase(es.eigenvectors().col(idx_minus_one))});
    const std::array<const char*, 5> display{"u++", "u+-", "u-+", "u--", "-1"};
    std::sort(rep.eigenpairs.begin(), rep.eigenpairs.end(), [&](const auto& a, const auto& b) {
        return std::find(display.begin(), display.end(), a.branch) <
               std::find(display.begin(), display.end(), b.branch);
    });
    return rep;
}

}  // namespace

SpectralReport exact_spectrum(const ReducedModel& model) {
    SpectralReport rep = model.family == ChainFamily::TwoStar ? two_star_spectrum(model)
                                                             : three_star_spectrum(model);
    if (!(rep.solver_agreement <= kSolverAgreement)) {
        std::ostringstream msg;
        msg << "closed-form and generic eigenvalues disagree by " << rep.solver_agreement;
        throw NumericContractViolation(msg.str());
    }
    if (model.family == ChainFamily::ThreeStar) {
        rep.p_plus = p_plus(model);
    }
    return rep;
}

Eigen::VectorXcd initial_coordinates(const ReducedModel& model) {
    const StarChainGraph graph = model.family == ChainFamily::TwoStar
                                     ? StarChainGraph::two_star(model.prongs)
                                     : StarChainGraph::three_star(model.prongs, *model.shared);
    return project(model.basis, initial_state(graph)).coordinates;
}

PPlus p_plus(const ReducedModel& model) {
    if (model.family != ChainFamily::ThreeStar) {
        throw InvalidParameter("p_plus is defined for three-star models");
    }
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(model.matrix);
    if (es.info() != Eigen::Success) {
        throw NumericContractViolation("eigensolver did not converge");
    }
    const int m = *model.shared;
    const double th_plus = std::sqrt(gamma_pm(m).plus * model.t / 2.0);
    const double th_minus = std::sqrt(gamma_pm(m).minus * model.t / 2.0);
    const Eigen::VectorXcd c = initial_coordinates(model);
    double weight = 0.0;
    for (Eigen::Index k = 0; k < 5; ++k) {
        const double ph = std::abs(std::arg(es.eigenvalues()[k]));
        if (std::abs(ph - th_plus) < std::abs(ph - th_minus) && ph < std::numbers::pi / 2) {
            weight += std::norm(es.eigenvectors().col(k).normalized().dot(c));
        }
    }
    return {weight, p_plus_asymptotic(m), model.prongs};
}

PPlus p_plus(int m) {
    if (m < 2) {
        throw InvalidParameter("p_plus needs m >= 2");
    }
    const int prongs = std::max(2000, 40 * m);
    return p_plus(derive_reduced_matrix(StarChainGraph::three_star(prongs, m)));
}

Eigen::VectorXcd evolve_fractional(const ReducedModel& model, const Eigen::VectorXcd& coordinates,
                                   double n) {
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(model.matrix);
    if (es.info() != Eigen::Success) {
        throw NumericContractViolation("eigensolver did not converge");
    }
    const Eigen::MatrixXcd& v = es.eigenvectors();
    Eigen::VectorXcd c = v.partialPivLu().solve(coordinates);
    for (Eigen::Index k = 0; k < c.size(); ++k) {
        const Complex lam = es.eigenvalues()[k];
        c[k] *= std::polar(std::pow(std::abs(lam), n), n * std::arg(lam));
    }
    return v * c;
}

}  // namespace starwalk
