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

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "starwalk/reduced.hpp"

namespace starwalk {

using Complex = std::complex<double>;

/// lambda^5 - c4 lambda^4 + c3 lambda^3 + c3 lambda^2 - c4 lambda + 1 with
/// c4 = 3 - (3m-1)t and c3 = 2 - (3m-1)t + 4(m-1)t^2.
struct CharPoly {
    std::array<double, 6> coefficients{};  ///< lambda^5 first

    Complex operator()(Complex lambda) const;
};

/// Requires m >= 2 and 0 < t <= 2/3.
CharPoly char_poly(int m, double t);

/// Monic characteristic polynomial det(lambda I - A), highest power first,
/// by the Faddeev-LeVerrier recursion.
std::vector<Complex> characteristic_coefficients(const Eigen::MatrixXcd& a);

/// gamma_pm = (3m-1) +- sqrt((3m-1)^2 - 16(m-1)).
struct GammaPair {
    double plus = 0.0;
    double minus = 0.0;
};

GammaPair gamma_pm(int m);

/// Leading-order eigenvector components x1..x5 and normalization w.
struct AsymptoticEigenvector {
    std::array<Complex, 5> x{};
    double w = 0.0;
};

/// u_{jk}: j selects gamma_plus / gamma_minus, k the sign of the phase.
struct AsymptoticEigenvectors {
    AsymptoticEigenvector plus_plus;
    AsymptoticEigenvector plus_minus;
    AsymptoticEigenvector minus_plus;
    AsymptoticEigenvector minus_minus;
};

/// Throws InvalidParameter for m < 2 (the x3 component divides by sqrt(m-1)).
AsymptoticEigenvectors asymptotic_eigenvectors(int m);

/// Eigenvalues of a 5x5 matrix with a palindromic characteristic polynomial
/// and a root at -1: deflate (lambda + 1), then split the quartic into
/// (lambda^2 - s1 lambda + 1)(lambda^2 - s2 lambda + 1).
std::vector<Complex> closed_form_eigenvalues(const Eigen::MatrixXcd& a);

/// General dense eigensolver, for cross-checking.
std::vector<Complex> generic_eigenvalues(const Eigen::MatrixXcd& a);

/// Weight of the initial state on the gamma_plus eigenvector pair.
struct PPlus {
    double operational = 0.0;  ///< overlap with exact eigenvectors of the derived M
    double asymptotic = 0.0;   ///< leading-order closed form
    int reference_prongs = 0;
};

/// Asymptotic p_plus from the leading-order eigenvectors.
double p_plus_asymptotic(int m);
/// Both values; the operational one uses a chain of max(2000, 40m) prongs.
PPlus p_plus(int m);
PPlus p_plus(const ReducedModel& model);

struct EigenComparison {
    std::string branch;  ///< "u++", "u+-", "u-+", "u--", "-1" (three-star); "u+", "u-" (two-star)
    Complex exact;
    Complex closed_form;
    Complex predicted;
    double phase_error = 0.0;  ///< |arg(exact) - arg(predicted)|
    Eigen::VectorXcd vector;   ///< unit norm, first significant component real positive
};

struct SpectralReport {
    ChainFamily family = ChainFamily::ThreeStar;
    int prongs = 0;
    std::optional<int> shared;
    double t = 0.0;
    std::vector<EigenComparison> eigenpairs;
    double solver_agreement = 0.0;  ///< max |closed-form - generic|
    std::optional<double> gamma;    ///< two-star frequency t sqrt(3(N-3))
    std::optional<GammaPair> gammas;
    std::optional<AsymptoticEigenvectors> asymptotic;
    std::optional<PPlus> p_plus;
};

/// Largest tolerated disagreement between the two eigenvalue routes.
inline constexpr double kSolverAgreement = 1e-9;

/// Exact spectrum of a reduced model with its asymptotic counterpart. Two-star
/// models are analysed on the {psi2, psi3} block. Throws
/// NumericContractViolation if the two eigenvalue routes disagree.
SpectralReport exact_spectrum(const ReducedModel& model);

/// Coordinates of the chain's initial state in the model basis.
Eigen::VectorXcd initial_coordinates(const ReducedModel& model);

/// matrix^n * coordinates for real n via the eigendecomposition, with
/// lambda^n = |lambda|^n exp(i n arg lambda), arg in (-pi, pi]. For integer n
/// this matches reduced_evolve. Components on lambda = -1 are branch dependent
/// for fractional n.
Eigen::VectorXcd evolve_fractional(const ReducedModel& model, const Eigen::VectorXcd& coordinates,
                                   double n);

}  // namespace starwalk
