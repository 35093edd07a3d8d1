// Copyright 2026 The barren-lab Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file
 * First and second moments of conjugation by random rotation layers.
 *
 * A random slot applies RX, RY or RZ (each with probability 1/3) with an
 * angle uniform on [-2 pi, 2 pi). Averages are taken with the equispaced
 * 16-node rule, which integrates every integrand used here exactly: the
 * integrands are trigonometric polynomials of degree <= 4 in theta/2.
 *
 * Two families are provided side by side:
 *  - exact maps (quadrature, sequential composition, closed-form expansion);
 *  - the printed closed forms (`*_paper`), kept for comparison. The printed
 *    first-moment depth formula agrees with exact composition only for
 *    d <= 2.
 */
#pragma once

#include "barren/matkernel.hpp"

#include <array>
#include <cstddef>
#include <functional>
#include <vector>

namespace barren {

inline constexpr std::size_t kQuadratureNodes = 16;

/// Equispaced angles -2 pi + 4 pi t / 16, t = 0..15.
std::array<double, kQuadratureNodes> quadrature_angles();

/// (1/16) sum_t f(theta_t) for a scalar integrand.
double quadrature_angle_average(const std::function<double(double)> &f);

/// Average of fn(rotation_gate(axis, theta)) over the quadrature nodes.
ComplexMatrix quadrature_axis_average(
    Axis axis, const std::function<ComplexMatrix(const ComplexMatrix &)> &fn);

/// (1/3) sum over axes of quadrature_axis_average.
ComplexMatrix quadrature_gate_average(
    const std::function<ComplexMatrix(const ComplexMatrix &)> &fn);

/// (1/3)(A + I_j (x) Tr_j A).
ComplexMatrix first_moment_single(const ComplexMatrix &a, std::size_t j, std::size_t n);

/// One full random layer, applied as n single-qubit maps in sequence.
ComplexMatrix first_moment_layer(const ComplexMatrix &a, std::size_t n);

/// One full random layer as the explicit sum 3^-n sum_sigma I_sigma (x) Tr_sigma A.
ComplexMatrix first_moment_layer_powerset(const ComplexMatrix &a, std::size_t n);

/// d-fold composition of first_moment_layer. Ground truth for every depth.
ComplexMatrix first_moment_depth_exact(const ComplexMatrix &a, std::size_t n,
                                       std::size_t d);

/// The printed depth-d closed form with coefficients (4^|sigma| / 3^n)^(d-1) / 3^n.
ComplexMatrix first_moment_depth_paper(const ComplexMatrix &a, std::size_t n,
                                       std::size_t d);

/**
 * @brief Map A -> sum_sigma c_sigma I_sigma (x) Tr_sigma A, stored by subset.
 *
 * Subsets are bit masks in the QubitIndexSet::from_mask convention.
 */
struct FirstMomentExpansion {
    std::size_t n = 0;
    std::size_t d = 0;
    std::vector<double> coefficients; ///< indexed by subset mask, size 2^n

    [[nodiscard]] double coefficient(const QubitIndexSet &sigma) const;
    [[nodiscard]] ComplexMatrix apply(const ComplexMatrix &a) const;
    /// sum_sigma c_sigma 2^|sigma|; equals 1 exactly when the map is unital.
    [[nodiscard]] double unitality_sum() const;
};

/// Closed form of the d-fold composition:
/// c_sigma = (3^-d)^(n-|sigma|) ((1 - 3^-d)/2)^|sigma|.
FirstMomentExpansion first_moment_expansion_exact(std::size_t n, std::size_t d);

/// Coefficients exactly as printed for the depth-d formula.
FirstMomentExpansion first_moment_expansion_paper(std::size_t n, std::size_t d);

/// f, g and the traceless remainder epsilon with exact = (f + epsilon)/4 + g/12.
struct SecondMomentDecomposition {
    ComplexMatrix f_part;
    ComplexMatrix g_part;
    ComplexMatrix epsilon_part;
};

struct SecondMoment {
    ComplexMatrix exact; ///< E[U^dagger A U B U^dagger C U] for one random slot
    SecondMomentDecomposition decomposition;
};

/// f_j = ABC + (I_j (x) Tr_j{AC}) B.
ComplexMatrix second_moment_f(const ComplexMatrix &a, const ComplexMatrix &b,
                              const ComplexMatrix &c, std::size_t j, std::size_t n);

/**
 * @brief Seven-term g with every scalar trace Tr{X} read as I_j (x) Tr_j X
 * multiplied from the left. Reduces to the printed single-qubit form at n = 1.
 */
ComplexMatrix second_moment_g(const ComplexMatrix &a, const ComplexMatrix &b,
                              const ComplexMatrix &c, std::size_t j, std::size_t n);

/// Exact single-slot second moment on qubit j (quadrature) with its f/g/epsilon split.
SecondMoment second_moment_single(const ComplexMatrix &a, const ComplexMatrix &b,
                                  const ComplexMatrix &c, std::size_t j, std::size_t n);

/**
 * @brief Leading sum of the printed depth-d second moment (remainder dropped):
 * 4^-n sum_sigma (4^(|sigma|-n))^(d-1) T_sigma, with T_empty = ABC and
 * T_sigma = (I_sigma (x) Tr_sigma{AC}) B otherwise.
 */
ComplexMatrix second_moment_depth_paper(const ComplexMatrix &a, const ComplexMatrix &b,
                                        const ComplexMatrix &c, std::size_t n,
                                        std::size_t d);

/// Largest slot count accepted by brute_force_moment.
inline constexpr std::size_t kBruteForceMaxSlots = 4;

/**
 * @brief E[U^dagger A U B U^dagger C U] for an entangler-free n x d circuit,
 * summed over every axis and quadrature node of every slot (48^(n d) terms).
 * Rejects n * d > kBruteForceMaxSlots.
 */
ComplexMatrix brute_force_moment(std::size_t n, std::size_t d, const ComplexMatrix &a,
                                 const ComplexMatrix &b, const ComplexMatrix &c);

/// Largest qubit count for the dense second-moment routines.
inline constexpr std::size_t kSecondMomentMaxQubits = 6;

} // namespace barren
