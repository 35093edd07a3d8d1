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
 * State-vector evaluation of L(theta) = <init| U^dagger O U |init> and its
 * parameter gradient by two independent routes:
 *
 *  - gradient_shift: L(theta_k + pi/2) - L(theta_k - pi/2), halved;
 *  - gradient_commutator: (i/2) Tr{O_+ [rho_-, P_k]}, with rho_- the state
 *    right after rotation k and O_+ the observable pulled back through the
 *    rest of the circuit.
 *
 * Rotations here carry their full phase, exp(-i theta/2 P).
 */
#pragma once

#include "barren/circuit.hpp"
#include "barren/matkernel.hpp"

#include <span>
#include <stdexcept>
#include <vector>

namespace barren {

/// Raised when a quantity that must be real carries an imaginary residue.
class NumericalError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Imaginary part tolerated on real-valued traces before NumericalError.
inline constexpr double kImagResidueTol = 1e-10;

class StateVector {
  public:
    /// Computational basis state |index> on n qubits.
    static StateVector basis(std::size_t n, std::size_t index = 0);
    /// Normalizes the given amplitudes; throws on zero norm or bad length.
    StateVector(std::size_t n, std::vector<cplx> amplitudes);

    [[nodiscard]] std::size_t qubits() const noexcept { return n_; }
    [[nodiscard]] std::span<const cplx> amplitudes() const noexcept { return amps_; }
    [[nodiscard]] std::span<cplx> amplitudes() noexcept { return amps_; }
    [[nodiscard]] double norm_squared() const;

    /// Applies a 2x2 matrix to qubit q in place.
    void apply(const ComplexMatrix &gate, std::size_t q);
    void apply_cz(std::size_t a, std::size_t b);
    /// Multiplies by the Pauli string (not unitary evolution, still norm preserving).
    void apply_pauli_string(const Observable &o);
    void apply_pauli(Axis axis, std::size_t q);

    /// |psi><psi|
    [[nodiscard]] ComplexMatrix density_matrix() const;

  private:
    StateVector(std::size_t n, std::vector<cplx> amplitudes, bool normalized);

    std::size_t n_;
    std::vector<cplx> amps_;
};

/// <a|b>
cplx inner(const StateVector &a, const StateVector &b);

using GradientVector = std::vector<double>;

/// Gate applied in slot (layer, qubit) of c; identity for replaced slots.
ComplexMatrix slot_gate(const Circuit &c, std::size_t layer, std::size_t qubit);

/// U|init>.
StateVector evolve(const Circuit &c, const StateVector &init);

double loss(const Circuit &c, const Observable &o, const StateVector &init);
/// <psi| O |psi> for a dense Hermitian O; throws NumericalError on residue.
double loss(const Circuit &c, const ComplexMatrix &o, const StateVector &init);

GradientVector gradient_shift(const Circuit &c, const Observable &o,
                              const StateVector &init);

/// Commutator form evaluated with rank-one rho_- in a single reverse sweep.
GradientVector gradient_commutator(const Circuit &c, const Observable &o,
                                   const StateVector &init);

/// Commutator form evaluated on dense rho_- and O_+ matrices (n <= 6).
GradientVector gradient_commutator_dense(const Circuit &c, const Observable &o,
                                         const StateVector &init);

/// Dense U, built layer by layer from embedded gates (n <= 6).
ComplexMatrix circuit_unitary(const Circuit &c);

/// Tr{rho U^dagger O U} with dense matrices (n <= 6).
double loss_dense(const Circuit &c, const Observable &o, const StateVector &init);

} // namespace barren
