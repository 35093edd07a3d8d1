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
 * Dense complex matrices over n-qubit Hilbert spaces: tensor products,
 * partial traces, embeddings and the fixed single-qubit gate dictionary.
 *
 * Qubit 0 is the most significant tensor factor, so for a basis index i of
 * an n-qubit operator the bit of qubit q is (i >> (n - 1 - q)) & 1.
 */
#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace barren {

using cplx = std::complex<double>;

/// Library-wide tolerance for comparisons that are exact in exact arithmetic.
inline constexpr double kEps = 1e-12;

/// Raised when operand dimensions are incompatible.
class DimensionError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/**
 * @brief Square dense complex matrix stored row-major.
 *
 * Hermiticity and unitarity are not invariants of the type; use
 * is_hermitian() / is_unitary() to check them.
 */
class ComplexMatrix {
  public:
    ComplexMatrix() : ComplexMatrix(1) {}
    /// Zero matrix of the given dimension (dim >= 1).
    explicit ComplexMatrix(std::size_t dim);
    ComplexMatrix(std::size_t dim, std::vector<cplx> entries);
    /// Row-by-row literal, e.g. {{1, 0}, {0, -1}}.
    ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

    static ComplexMatrix identity(std::size_t dim);
    static ComplexMatrix diagonal(std::span<const cplx> diag);

    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
    [[nodiscard]] std::span<const cplx> entries() const noexcept { return data_; }
    [[nodiscard]] std::span<cplx> entries() noexcept { return data_; }

    cplx &operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
    const cplx &operator()(std::size_t r, std::size_t c) const {
        return data_[r * dim_ + c];
    }

    [[nodiscard]] cplx trace() const;
    [[nodiscard]] ComplexMatrix adjoint() const;
    /// Largest absolute entry.
    [[nodiscard]] double max_abs() const;

    [[nodiscard]] bool is_hermitian(double tol = kEps) const;
    [[nodiscard]] bool is_unitary(double tol = kEps) const;

    ComplexMatrix &operator+=(const ComplexMatrix &rhs);
    ComplexMatrix &operator-=(const ComplexMatrix &rhs);
    ComplexMatrix &operator*=(cplx s);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b) {
        return a += b;
    }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b) {
        return a -= b;
    }
    friend ComplexMatrix operator*(ComplexMatrix a, cplx s) { return a *= s; }
    friend ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }
    friend ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);

    friend bool operator==(const ComplexMatrix &, const ComplexMatrix &) = default;

  private:
    std::size_t dim_;
    std::vector<cplx> data_;
};

/// max_{ij} |a_ij - b_ij|; throws DimensionError on mismatch.
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);

/**
 * @brief Ordered set of distinct qubit indices.
 *
 * Construction sorts the indices and rejects duplicates. Range checking
 * against a qubit count happens where the count is known (check_within).
 */
class QubitIndexSet {
  public:
    QubitIndexSet() = default;
    QubitIndexSet(std::initializer_list<std::size_t> qubits);
    explicit QubitIndexSet(std::vector<std::size_t> qubits);

    /// Subset of {0..n-1} selected by the bits of mask (bit n-1-q <-> qubit q).
    static QubitIndexSet from_mask(unsigned long long mask, std::size_t n);
    static QubitIndexSet all(std::size_t n);

    [[nodiscard]] std::size_t size() const noexcept { return qubits_.size(); }
    [[nodiscard]] bool empty() const noexcept { return qubits_.empty(); }
    [[nodiscard]] bool contains(std::size_t q) const;
    [[nodiscard]] auto begin() const noexcept { return qubits_.begin(); }
    [[nodiscard]] auto end() const noexcept { return qubits_.end(); }
    [[nodiscard]] std::size_t operator[](std::size_t i) const { return qubits_[i]; }
    [[nodiscard]] const std::vector<std::size_t> &indices() const noexcept {
        return qubits_;
    }

    /// Throws std::out_of_range if any index is >= n.
    void check_within(std::size_t n) const;

    friend bool operator==(const QubitIndexSet &, const QubitIndexSet &) = default;

  private:
    std::vector<std::size_t> qubits_;
};

/// 2^n, rejecting qubit counts that do not fit the dense representation.
std::size_t dim_of(std::size_t n);

/// Number of qubits n with 2^n == dim; throws DimensionError otherwise.
std::size_t qubits_of(std::size_t dim);

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);

/// Trace over the qubits in `traced`; the remaining qubits keep their order.
ComplexMatrix partial_trace(const ComplexMatrix &a, const QubitIndexSet &traced,
                            std::size_t n);

/// Operator acting as `local` on qubits `at` (in set order) and as identity
/// elsewhere.
ComplexMatrix embed(const ComplexMatrix &local, const QubitIndexSet &at,
                    std::size_t n);

/**
 * @brief I_sigma (x) Tr_sigma(A): trace out sigma and re-insert identities
 * on those qubits, keeping every qubit in its original position.
 */
ComplexMatrix trace_and_replace(const ComplexMatrix &a, const QubitIndexSet &sigma,
                                std::size_t n);

ComplexMatrix commutator(const ComplexMatrix &a, const ComplexMatrix &b);

enum class Axis { X, Y, Z };

char axis_char(Axis axis);

namespace gates {
ComplexMatrix I();
ComplexMatrix X();
ComplexMatrix Y();
ComplexMatrix Z();
ComplexMatrix H();
/// Two-qubit controlled-Z, diag(1, 1, 1, -1).
ComplexMatrix CZ();
ComplexMatrix pauli(Axis axis);
} // namespace gates

/**
 * @brief Single-qubit rotation with the global phase removed from RZ.
 *
 * RX and RY are exp(-i theta/2 P); RZ is diag(1, e^{i theta}), which differs
 * from exp(-i theta/2 Z) only by the phase e^{-i theta/2} and therefore gives
 * identical conjugation averages.
 */
ComplexMatrix rotation_gate(Axis axis, double theta);

/// exp(-i theta/2 P) for every axis, including the global phase on RZ.
ComplexMatrix rotation_gate_full(Axis axis, double theta);

} // namespace barren
