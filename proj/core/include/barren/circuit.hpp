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
 * Layered circuit representation, Pauli-string observables, random ensemble
 * generation and the circuit JSON format.
 *
 * Each layer applies one single-qubit slot per qubit and then its CZ
 * entanglers. The overall unitary is U = L_d ... L_2 L_1 acting on |init>.
 */
#pragma once

#include "barren/matkernel.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace barren {

/// What occupies a single-qubit slot.
enum class SlotKind { RX, RY, RZ, Identity, Hadamard };

[[nodiscard]] bool is_rotation(SlotKind kind) noexcept;
[[nodiscard]] Axis rotation_axis(SlotKind kind);
[[nodiscard]] SlotKind rotation_kind(Axis axis) noexcept;

struct RotationSpec {
    SlotKind kind = SlotKind::Identity;
    /// Present iff kind is a rotation.
    std::optional<std::size_t> param;

    friend bool operator==(const RotationSpec &, const RotationSpec &) = default;
};

using QubitPair = std::pair<std::size_t, std::size_t>;

struct Layer {
    std::vector<RotationSpec> rotations; ///< one per qubit
    std::vector<QubitPair> entanglers;   ///< CZ pairs, applied after rotations

    friend bool operator==(const Layer &, const Layer &) = default;
};

/// Raised when a circuit violates a structural invariant.
class CircuitInvariantError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

class Circuit {
  public:
    /// Validates every invariant; throws CircuitInvariantError.
    Circuit(std::size_t n, std::vector<Layer> layers, std::vector<double> theta);

    [[nodiscard]] std::size_t qubits() const noexcept { return n_; }
    [[nodiscard]] std::size_t depth() const noexcept { return layers_.size(); }
    [[nodiscard]] std::size_t num_params() const noexcept { return theta_.size(); }
    [[nodiscard]] std::size_t num_slots() const noexcept { return n_ * layers_.size(); }
    [[nodiscard]] const std::vector<Layer> &layers() const noexcept { return layers_; }
    [[nodiscard]] const std::vector<double> &theta() const noexcept { return theta_; }

    /// Copy with a different parameter vector of the same length.
    [[nodiscard]] Circuit with_theta(std::vector<double> theta) const;

    /// Slot index (layer * n + qubit) of every parameter, in parameter order.
    [[nodiscard]] std::vector<std::size_t> param_slots() const;

    friend bool operator==(const Circuit &, const Circuit &) = default;

  private:
    std::size_t n_;
    std::vector<Layer> layers_;
    std::vector<double> theta_;
};

/// Raised for malformed observable strings.
class ObservableParseError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Tensor product of single-qubit Paulis, one character per qubit.
class Observable {
  public:
    /// Accepts characters I, X, Y, Z; throws ObservableParseError otherwise.
    explicit Observable(std::string pauli_string);

    [[nodiscard]] const std::string &str() const noexcept { return paulis_; }
    [[nodiscard]] std::size_t qubits() const noexcept { return paulis_.size(); }
    [[nodiscard]] char at(std::size_t q) const { return paulis_.at(q); }
    [[nodiscard]] bool is_identity() const noexcept;
    /// Number of non-identity factors.
    [[nodiscard]] std::size_t weight() const noexcept;

    friend bool operator==(const Observable &, const Observable &) = default;

  private:
    std::string paulis_;
};

/// Dense realization of the Pauli string; Hermitian and squares to I.
ComplexMatrix observable_matrix(const Observable &o);

/**
 * @brief Expands an observable name for an n-qubit register.
 *
 * Explicit Pauli strings of length n pass through. Named forms:
 * `global` (Z on every qubit), `local` (Z on qubit 0), `alternating`
 * ((Z I) repeated), `first_half`, `last_half`, and `prefix:K` (Z on the
 * first K qubits).
 */
Observable make_observable(std::string_view spec, std::size_t n);

enum class EntanglerPattern { Brick, Ring, Ladder, None };
enum class ReplacementMode { None, Identity, Hadamard };

std::string to_string(EntanglerPattern p);
std::string to_string(ReplacementMode m);
EntanglerPattern parse_entangler_pattern(std::string_view s);
ReplacementMode parse_replacement_mode(std::string_view s);

/// CZ pairs placed in every layer for the given pattern.
std::vector<QubitPair> entangler_pairs(EntanglerPattern pattern, std::size_t n);

struct EnsembleSpec {
    std::size_t n = 1;
    std::size_t d = 1;
    EntanglerPattern entangler = EntanglerPattern::Brick;
    Observable observable{"Z"};
    ReplacementMode replacement = ReplacementMode::None;
    double replacement_fraction = 0.0;
    std::size_t samples = 1;
    std::uint64_t master_seed = 0;

    /// Throws std::invalid_argument on inconsistent fields.
    void validate() const;
};

/**
 * @brief Deterministic random circuit number `index` of the ensemble.
 *
 * Axes are uniform over {X, Y, Z}, angles uniform on [-2 pi, 2 pi), and
 * round(fraction * n * d) slots chosen uniformly are replaced.
 */
Circuit sample_circuit(const EnsembleSpec &spec, std::uint64_t index);

/// The four-qubit, three-layer brick circuit used as the light-cone example,
/// with every slot an RY rotation and parameters numbered slot by slot.
Circuit reference_brick_circuit(std::size_t n = 4, std::size_t d = 3);

/// Base class of all circuit JSON errors.
class CircuitFormatError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};
class CircuitSyntaxError : public CircuitFormatError {
  public:
    using CircuitFormatError::CircuitFormatError;
};
class CircuitSchemaError : public CircuitFormatError {
  public:
    using CircuitFormatError::CircuitFormatError;
};
class CircuitValidationError : public CircuitFormatError {
  public:
    using CircuitFormatError::CircuitFormatError;
};

/// JSON text with angles printed to 17 significant digits.
std::string serialize(const Circuit &c);
/// Throws CircuitSyntaxError, CircuitSchemaError or CircuitValidationError.
Circuit deserialize(std::string_view json_text);

/// Prints a double with 17 significant digits ("%.17g").
std::string format_double(double x);

} // namespace barren
