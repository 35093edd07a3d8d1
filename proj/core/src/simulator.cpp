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
#include "barren/simulator.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace barren {

namespace {

constexpr std::size_t kDenseMaxQubits = 6;

void check_dense(std::size_t n, const char *op) {
    if (n > kDenseMaxQubits) {
        throw std::invalid_argument(std::string(op) + ": dense path limited to " +
                                    std::to_string(kDenseMaxQubits) + " qubits");
    }
}

void check_dims(const Circuit &c, const Observable &o, const StateVector &init) {
    if (o.qubits() != c.qubits() || init.qubits() != c.qubits()) {
        throw DimensionError("circuit, observable and initial state disagree on qubit count (" +
                             std::to_string(c.qubits()) + ", " +
                             std::to_string(o.qubits()) + ", " +
                             std::to_string(init.qubits()) + ")");
    }
}

double real_part_checked(cplx z, const char *what) {
    if (std::abs(z.imag()) > kImagResidueTol * std::max(1.0, std::abs(z.real()))) {
        throw NumericalError(std::string(what) + ": imaginary residue " +
                             std::to_string(z.imag()));
    }
    return z.real();
}

void apply_layer(StateVector &psi, const Circuit &c, std::size_t l) {
    const Layer &layer = c.layers()[l];
    for (std::size_t q = 0; q < c.qubits(); ++q) {
        if (layer.rotations[q].kind != SlotKind::Identity) {
            psi.apply(slot_gate(c, l, q), q);
        }
    }
    for (const auto &[a, b] : layer.entanglers) {
        psi.apply_cz(a, b);
    }
}

} // namespace

StateVector StateVector::basis(std::size_t n, std::size_t index) {
    std::vector<cplx> amps(dim_of(n));
    if (index >= amps.size()) {
        throw std::out_of_range("basis index out of range");
    }
    amps[index] = 1.0;
    return StateVector(n, std::move(amps), true);
}

StateVector::StateVector(std::size_t n, std::vector<cplx> amplitudes)
    : StateVector(n, std::move(amplitudes), false) {}

StateVector::StateVector(std::size_t n, std::vector<cplx> amplitudes, bool normalized)
    : n_(n), amps_(std::move(amplitudes)) {
    if (amps_.size() != dim_of(n)) {
        throw DimensionError("state vector needs " + std::to_string(dim_of(n)) +
                             " amplitudes");
    }
    if (!normalized) {
        const double nrm = std::sqrt(norm_squared());
        if (nrm == 0.0) {
            throw std::invalid_argument("state vector has zero norm");
        }
        for (auto &a : amps_) {
            a /= nrm;
        }
    }
}

double StateVector::norm_squared() const {
    double s = 0.0;
    for (const auto &a : amps_) {
        s += std::norm(a);
    }
    return s;
}

void StateVector::apply(const ComplexMatrix &gate, std::size_t q) {
    if (gate.dim() != 2 || q >= n_) {
        throw DimensionError("apply: expected a 2x2 gate on an existing qubit");
    }
    const cplx g00 = gate(0, 0), g01 = gate(0, 1), g10 = gate(1, 0), g11 = gate(1, 1);
    const std::size_t stride = std::size_t{1} << (n_ - 1 - q);
    const std::size_t dim = amps_.size();
    for (std::size_t base = 0; base < dim; base += 2 * stride) {
        for (std::size_t i = base; i < base + stride; ++i) {
            const cplx a0 = amps_[i];
            const cplx a1 = amps_[i + stride];
            amps_[i] = g00 * a0 + g01 * a1;
            amps_[i + stride] = g10 * a0 + g11 * a1;
        }
    }
}

void StateVector::apply_cz(std::size_t a, std::size_t b) {
    if (a >= n_ || b >= n_ || a == b) {
        throw DimensionError("apply_cz: invalid qubit pair");
    }
    const std::size_t mask = (std::size_t{1} << (n_ - 1 - a)) | (std::size_t{1} << (n_ - 1 - b));
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        if ((i & mask) == mask) {
            amps_[i] = -amps_[i];
        }
    }
}

void StateVector::apply_pauli(Axis axis, std::size_t q) {
    const std::size_t bit = std::size_t{1} << (n_ - 1 - q);
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        if (i & bit) {
            continue;
        }
        cplx &a0 = amps_[i];
        cplx &a1 = amps_[i | bit];
        switch (axis) {
        case Axis::X:
            std::swap(a0, a1);
            break;
        case Axis::Y: {
            const cplx t0 = a0;
            a0 = cplx{0.0, -1.0} * a1;
            a1 = cplx{0.0, 1.0} * t0;
            break;
        }
        case Axis::Z:
            a1 = -a1;
            break;
        }
    }
}

void StateVector::apply_pauli_string(const Observable &o) {
    if (o.qubits() != n_) {
        throw DimensionError("apply_pauli_string: length mismatch");
    }
    for (std::size_t q = 0; q < n_; ++q) {
        switch (o.at(q)) {
        case 'X':
            apply_pauli(Axis::X, q);
            break;
        case 'Y':
            apply_pauli(Axis::Y, q);
            break;
        case 'Z':
            apply_pauli(Axis::Z, q);
            break;
        default:
            break;
        }
    }
}

ComplexMatrix StateVector::density_matrix() const {
    ComplexMatrix rho(amps_.size());
    for (std::size_t r = 0; r < amps_.size(); ++r) {
        for (std::size_t c = 0; c < amps_.size(); ++c) {
            rho(r, c) = amps_[r] * std::conj(amps_[c]);
        }
    }
    return rho;
}

cplx inner(const StateVector &a, const StateVector &b) {
    if (a.qubits() != b.qubits()) {
        throw DimensionError("inner: qubit count mismatch");
    }
    cplx s = 0.0;
    for (std::size_t i = 0; i < a.amplitudes().size(); ++i) {
        s += std::conj(a.amplitudes()[i]) * b.amplitudes()[i];
    }
    return s;
}

ComplexMatrix slot_gate(const Circuit &c, std::size_t layer, std::size_t qubit) {
    const RotationSpec &r = c.layers().at(layer).rotations.at(qubit);
    switch (r.kind) {
    case SlotKind::Identity:
        return gates::I();
    case SlotKind::Hadamard:
        return gates::H();
    default:
        return rotation_gate_full(rotation_axis(r.kind), c.theta()[*r.param]);
    }
}

StateVector evolve(const Circuit &c, const StateVector &init) {
    if (init.qubits() != c.qubits()) {
        throw DimensionError("evolve: initial state has the wrong qubit count");
    }
    StateVector psi = init;
    for (std::size_t l = 0; l < c.depth(); ++l) {
        apply_layer(psi, c, l);
    }
    return psi;
}

double loss(const Circuit &c, const Observable &o, const StateVector &init) {
    check_dims(c, o, init);
    const StateVector psi = evolve(c, init);
    StateVector opsi = psi;
    opsi.apply_pauli_string(o);
    return real_part_checked(inner(psi, opsi), "loss");
}

double loss(const Circuit &c, const ComplexMatrix &o, const StateVector &init) {
    if (o.dim() != dim_of(c.qubits())) {
        throw DimensionError("loss: observable dimension mismatch");
    }
    const StateVector psi = evolve(c, init);
    const auto amps = psi.amplitudes();
    cplx s = 0.0;
    for (std::size_t r = 0; r < amps.size(); ++r) {
        cplx row = 0.0;
        for (std::size_t k = 0; k < amps.size(); ++k) {
            row += o(r, k) * amps[k];
        }
        s += std::conj(amps[r]) * row;
    }
    return real_part_checked(s, "loss");
}

GradientVector gradient_shift(const Circuit &c, const Observable &o,
                              const StateVector &init) {
    check_dims(c, o, init);
    GradientVector grad(c.num_params());
    if (o.is_identity()) {
        return grad; // constant loss
    }
    std::vector<double> theta = c.theta();
    for (std::size_t k = 0; k < theta.size(); ++k) {
        const double t0 = theta[k];
        theta[k] = t0 + std::numbers::pi / 2;
        const double plus = loss(c.with_theta(theta), o, init);
        theta[k] = t0 - std::numbers::pi / 2;
        const double minus = loss(c.with_theta(theta), o, init);
        theta[k] = t0;
        grad[k] = 0.5 * (plus - minus);
    }
    return grad;
}

GradientVector gradient_commutator(const Circuit &c, const Observable &o,
                                   const StateVector &init) {
    check_dims(c, o, init);
    GradientVector grad(c.num_params());
    if (o.is_identity()) {
        return grad; // constant loss
    }

    // psi holds rho_- = |psi><psi| and phi = O_+ psi for the current cut;
    // both are walked back through the circuit one gate at a time.
    StateVector psi = evolve(c, init);
    StateVector phi = psi;
    phi.apply_pauli_string(o);

    for (std::size_t l = c.depth(); l-- > 0;) {
        const Layer &layer = c.layers()[l];
        for (auto it = layer.entanglers.rbegin(); it != layer.entanglers.rend(); ++it) {
            psi.apply_cz(it->first, it->second);
            phi.apply_cz(it->first, it->second);
        }
        for (std::size_t q = c.qubits(); q-- > 0;) {
            const RotationSpec &r = layer.rotations[q];
            if (r.kind == SlotKind::Identity) {
                continue;
            }
            if (r.param) {
                // Tr{O_+ [rho_-, P]} = <psi|P O_+|psi> - <psi|O_+ P|psi>
                StateVector ppsi = psi;
                ppsi.apply_pauli(rotation_axis(r.kind), q);
                const cplx tr = inner(ppsi, phi) - inner(phi, ppsi);
                grad[*r.param] = real_part_checked(cplx{0.0, 0.5} * tr, "gradient_commutator");
            }
            const ComplexMatrix undo = slot_gate(c, l, q).adjoint();
            psi.apply(undo, q);
            phi.apply(undo, q);
        }
    }
    return grad;
}

ComplexMatrix circuit_unitary(const Circuit &c) {
    const std::size_t n = c.qubits();
    check_dense(n, "circuit_unitary");
    ComplexMatrix u = ComplexMatrix::identity(dim_of(n));
    for (std::size_t l = 0; l < c.depth(); ++l) {
        for (std::size_t q = 0; q < n; ++q) {
            u = embed(slot_gate(c, l, q), {q}, n) * u;
        }
        for (const auto &[a, b] : c.layers()[l].entanglers) {
            u = embed(gates::CZ(), QubitIndexSet({a, b}), n) * u;
        }
    }
    return u;
}

double loss_dense(const Circuit &c, const Observable &o, const StateVector &init) {
    check_dims(c, o, init);
    const ComplexMatrix u = circuit_unitary(c);
    const ComplexMatrix rho = init.density_matrix();
    return real_part_checked((rho * u.adjoint() * observable_matrix(o) * u).trace(),
                             "loss_dense");
}

GradientVector gradient_commutator_dense(const Circuit &c, const Observable &o,
                                         const StateVector &init) {
    check_dims(c, o, init);
    const std::size_t n = c.qubits();
    check_dense(n, "gradient_commutator_dense");
    if (o.is_identity()) {
        return GradientVector(c.num_params());
    }

    // Gate list in application order, each tagged with its parameter.
    struct Step {
        ComplexMatrix gate;
        std::optional<std::size_t> param;
        Axis axis = Axis::Z;
        std::size_t qubit = 0;
    };
    std::vector<Step> steps;
    for (std::size_t l = 0; l < c.depth(); ++l) {
        for (std::size_t q = 0; q < n; ++q) {
            const RotationSpec &r = c.layers()[l].rotations[q];
            Step s{embed(slot_gate(c, l, q), {q}, n), r.param, Axis::Z, q};
            if (r.param) {
                s.axis = rotation_axis(r.kind);
            }
            steps.push_back(std::move(s));
        }
        for (const auto &[a, b] : c.layers()[l].entanglers) {
            steps.push_back({embed(gates::CZ(), QubitIndexSet({a, b}), n), {}, Axis::Z, 0});
        }
    }

    // suffix[i] = product of steps i.. (later gates on the left).
    const std::size_t dim = dim_of(n);
    std::vector<ComplexMatrix> suffix(steps.size() + 1, ComplexMatrix::identity(dim));
    for (std::size_t i = steps.size(); i-- > 0;) {
        suffix[i] = suffix[i + 1] * steps[i].gate;
    }

    const ComplexMatrix obs = observable_matrix(o);
    GradientVector grad(c.num_params());
    ComplexMatrix prefix = ComplexMatrix::identity(dim);
    const ComplexMatrix rho = init.density_matrix();
    for (std::size_t i = 0; i < steps.size(); ++i) {
        prefix = steps[i].gate * prefix;
        if (!steps[i].param) {
            continue;
        }
        const ComplexMatrix rho_minus = prefix * rho * prefix.adjoint();
        const ComplexMatrix &u_plus = suffix[i + 1];
        const ComplexMatrix o_plus = u_plus.adjoint() * obs * u_plus;
        const ComplexMatrix p = embed(gates::pauli(steps[i].axis), {steps[i].qubit}, n);
        const cplx tr = (o_plus * commutator(rho_minus, p)).trace();
        grad[*steps[i].param] =
            real_part_checked(cplx{0.0, 0.5} * tr, "gradient_commutator_dense");
    }
    return grad;
}

} // namespace barren
