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
#include "barren/matkernel.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

namespace barren {

namespace {

void require_same_dim(const ComplexMatrix &a, const ComplexMatrix &b,
                      const char *op) {
    if (a.dim() != b.dim()) {
        throw DimensionError(std::string(op) + ": dimension mismatch (" +
                             std::to_string(a.dim()) + " vs " +
                             std::to_string(b.dim()) + ")");
    }
}

// Bit of qubit q inside an n-qubit basis index.
constexpr std::size_t qubit_bit(std::size_t q, std::size_t n) {
    return std::size_t{1} << (n - 1 - q);
}

// All global basis offsets obtained by distributing the bits of 0..2^k-1
// over `qubits` (first listed qubit is the most significant local bit).
std::vector<std::size_t> scatter_table(const std::vector<std::size_t> &qubits,
                                       std::size_t n) {
    const std::size_t k = qubits.size();
    std::vector<std::size_t> table(std::size_t{1} << k, 0);
    for (std::size_t local = 0; local < table.size(); ++local) {
        std::size_t global = 0;
        for (std::size_t i = 0; i < k; ++i) {
            if (local & (std::size_t{1} << (k - 1 - i))) {
                global |= qubit_bit(qubits[i], n);
            }
        }
        table[local] = global;
    }
    return table;
}

std::vector<std::size_t> complement(const QubitIndexSet &set, std::size_t n) {
    std::vector<std::size_t> rest;
    rest.reserve(n - set.size());
    for (std::size_t q = 0; q < n; ++q) {
        if (!set.contains(q)) {
            rest.push_back(q);
        }
    }
    return rest;
}

void check_operator(const ComplexMatrix &a, std::size_t n, const char *op) {
    if (a.dim() != dim_of(n)) {
        throw DimensionError(std::string(op) + ": operator of dimension " +
                             std::to_string(a.dim()) + " does not act on " +
                             std::to_string(n) + " qubits");
    }
}

} // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {
    if (dim == 0) {
        throw DimensionError("ComplexMatrix: dimension must be >= 1");
    }
}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<cplx> entries)
    : dim_(dim), data_(std::move(entries)) {
    if (dim == 0 || data_.size() != dim * dim) {
        throw DimensionError("ComplexMatrix: expected " + std::to_string(dim * dim) +
                             " entries, got " + std::to_string(data_.size()));
    }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows)
    : dim_(rows.size()) {
    if (dim_ == 0) {
        throw DimensionError("ComplexMatrix: empty literal");
    }
    data_.reserve(dim_ * dim_);
    for (const auto &row : rows) {
        if (row.size() != dim_) {
            throw DimensionError("ComplexMatrix: literal is not square");
        }
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const cplx> diag) {
    ComplexMatrix m(diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) {
        m(i, i) = diag[i];
    }
    return m;
}

cplx ComplexMatrix::trace() const {
    cplx t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) {
        t += (*this)(i, i);
    }
    return t;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const auto &z : data_) {
        m = std::max(m, std::abs(z));
    }
    return m;
}

bool ComplexMatrix::is_hermitian(double tol) const {
    return max_abs_diff(*this, adjoint()) <= tol;
}

bool ComplexMatrix::is_unitary(double tol) const {
    return max_abs_diff(adjoint() * (*this), identity(dim_)) <= tol;
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &rhs) {
    require_same_dim(*this, rhs, "operator+");
    for (std::size_t i = 0; i < data_.size(); ++i) {
        data_[i] += rhs.data_[i];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &rhs) {
    require_same_dim(*this, rhs, "operator-");
    for (std::size_t i = 0; i < data_.size(); ++i) {
        data_[i] -= rhs.data_[i];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(cplx s) {
    for (auto &z : data_) {
        z *= s;
    }
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a, b, "operator*");
    const std::size_t d = a.dim();
    ComplexMatrix out(d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t k = 0; k < d; ++k) {
            const cplx aik = a(i, k);
            if (aik == cplx{0.0, 0.0}) {
                continue;
            }
            for (std::size_t j = 0; j < d; ++j) {
                out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a, b, "max_abs_diff");
    double m = 0.0;
    for (std::size_t i = 0; i < a.entries().size(); ++i) {
        m = std::max(m, std::abs(a.entries()[i] - b.entries()[i]));
    }
    return m;
}

QubitIndexSet::QubitIndexSet(std::initializer_list<std::size_t> qubits)
    : QubitIndexSet(std::vector<std::size_t>(qubits)) {}

QubitIndexSet::QubitIndexSet(std::vector<std::size_t> qubits)
    : qubits_(std::move(qubits)) {
    std::sort(qubits_.begin(), qubits_.end());
    if (std::adjacent_find(qubits_.begin(), qubits_.end()) != qubits_.end()) {
        throw std::invalid_argument("QubitIndexSet: duplicate qubit index");
    }
}

QubitIndexSet QubitIndexSet::from_mask(unsigned long long mask, std::size_t n) {
    std::vector<std::size_t> qs;
    for (std::size_t q = 0; q < n; ++q) {
        if (mask & (1ULL << (n - 1 - q))) {
            qs.push_back(q);
        }
    }
    return QubitIndexSet(std::move(qs));
}

QubitIndexSet QubitIndexSet::all(std::size_t n) {
    std::vector<std::size_t> qs(n);
    for (std::size_t q = 0; q < n; ++q) {
        qs[q] = q;
    }
    return QubitIndexSet(std::move(qs));
}

bool QubitIndexSet::contains(std::size_t q) const {
    return std::binary_search(qubits_.begin(), qubits_.end(), q);
}

void QubitIndexSet::check_within(std::size_t n) const {
    if (!qubits_.empty() && qubits_.back() >= n) {
        throw std::out_of_range("qubit index " + std::to_string(qubits_.back()) +
                                " out of range for " + std::to_string(n) +
                                " qubits");
    }
}

std::size_t dim_of(std::size_t n) {
    if (n >= 8 * sizeof(std::size_t) / 2) {
        throw DimensionError("qubit count " + std::to_string(n) +
                             " too large for a dense operator");
    }
    return std::size_t{1} << n;
}

std::size_t qubits_of(std::size_t dim) {
    if (!std::has_single_bit(dim)) {
        throw DimensionError("dimension " + std::to_string(dim) +
                             " is not a power of two");
    }
    return static_cast<std::size_t>(std::countr_zero(dim));
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    const std::size_t da = a.dim();
    const std::size_t db = b.dim();
    ComplexMatrix out(da * db);
    for (std::size_t ra = 0; ra < da; ++ra) {
        for (std::size_t ca = 0; ca < da; ++ca) {
            const cplx s = a(ra, ca);
            if (s == cplx{0.0, 0.0}) {
                continue;
            }
            for (std::size_t rb = 0; rb < db; ++rb) {
                for (std::size_t cb = 0; cb < db; ++cb) {
                    out(ra * db + rb, ca * db + cb) = s * b(rb, cb);
                }
            }
        }
    }
    return out;
}

ComplexMatrix partial_trace(const ComplexMatrix &a, const QubitIndexSet &traced,
                            std::size_t n) {
    check_operator(a, n, "partial_trace");
    traced.check_within(n);
    const auto kept = complement(traced, n);
    const auto kept_off = scatter_table(kept, n);
    const auto traced_off = scatter_table(traced.indices(), n);

    ComplexMatrix out(kept_off.size());
    for (std::size_t r = 0; r < kept_off.size(); ++r) {
        for (std::size_t c = 0; c < kept_off.size(); ++c) {
            cplx acc = 0.0;
            for (const std::size_t t : traced_off) {
                acc += a(kept_off[r] | t, kept_off[c] | t);
            }
            out(r, c) = acc;
        }
    }
    return out;
}

ComplexMatrix embed(const ComplexMatrix &local, const QubitIndexSet &at,
                    std::size_t n) {
    at.check_within(n);
    if (local.dim() != dim_of(at.size())) {
        throw DimensionError("embed: local operator of dimension " +
                             std::to_string(local.dim()) + " does not act on " +
                             std::to_string(at.size()) + " qubits");
    }
    const auto local_off = scatter_table(at.indices(), n);
    const auto rest_off = scatter_table(complement(at, n), n);

    ComplexMatrix out(dim_of(n));
    for (const std::size_t rest : rest_off) {
        for (std::size_t lr = 0; lr < local_off.size(); ++lr) {
            for (std::size_t lc = 0; lc < local_off.size(); ++lc) {
                out(rest | local_off[lr], rest | local_off[lc]) = local(lr, lc);
            }
        }
    }
    return out;
}

ComplexMatrix trace_and_replace(const ComplexMatrix &a, const QubitIndexSet &sigma,
                                std::size_t n) {
    check_operator(a, n, "trace_and_replace");
    sigma.check_within(n);
    const auto rest_off = scatter_table(complement(sigma, n), n);
    const auto sigma_off = scatter_table(sigma.indices(), n);

    // Entries of the reduced operator, then spread over the identity block.
    ComplexMatrix out(dim_of(n));
    for (const std::size_t r : rest_off) {
        for (const std::size_t c : rest_off) {
            cplx acc = 0.0;
            for (const std::size_t t : sigma_off) {
                acc += a(r | t, c | t);
            }
            for (const std::size_t t : sigma_off) {
                out(r | t, c | t) = acc;
            }
        }
    }
    return out;
}

ComplexMatrix commutator(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a, b, "commutator");
    return a * b - b * a;
}

char axis_char(Axis axis) {
    switch (axis) {
    case Axis::X:
        return 'X';
    case Axis::Y:
        return 'Y';
    case Axis::Z:
        return 'Z';
    }
    return '?';
}

namespace gates {

ComplexMatrix I() { return {{1.0, 0.0}, {0.0, 1.0}}; }
ComplexMatrix X() { return {{0.0, 1.0}, {1.0, 0.0}}; }
ComplexMatrix Y() { return {{0.0, cplx{0.0, -1.0}}, {cplx{0.0, 1.0}, 0.0}}; }
ComplexMatrix Z() { return {{1.0, 0.0}, {0.0, -1.0}}; }

ComplexMatrix H() {
    const double s = 1.0 / std::numbers::sqrt2;
    return {{s, s}, {s, -s}};
}

ComplexMatrix CZ() {
    const std::vector<cplx> d{1.0, 1.0, 1.0, -1.0};
    return ComplexMatrix::diagonal(d);
}

ComplexMatrix pauli(Axis axis) {
    switch (axis) {
    case Axis::X:
        return X();
    case Axis::Y:
        return Y();
    case Axis::Z:
        return Z();
    }
    throw std::invalid_argument("pauli: bad axis");
}

} // namespace gates

ComplexMatrix rotation_gate(Axis axis, double theta) {
    if (axis == Axis::Z) {
        return {{1.0, 0.0}, {0.0, std::polar(1.0, theta)}};
    }
    return rotation_gate_full(axis, theta);
}

ComplexMatrix rotation_gate_full(Axis axis, double theta) {
    const double c = std::cos(theta / 2);
    const double s = std::sin(theta / 2);
    switch (axis) {
    case Axis::X:
        return {{c, cplx{0.0, -s}}, {cplx{0.0, -s}, c}};
    case Axis::Y:
        return {{c, -s}, {s, c}};
    case Axis::Z:
        return {{std::polar(1.0, -theta / 2), 0.0}, {0.0, std::polar(1.0, theta / 2)}};
    }
    throw std::invalid_argument("rotation_gate: bad axis");
}

} // namespace barren
