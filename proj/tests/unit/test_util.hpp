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
#pragma once

#include "barren/matkernel.hpp"
#include "barren/rng.hpp"
#include "barren/verify.hpp"

#include <cmath>
#include <complex>

namespace barren::test {

/// Pauli matrices written out independently of the library dictionary.
inline ComplexMatrix pauli_oracle(char p) {
    const cplx i{0.0, 1.0};
    switch (p) {
    case 'X':
        return {{0.0, 1.0}, {1.0, 0.0}};
    case 'Y':
        return {{0.0, -i}, {i, 0.0}};
    case 'Z':
        return {{1.0, 0.0}, {0.0, -1.0}};
    default:
        return {{1.0, 0.0}, {0.0, 1.0}};
    }
}

/// cos(t/2) I - i sin(t/2) P, optionally with the Z phase removed.
inline ComplexMatrix rotation_oracle(char p, double t, bool strip_z_phase) {
    const cplx i{0.0, 1.0};
    ComplexMatrix g = pauli_oracle('I') * cplx{std::cos(t / 2), 0.0} -
                      pauli_oracle(p) * (i * std::sin(t / 2));
    if (strip_z_phase && p == 'Z') {
        g *= std::exp(i * (t / 2));
    }
    return g;
}

/// Entry (r, c) of the n-qubit matrix is a product over qubits, qubit 0 highest bit.
inline ComplexMatrix embed_oracle(const ComplexMatrix &g, std::size_t j, std::size_t n) {
    const std::size_t dim = std::size_t{1} << n;
    ComplexMatrix out(dim);
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            cplx v = 1.0;
            for (std::size_t q = 0; q < n; ++q) {
                const std::size_t br = (r >> (n - 1 - q)) & 1U;
                const std::size_t bc = (c >> (n - 1 - q)) & 1U;
                v *= q == j ? g(br, bc) : cplx{br == bc ? 1.0 : 0.0, 0.0};
            }
            out(r, c) = v;
        }
    }
    return out;
}

/// Midpoint rule with `nodes` points over [-2 pi, 2 pi) and the three axes.
template <class F>
ComplexMatrix twirl_oracle(F fn, std::size_t j, std::size_t n, std::size_t nodes = 40) {
    const double pi = std::acos(-1.0);
    ComplexMatrix acc(std::size_t{1} << n);
    for (const char p : {'X', 'Y', 'Z'}) {
        for (std::size_t t = 0; t < nodes; ++t) {
            const double theta = -2 * pi + 4 * pi * (static_cast<double>(t) + 0.5) / nodes;
            acc += fn(embed_oracle(rotation_oracle(p, theta, true), j, n));
        }
    }
    return acc * cplx{1.0 / (3.0 * static_cast<double>(nodes)), 0.0};
}

} // namespace barren::test
