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

#include "test_util.hpp"

#include <gtest/gtest.h>

#include <numbers>

using namespace barren;

namespace {

ComplexMatrix partial_trace_oracle(const ComplexMatrix &a, std::size_t traced, std::size_t n) {
    // Trace one qubit by summing the two diagonal blocks in that bit.
    const std::size_t dim = std::size_t{1} << n;
    const std::size_t bit = std::size_t{1} << (n - 1 - traced);
    ComplexMatrix out(dim / 2);
    auto squeeze = [&](std::size_t x) {
        const std::size_t low = x & (bit - 1);
        const std::size_t high = (x >> 1) & ~(bit - 1);
        return high | low;
    };
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            if (((r ^ c) & bit) == 0) {
                out(squeeze(r), squeeze(c)) += a(r, c);
            }
        }
    }
    return out;
}

} // namespace

TEST(ComplexMatrix, RejectsBadShapes) {
    EXPECT_THROW(ComplexMatrix(0), DimensionError);
    EXPECT_THROW(ComplexMatrix(2, std::vector<cplx>(3)), DimensionError);
    EXPECT_THROW((ComplexMatrix{{1.0, 2.0}, {3.0}}), DimensionError);
    EXPECT_THROW(gates::X() * ComplexMatrix::identity(4), DimensionError);
    EXPECT_THROW(gates::X() + ComplexMatrix::identity(4), DimensionError);
}

TEST(ComplexMatrix, PredicatesAreNotInvariants) {
    const ComplexMatrix a{{1.0, 2.0}, {0.0, 1.0}};
    EXPECT_FALSE(a.is_hermitian());
    EXPECT_FALSE(a.is_unitary());
    EXPECT_TRUE(gates::H().is_unitary());
    EXPECT_TRUE(gates::Y().is_hermitian());
}

TEST(Kron, SpecExamples) {
    const cplx z = 0.0;
    EXPECT_EQ(kron(gates::Z(), gates::I()),
              ComplexMatrix::diagonal(std::vector<cplx>{1.0, 1.0, -1.0, -1.0}));
    EXPECT_EQ(kron(gates::I(), gates::I()), ComplexMatrix::identity(4));
    const ComplexMatrix anti{{z, z, z, 1.0}, {z, z, 1.0, z}, {z, 1.0, z, z}, {1.0, z, z, z}};
    EXPECT_EQ(kron(gates::X(), gates::X()), anti);
}

TEST(Kron, EntrywiseDefinitionAndAssociativity) {
    Rng rng(11);
    for (int rep = 0; rep < 20; ++rep) {
        const ComplexMatrix a = random_matrix(2, rng);
        const ComplexMatrix b = random_matrix(4, rng);
        const ComplexMatrix c = random_matrix(2, rng);
        const ComplexMatrix ab = kron(a, b);
        ASSERT_EQ(ab.dim(), 8U);
        for (std::size_t r = 0; r < 8; ++r) {
            for (std::size_t k = 0; k < 8; ++k) {
                EXPECT_EQ(ab(r, k), a(r / 4, k / 4) * b(r % 4, k % 4));
            }
        }
        EXPECT_LE(max_abs_diff(kron(kron(a, b), c), kron(a, kron(b, c))), 1e-14);
    }
}

TEST(PartialTrace, SpecExamples) {
    const ComplexMatrix zz = kron(gates::Z(), gates::Z());
    EXPECT_LE(partial_trace(zz, {1}, 2).max_abs(), 0.0);
    EXPECT_EQ(partial_trace(ComplexMatrix::identity(4), {0}, 2),
              ComplexMatrix::identity(2) * cplx(2.0, 0.0));
    ComplexMatrix p00(4);
    p00(0, 0) = 1.0;
    EXPECT_EQ(partial_trace(p00, {1}, 2), ComplexMatrix::diagonal(std::vector<cplx>{1.0, 0.0}));
}

TEST(PartialTrace, MatchesBlockOracleAndPreservesTrace) {
    Rng rng(12);
    for (int rep = 0; rep < 200; ++rep) {
        const std::size_t n = 1 + static_cast<std::size_t>(rep % 4);
        const ComplexMatrix a = random_matrix(dim_of(n), rng);
        const std::size_t q = static_cast<std::size_t>(rng.below(n));
        const ComplexMatrix pt = partial_trace(a, {q}, n);
        EXPECT_LE(max_abs_diff(pt, partial_trace_oracle(a, q, n)), 1e-14);
        EXPECT_LE(std::abs(pt.trace() - a.trace()), 1e-12);
        const auto mask = rng.below(std::uint64_t{1} << n);
        EXPECT_LE(std::abs(partial_trace(a, QubitIndexSet::from_mask(mask, n), n).trace() -
                           a.trace()),
                  1e-12);
    }
}

TEST(PartialTrace, ProductOfFactors) {
    Rng rng(13);
    const ComplexMatrix a = random_matrix(2, rng);
    const ComplexMatrix b = random_matrix(4, rng);
    EXPECT_LE(max_abs_diff(partial_trace(kron(a, b), {1, 2}, 3), a * b.trace()), 1e-14);
    EXPECT_LE(max_abs_diff(partial_trace(kron(a, b), {0}, 3), b * a.trace()), 1e-14);
}

TEST(PartialTrace, Errors) {
    EXPECT_THROW(partial_trace(ComplexMatrix::identity(4), {0}, 3), DimensionError);
    EXPECT_THROW(partial_trace(ComplexMatrix::identity(4), {2}, 2), std::out_of_range);
    EXPECT_THROW(QubitIndexSet({1, 1}), std::invalid_argument);
    EXPECT_EQ(QubitIndexSet({2, 0}).indices(), (std::vector<std::size_t>{0, 2}));
}

TEST(Embed, SpecExamples) {
    EXPECT_EQ(embed(gates::Z(), {0}, 2), kron(gates::Z(), gates::I()));
    EXPECT_EQ(embed(gates::Z(), {1}, 2), kron(gates::I(), gates::Z()));
    EXPECT_EQ(embed(gates::CZ(), {0, 1}, 3), kron(gates::CZ(), gates::I()));
    EXPECT_THROW(embed(gates::Z(), {3}, 2), std::out_of_range);
    EXPECT_THROW(embed(gates::CZ(), {0}, 2), DimensionError);
}

TEST(Embed, NonAdjacentMatchesOracle) {
    Rng rng(14);
    const ComplexMatrix g = random_matrix(2, rng);
    for (std::size_t j = 0; j < 3; ++j) {
        EXPECT_LE(max_abs_diff(embed(g, {j}, 3), test::embed_oracle(g, j, 3)), 0.0);
    }
    // CZ is symmetric, so its placement on (0, 2) is diag with -1 where both bits are set.
    const ComplexMatrix cz02 = embed(gates::CZ(), {0, 2}, 3);
    for (std::size_t x = 0; x < 8; ++x) {
        EXPECT_EQ(cz02(x, x), cplx((x & 5U) == 5U ? -1.0 : 1.0));
    }
}

TEST(TraceAndReplace, IsIdentityTensorPartialTrace) {
    Rng rng(15);
    const ComplexMatrix a = random_matrix(8, rng);
    const ComplexMatrix got = trace_and_replace(a, {1}, 3);
    // I on qubit 1, reduced operator on qubits {0, 2}.
    const ComplexMatrix red = partial_trace(a, {1}, 3);
    for (std::size_t r = 0; r < 8; ++r) {
        for (std::size_t c = 0; c < 8; ++c) {
            const bool same_mid = ((r >> 1) & 1U) == ((c >> 1) & 1U);
            const std::size_t rr = ((r >> 2) << 1) | (r & 1U);
            const std::size_t cc = ((c >> 2) << 1) | (c & 1U);
            EXPECT_EQ(got(r, c), same_mid ? red(rr, cc) : cplx(0.0, 0.0));
        }
    }
    EXPECT_EQ(trace_and_replace(a, {}, 3), a);
    EXPECT_LE(max_abs_diff(trace_and_replace(a, QubitIndexSet::all(3), 3),
                           ComplexMatrix::identity(8) * a.trace()),
              1e-14);
}

TEST(Commutator, SpecExamples) {
    EXPECT_LE(commutator(gates::X(), gates::X()).max_abs(), 0.0);
    EXPECT_EQ(commutator(gates::X(), gates::Z()), gates::Y() * cplx(0.0, -2.0));
    Rng rng(16);
    const ComplexMatrix a = random_matrix(4, rng);
    EXPECT_LE(commutator(ComplexMatrix::identity(4), a).max_abs(), 0.0);
}

TEST(Commutator, AlwaysTraceless) {
    Rng rng(17);
    for (int rep = 0; rep < 100; ++rep) {
        const std::size_t dim = dim_of(1 + static_cast<std::size_t>(rep % 3));
        EXPECT_LE(std::abs(commutator(random_matrix(dim, rng), random_matrix(dim, rng)).trace()),
                  1e-14);
    }
    EXPECT_THROW(commutator(gates::X(), ComplexMatrix::identity(4)), DimensionError);
}

TEST(RotationGate, SpecExamples) {
    const double pi = std::numbers::pi;
    const ComplexMatrix ry{{0.0, -1.0}, {1.0, 0.0}};
    EXPECT_LE(max_abs_diff(rotation_gate(Axis::Y, pi), ry), 1e-15);
    EXPECT_LE(max_abs_diff(rotation_gate(Axis::X, 0.0), gates::I()), 0.0);
    EXPECT_LE(max_abs_diff(rotation_gate(Axis::Z, pi),
                           ComplexMatrix::diagonal(std::vector<cplx>{1.0, -1.0})),
              1e-15);
}

TEST(RotationGate, UnitaryAndMatchesExponential) {
    Rng rng(18);
    for (int rep = 0; rep < 100; ++rep) {
        const double t = rng.uniform(-2 * std::numbers::pi, 2 * std::numbers::pi);
        for (const Axis ax : {Axis::X, Axis::Y, Axis::Z}) {
            const ComplexMatrix g = rotation_gate(ax, t);
            EXPECT_LE(max_abs_diff(g * g.adjoint(), gates::I()), 1e-14);
            EXPECT_LE(max_abs_diff(g, test::rotation_oracle(axis_char(ax), t, true)), 1e-15);
            EXPECT_LE(max_abs_diff(rotation_gate_full(ax, t),
                                   test::rotation_oracle(axis_char(ax), t, false)),
                      1e-15);
        }
    }
}

TEST(Dimensions, QubitCounts) {
    EXPECT_EQ(dim_of(3), 8U);
    EXPECT_EQ(qubits_of(16), 4U);
    EXPECT_THROW(qubits_of(6), DimensionError);
    EXPECT_EQ(QubitIndexSet::from_mask(0b101, 3).indices(), (std::vector<std::size_t>{0, 2}));
}
