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
#include "barren/verify.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace barren;

TEST(VerifySuite, PassesWithOneDocumentedDivergence) {
    const auto rows = run_verify_suite();
    EXPECT_TRUE(suite_passed(rows));
    ASSERT_FALSE(rows.empty());
    EXPECT_EQ(std::count_if(rows.begin(), rows.end(),
                            [](const VerifyRow &r) { return r.status == VerifyStatus::Fail; }),
              0);
    EXPECT_EQ(std::count_if(rows.begin(), rows.end(),
                            [](const VerifyRow &r) {
                                return r.status == VerifyStatus::ExpectedDivergence;
                            }),
              1);
    for (const auto &r : rows) {
        if (r.status == VerifyStatus::Pass) {
            EXPECT_LE(r.measured, r.tolerance) << r.name;
        }
    }
    const std::string table = render_verify_table(rows);
    EXPECT_NE(table.find("EXPECTED-DIVERGENCE"), std::string::npos);
    EXPECT_EQ(table.find("FAIL"), std::string::npos);
}

TEST(VerifySuite, Deterministic) {
    const auto a = run_verify_suite();
    const auto b = run_verify_suite();
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].name, b[i].name);
        EXPECT_EQ(a[i].measured, b[i].measured);
    }
}

TEST(VerifySuite, FailedRowFailsSuite) {
    auto rows = run_verify_suite();
    rows.front().status = VerifyStatus::Fail;
    EXPECT_FALSE(suite_passed(rows));
    EXPECT_NE(render_verify_table(rows).find("FAIL"), std::string::npos);
}

TEST(RandomOperators, HermitianAndBounded) {
    Rng rng(3);
    const ComplexMatrix h = random_hermitian(8, rng);
    EXPECT_LE(max_abs_diff(h, h.adjoint()), 0.0);
    const ComplexMatrix m = random_matrix(4, rng);
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t k = 0; k < 4; ++k) {
            EXPECT_LT(std::abs(m(i, k).real()), 1.0);
            EXPECT_LT(std::abs(m(i, k).imag()), 1.0);
        }
    }
}

TEST(EpsilonResidue, VanishesOnOneQubit) {
    Rng rng(4);
    const ComplexMatrix a = random_hermitian(2, rng);
    EXPECT_EQ(epsilon_trace_residue(a, a, a, 0, 1), cplx(0.0, 0.0));
}
