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

#include "barren/moments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>

namespace barren {

ComplexMatrix random_matrix(std::size_t dim, Rng &rng) {
    ComplexMatrix m(dim);
    for (cplx &z : m.entries()) {
        const double re = rng.uniform(-1.0, 1.0);
        const double im = rng.uniform(-1.0, 1.0);
        z = {re, im};
    }
    return m;
}

ComplexMatrix random_hermitian(std::size_t dim, Rng &rng) {
    const ComplexMatrix m = random_matrix(dim, rng);
    return (m + m.adjoint()) * cplx{0.5, 0.0};
}

std::string to_string(VerifyStatus s) {
    switch (s) {
    case VerifyStatus::Pass:
        return "PASS";
    case VerifyStatus::Fail:
        return "FAIL";
    case VerifyStatus::ExpectedDivergence:
        return "EXPECTED-DIVERGENCE";
    }
    return "?";
}

cplx epsilon_trace_residue(const ComplexMatrix &a, const ComplexMatrix &b,
                           const ComplexMatrix &c, std::size_t j, std::size_t n) {
    if (n == 1) {
        return {0.0, 0.0};
    }
    const QubitIndexSet traced{j};
    const ComplexMatrix tb = partial_trace(b, traced, n);
    const ComplexMatrix t_ca = partial_trace(c * a, traced, n);
    const ComplexMatrix t_ac = partial_trace(a * c, traced, n);
    return (4.0 / 3.0) * ((t_ca * tb).trace() - (t_ac * tb).trace());
}

namespace {

constexpr std::uint64_t kSuiteSeed = 20260101;

VerifyRow check(std::string name, double worst, double tol, std::string detail) {
    return {std::move(name), worst <= tol ? VerifyStatus::Pass : VerifyStatus::Fail, worst,
            tol, std::move(detail)};
}

ComplexMatrix single_qubit_average(const ComplexMatrix &a, std::size_t j, std::size_t n) {
    return quadrature_gate_average([&](const ComplexMatrix &g) {
        const ComplexMatrix u = embed(g, {j}, n);
        return u.adjoint() * a * u;
    });
}

VerifyRow row_first_moment_single() {
    Rng rng(kSuiteSeed, 1);
    double worst = 0.0;
    for (std::size_t i = 0; i < 500; ++i) {
        const std::size_t n = 1 + i % 3;
        const std::size_t j = (i / 3) % n;
        const ComplexMatrix a = random_hermitian(dim_of(n), rng);
        worst = std::max(worst, max_abs_diff(first_moment_single(a, j, n),
                                             single_qubit_average(a, j, n)));
    }
    return check("first moment, one slot vs quadrature", worst, 1e-12,
                 "500 random Hermitian, n <= 3");
}

VerifyRow row_layer_powerset() {
    Rng rng(kSuiteSeed, 2);
    double worst = 0.0;
    for (std::size_t n = 1; n <= 4; ++n) {
        for (int rep = 0; rep < 5; ++rep) {
            const ComplexMatrix a = random_matrix(dim_of(n), rng);
            worst = std::max(worst, max_abs_diff(first_moment_layer(a, n),
                                                 first_moment_layer_powerset(a, n)));
        }
    }
    return check("first moment layer, sequential vs subset sum", worst, 1e-12, "n <= 4");
}

VerifyRow row_unitality() {
    Rng rng(kSuiteSeed, 3);
    double worst = 0.0;
    for (std::size_t n = 1; n <= 4; ++n) {
        const ComplexMatrix id = ComplexMatrix::identity(dim_of(n));
        const ComplexMatrix a = random_hermitian(dim_of(n), rng);
        ComplexMatrix img = id;
        ComplexMatrix out = a;
        for (std::size_t d = 1; d <= 10; ++d) {
            img = first_moment_layer(img, n);
            out = first_moment_layer(out, n);
            worst = std::max(worst, max_abs_diff(img, id));
            worst = std::max(worst, std::abs(out.trace() - a.trace()));
        }
    }
    return check("depth-d first moment, unital and trace preserving", worst, 1e-12,
                 "n <= 4, d <= 10");
}

VerifyRow row_depth_agreement() {
    Rng rng(kSuiteSeed, 4);
    double worst = 0.0;
    for (std::size_t n = 1; n <= 4; ++n) {
        const ComplexMatrix a = random_hermitian(dim_of(n), rng);
        for (std::size_t d = 1; d <= 2; ++d) {
            worst = std::max(worst, max_abs_diff(first_moment_depth_paper(a, n, d),
                                                 first_moment_depth_exact(a, n, d)));
        }
    }
    return check("printed depth form vs exact, d in {1,2}", worst, 1e-12, "n <= 4");
}

VerifyRow row_depth_divergence() {
    // Single qubit: both maps are c0 A + c1 I Tr A; read c1 off A = |0><0|.
    const ComplexMatrix a = ComplexMatrix::diagonal(std::vector<cplx>{1.0, 0.0});
    const ComplexMatrix printed = first_moment_depth_paper(a, 1, 3);
    const ComplexMatrix exact = first_moment_depth_exact(a, 1, 3);
    const double gap = (printed(1, 1) - exact(1, 1)).real();
    const double unital = first_moment_expansion_paper(1, 3).unitality_sum();
    char detail[160];
    std::snprintf(detail, sizeof detail,
                  "n=1 d=3: I Tr A coefficient 16/27 printed vs 13/27 exact; printed map "
                  "sends I to %.6f I",
                  unital);
    const bool reproduced = std::abs(gap - 1.0 / 9.0) <= 1e-12 &&
                            std::abs(printed(1, 1).real() - 16.0 / 27.0) <= 1e-12 &&
                            std::abs(exact(1, 1).real() - 13.0 / 27.0) <= 1e-12;
    return {"printed depth form vs exact, d = 3",
            reproduced ? VerifyStatus::ExpectedDivergence : VerifyStatus::Fail, gap, 1.0 / 9.0,
            detail};
}

VerifyRow row_cos4() {
    const double v = quadrature_angle_average([](double t) { return std::pow(std::cos(t / 2), 4); });
    return check("angle average of cos^4(theta/2) = 3/8", std::abs(v - 0.375), 1e-15,
                 "16-node rule");
}

VerifyRow row_epsilon_n1() {
    Rng rng(kSuiteSeed, 5);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const ComplexMatrix a = random_hermitian(2, rng);
        const ComplexMatrix b = random_hermitian(2, rng);
        const ComplexMatrix c = random_hermitian(2, rng);
        const SecondMoment s = second_moment_single(a, b, c, 0, 1);
        worst = std::max(worst, std::abs(s.decomposition.epsilon_part.trace()));
    }
    return check("second moment remainder is traceless, n = 1", worst, 1e-10,
                 "100 random Hermitian triples");
}

VerifyRow row_epsilon_residue() {
    Rng rng(kSuiteSeed, 6);
    double worst = 0.0;
    for (int i = 0; i < 40; ++i) {
        const std::size_t n = 2 + i % 2;
        const std::size_t j = static_cast<std::size_t>(i) % n;
        const ComplexMatrix a = random_hermitian(dim_of(n), rng);
        const ComplexMatrix b = random_hermitian(dim_of(n), rng);
        const ComplexMatrix c = random_hermitian(dim_of(n), rng);
        const SecondMoment s = second_moment_single(a, b, c, j, n);
        worst = std::max(worst, std::abs(s.decomposition.epsilon_part.trace() -
                                         epsilon_trace_residue(a, b, c, j, n)));
    }
    return check("second moment remainder trace, n in {2,3}", worst, 1e-10,
                 "matches the partial-trace residue formula");
}

VerifyRow row_brute_single() {
    Rng rng(kSuiteSeed, 7);
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
        const ComplexMatrix a = random_hermitian(2, rng);
        const ComplexMatrix b = random_hermitian(2, rng);
        const ComplexMatrix c = random_hermitian(2, rng);
        worst = std::max(worst, max_abs_diff(brute_force_moment(1, 1, a, b, c),
                                             second_moment_single(a, b, c, 0, 1).exact));
    }
    return check("grid oracle vs one-slot second moment", worst, 1e-12, "n = 1, d = 1");
}

VerifyRow row_second_budget() {
    Rng rng(kSuiteSeed, 8);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const ComplexMatrix a = random_hermitian(2, rng);
        const ComplexMatrix b = random_hermitian(2, rng);
        const ComplexMatrix c = random_hermitian(2, rng);
        const SecondMoment s = second_moment_single(a, b, c, 0, 1);
        const ComplexMatrix printed = second_moment_depth_paper(a, b, c, 1, 1);
        for (std::size_t r = 0; r < 2; ++r) {
            for (std::size_t k = 0; k < 2; ++k) {
                const double budget = std::abs(s.decomposition.g_part(r, k)) / 12 +
                                      std::abs(s.decomposition.epsilon_part(r, k)) / 4;
                worst = std::max(worst, std::abs(printed(r, k) - s.exact(r, k)) - budget);
            }
        }
    }
    return check("printed second moment within g/12 + eps/4", std::max(worst, 0.0), 1e-12,
                 "n = 1, d = 1, 100 triples; measured = worst excess over budget");
}

VerifyRow row_cz_invariance() {
    Rng rng(kSuiteSeed, 9);
    double worst = 0.0;
    for (std::size_t n = 2; n <= 4; ++n) {
        for (int rep = 0; rep < 5; ++rep) {
            ComplexMatrix w = ComplexMatrix::identity(dim_of(n));
            for (std::size_t a = 0; a < n; ++a) {
                for (std::size_t b = a + 1; b < n; ++b) {
                    if (rng.below(2) == 1) {
                        w = embed(gates::CZ(), {a, b}, n) * w;
                    }
                }
            }
            const ComplexMatrix a = random_hermitian(dim_of(n), rng);
            const cplx lhs = first_moment_layer(w.adjoint() * a * w, n).trace();
            const cplx rhs = first_moment_layer(a, n).trace();
            worst = std::max(worst, std::abs(lhs - rhs));
        }
    }
    return check("fixed CZ layer leaves the traced first moment unchanged", worst, 1e-12,
                 "n in {2,3,4}, random CZ sets");
}

} // namespace

std::vector<VerifyRow> run_verify_suite() {
    return {row_first_moment_single(), row_layer_powerset(), row_unitality(),
            row_depth_agreement(),     row_depth_divergence(), row_cos4(),
            row_epsilon_n1(),          row_epsilon_residue(),  row_brute_single(),
            row_second_budget(),       row_cz_invariance()};
}

bool suite_passed(const std::vector<VerifyRow> &rows) {
    return std::none_of(rows.begin(), rows.end(),
                        [](const VerifyRow &r) { return r.status == VerifyStatus::Fail; });
}

std::string render_verify_table(const std::vector<VerifyRow> &rows) {
    std::size_t width = 5;
    for (const auto &r : rows) {
        width = std::max(width, r.name.size());
    }
    std::string out;
    char buf[512];
    std::snprintf(buf, sizeof buf, "%-*s  %-19s  %-10s  %-10s  %s\n", static_cast<int>(width),
                  "check", "status", "measured", "tolerance", "detail");
    out += buf;
    for (const auto &r : rows) {
        std::snprintf(buf, sizeof buf, "%-*s  %-19s  %-10.3g  %-10.3g  %s\n",
                      static_cast<int>(width), r.name.c_str(), to_string(r.status).c_str(),
                      r.measured, r.tolerance, r.detail.c_str());
        out += buf;
    }
    return out;
}

} // namespace barren
