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
#include "barren/moments.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace barren {

namespace {

constexpr std::array<Axis, 3> kAxes{Axis::X, Axis::Y, Axis::Z};

void check_operator(const ComplexMatrix &a, std::size_t n, const char *op) {
    if (a.dim() != dim_of(n)) {
        throw DimensionError(std::string(op) + ": operator of dimension " +
                             std::to_string(a.dim()) + " does not act on " +
                             std::to_string(n) + " qubits");
    }
}

void check_second_moment(const ComplexMatrix &a, const ComplexMatrix &b,
                         const ComplexMatrix &c, std::size_t n, const char *op) {
    if (n > kSecondMomentMaxQubits) {
        throw std::invalid_argument(std::string(op) + ": limited to " +
                                    std::to_string(kSecondMomentMaxQubits) + " qubits");
    }
    check_operator(a, n, op);
    check_operator(b, n, op);
    check_operator(c, n, op);
}

void check_depth(std::size_t d) {
    if (d == 0) {
        throw std::invalid_argument("depth must be >= 1");
    }
}

// Dense accumulation of a subset-indexed expansion.
template <class Coefficient, class Term>
ComplexMatrix sum_over_subsets(std::size_t n, std::size_t dim, Coefficient coeff,
                               Term term) {
    ComplexMatrix out(dim);
    for (unsigned long long mask = 0; mask < (1ULL << n); ++mask) {
        const double w = coeff(mask);
        if (w == 0.0) {
            continue;
        }
        out += term(QubitIndexSet::from_mask(mask, n)) * cplx{w, 0.0};
    }
    return out;
}

// out = a * b for small fixed-size blocks, reusing storage.
void multiply_into(std::vector<cplx> &out, const std::vector<cplx> &a,
                   const std::vector<cplx> &b, std::size_t d) {
    std::fill(out.begin(), out.end(), cplx{0.0, 0.0});
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t k = 0; k < d; ++k) {
            const cplx aik = a[i * d + k];
            for (std::size_t j = 0; j < d; ++j) {
                out[i * d + j] += aik * b[k * d + j];
            }
        }
    }
}

// out = a^dagger * b
void adjoint_multiply_into(std::vector<cplx> &out, const std::vector<cplx> &a,
                           const std::vector<cplx> &b, std::size_t d) {
    std::fill(out.begin(), out.end(), cplx{0.0, 0.0});
    for (std::size_t k = 0; k < d; ++k) {
        for (std::size_t i = 0; i < d; ++i) {
            const cplx aki = std::conj(a[k * d + i]);
            for (std::size_t j = 0; j < d; ++j) {
                out[i * d + j] += aki * b[k * d + j];
            }
        }
    }
}

} // namespace

std::array<double, kQuadratureNodes> quadrature_angles() {
    std::array<double, kQuadratureNodes> nodes{};
    for (std::size_t t = 0; t < kQuadratureNodes; ++t) {
        nodes[t] = -2 * std::numbers::pi +
                   4 * std::numbers::pi * static_cast<double>(t) / kQuadratureNodes;
    }
    return nodes;
}

double quadrature_angle_average(const std::function<double(double)> &f) {
    double s = 0.0;
    for (const double theta : quadrature_angles()) {
        s += f(theta);
    }
    return s / kQuadratureNodes;
}

ComplexMatrix quadrature_axis_average(
    Axis axis, const std::function<ComplexMatrix(const ComplexMatrix &)> &fn) {
    ComplexMatrix acc;
    bool first = true;
    for (const double theta : quadrature_angles()) {
        ComplexMatrix v = fn(rotation_gate(axis, theta));
        if (first) {
            acc = std::move(v);
            first = false;
        } else {
            acc += v;
        }
    }
    return acc * cplx{1.0 / kQuadratureNodes, 0.0};
}

ComplexMatrix quadrature_gate_average(
    const std::function<ComplexMatrix(const ComplexMatrix &)> &fn) {
    ComplexMatrix acc = quadrature_axis_average(kAxes[0], fn);
    acc += quadrature_axis_average(kAxes[1], fn);
    acc += quadrature_axis_average(kAxes[2], fn);
    return acc * cplx{1.0 / 3.0, 0.0};
}

ComplexMatrix first_moment_single(const ComplexMatrix &a, std::size_t j, std::size_t n) {
    check_operator(a, n, "first_moment_single");
    if (j >= n) {
        throw std::out_of_range("first_moment_single: qubit out of range");
    }
    return (a + trace_and_replace(a, {j}, n)) * cplx{1.0 / 3.0, 0.0};
}

ComplexMatrix first_moment_layer(const ComplexMatrix &a, std::size_t n) {
    check_operator(a, n, "first_moment_layer");
    ComplexMatrix out = a;
    for (std::size_t j = 0; j < n; ++j) {
        out = first_moment_single(out, j, n);
    }
    return out;
}

ComplexMatrix first_moment_layer_powerset(const ComplexMatrix &a, std::size_t n) {
    check_operator(a, n, "first_moment_layer_powerset");
    const double w = std::pow(3.0, -static_cast<double>(n));
    return sum_over_subsets(
        n, a.dim(), [w](unsigned long long) { return w; },
        [&](const QubitIndexSet &s) { return trace_and_replace(a, s, n); });
}

ComplexMatrix first_moment_depth_exact(const ComplexMatrix &a, std::size_t n,
                                       std::size_t d) {
    check_depth(d);
    ComplexMatrix out = a;
    for (std::size_t i = 0; i < d; ++i) {
        out = first_moment_layer(out, n);
    }
    return out;
}

ComplexMatrix first_moment_depth_paper(const ComplexMatrix &a, std::size_t n,
                                       std::size_t d) {
    check_operator(a, n, "first_moment_depth_paper");
    return first_moment_expansion_paper(n, d).apply(a);
}

double FirstMomentExpansion::coefficient(const QubitIndexSet &sigma) const {
    sigma.check_within(n);
    unsigned long long mask = 0;
    for (const std::size_t q : sigma) {
        mask |= 1ULL << (n - 1 - q);
    }
    return coefficients.at(mask);
}

ComplexMatrix FirstMomentExpansion::apply(const ComplexMatrix &a) const {
    check_operator(a, n, "FirstMomentExpansion::apply");
    return sum_over_subsets(
        n, a.dim(), [this](unsigned long long m) { return coefficients[m]; },
        [&](const QubitIndexSet &s) { return trace_and_replace(a, s, n); });
}

double FirstMomentExpansion::unitality_sum() const {
    double s = 0.0;
    for (unsigned long long m = 0; m < coefficients.size(); ++m) {
        s += coefficients[m] * std::ldexp(1.0, std::popcount(m));
    }
    return s;
}

FirstMomentExpansion first_moment_expansion_exact(std::size_t n, std::size_t d) {
    check_depth(d);
    dim_of(n);
    const double keep = std::pow(3.0, -static_cast<double>(d));
    const double traced = (1.0 - keep) / 2.0;
    FirstMomentExpansion e{n, d, std::vector<double>(1ULL << n)};
    for (unsigned long long m = 0; m < e.coefficients.size(); ++m) {
        const int k = std::popcount(m);
        e.coefficients[m] = std::pow(keep, static_cast<double>(n) - k) * std::pow(traced, k);
    }
    return e;
}

FirstMomentExpansion first_moment_expansion_paper(std::size_t n, std::size_t d) {
    check_depth(d);
    dim_of(n);
    const double three_n = std::pow(3.0, static_cast<double>(n));
    FirstMomentExpansion e{n, d, std::vector<double>(1ULL << n)};
    for (unsigned long long m = 0; m < e.coefficients.size(); ++m) {
        const double ratio = std::pow(4.0, std::popcount(m)) / three_n;
        e.coefficients[m] = std::pow(ratio, static_cast<double>(d) - 1.0) / three_n;
    }
    return e;
}

ComplexMatrix second_moment_f(const ComplexMatrix &a, const ComplexMatrix &b,
                              const ComplexMatrix &c, std::size_t j, std::size_t n) {
    check_second_moment(a, b, c, n, "second_moment_f");
    return a * b * c + trace_and_replace(a * c, {j}, n) * b;
}

ComplexMatrix second_moment_g(const ComplexMatrix &a, const ComplexMatrix &b,
                              const ComplexMatrix &c, std::size_t j, std::size_t n) {
    check_second_moment(a, b, c, n, "second_moment_g");
    const auto tr = [&](const ComplexMatrix &x) { return trace_and_replace(x, {j}, n); };
    const ComplexMatrix abc = a * b * c;
    return tr(abc) - tr(b * c) * a - tr(a * b) * c + tr(a) * (b * c) + tr(b) * (a * c) +
           tr(c) * (a * b) - abc;
}

SecondMoment second_moment_single(const ComplexMatrix &a, const ComplexMatrix &b,
                                  const ComplexMatrix &c, std::size_t j, std::size_t n) {
    check_second_moment(a, b, c, n, "second_moment_single");
    if (j >= n) {
        throw std::out_of_range("second_moment_single: qubit out of range");
    }
    ComplexMatrix exact = quadrature_gate_average([&](const ComplexMatrix &g) {
        const ComplexMatrix u = embed(g, {j}, n);
        const ComplexMatrix ud = u.adjoint();
        return ud * a * u * b * ud * c * u;
    });
    ComplexMatrix f = second_moment_f(a, b, c, j, n);
    ComplexMatrix g = second_moment_g(a, b, c, j, n);
    // exact = (f + eps)/4 + g/12
    ComplexMatrix eps = exact * cplx{4.0, 0.0} - f - g * cplx{1.0 / 3.0, 0.0};
    return {std::move(exact), {std::move(f), std::move(g), std::move(eps)}};
}

ComplexMatrix second_moment_depth_paper(const ComplexMatrix &a, const ComplexMatrix &b,
                                        const ComplexMatrix &c, std::size_t n,
                                        std::size_t d) {
    check_second_moment(a, b, c, n, "second_moment_depth_paper");
    check_depth(d);
    const ComplexMatrix ac = a * c;
    const double four_n = std::pow(4.0, static_cast<double>(n));
    return sum_over_subsets(
        n, a.dim(),
        [&](unsigned long long m) {
            const double k = std::popcount(m);
            return std::pow(4.0, (k - static_cast<double>(n)) * (static_cast<double>(d) - 1.0)) /
                   four_n;
        },
        [&](const QubitIndexSet &s) {
            if (s.empty()) {
                return ComplexMatrix(a * b * c);
            }
            return ComplexMatrix(trace_and_replace(ac, s, n) * b);
        });
}

ComplexMatrix brute_force_moment(std::size_t n, std::size_t d, const ComplexMatrix &a,
                                 const ComplexMatrix &b, const ComplexMatrix &c) {
    check_depth(d);
    if (n == 0 || n * d > kBruteForceMaxSlots) {
        throw std::invalid_argument("brute_force_moment: " + std::to_string(n * d) +
                                    " slots exceed the limit of " +
                                    std::to_string(kBruteForceMaxSlots));
    }
    check_second_moment(a, b, c, n, "brute_force_moment");

    const std::size_t slots = n * d;
    const std::size_t dim = dim_of(n);
    const std::size_t d2 = dim * dim;

    // Every (axis, node) choice for every slot, already embedded. Slot
    // s = layer * n + qubit; later layers multiply from the left.
    std::vector<std::vector<std::vector<cplx>>> choices(slots);
    for (std::size_t s = 0; s < slots; ++s) {
        for (const Axis axis : kAxes) {
            for (const double theta : quadrature_angles()) {
                const ComplexMatrix g = embed(rotation_gate(axis, theta), {s % n}, n);
                choices[s].emplace_back(g.entries().begin(), g.entries().end());
            }
        }
    }

    const std::vector<cplx> av(a.entries().begin(), a.entries().end());
    const std::vector<cplx> bv(b.entries().begin(), b.entries().end());
    const std::vector<cplx> cv(c.entries().begin(), c.entries().end());

    std::vector<std::vector<cplx>> partial(slots + 1, std::vector<cplx>(d2));
    for (std::size_t i = 0; i < dim; ++i) {
        partial[0][i * dim + i] = 1.0;
    }
    std::vector<cplx> acc(d2), t1(d2), x(d2), y(d2), xb(d2), term(d2);

    // Depth-first over slots; partial[s] is the product of the first s gates.
    std::vector<std::size_t> pick(slots, 0);
    std::size_t level = 0;
    while (true) {
        if (level == slots) {
            const std::vector<cplx> &u = partial[slots];
            multiply_into(t1, av, u, dim);
            adjoint_multiply_into(x, u, t1, dim);
            multiply_into(t1, cv, u, dim);
            adjoint_multiply_into(y, u, t1, dim);
            multiply_into(xb, x, bv, dim);
            multiply_into(term, xb, y, dim);
            for (std::size_t i = 0; i < d2; ++i) {
                acc[i] += term[i];
            }
            // Backtrack to the deepest slot with choices left.
            while (level > 0 && ++pick[level - 1] == choices[level - 1].size()) {
                pick[level - 1] = 0;
                --level;
            }
            if (level == 0) {
                break;
            }
            --level;
        }
        multiply_into(partial[level + 1], choices[level][pick[level]], partial[level], dim);
        ++level;
    }

    const double weight = std::pow(1.0 / (3.0 * kQuadratureNodes), static_cast<double>(slots));
    ComplexMatrix out(dim, std::move(acc));
    return out * cplx{weight, 0.0};
}

} // namespace barren
