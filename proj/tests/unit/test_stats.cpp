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
#include "barren/stats.hpp"

#include "test_util.hpp"

#include <gtest/gtest.h>

#include <cstring>
#include <numbers>

using namespace barren;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

std::vector<double> stream(std::uint64_t seed, std::size_t count) {
    Rng rng(seed);
    std::vector<double> xs(count);
    for (double &x : xs) {
        x = 3.0 + rng.uniform(-1.0, 1.0) * rng.uniform(0.0, 2.0);
    }
    return xs;
}

MomentAccumulator fold(const std::vector<double> &xs, std::size_t from, std::size_t to) {
    MomentAccumulator a;
    for (std::size_t i = from; i < to; ++i) {
        a.push(xs[i]);
    }
    return a;
}

EnsembleSpec spec(std::size_t n, std::size_t d, const std::string &obs, std::size_t samples) {
    EnsembleSpec s;
    s.n = n;
    s.d = d;
    s.observable = make_observable(obs, n);
    s.samples = samples;
    s.master_seed = 5;
    return s;
}

// E over axes and angle of (dL/dtheta)^2 for one rotation on |0>, observable Z,
// by 16-node quadrature of a central difference on test-built gates.
double single_slot_gradient_moment(int power) {
    const double h = 1e-4;
    double total = 0.0;
    for (const char p : {'X', 'Y', 'Z'}) {
        auto l = [&](double t) {
            const ComplexMatrix g = test::rotation_oracle(p, t, false);
            return (g.adjoint() * test::pauli_oracle('Z') * g)(0, 0).real();
        };
        double acc = 0.0;
        for (int t = 0; t < 16; ++t) {
            const double th = -2 * std::numbers::pi + 4 * std::numbers::pi * t / 16.0;
            acc += std::pow((l(th + h) - l(th - h)) / (2 * h), power);
        }
        total += acc / 16.0;
    }
    return total / 3.0;
}

} // namespace

TEST(MomentAccumulator, MatchesTwoPass) {
    const auto xs = stream(1, 5000);
    const MomentAccumulator a = fold(xs, 0, xs.size());
    double mean = 0.0;
    for (const double x : xs) mean += x;
    mean /= static_cast<double>(xs.size());
    double m2 = 0.0;
    double m4 = 0.0;
    for (const double x : xs) {
        m2 += (x - mean) * (x - mean);
        m4 += std::pow(x - mean, 4);
    }
    const double n = static_cast<double>(xs.size());
    EXPECT_LE(rel(a.mean(), mean), 1e-12);
    EXPECT_LE(rel(a.variance(), m2 / n), 1e-12);
    const double se_var = std::sqrt((m4 / n - (m2 / n) * (m2 / n)) / n);
    EXPECT_LE(rel(a.stderr_variance(), se_var), 1e-10);
    EXPECT_LE(rel(a.stderr_mean(), std::sqrt(m2 / n / n)), 1e-12);
}

TEST(MomentAccumulator, MergeAssociativeAndMatchesSinglePass) {
    const auto xs = stream(2, 3000);
    const MomentAccumulator a = fold(xs, 0, 700);
    const MomentAccumulator b = fold(xs, 700, 1900);
    const MomentAccumulator c = fold(xs, 1900, 3000);
    MomentAccumulator left = a;
    left.merge(b);
    left.merge(c);
    MomentAccumulator bc = b;
    bc.merge(c);
    MomentAccumulator right = a;
    right.merge(bc);
    MomentAccumulator swapped = c;
    swapped.merge(a);
    swapped.merge(b);
    MomentAccumulator all = fold(xs, 0, 3000);
    for (const MomentAccumulator *m : {&right, &swapped, &all}) {
        EXPECT_EQ(m->count(), left.count());
        EXPECT_LE(rel(m->mean(), left.mean()), 1e-12);
        EXPECT_LE(rel(m->variance(), left.variance()), 1e-12);
        EXPECT_LE(rel(m->stderr_variance(), left.stderr_variance()), 1e-10);
    }
    MomentAccumulator empty;
    empty.merge(a);
    EXPECT_EQ(empty.mean(), a.mean());
    EXPECT_EQ(empty.variance(), a.variance());
}

TEST(MomentAccumulator, EmptyAndConstant) {
    MomentAccumulator a;
    EXPECT_EQ(a.variance(), 0.0);
    for (int i = 0; i < 10; ++i) a.push(2.5);
    EXPECT_EQ(a.mean(), 2.5);
    EXPECT_EQ(a.variance(), 0.0);
    EXPECT_EQ(a.stderr_variance(), 0.0);
}

TEST(Estimate, SingleQubitVarianceAgainstQuadrature) {
    const double exact = single_slot_gradient_moment(2);
    EXPECT_NEAR(exact, 1.0 / 3.0, 1e-8);
    EXPECT_NEAR(single_slot_gradient_moment(1), 0.0, 1e-12);
    const GradientStats s = estimate(spec(1, 1, "Z", 10000));
    const double var = s.pooled.variance();
    EXPECT_GE(var, 0.30);
    EXPECT_LE(var, 0.37);
    EXPECT_LE(std::abs(var - exact), 5 * s.pooled.stderr_variance());
    EXPECT_LE(std::abs(s.pooled.mean()), 5 * s.pooled.stderr_mean());
}

TEST(Estimate, IdentityObservableIsExactlyZero) {
    const GradientStats s = estimate(spec(3, 4, "III", 50));
    EXPECT_EQ(s.pooled.mean(), 0.0);
    EXPECT_EQ(s.pooled.variance(), 0.0);
    EXPECT_EQ(s.effective_count.mean(), 0.0);
}

TEST(Estimate, CountsAndPooling) {
    EnsembleSpec e = spec(3, 4, "global", 20);
    e.replacement = ReplacementMode::Identity;
    e.replacement_fraction = 0.25;
    const GradientStats s = estimate(e);
    EXPECT_EQ(s.circuits, 20U);
    EXPECT_EQ(s.pooled.count(), 20U * 12U);
    EXPECT_EQ(s.pooled_params.count(), 20U * 9U);
    ASSERT_EQ(s.per_slot.size(), 12U);
    for (const auto &slot : s.per_slot) {
        EXPECT_EQ(slot.count(), 20U);
    }
    // Pooled over n d slots = params-only moments scaled by the parameter share.
    EXPECT_LE(rel(s.pooled.mean(), s.pooled_params.mean() * 0.75), 1e-12);
}

TEST(Estimate, DeterministicAndParallelConsistent) {
    const EnsembleSpec e = spec(3, 6, "global", 64);
    const GradientStats a = estimate(e, true);
    const GradientStats b = estimate(e, true);
    EXPECT_EQ(std::memcmp(&a.pooled, &b.pooled, sizeof a.pooled), 0);
    const GradientStats p = estimate(e, false);
    EXPECT_EQ(p.pooled.count(), a.pooled.count());
    EXPECT_LE(rel(p.pooled.mean(), a.pooled.mean()), 1e-12);
    EXPECT_LE(rel(p.pooled.variance(), a.pooled.variance()), 1e-12);
}

TEST(Estimate, Preconditions) {
    EXPECT_THROW(estimate(spec(2, 2, "global", 1)), std::invalid_argument);
    EXPECT_THROW(estimate(spec(2, 2, "global", 4), StateVector::basis(3)), DimensionError);
}

TEST(PredictWeingarten, Examples) {
    EXPECT_NEAR(predict_weingarten(2, 4, 1).value, 4.0 / 60, 1e-16);
    EXPECT_NEAR(predict_weingarten(1, 2, 1).value, 2.0 / 6, 1e-16);
    EXPECT_NEAR(predict_weingarten(20, 1, 1).value / predict_weingarten(19, 1, 1).value, 0.125,
                1e-9);
    EXPECT_THROW(predict_weingarten(21, 1, 1), std::overflow_error);
    EXPECT_THROW(predict_weingarten(0, 1, 1), std::invalid_argument);
    EXPECT_EQ(predict_weingarten(3, 8, 1).model, PredictionModel::Weingarten);
}

TEST(PredictDirect, ScalingLaws) {
    const double base = predict_direct(3, 10, 12, 2.5).value;
    EXPECT_NEAR(predict_direct(3, 20, 12, 2.5).value, base / 2, 1e-18);
    EXPECT_NEAR(predict_direct(3, 10, 6, 2.5).value, base / 2, 1e-18);
    EXPECT_NEAR(predict_direct(4, 10, 12, 2.5).value, base / 8 * 3.0 / 4.0, 1e-18);
    EXPECT_NEAR(base, 1.5 * 12 / (std::pow(2.0, 10) * 3 * 10), 1e-18);
    EXPECT_NEAR(predict_direct(3, 10, 12, 2.5, 8, 1).value, 8 * base, 1e-17);
    EXPECT_THROW(predict_direct(3, 10, 31, 2.5), std::invalid_argument);
    EXPECT_THROW(predict_direct(3, 10, 12, 1.0), std::invalid_argument);
    EXPECT_GE(predict_direct(2, 2, 0, 1.5).value, 0.0);
}

TEST(FitAlpha, RoundTripAndErrors) {
    std::vector<VarianceObservation> obs;
    for (const auto &[n, d, m] : std::vector<std::tuple<std::size_t, std::size_t, double>>{
             {2, 10, 18}, {3, 12, 30}, {4, 20, 70}, {2, 40, 79}}) {
        obs.push_back({n, d, m, predict_direct(n, d, m, 3.0).value});
    }
    const AlphaFit f = fit_alpha(obs);
    EXPECT_NEAR(f.alpha, 3.0, 1e-6);
    EXPECT_LE(f.residual, 1e-12);
    EXPECT_EQ(f.observations, 4U);

    EXPECT_THROW(fit_alpha({obs[0]}), std::invalid_argument);
    EXPECT_THROW(fit_alpha({obs[0], obs[0], obs[0]}), std::invalid_argument);
    auto bad = obs;
    bad[1].variance = 0.0;
    EXPECT_THROW(fit_alpha(bad), std::invalid_argument);
}

TEST(ExpectationReport, SingleQubitConsistentWithZero) {
    const auto rows = expectation_scaling_report({1}, 1, 4000, 9);
    ASSERT_EQ(rows.size(), 1U);
    EXPECT_TRUE(rows[0].nonzero);
    EXPECT_LE(std::abs(rows[0].mean), 3 * rows[0].stderr_mean);
    EXPECT_NEAR(rows[0].three_pow_minus_n, 1.0 / 3, 1e-16);
}

TEST(ExpectationReport, RowsPerQubitCount) {
    const auto rows = expectation_scaling_report({2, 3}, 6, 50, 1);
    ASSERT_EQ(rows.size(), 2U);
    EXPECT_EQ(rows[1].n, 3U);
    EXPECT_TRUE(rows[0].nonzero && rows[1].nonzero);
    EXPECT_NEAR(rows[1].abs_mean_over_three_pow, std::abs(rows[1].mean) * 27, 1e-12);
}
