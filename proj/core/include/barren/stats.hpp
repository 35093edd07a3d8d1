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
 * Monte Carlo gradient statistics over circuit ensembles and the closed-form
 * variance predictors they are compared against.
 */
#pragma once

#include "barren/circuit.hpp"
#include "barren/simulator.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace barren {

/**
 * @brief Streaming mean and central moments up to order four.
 *
 * Single-value updates and pairwise merges use the standard one-pass
 * recurrences, so merging partial accumulators matches a single pass up to
 * rounding. Variance is the population variance M2 / N.
 */
class MomentAccumulator {
  public:
    void push(double x);
    void merge(const MomentAccumulator &other);

    [[nodiscard]] std::uint64_t count() const noexcept { return n_; }
    [[nodiscard]] double mean() const noexcept { return mean_; }
    [[nodiscard]] double m2() const noexcept { return m2_; }
    [[nodiscard]] double variance() const;
    /// sqrt(variance / N)
    [[nodiscard]] double stderr_mean() const;
    /// sqrt((mu4 - variance^2) / N), the large-N standard error of variance().
    [[nodiscard]] double stderr_variance() const;

  private:
    std::uint64_t n_ = 0;
    double mean_ = 0.0;
    double m2_ = 0.0;
    double m3_ = 0.0;
    double m4_ = 0.0;
};

/**
 * @brief Gradient statistics for one ensemble.
 *
 * `pooled` holds one value per rotation slot of every circuit (n d values
 * per circuit); slots without a parameter contribute 0, as a gate that is
 * absent has zero derivative. `pooled_params` holds only actual parameters.
 */
struct GradientStats {
    std::size_t circuits = 0;
    MomentAccumulator pooled;
    MomentAccumulator pooled_params;
    std::vector<MomentAccumulator> per_slot;
    /// Light-cone count m per circuit.
    MomentAccumulator effective_count;

    void merge(const GradientStats &other);
};

/**
 * @brief Samples spec.samples circuits and accumulates their gradients.
 *
 * With `sequential` the samples are folded in index order on one thread and
 * the result is bit-reproducible. Otherwise contiguous index blocks run on
 * worker threads and are merged in block order. Requires samples >= 2.
 */
GradientStats estimate(const EnsembleSpec &spec, const StateVector &init,
                       bool sequential = true);

/// |0...0> for spec.n
GradientStats estimate(const EnsembleSpec &spec, bool sequential = true);

enum class PredictionModel { Weingarten, Direct };

struct TheoryPrediction {
    PredictionModel model = PredictionModel::Weingarten;
    double value = 0.0;
    std::optional<double> alpha;
    std::size_t n = 0;
    std::optional<std::size_t> d;
    std::optional<double> m;
    double tr_o2 = 1.0;
    double tr_rho2 = 1.0;
};

inline constexpr std::size_t kPredictorMaxQubits = 20;

/// tr_o2 tr_rho2 / (2^{3n} - 2^n); rejects n = 0 and n > 20.
TheoryPrediction predict_weingarten(std::size_t n, double tr_o2, double tr_rho2);

/**
 * @brief (alpha - 1) m tr_o2 tr_rho2 / (2^{3n+1} n d).
 *
 * m may be an ensemble mean. The normalizations default to 1. Rejects
 * m < 0, m > n d, alpha <= 1 and n > 20.
 */
TheoryPrediction predict_direct(std::size_t n, std::size_t d, double m, double alpha,
                                double tr_o2 = 1.0, double tr_rho2 = 1.0);

struct VarianceObservation {
    std::size_t n = 0;
    std::size_t d = 0;
    double m = 0.0; ///< may be an ensemble mean
    double variance = 0.0;
};

struct AlphaFit {
    double alpha = 0.0;
    /// Root-mean-square residual in natural-log units.
    double residual = 0.0;
    std::size_t observations = 0;
};

/**
 * @brief Fits log(alpha - 1) as the intercept of log V = log(alpha - 1) +
 * log(m / (2^{3n+1} n d)) by least squares.
 *
 * Throws std::invalid_argument for fewer than three observations, any
 * nonpositive m or variance, or when every predictor is the same.
 */
AlphaFit fit_alpha(const std::vector<VarianceObservation> &obs);

struct ExpectationRow {
    std::size_t n = 0;
    std::size_t d = 0;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    double mean = 0.0;
    double stderr_mean = 0.0;
    bool nonzero = false; ///< mean != 0 in double precision
    double three_pow_minus_n = 0.0;
    double abs_mean_over_three_pow = 0.0;
};

/// Brick entangler, Z on every qubit, no replacement, d fixed for every n.
std::vector<ExpectationRow> expectation_scaling_report(const std::vector<std::size_t> &n_list,
                                                       std::size_t d, std::size_t samples,
                                                       std::uint64_t seed,
                                                       bool sequential = true);

} // namespace barren
