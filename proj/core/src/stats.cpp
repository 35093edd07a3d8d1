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

#include "barren/lightcone.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>

namespace barren {

void MomentAccumulator::push(double x) {
    const double n1 = static_cast<double>(n_);
    ++n_;
    const double n = static_cast<double>(n_);
    const double delta = x - mean_;
    const double dn = delta / n;
    const double dn2 = dn * dn;
    const double term1 = delta * dn * n1;
    mean_ += dn;
    m4_ += term1 * dn2 * (n * n - 3 * n + 3) + 6 * dn2 * m2_ - 4 * dn * m3_;
    m3_ += term1 * dn * (n - 2) - 3 * dn * m2_;
    m2_ += term1;
}

void MomentAccumulator::merge(const MomentAccumulator &o) {
    if (o.n_ == 0) {
        return;
    }
    if (n_ == 0) {
        *this = o;
        return;
    }
    const double na = static_cast<double>(n_);
    const double nb = static_cast<double>(o.n_);
    const double n = na + nb;
    const double delta = o.mean_ - mean_;
    const double d2 = delta * delta;

    const double m2 = m2_ + o.m2_ + d2 * na * nb / n;
    const double m3 = m3_ + o.m3_ + d2 * delta * na * nb * (na - nb) / (n * n) +
                      3 * delta * (na * o.m2_ - nb * m2_) / n;
    const double m4 = m4_ + o.m4_ +
                      d2 * d2 * na * nb * (na * na - na * nb + nb * nb) / (n * n * n) +
                      6 * d2 * (na * na * o.m2_ + nb * nb * m2_) / (n * n) +
                      4 * delta * (na * o.m3_ - nb * m3_) / n;
    mean_ += delta * nb / n;
    m2_ = m2;
    m3_ = m3;
    m4_ = m4;
    n_ += o.n_;
}

double MomentAccumulator::variance() const {
    return n_ == 0 ? 0.0 : std::max(0.0, m2_ / static_cast<double>(n_));
}

double MomentAccumulator::stderr_mean() const {
    return n_ == 0 ? 0.0 : std::sqrt(variance() / static_cast<double>(n_));
}

double MomentAccumulator::stderr_variance() const {
    if (n_ == 0) {
        return 0.0;
    }
    const double n = static_cast<double>(n_);
    const double var = variance();
    const double mu4 = m4_ / n;
    return std::sqrt(std::max(0.0, mu4 - var * var) / n);
}

void GradientStats::merge(const GradientStats &o) {
    if (per_slot.empty()) {
        per_slot.resize(o.per_slot.size());
    }
    if (!o.per_slot.empty() && o.per_slot.size() != per_slot.size()) {
        throw std::invalid_argument("GradientStats::merge: slot counts differ");
    }
    circuits += o.circuits;
    pooled.merge(o.pooled);
    pooled_params.merge(o.pooled_params);
    for (std::size_t s = 0; s < o.per_slot.size(); ++s) {
        per_slot[s].merge(o.per_slot[s]);
    }
    effective_count.merge(o.effective_count);
}

namespace {

void accumulate_range(const EnsembleSpec &spec, const StateVector &init, std::size_t begin,
                      std::size_t end, GradientStats &out) {
    const std::size_t slots = spec.n * spec.d;
    out.per_slot.resize(slots);
    std::vector<double> by_slot(slots);
    for (std::size_t i = begin; i < end; ++i) {
        const Circuit c = sample_circuit(spec, i);
        const GradientVector g = gradient_commutator(c, spec.observable, init);
        const std::vector<std::size_t> where = c.param_slots();
        std::fill(by_slot.begin(), by_slot.end(), 0.0);
        for (std::size_t k = 0; k < g.size(); ++k) {
            by_slot[where[k]] = g[k];
            out.pooled_params.push(g[k]);
        }
        for (std::size_t s = 0; s < slots; ++s) {
            out.pooled.push(by_slot[s]);
            out.per_slot[s].push(by_slot[s]);
        }
        out.effective_count.push(static_cast<double>(analyze(c, spec.observable).m));
        ++out.circuits;
    }
}

} // namespace

GradientStats estimate(const EnsembleSpec &spec, const StateVector &init, bool sequential) {
    spec.validate();
    if (spec.samples < 2) {
        throw std::invalid_argument("estimate: samples must be >= 2");
    }
    if (init.qubits() != spec.n) {
        throw DimensionError("estimate: initial state has the wrong qubit count");
    }
    GradientStats total;
    total.per_slot.resize(spec.n * spec.d);

    const std::size_t workers =
        sequential ? 1
                   : std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, spec.samples);
    if (workers == 1) {
        accumulate_range(spec, init, 0, spec.samples, total);
        return total;
    }

    std::vector<GradientStats> parts(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t begin = spec.samples * w / workers;
        const std::size_t end = spec.samples * (w + 1) / workers;
        pool.emplace_back(
            [&, begin, end, w] { accumulate_range(spec, init, begin, end, parts[w]); });
    }
    for (auto &t : pool) {
        t.join();
    }
    for (const auto &p : parts) {
        total.merge(p);
    }
    return total;
}

GradientStats estimate(const EnsembleSpec &spec, bool sequential) {
    return estimate(spec, StateVector::basis(spec.n), sequential);
}

namespace {

void check_predictor_n(std::size_t n) {
    if (n == 0) {
        throw std::invalid_argument("predictor: n must be >= 1");
    }
    if (n > kPredictorMaxQubits) {
        throw std::overflow_error("predictor: n > " + std::to_string(kPredictorMaxQubits) +
                                  " is outside the supported range");
    }
}

double direct_scale(std::size_t n, std::size_t d, double m) {
    return m / (std::ldexp(1.0, static_cast<int>(3 * n + 1)) * static_cast<double>(n) *
                static_cast<double>(d));
}

} // namespace

TheoryPrediction predict_weingarten(std::size_t n, double tr_o2, double tr_rho2) {
    check_predictor_n(n);
    const int ni = static_cast<int>(n);
    TheoryPrediction p;
    p.model = PredictionModel::Weingarten;
    p.n = n;
    p.tr_o2 = tr_o2;
    p.tr_rho2 = tr_rho2;
    p.value = tr_o2 * tr_rho2 / (std::ldexp(1.0, 3 * ni) - std::ldexp(1.0, ni));
    return p;
}

TheoryPrediction predict_direct(std::size_t n, std::size_t d, double m, double alpha,
                                double tr_o2, double tr_rho2) {
    check_predictor_n(n);
    if (d == 0) {
        throw std::invalid_argument("predict_direct: d must be >= 1");
    }
    if (!(m >= 0.0) || m > static_cast<double>(n * d)) {
        throw std::invalid_argument("predict_direct: m = " + std::to_string(m) +
                                    " outside [0, n d = " + std::to_string(n * d) + "]");
    }
    if (!(alpha > 1.0)) {
        throw std::invalid_argument("predict_direct: alpha must be > 1");
    }
    TheoryPrediction p;
    p.model = PredictionModel::Direct;
    p.n = n;
    p.d = d;
    p.m = m;
    p.alpha = alpha;
    p.tr_o2 = tr_o2;
    p.tr_rho2 = tr_rho2;
    p.value = (alpha - 1.0) * tr_o2 * tr_rho2 * direct_scale(n, d, m);
    return p;
}

AlphaFit fit_alpha(const std::vector<VarianceObservation> &obs) {
    if (obs.size() < 3) {
        throw std::invalid_argument("fit_alpha: need at least 3 observations, got " +
                                    std::to_string(obs.size()));
    }
    std::vector<double> x;
    std::vector<double> r;
    for (const auto &o : obs) {
        check_predictor_n(o.n);
        if (o.d == 0 || !(o.m > 0.0) || !(o.variance > 0.0)) {
            throw std::invalid_argument("fit_alpha: d, m and variance must be positive");
        }
        x.push_back(std::log(direct_scale(o.n, o.d, o.m)));
        r.push_back(std::log(o.variance) - x.back());
    }
    const auto [lo, hi] = std::minmax_element(x.begin(), x.end());
    if (*hi - *lo <= 1e-12 * std::max(1.0, std::abs(*lo))) {
        throw std::invalid_argument("fit_alpha: all predictors are equal");
    }
    double c = 0.0;
    for (const double v : r) {
        c += v;
    }
    c /= static_cast<double>(r.size());
    double ss = 0.0;
    for (const double v : r) {
        ss += (v - c) * (v - c);
    }
    return {1.0 + std::exp(c), std::sqrt(ss / static_cast<double>(r.size())), obs.size()};
}

std::vector<ExpectationRow> expectation_scaling_report(const std::vector<std::size_t> &n_list,
                                                       std::size_t d, std::size_t samples,
                                                       std::uint64_t seed, bool sequential) {
    std::vector<ExpectationRow> rows;
    for (const std::size_t n : n_list) {
        EnsembleSpec spec;
        spec.n = n;
        spec.d = d;
        spec.entangler = EntanglerPattern::Brick;
        spec.observable = make_observable("global", n);
        spec.samples = samples;
        spec.master_seed = seed;
        const GradientStats s = estimate(spec, sequential);
        ExpectationRow row;
        row.n = n;
        row.d = d;
        row.samples = samples;
        row.seed = seed;
        row.mean = s.pooled.mean();
        row.stderr_mean = s.pooled.stderr_mean();
        row.nonzero = row.mean != 0.0;
        row.three_pow_minus_n = std::pow(3.0, -static_cast<double>(n));
        row.abs_mean_over_three_pow = std::abs(row.mean) / row.three_pow_minus_n;
        rows.push_back(row);
    }
    return rows;
}

} // namespace barren
