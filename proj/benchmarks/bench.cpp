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
#include "barren/circuit.hpp"
#include "barren/moments.hpp"
#include "barren/simulator.hpp"
#include "barren/stats.hpp"
#include "barren/verify.hpp"

#include <benchmark/benchmark.h>

using namespace barren;

namespace {

Circuit ensemble_member(std::size_t n, std::size_t d) {
    EnsembleSpec s;
    s.n = n;
    s.d = d;
    s.observable = make_observable("global", n);
    s.master_seed = 1;
    return sample_circuit(s, 0);
}

void BM_ApplySingleQubitGate(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    StateVector psi = StateVector::basis(n);
    const Circuit c = ensemble_member(n, 1);
    const ComplexMatrix g = slot_gate(c, 0, 0);
    std::size_t q = 0;
    for (auto _ : state) {
        psi.apply(g, q);
        q = (q + 1) % n;
        benchmark::ClobberMemory();
    }
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
}
BENCHMARK(BM_ApplySingleQubitGate)->DenseRange(4, 16, 4);

void BM_GradientShift(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const Circuit c = ensemble_member(n, 4 * n);
    const Observable o = make_observable("global", n);
    const StateVector init = StateVector::basis(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(gradient_shift(c, o, init));
    }
}
BENCHMARK(BM_GradientShift)->DenseRange(2, 8, 2);

void BM_GradientCommutator(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const Circuit c = ensemble_member(n, 4 * n);
    const Observable o = make_observable("global", n);
    const StateVector init = StateVector::basis(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(gradient_commutator(c, o, init));
    }
}
BENCHMARK(BM_GradientCommutator)->DenseRange(2, 8, 2);

void BM_FirstMomentDepthExact(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    Rng rng(2);
    const ComplexMatrix a = random_hermitian(std::size_t{1} << n, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(first_moment_depth_exact(a, n, 10));
    }
}
BENCHMARK(BM_FirstMomentDepthExact)->DenseRange(1, 4);

void BM_SecondMomentSingle(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    Rng rng(3);
    const std::size_t dim = std::size_t{1} << n;
    const ComplexMatrix a = random_hermitian(dim, rng);
    const ComplexMatrix b = random_hermitian(dim, rng);
    const ComplexMatrix c = random_hermitian(dim, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(second_moment_single(a, b, c, 0, n));
    }
}
BENCHMARK(BM_SecondMomentSingle)->DenseRange(1, 3);

void BM_EstimateEnsemble(benchmark::State &state) {
    EnsembleSpec s;
    s.n = 4;
    s.d = 20;
    s.observable = make_observable("global", 4);
    s.samples = 64;
    for (auto _ : state) {
        benchmark::DoNotOptimize(estimate(s));
    }
    state.SetItemsProcessed(state.iterations() * 64);
}
BENCHMARK(BM_EstimateEnsemble)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
