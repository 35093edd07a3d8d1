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
#include "barren/lightcone.hpp"
#include "barren/simulator.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

using namespace barren;

namespace {

Circuit sampled(std::size_t n, std::size_t d, EntanglerPattern p, std::uint64_t i,
                ReplacementMode mode = ReplacementMode::None, double frac = 0.0) {
    EnsembleSpec s;
    s.n = n;
    s.d = d;
    s.entangler = p;
    s.observable = make_observable("global", n);
    s.replacement = mode;
    s.replacement_fraction = frac;
    s.samples = i + 1;
    s.master_seed = 77;
    return sample_circuit(s, i);
}

} // namespace

TEST(LightCone, ReferenceCircuitGraySet) {
    const Circuit c = reference_brick_circuit();
    const LightConeReport r = analyze(c, Observable("ZIII"));
    EXPECT_EQ(r.m, 6U);
    // The figure numbers parameters from 1; these are theta_4, 7, 8, 10, 11, 12.
    EXPECT_EQ(r.gray_params, (std::vector<std::size_t>{3, 6, 7, 9, 10, 11}));
    EXPECT_EQ(r.per_layer, (std::vector<std::size_t>{3, 2, 1}));
    EXPECT_DOUBLE_EQ(r.effective_fraction(), 0.5);
    EXPECT_EQ(render_grid(c, r), "q0  # # #\nq1  # # .\nq2  # . .\nq3  . . .\n");
}

TEST(LightCone, ReferenceCircuitIsSound) {
    const Circuit c = reference_brick_circuit();
    const SoundnessReport s = validate_against_gradient(c, Observable("ZIII"), 20);
    EXPECT_EQ(s.trials, 20U);
    EXPECT_TRUE(s.violations.empty());
    EXPECT_LE(s.max_ineffective_gradient, kSoundnessTol);
}

TEST(LightCone, IdentityObservableHasNoEffectiveSlots) {
    const Circuit c = sampled(4, 5, EntanglerPattern::Brick, 0);
    const LightConeReport r = analyze(c, Observable("IIII"));
    EXPECT_EQ(r.m, 0U);
    EXPECT_EQ(r.gray_params.size(), c.num_params());
}

TEST(LightCone, ProductCircuitKeepsOnlyMeasuredQubit) {
    for (std::size_t d = 1; d <= 6; ++d) {
        const Circuit c = sampled(3, d, EntanglerPattern::None, d);
        const LightConeReport r = analyze(c, Observable("ZII"));
        EXPECT_EQ(r.m, d);
        for (std::size_t l = 0; l < d; ++l) {
            EXPECT_TRUE(r.effective[l * 3]);
            EXPECT_FALSE(r.effective[l * 3 + 1]);
            EXPECT_FALSE(r.effective[l * 3 + 2]);
        }
    }
}

TEST(LightCone, LengthMismatch) {
    EXPECT_THROW(analyze(reference_brick_circuit(), Observable("ZI")), DimensionError);
}

TEST(LightCone, ReplacedSlotsNeverCounted) {
    const Circuit full = sampled(4, 4, EntanglerPattern::Brick, 0, ReplacementMode::Identity, 1.0);
    EXPECT_EQ(analyze(full, Observable("ZZZZ")).m, 0U);
    const SoundnessReport s = validate_against_gradient(full, Observable("ZZZZ"), 5);
    EXPECT_TRUE(s.violations.empty());

    const Circuit had = sampled(4, 4, EntanglerPattern::Brick, 0, ReplacementMode::Hadamard, 1.0);
    const LightConeReport r = analyze(had, Observable("ZIII"));
    EXPECT_EQ(r.m, 0U);
    for (const bool e : r.effective) {
        EXPECT_FALSE(e);
    }
}

TEST(LightCone, HadamardPromotesLabel) {
    // H then CZ(0,1) then measure Z0: H on qubit 0 in layer 2 turns Z into X,
    // so the CZ in layer 1 reaches qubit 1.
    std::vector<Layer> layers(2);
    layers[0].rotations = {{SlotKind::RY, 0}, {SlotKind::RY, 1}};
    layers[0].entanglers = {{0, 1}};
    layers[1].rotations = {{SlotKind::Hadamard, std::nullopt}, {SlotKind::RY, 2}};
    const Circuit c(2, layers, {0.1, 0.2, 0.3});
    const LightConeReport r = analyze(c, Observable("ZI"));
    EXPECT_EQ(r.m, 2U);
    EXPECT_EQ(r.gray_params, (std::vector<std::size_t>{2}));
    EXPECT_TRUE(validate_against_gradient(c, Observable("ZI"), 10).violations.empty());
}

TEST(LightCone, LadderSoundness) {
    const Circuit c = sampled(5, 4, EntanglerPattern::Ladder, 3);
    const SoundnessReport s = validate_against_gradient(c, Observable("ZIIII"), 20);
    EXPECT_TRUE(s.violations.empty());
}

TEST(LightCone, RandomizedSoundness) {
    const EntanglerPattern pats[] = {EntanglerPattern::Brick, EntanglerPattern::Ring,
                                     EntanglerPattern::Ladder, EntanglerPattern::None};
    const char *obs[] = {"ZIIII", "IXIII", "IIZIY", "ZZIII", "IIIIZ"};
    for (std::uint64_t i = 0; i < 40; ++i) {
        const auto mode = i % 3 == 0   ? ReplacementMode::Hadamard
                          : i % 3 == 1 ? ReplacementMode::Identity
                                       : ReplacementMode::None;
        const Circuit c = sampled(5, 1 + i % 5, pats[i % 4], i, mode,
                                  mode == ReplacementMode::None ? 0.0 : 0.3);
        const SoundnessReport s = validate_against_gradient(c, Observable(obs[i % 5]), 3, i);
        EXPECT_TRUE(s.violations.empty()) << "circuit " << i;
    }
}

TEST(LightCone, SizeGuard) {
    EXPECT_THROW(validate_against_gradient(sampled(7, 1, EntanglerPattern::None, 0),
                                           make_observable("local", 7), 1),
                 std::invalid_argument);
}

TEST(LightCone, MonotoneInObservableSupport) {
    for (std::uint64_t i = 0; i < 10; ++i) {
        const Circuit c = sampled(6, 4, i % 2 ? EntanglerPattern::Ring : EntanglerPattern::Brick, i);
        std::size_t prev = 0;
        for (std::size_t k = 0; k <= 6; ++k) {
            const std::size_t m = analyze(c, make_observable("prefix:" + std::to_string(k), 6)).m;
            EXPECT_GE(m, prev);
            prev = m;
        }
    }
}

TEST(LightCone, DeepCircuitsSaturate) {
    for (const auto p : {EntanglerPattern::Brick, EntanglerPattern::Ring}) {
        double prev = 0.0;
        for (const std::size_t d : {10, 40, 160}) {
            const Circuit c = sampled(6, d, p, 0);
            const LightConeReport r = analyze(c, make_observable("local", 6));
            // Only the final O(n) layers may hold gray slots.
            for (std::size_t l = 0; l + 2 * 6 < d; ++l) {
                for (std::size_t q = 0; q < 6; ++q) {
                    EXPECT_TRUE(r.effective[l * 6 + q]);
                }
            }
            EXPECT_GE(r.effective_fraction(), prev);
            prev = r.effective_fraction();
        }
        EXPECT_GT(prev, 0.95);
    }
}

TEST(LightCone, HalfSupportDeficitPerPattern) {
    // n = 12, Z on the first six qubits: the analyzer's nd - m for each layout.
    const std::pair<EntanglerPattern, std::size_t> expected[] = {
        {EntanglerPattern::Brick, 21}, {EntanglerPattern::Ladder, 21}, {EntanglerPattern::Ring, 12}};
    for (const auto &[p, deficit] : expected) {
        for (const std::size_t d : {10, 30}) {
            const Circuit c = sampled(12, d, p, 0);
            EXPECT_EQ(12 * d - analyze(c, make_observable("first_half", 12)).m, deficit);
        }
    }
}

TEST(LightCone, JsonReport) {
    const Circuit c = reference_brick_circuit();
    const Observable o("ZIII");
    const auto j = nlohmann::json::parse(report_json(c, o, analyze(c, o)));
    EXPECT_EQ(j.at("m").get<int>(), 6);
    EXPECT_EQ(j.at("observable").get<std::string>(), "ZIII");
    EXPECT_DOUBLE_EQ(j.at("effective_fraction").get<double>(), 0.5);
    EXPECT_EQ(j.at("gray_params").size(), 6U);
    EXPECT_EQ(j.at("grid")[1].get<std::string>(), "##.");
}
