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
 * Structural light-cone analysis: which rotation slots can influence <O>.
 *
 * Labels are propagated backward from the observable. Each qubit carries
 * ABSENT (identity only), DIAG (only I/Z components, which commute with CZ)
 * or GENERAL (may carry X/Y components). The analysis over-approximates the
 * set of slots with nonzero gradient; it never under-approximates it.
 */
#pragma once

#include "barren/circuit.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace barren {

enum class SupportLabel : std::uint8_t { Absent = 0, Diag = 1, General = 2 };

struct LightConeReport {
    std::size_t n = 0;
    std::size_t d = 0;
    /// Indexed by slot (layer * n + qubit). True only for rotation slots in the cone.
    std::vector<bool> effective;
    /// Parameter indices of rotation slots outside the cone, ascending.
    std::vector<std::size_t> gray_params;
    std::size_t m = 0;
    std::vector<std::size_t> per_layer;

    /// m / (n d)
    [[nodiscard]] double effective_fraction() const;
};

/// Throws DimensionError when the observable length differs from c.qubits().
LightConeReport analyze(const Circuit &c, const Observable &o);

struct SoundnessViolation {
    std::size_t trial = 0;
    std::size_t param = 0;
    double gradient = 0.0;
};

struct SoundnessReport {
    std::size_t trials = 0;
    /// Largest |gradient| seen on a slot flagged ineffective.
    double max_ineffective_gradient = 0.0;
    std::vector<SoundnessViolation> violations;
};

inline constexpr double kSoundnessTol = 1e-10;
inline constexpr std::size_t kSoundnessMaxQubits = 6;

/**
 * @brief Redraws theta uniformly on [-2 pi, 2 pi) `trials` times and checks
 * that every parameter flagged ineffective has |gradient| <= kSoundnessTol.
 * Initial state |0...0>; parameter-shift gradients. Requires n <= 6.
 */
SoundnessReport validate_against_gradient(const Circuit &c, const Observable &o,
                                          std::size_t trials, std::uint64_t seed = 0);

/// One row per qubit, one column per layer: `#` effective, `.` gray,
/// `I` identity slot, `H` Hadamard slot.
std::string render_grid(const Circuit &c, const LightConeReport &r);

/// JSON object with n, d, m, effective_fraction (4 decimals), per_layer,
/// gray_params and the grid rows.
std::string report_json(const Circuit &c, const Observable &o, const LightConeReport &r);

} // namespace barren
