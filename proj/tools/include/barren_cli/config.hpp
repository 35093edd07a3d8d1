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
 * Experiment configuration: JSON file format, validation and echo.
 */
#pragma once

#include "barren/circuit.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace barren::cli {

enum class Experiment {
    ExpectationSweep,
    VarianceSweep,
    ReplacementSweep,
    ObservableCompare,
    Verify,
    Lightcone,
    Channel,
};

std::string to_string(Experiment e);
Experiment parse_experiment(const std::string &s);
/// True for the four Monte Carlo sweeps.
bool is_statistical(Experiment e);

/// Invalid or inconsistent configuration (exit code 2).
class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct ExperimentConfig {
    Experiment experiment = Experiment::VarianceSweep;
    std::vector<std::size_t> n_list{2};
    /// Ignored when d_per_n is set.
    std::vector<std::size_t> d_list{10};
    /// d = d_per_n * n for every n.
    std::optional<std::size_t> d_per_n;
    /// Names accepted by make_observable, expanded per n.
    std::vector<std::string> observables{"global"};
    EntanglerPattern entangler = EntanglerPattern::Brick;
    ReplacementMode replacement = ReplacementMode::None;
    std::vector<double> fractions{0.0};
    std::size_t samples = 200;
    std::uint64_t master_seed = 0;
    std::string output_path;
    bool sequential_reduction = true;
    /// Fixed alpha for the direct predictor; fitted from the sweep when absent.
    std::optional<double> alpha;
    double tr_o2 = 1.0;
    double tr_rho2 = 1.0;

    /// Throws ConfigError.
    void validate() const;
    /// Depths used for qubit count n, in order.
    [[nodiscard]] std::vector<std::size_t> depths_for(std::size_t n) const;
};

/**
 * @brief Parses a config object. Also accepts a run manifest, whose
 * "config" member is used. Unknown keys are rejected. `d_list` is either an
 * array or {"from", "to", "step"}.
 */
ExperimentConfig parse_config(const std::string &json_text);

/// Reads and parses a file; I/O failures raise std::ios_base::failure.
ExperimentConfig load_config(const std::string &path);

/// Canonical JSON echo; parse_config(config_to_json(c)) == c.
std::string config_to_json(const ExperimentConfig &c);

bool operator==(const ExperimentConfig &a, const ExperimentConfig &b);

} // namespace barren::cli
