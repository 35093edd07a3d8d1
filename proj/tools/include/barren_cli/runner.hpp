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
 * Experiment dispatch for the barren-lab command line.
 */
#pragma once

#include "barren/stats.hpp"
#include "barren_cli/config.hpp"
#include "barren_cli/csv.hpp"

#include <atomic>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace barren::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitIo = 3;
inline constexpr int kExitInterrupted = 130;

/// Set from a signal handler; sweeps stop after the current row.
std::atomic<bool> &stop_flag();

struct RunOptions {
    /// Circuit JSON for the lightcone experiment.
    std::optional<std::string> circuit_path;
    /// Sample index for the `sample` command.
    std::size_t index = 0;
};

struct SweepResult {
    std::vector<SweepRow> rows;
    bool truncated = false;
    std::optional<AlphaFit> fit;
};

/**
 * @brief Evaluates every (n, d, observable, fraction) cell in that nesting
 * order. Each cell reuses the master seed. The direct predictor uses the
 * configured alpha, else one fitted across all rows (NaN when the fit is
 * impossible).
 */
SweepResult compute_sweep(const ExperimentConfig &config);

/// All-RY circuit, parameters numbered slot by slot, theta = 0.
Circuit layered_ry_circuit(std::size_t n, std::size_t d, EntanglerPattern pattern);

/// CSV path, or "<experiment>.csv" when unset.
std::string csv_path(const ExperimentConfig &config);
std::string manifest_path(const ExperimentConfig &config);

/**
 * @brief Runs one experiment and returns the process exit code.
 *
 * Human-readable output goes to `out`, diagnostics to `err`. Config and
 * I/O problems are reported and mapped to their exit codes here.
 */
int run(const ExperimentConfig &config, const RunOptions &options, std::ostream &out,
        std::ostream &err);

/// Writes the circuit with index options.index of the configured ensemble.
int run_sample(const ExperimentConfig &config, const RunOptions &options, std::ostream &out,
               std::ostream &err);

} // namespace barren::cli
