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
 * Sweep CSV schema and writer.
 */
#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace barren::cli {

/// Output file could not be written (exit code 3).
class IoError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

inline constexpr const char *kSweepHeader =
    "n,d,observable,entangler,replacement_mode,fraction,samples,seed,m_effective,mean_grad,"
    "stderr_mean,var_grad,stderr_var,pred_eq6,pred_eq12_alpha,alpha_used";

/// Last line of a CSV cut short by an interrupt.
inline constexpr const char *kTruncatedMarker = "TRUNCATED";

struct SweepRow {
    std::size_t n = 0;
    std::size_t d = 0;
    std::string observable;
    std::string entangler;
    std::string replacement_mode;
    double fraction = 0.0;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    double m_effective = 0.0;
    double mean_grad = 0.0;
    double stderr_mean = 0.0;
    double var_grad = 0.0;
    double stderr_var = 0.0;
    double pred_eq6 = 0.0;
    double pred_eq12_alpha = 0.0;
    double alpha_used = 0.0;
};

/// One CSV line without the newline; reals with 17 significant digits.
std::string format_row(const SweepRow &r);

void write_csv(std::ostream &out, const std::vector<SweepRow> &rows, bool truncated = false);

/// Writes the file in one go; throws IoError.
void emit_csv(const std::string &path, const std::vector<SweepRow> &rows,
              bool truncated = false);

} // namespace barren::cli
