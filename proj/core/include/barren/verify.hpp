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
 * Formula-by-formula oracle checks for the moment evaluators, shared by the
 * `verify` subcommand and the tests, plus random operator helpers.
 */
#pragma once

#include "barren/matkernel.hpp"
#include "barren/rng.hpp"

#include <string>
#include <vector>

namespace barren {

/// Entries with real and imaginary parts uniform on [-1, 1).
ComplexMatrix random_matrix(std::size_t dim, Rng &rng);
/// (M + M^dagger) / 2 for a random_matrix M.
ComplexMatrix random_hermitian(std::size_t dim, Rng &rng);

enum class VerifyStatus { Pass, Fail, ExpectedDivergence };

std::string to_string(VerifyStatus s);

struct VerifyRow {
    std::string name;
    VerifyStatus status = VerifyStatus::Pass;
    double measured = 0.0;  ///< worst error, or the measured gap for divergence rows
    double tolerance = 0.0;
    std::string detail;
};

/// Runs every oracle check with fixed seeds; deterministic output.
std::vector<VerifyRow> run_verify_suite();

/// True when no row has status Fail.
bool suite_passed(const std::vector<VerifyRow> &rows);

/// Aligned text table, one row per check.
std::string render_verify_table(const std::vector<VerifyRow> &rows);

/**
 * @brief Trace of the second-moment remainder predicted for n > 1:
 * (4/3) [Tr(Tr_j{CA} Tr_j{B}) - Tr(Tr_j{AC} Tr_j{B})], Tr_j the partial trace
 * over qubit j. Vanishes at n = 1.
 */
cplx epsilon_trace_residue(const ComplexMatrix &a, const ComplexMatrix &b,
                           const ComplexMatrix &c, std::size_t j, std::size_t n);

} // namespace barren
