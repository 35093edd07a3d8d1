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
#include "barren_cli/csv.hpp"

#include "barren/circuit.hpp"

#include <fstream>

namespace barren::cli {

std::string format_row(const SweepRow &r) {
    std::string s;
    s += std::to_string(r.n) + ',' + std::to_string(r.d) + ',' + r.observable + ',' +
         r.entangler + ',' + r.replacement_mode + ',' + format_double(r.fraction) + ',' +
         std::to_string(r.samples) + ',' + std::to_string(r.seed);
    for (const double v : {r.m_effective, r.mean_grad, r.stderr_mean, r.var_grad, r.stderr_var,
                           r.pred_eq6, r.pred_eq12_alpha, r.alpha_used}) {
        s += ',';
        s += format_double(v);
    }
    return s;
}

void write_csv(std::ostream &out, const std::vector<SweepRow> &rows, bool truncated) {
    out << kSweepHeader << '\n';
    for (const auto &r : rows) {
        out << format_row(r) << '\n';
    }
    if (truncated) {
        out << kTruncatedMarker << '\n';
    }
}

void emit_csv(const std::string &path, const std::vector<SweepRow> &rows, bool truncated) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    write_csv(out, rows, truncated);
    out.flush();
    if (!out) {
        throw IoError("write to '" + path + "' failed");
    }
}

} // namespace barren::cli
