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

#include "barren/rng.hpp"
#include "barren/simulator.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

namespace barren {

double LightConeReport::effective_fraction() const {
    return static_cast<double>(m) / static_cast<double>(n * d);
}

LightConeReport analyze(const Circuit &c, const Observable &o) {
    const std::size_t n = c.qubits();
    if (o.qubits() != n) {
        throw DimensionError("observable has " + std::to_string(o.qubits()) +
                             " qubits, circuit has " + std::to_string(n));
    }
    std::vector<SupportLabel> label(n);
    for (std::size_t q = 0; q < n; ++q) {
        switch (o.at(q)) {
        case 'I':
            label[q] = SupportLabel::Absent;
            break;
        case 'Z':
            label[q] = SupportLabel::Diag;
            break;
        default:
            label[q] = SupportLabel::General;
        }
    }

    LightConeReport r;
    r.n = n;
    r.d = c.depth();
    r.effective.assign(c.num_slots(), false);
    r.per_layer.assign(c.depth(), 0);

    for (std::size_t l = c.depth(); l-- > 0;) {
        const Layer &layer = c.layers()[l];
        // A CZ only ever adds DIAG, so the pair order inside a layer is irrelevant.
        const std::vector<SupportLabel> before = label;
        for (const auto &[a, b] : layer.entanglers) {
            if (before[a] == SupportLabel::General) {
                label[b] = std::max(label[b], SupportLabel::Diag);
            }
            if (before[b] == SupportLabel::General) {
                label[a] = std::max(label[a], SupportLabel::Diag);
            }
        }
        for (std::size_t q = 0; q < n; ++q) {
            const SlotKind kind = layer.rotations[q].kind;
            if (kind == SlotKind::Identity || label[q] == SupportLabel::Absent) {
                continue;
            }
            if (is_rotation(kind)) {
                r.effective[l * n + q] = true;
                ++r.m;
                ++r.per_layer[l];
            }
            label[q] = SupportLabel::General;
        }
    }

    for (std::size_t l = 0; l < c.depth(); ++l) {
        for (std::size_t q = 0; q < n; ++q) {
            const RotationSpec &s = c.layers()[l].rotations[q];
            if (s.param && !r.effective[l * n + q]) {
                r.gray_params.push_back(*s.param);
            }
        }
    }
    std::sort(r.gray_params.begin(), r.gray_params.end());
    return r;
}

SoundnessReport validate_against_gradient(const Circuit &c, const Observable &o,
                                          std::size_t trials, std::uint64_t seed) {
    if (c.qubits() > kSoundnessMaxQubits) {
        throw std::invalid_argument("validate_against_gradient: limited to " +
                                    std::to_string(kSoundnessMaxQubits) + " qubits");
    }
    const LightConeReport cone = analyze(c, o);
    const std::vector<std::size_t> slots = c.param_slots();
    const StateVector init = StateVector::basis(c.qubits());

    SoundnessReport rep;
    rep.trials = trials;
    for (std::size_t t = 0; t < trials; ++t) {
        Rng rng(seed, t);
        std::vector<double> theta(c.num_params());
        for (double &x : theta) {
            x = rng.uniform(-2 * std::numbers::pi, 2 * std::numbers::pi);
        }
        const GradientVector g = gradient_shift(c.with_theta(std::move(theta)), o, init);
        for (std::size_t k = 0; k < g.size(); ++k) {
            if (cone.effective[slots[k]]) {
                continue;
            }
            rep.max_ineffective_gradient = std::max(rep.max_ineffective_gradient, std::abs(g[k]));
            if (std::abs(g[k]) > kSoundnessTol) {
                rep.violations.push_back({t, k, g[k]});
            }
        }
    }
    return rep;
}

namespace {

std::vector<std::string> grid_rows(const Circuit &c, const LightConeReport &r) {
    std::vector<std::string> rows(c.qubits(), std::string(c.depth(), '.'));
    for (std::size_t l = 0; l < c.depth(); ++l) {
        for (std::size_t q = 0; q < c.qubits(); ++q) {
            const SlotKind kind = c.layers()[l].rotations[q].kind;
            char &cell = rows[q][l];
            if (kind == SlotKind::Identity) {
                cell = 'I';
            } else if (kind == SlotKind::Hadamard) {
                cell = 'H';
            } else if (r.effective[l * c.qubits() + q]) {
                cell = '#';
            }
        }
    }
    return rows;
}

} // namespace

std::string render_grid(const Circuit &c, const LightConeReport &r) {
    std::string out;
    const auto rows = grid_rows(c, r);
    for (std::size_t q = 0; q < rows.size(); ++q) {
        out += "q" + std::to_string(q) + " ";
        for (const char ch : rows[q]) {
            out += ' ';
            out += ch;
        }
        out += '\n';
    }
    return out;
}

std::string report_json(const Circuit &c, const Observable &o, const LightConeReport &r) {
    char frac[32];
    std::snprintf(frac, sizeof frac, "%.4f", r.effective_fraction());
    nlohmann::ordered_json j;
    j["n"] = r.n;
    j["d"] = r.d;
    j["observable"] = o.str();
    j["m"] = r.m;
    j["effective_fraction"] = nlohmann::ordered_json::parse(frac);
    j["per_layer"] = r.per_layer;
    j["gray_params"] = r.gray_params;
    j["grid"] = grid_rows(c, r);
    return j.dump(2);
}

} // namespace barren
