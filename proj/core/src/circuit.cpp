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

#include "barren/rng.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <numeric>
#include <sstream>

namespace barren {

bool is_rotation(SlotKind kind) noexcept {
    return kind == SlotKind::RX || kind == SlotKind::RY || kind == SlotKind::RZ;
}

Axis rotation_axis(SlotKind kind) {
    switch (kind) {
    case SlotKind::RX:
        return Axis::X;
    case SlotKind::RY:
        return Axis::Y;
    case SlotKind::RZ:
        return Axis::Z;
    default:
        throw std::invalid_argument("rotation_axis: slot is not a rotation");
    }
}

SlotKind rotation_kind(Axis axis) noexcept {
    switch (axis) {
    case Axis::X:
        return SlotKind::RX;
    case Axis::Y:
        return SlotKind::RY;
    case Axis::Z:
        break;
    }
    return SlotKind::RZ;
}

Circuit::Circuit(std::size_t n, std::vector<Layer> layers, std::vector<double> theta)
    : n_(n), layers_(std::move(layers)), theta_(std::move(theta)) {
    if (n_ == 0) {
        throw CircuitInvariantError("circuit needs at least one qubit");
    }
    if (layers_.empty()) {
        throw CircuitInvariantError("circuit needs at least one layer");
    }
    std::vector<int> seen(theta_.size(), 0);
    for (std::size_t l = 0; l < layers_.size(); ++l) {
        const Layer &layer = layers_[l];
        if (layer.rotations.size() != n_) {
            throw CircuitInvariantError("layer " + std::to_string(l) + " has " +
                                        std::to_string(layer.rotations.size()) +
                                        " slots, expected " + std::to_string(n_));
        }
        for (const RotationSpec &r : layer.rotations) {
            if (is_rotation(r.kind) != r.param.has_value()) {
                throw CircuitInvariantError(
                    "layer " + std::to_string(l) +
                    ": parameter index must be present exactly for rotations");
            }
            if (r.param) {
                if (*r.param >= theta_.size()) {
                    throw CircuitInvariantError("parameter index " +
                                                std::to_string(*r.param) +
                                                " out of range");
                }
                if (seen[*r.param]++ != 0) {
                    throw CircuitInvariantError("parameter index " +
                                                std::to_string(*r.param) +
                                                " used more than once");
                }
            }
        }
        for (const auto &[a, b] : layer.entanglers) {
            if (a >= n_ || b >= n_ || a == b) {
                throw CircuitInvariantError("layer " + std::to_string(l) +
                                            ": invalid entangler pair (" +
                                            std::to_string(a) + ", " +
                                            std::to_string(b) + ")");
            }
        }
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
        throw CircuitInvariantError("theta has entries not referenced by any slot");
    }
}

Circuit Circuit::with_theta(std::vector<double> theta) const {
    if (theta.size() != theta_.size()) {
        throw CircuitInvariantError("with_theta: parameter count mismatch");
    }
    Circuit c = *this;
    c.theta_ = std::move(theta);
    return c;
}

std::vector<std::size_t> Circuit::param_slots() const {
    std::vector<std::size_t> slots(theta_.size());
    for (std::size_t l = 0; l < layers_.size(); ++l) {
        for (std::size_t q = 0; q < n_; ++q) {
            if (const auto &p = layers_[l].rotations[q].param) {
                slots[*p] = l * n_ + q;
            }
        }
    }
    return slots;
}

Observable::Observable(std::string pauli_string) : paulis_(std::move(pauli_string)) {
    if (paulis_.empty()) {
        throw ObservableParseError("observable string is empty");
    }
    for (std::size_t i = 0; i < paulis_.size(); ++i) {
        const char c = paulis_[i];
        if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') {
            throw ObservableParseError("invalid Pauli character '" + std::string(1, c) +
                                       "' at position " + std::to_string(i));
        }
    }
}

bool Observable::is_identity() const noexcept { return weight() == 0; }

std::size_t Observable::weight() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(paulis_.begin(), paulis_.end(), [](char c) { return c != 'I'; }));
}

ComplexMatrix observable_matrix(const Observable &o) {
    ComplexMatrix m = ComplexMatrix::identity(1);
    for (const char c : o.str()) {
        switch (c) {
        case 'X':
            m = kron(m, gates::X());
            break;
        case 'Y':
            m = kron(m, gates::Y());
            break;
        case 'Z':
            m = kron(m, gates::Z());
            break;
        default:
            m = kron(m, gates::I());
            break;
        }
    }
    return m;
}

Observable make_observable(std::string_view spec, std::size_t n) {
    std::string s;
    if (spec == "global") {
        s.assign(n, 'Z');
    } else if (spec == "local") {
        s.assign(n, 'I');
        s[0] = 'Z';
    } else if (spec == "alternating") {
        s.assign(n, 'I');
        for (std::size_t q = 0; q < n; q += 2) {
            s[q] = 'Z';
        }
    } else if (spec == "first_half" || spec == "last_half") {
        s.assign(n, 'I');
        const std::size_t half = n / 2;
        const std::size_t start = spec == "first_half" ? 0 : n - half;
        std::fill_n(s.begin() + static_cast<std::ptrdiff_t>(start), half, 'Z');
    } else if (spec.starts_with("prefix:")) {
        std::size_t k = 0;
        try {
            k = std::stoul(std::string(spec.substr(7)));
        } catch (const std::exception &) {
            throw ObservableParseError("bad observable template '" + std::string(spec) + "'");
        }
        if (k > n) {
            throw ObservableParseError("prefix:" + std::to_string(k) + " exceeds " +
                                       std::to_string(n) + " qubits");
        }
        s.assign(n, 'I');
        std::fill_n(s.begin(), k, 'Z');
    } else {
        s.assign(spec);
        if (s.size() != n) {
            throw ObservableParseError("observable '" + s + "' has length " +
                                       std::to_string(s.size()) + ", expected " +
                                       std::to_string(n));
        }
    }
    return Observable(std::move(s));
}

std::string to_string(EntanglerPattern p) {
    switch (p) {
    case EntanglerPattern::Brick:
        return "brick";
    case EntanglerPattern::Ring:
        return "ring";
    case EntanglerPattern::Ladder:
        return "ladder";
    case EntanglerPattern::None:
        return "none";
    }
    return "?";
}

std::string to_string(ReplacementMode m) {
    switch (m) {
    case ReplacementMode::None:
        return "none";
    case ReplacementMode::Identity:
        return "identity";
    case ReplacementMode::Hadamard:
        return "hadamard";
    }
    return "?";
}

EntanglerPattern parse_entangler_pattern(std::string_view s) {
    if (s == "brick") return EntanglerPattern::Brick;
    if (s == "ring") return EntanglerPattern::Ring;
    if (s == "ladder") return EntanglerPattern::Ladder;
    if (s == "none") return EntanglerPattern::None;
    throw std::invalid_argument("unknown entangler pattern '" + std::string(s) + "'");
}

ReplacementMode parse_replacement_mode(std::string_view s) {
    if (s == "none") return ReplacementMode::None;
    if (s == "identity") return ReplacementMode::Identity;
    if (s == "hadamard") return ReplacementMode::Hadamard;
    throw std::invalid_argument("unknown replacement mode '" + std::string(s) + "'");
}

std::vector<QubitPair> entangler_pairs(EntanglerPattern pattern, std::size_t n) {
    std::vector<QubitPair> pairs;
    switch (pattern) {
    case EntanglerPattern::Brick:
        for (std::size_t q = 0; q + 1 < n; q += 2) {
            pairs.emplace_back(q, q + 1);
        }
        for (std::size_t q = 1; q + 1 < n; q += 2) {
            pairs.emplace_back(q, q + 1);
        }
        break;
    case EntanglerPattern::Ring:
        for (std::size_t q = 0; q + 1 < n; ++q) {
            pairs.emplace_back(q, q + 1);
        }
        // Closing bond only when it is a new pair.
        if (n > 2) {
            pairs.emplace_back(n - 1, 0);
        }
        break;
    case EntanglerPattern::Ladder:
        for (std::size_t q = 0; q + 1 < n; ++q) {
            pairs.emplace_back(q, q + 1);
        }
        break;
    case EntanglerPattern::None:
        break;
    }
    return pairs;
}

void EnsembleSpec::validate() const {
    if (n == 0 || d == 0) {
        throw std::invalid_argument("ensemble needs n >= 1 and d >= 1");
    }
    if (observable.qubits() != n) {
        throw std::invalid_argument("observable length " +
                                    std::to_string(observable.qubits()) +
                                    " does not match n = " + std::to_string(n));
    }
    if (!(replacement_fraction >= 0.0 && replacement_fraction <= 1.0)) {
        throw std::invalid_argument("replacement fraction must lie in [0, 1]");
    }
    if (replacement == ReplacementMode::None && replacement_fraction != 0.0) {
        throw std::invalid_argument("replacement fraction must be 0 when mode is none");
    }
    if (samples == 0) {
        throw std::invalid_argument("ensemble needs at least one sample");
    }
}

Circuit sample_circuit(const EnsembleSpec &spec, std::uint64_t index) {
    spec.validate();
    if (index >= spec.samples) {
        throw std::out_of_range("sample index " + std::to_string(index) +
                                " >= samples " + std::to_string(spec.samples));
    }
    Rng rng(spec.master_seed, index);
    const std::size_t n = spec.n;
    const std::size_t slots = n * spec.d;

    // Draw order is part of the format: axes, replaced slots, then angles.
    std::vector<SlotKind> kinds(slots);
    for (auto &k : kinds) {
        k = rotation_kind(static_cast<Axis>(rng.below(3)));
    }

    if (spec.replacement != ReplacementMode::None) {
        const auto count = static_cast<std::size_t>(
            std::llround(spec.replacement_fraction * static_cast<double>(slots)));
        std::vector<std::size_t> order(slots);
        std::iota(order.begin(), order.end(), std::size_t{0});
        const SlotKind fixed = spec.replacement == ReplacementMode::Identity
                                   ? SlotKind::Identity
                                   : SlotKind::Hadamard;
        for (std::size_t i = 0; i < count; ++i) {
            const std::size_t j = i + static_cast<std::size_t>(rng.below(slots - i));
            std::swap(order[i], order[j]);
            kinds[order[i]] = fixed;
        }
    }

    const auto pairs = entangler_pairs(spec.entangler, n);
    std::vector<Layer> layers(spec.d);
    std::vector<double> theta;
    theta.reserve(slots);
    for (std::size_t l = 0; l < spec.d; ++l) {
        layers[l].rotations.resize(n);
        layers[l].entanglers = pairs;
        for (std::size_t q = 0; q < n; ++q) {
            RotationSpec &r = layers[l].rotations[q];
            r.kind = kinds[l * n + q];
            if (is_rotation(r.kind)) {
                r.param = theta.size();
                theta.push_back(rng.uniform(-2 * std::numbers::pi, 2 * std::numbers::pi));
            }
        }
    }
    return Circuit(n, std::move(layers), std::move(theta));
}

Circuit reference_brick_circuit(std::size_t n, std::size_t d) {
    const auto pairs = entangler_pairs(EntanglerPattern::Brick, n);
    std::vector<Layer> layers(d);
    for (std::size_t l = 0; l < d; ++l) {
        layers[l].entanglers = pairs;
        for (std::size_t q = 0; q < n; ++q) {
            layers[l].rotations.push_back({SlotKind::RY, l * n + q});
        }
    }
    return Circuit(n, std::move(layers), std::vector<double>(n * d, 0.0));
}

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

namespace {

const char *slot_name(SlotKind k) {
    switch (k) {
    case SlotKind::RX:
        return "X";
    case SlotKind::RY:
        return "Y";
    case SlotKind::RZ:
        return "Z";
    case SlotKind::Identity:
        return "ID";
    case SlotKind::Hadamard:
        return "H";
    }
    return "?";
}

SlotKind parse_slot_name(const std::string &s) {
    if (s == "X") return SlotKind::RX;
    if (s == "Y") return SlotKind::RY;
    if (s == "Z") return SlotKind::RZ;
    if (s == "ID") return SlotKind::Identity;
    if (s == "H") return SlotKind::Hadamard;
    throw CircuitSchemaError("unknown axis \"" + s + "\"");
}

using nlohmann::json;

const json &require(const json &obj, const char *key, const std::string &where) {
    if (!obj.is_object()) {
        throw CircuitSchemaError(where + ": expected an object");
    }
    const auto it = obj.find(key);
    if (it == obj.end()) {
        throw CircuitSchemaError(where + ": missing \"" + key + "\" key");
    }
    return *it;
}

std::size_t as_index(const json &v, const std::string &where) {
    if (!v.is_number_integer() || v.get<long long>() < 0) {
        throw CircuitSchemaError(where + ": expected a non-negative integer");
    }
    return v.get<std::size_t>();
}

} // namespace

std::string serialize(const Circuit &c) {
    std::ostringstream out;
    out << "{\"n\": " << c.qubits() << ", \"layers\": [";
    for (std::size_t l = 0; l < c.depth(); ++l) {
        const Layer &layer = c.layers()[l];
        out << (l ? ", " : "") << "{\"rotations\": [";
        for (std::size_t q = 0; q < layer.rotations.size(); ++q) {
            const RotationSpec &r = layer.rotations[q];
            out << (q ? ", " : "") << "{\"axis\": \"" << slot_name(r.kind) << '"';
            if (r.param) {
                out << ", \"param\": " << *r.param;
            }
            out << '}';
        }
        out << "], \"entanglers\": [";
        for (std::size_t e = 0; e < layer.entanglers.size(); ++e) {
            out << (e ? ", " : "") << '[' << layer.entanglers[e].first << ", "
                << layer.entanglers[e].second << ']';
        }
        out << "]}";
    }
    out << "], \"theta\": [";
    for (std::size_t i = 0; i < c.theta().size(); ++i) {
        out << (i ? ", " : "") << format_double(c.theta()[i]);
    }
    out << "]}";
    return out.str();
}

Circuit deserialize(std::string_view json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error &e) {
        throw CircuitSyntaxError(std::string("malformed circuit JSON: ") + e.what());
    }

    const std::size_t n = as_index(require(doc, "n", "circuit"), "circuit.n");
    const json &jlayers = require(doc, "layers", "circuit");
    const json &jtheta = require(doc, "theta", "circuit");
    if (!jlayers.is_array()) {
        throw CircuitSchemaError("circuit.layers: expected an array");
    }
    if (!jtheta.is_array()) {
        throw CircuitSchemaError("circuit.theta: expected an array");
    }

    std::vector<Layer> layers;
    for (std::size_t l = 0; l < jlayers.size(); ++l) {
        const std::string where = "layers[" + std::to_string(l) + "]";
        const json &jl = jlayers[l];
        const json &jrot = require(jl, "rotations", where);
        const json &jent = require(jl, "entanglers", where);
        if (!jrot.is_array() || !jent.is_array()) {
            throw CircuitSchemaError(where + ": rotations and entanglers must be arrays");
        }
        Layer layer;
        for (std::size_t q = 0; q < jrot.size(); ++q) {
            const std::string rw = where + ".rotations[" + std::to_string(q) + "]";
            const json &axis = require(jrot[q], "axis", rw);
            if (!axis.is_string()) {
                throw CircuitSchemaError(rw + ".axis: expected a string");
            }
            RotationSpec r;
            r.kind = parse_slot_name(axis.get<std::string>());
            if (const auto p = jrot[q].find("param"); p != jrot[q].end()) {
                r.param = as_index(*p, rw + ".param");
            }
            layer.rotations.push_back(r);
        }
        for (std::size_t e = 0; e < jent.size(); ++e) {
            const json &pair = jent[e];
            const std::string ew = where + ".entanglers[" + std::to_string(e) + "]";
            if (!pair.is_array() || pair.size() != 2) {
                throw CircuitSchemaError(ew + ": expected a pair of qubit indices");
            }
            layer.entanglers.emplace_back(as_index(pair[0], ew), as_index(pair[1], ew));
        }
        layers.push_back(std::move(layer));
    }

    std::vector<double> theta;
    for (std::size_t i = 0; i < jtheta.size(); ++i) {
        if (!jtheta[i].is_number()) {
            throw CircuitSchemaError("theta[" + std::to_string(i) + "]: expected a number");
        }
        theta.push_back(jtheta[i].get<double>());
    }

    try {
        return Circuit(n, std::move(layers), std::move(theta));
    } catch (const CircuitInvariantError &e) {
        throw CircuitValidationError(std::string("circuit invariant violated: ") + e.what());
    }
}

} // namespace barren
