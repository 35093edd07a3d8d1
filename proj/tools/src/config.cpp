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
#include "barren_cli/config.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace barren::cli {

using nlohmann::json;

namespace {

constexpr std::size_t kMaxDesk = 16;

const std::set<std::string> &known_keys() {
    static const std::set<std::string> keys{
        "experiment",   "n_list",   "d_list",      "d_per_n",
        "observables",  "entangler", "replacement_mode", "fractions",
        "samples",      "master_seed", "output_path", "sequential_reduction",
        "alpha",        "tr_o2",    "tr_rho2"};
    return keys;
}

template <class T>
std::vector<T> non_empty_list(const json &j, const char *key) {
    if (!j.is_array() || j.empty()) {
        throw ConfigError(std::string("'") + key + "' must be a non-empty array");
    }
    return j.get<std::vector<T>>();
}

std::vector<std::size_t> parse_d_list(const json &j) {
    if (j.is_object()) {
        for (const char *k : {"from", "to", "step"}) {
            if (!j.contains(k)) {
                throw ConfigError(std::string("'d_list' range needs '") + k + "'");
            }
        }
        const auto from = j.at("from").get<std::size_t>();
        const auto to = j.at("to").get<std::size_t>();
        const auto step = j.at("step").get<std::size_t>();
        if (step == 0 || from > to) {
            throw ConfigError("'d_list' range must have from <= to and step >= 1");
        }
        std::vector<std::size_t> out;
        for (std::size_t d = from; d <= to; d += step) {
            out.push_back(d);
        }
        return out;
    }
    return non_empty_list<std::size_t>(j, "d_list");
}

} // namespace

std::string to_string(Experiment e) {
    switch (e) {
    case Experiment::ExpectationSweep:
        return "expectation_sweep";
    case Experiment::VarianceSweep:
        return "variance_sweep";
    case Experiment::ReplacementSweep:
        return "replacement_sweep";
    case Experiment::ObservableCompare:
        return "observable_compare";
    case Experiment::Verify:
        return "verify";
    case Experiment::Lightcone:
        return "lightcone";
    case Experiment::Channel:
        return "channel";
    }
    return "?";
}

Experiment parse_experiment(const std::string &s) {
    for (const Experiment e :
         {Experiment::ExpectationSweep, Experiment::VarianceSweep, Experiment::ReplacementSweep,
          Experiment::ObservableCompare, Experiment::Verify, Experiment::Lightcone,
          Experiment::Channel}) {
        if (to_string(e) == s) {
            return e;
        }
    }
    throw ConfigError("unknown experiment '" + s + "'");
}

bool is_statistical(Experiment e) {
    return e == Experiment::ExpectationSweep || e == Experiment::VarianceSweep ||
           e == Experiment::ReplacementSweep || e == Experiment::ObservableCompare;
}

std::vector<std::size_t> ExperimentConfig::depths_for(std::size_t n) const {
    if (d_per_n) {
        return {*d_per_n * n};
    }
    return d_list;
}

void ExperimentConfig::validate() const {
    if (n_list.empty() || d_list.empty() || observables.empty() || fractions.empty()) {
        throw ConfigError("n_list, d_list, observables and fractions must be non-empty");
    }
    for (const std::size_t n : n_list) {
        if (n == 0 || n > kMaxDesk) {
            throw ConfigError("n = " + std::to_string(n) + " outside [1, " +
                              std::to_string(kMaxDesk) + "]");
        }
        for (const auto &o : observables) {
            try {
                (void)make_observable(o, n);
            } catch (const std::exception &e) {
                throw ConfigError("observable '" + o + "' for n = " + std::to_string(n) + ": " +
                                  e.what());
            }
        }
    }
    for (const std::size_t d : d_list) {
        if (d == 0) {
            throw ConfigError("depths must be >= 1");
        }
    }
    if (d_per_n && *d_per_n == 0) {
        throw ConfigError("d_per_n must be >= 1");
    }
    for (const double f : fractions) {
        if (!(f >= 0.0 && f <= 1.0)) {
            throw ConfigError("fractions must lie in [0, 1]");
        }
        if (replacement == ReplacementMode::None && f != 0.0) {
            throw ConfigError("nonzero fraction requires replacement_mode identity or hadamard");
        }
    }
    if (is_statistical(experiment) && samples < 2) {
        throw ConfigError("statistical experiments need samples >= 2");
    }
    if (alpha && !(*alpha > 1.0)) {
        throw ConfigError("alpha must be > 1");
    }
    if (!(tr_o2 > 0.0) || !(tr_rho2 > 0.0)) {
        throw ConfigError("tr_o2 and tr_rho2 must be positive");
    }
}

ExperimentConfig parse_config(const std::string &json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error &e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (j.is_object() && j.contains("config") && j.at("config").is_object()) {
        j = j.at("config");
    }
    if (!j.is_object()) {
        throw ConfigError("config must be a JSON object");
    }
    for (const auto &item : j.items()) {
        if (!known_keys().contains(item.key())) {
            throw ConfigError("unknown config key '" + item.key() + "'");
        }
    }
    if (!j.contains("experiment")) {
        throw ConfigError("config needs an 'experiment' key");
    }

    ExperimentConfig c;
    try {
        c.experiment = parse_experiment(j.at("experiment").get<std::string>());
        if (j.contains("n_list")) c.n_list = non_empty_list<std::size_t>(j["n_list"], "n_list");
        if (j.contains("d_list")) c.d_list = parse_d_list(j["d_list"]);
        if (j.contains("d_per_n")) c.d_per_n = j["d_per_n"].get<std::size_t>();
        if (j.contains("observables")) {
            c.observables = non_empty_list<std::string>(j["observables"], "observables");
        }
        if (j.contains("entangler")) {
            c.entangler = parse_entangler_pattern(j["entangler"].get<std::string>());
        }
        if (j.contains("replacement_mode")) {
            c.replacement = parse_replacement_mode(j["replacement_mode"].get<std::string>());
        }
        if (j.contains("fractions")) c.fractions = non_empty_list<double>(j["fractions"], "fractions");
        if (j.contains("samples")) c.samples = j["samples"].get<std::size_t>();
        if (j.contains("master_seed")) c.master_seed = j["master_seed"].get<std::uint64_t>();
        if (j.contains("output_path")) c.output_path = j["output_path"].get<std::string>();
        if (j.contains("sequential_reduction")) {
            c.sequential_reduction = j["sequential_reduction"].get<bool>();
        }
        if (j.contains("alpha") && !j["alpha"].is_null()) c.alpha = j["alpha"].get<double>();
        if (j.contains("tr_o2")) c.tr_o2 = j["tr_o2"].get<double>();
        if (j.contains("tr_rho2")) c.tr_rho2 = j["tr_rho2"].get<double>();
    } catch (const json::exception &e) {
        throw ConfigError(std::string("config field has the wrong type: ") + e.what());
    } catch (const std::invalid_argument &e) {
        throw ConfigError(e.what());
    }
    c.validate();
    return c;
}

ExperimentConfig load_config(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::ios_base::failure("cannot open config '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::string config_to_json(const ExperimentConfig &c) {
    nlohmann::ordered_json j;
    j["experiment"] = to_string(c.experiment);
    j["n_list"] = c.n_list;
    j["d_list"] = c.d_list;
    if (c.d_per_n) {
        j["d_per_n"] = *c.d_per_n;
    }
    j["observables"] = c.observables;
    j["entangler"] = to_string(c.entangler);
    j["replacement_mode"] = to_string(c.replacement);
    j["fractions"] = c.fractions;
    j["samples"] = c.samples;
    j["master_seed"] = c.master_seed;
    j["output_path"] = c.output_path;
    j["sequential_reduction"] = c.sequential_reduction;
    if (c.alpha) {
        j["alpha"] = *c.alpha;
    }
    j["tr_o2"] = c.tr_o2;
    j["tr_rho2"] = c.tr_rho2;
    return j.dump(2);
}

bool operator==(const ExperimentConfig &a, const ExperimentConfig &b) {
    return config_to_json(a) == config_to_json(b);
}

} // namespace barren::cli
