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
#include "barren_cli/runner.hpp"

#include <CLI11.hpp>

#include <csignal>
#include <iostream>

namespace {

using barren::cli::Experiment;
using barren::cli::ExperimentConfig;

extern "C" void on_sigint(int) { barren::cli::stop_flag().store(true); }

struct Flags {
    std::string config;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> samples;
    std::optional<std::string> out;
    bool sequential = false;
    bool parallel = false;
    std::optional<std::string> circuit;
    std::optional<std::string> observable;
    std::size_t index = 0;
};

ExperimentConfig defaults_for(const std::string &command) {
    ExperimentConfig c;
    if (command == "verify") {
        c.experiment = Experiment::Verify;
    } else if (command == "lightcone") {
        c.experiment = Experiment::Lightcone;
        c.n_list = {4};
        c.d_list = {3};
        c.observables = {"local"};
    } else if (command == "channel") {
        c.experiment = Experiment::Channel;
        c.n_list = {1, 2};
        c.d_list = {1, 2, 3, 4};
        c.observables = {"local"};
    }
    return c;
}

bool command_accepts(const std::string &command, Experiment e) {
    if (command == "sweep" || command == "sample") {
        return barren::cli::is_statistical(e);
    }
    return barren::cli::to_string(e) == command;
}

void add_common(CLI::App *sub, Flags &f) {
    sub->add_option("--config", f.config, "JSON config or run manifest");
    sub->add_option("--seed", f.seed, "master seed (overrides config)");
    sub->add_option("--samples", f.samples, "circuits per ensemble (overrides config)");
    sub->add_option("--out", f.out, "output path (overrides config)");
    sub->add_flag("--sequential", f.sequential, "single-threaded, bit-reproducible reduction");
    sub->add_flag("--parallel", f.parallel, "multi-threaded reduction");
    sub->add_option("--observable", f.observable, "observable name or Pauli string");
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"barren-lab: moment formulas and gradient statistics of random rotation circuits"};
    app.require_subcommand(1);
    Flags f;
    for (const auto &[name, help] : std::vector<std::pair<std::string, std::string>>{
             {"verify", "run the moment oracle checks"},
             {"channel", "compare exact and printed first-moment expansions"},
             {"lightcone", "effective-parameter analysis of a circuit"},
             {"sample", "write one sampled circuit as JSON"},
             {"sweep", "Monte Carlo gradient statistics to CSV"}}) {
        CLI::App *sub = app.add_subcommand(name, help);
        add_common(sub, f);
        if (name == "lightcone") {
            sub->add_option("--circuit", f.circuit, "circuit JSON file");
        }
        if (name == "sample") {
            sub->add_option("--index", f.index, "sample index");
        }
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : barren::cli::kExitConfig;
    }
    const std::string command = app.get_subcommands().front()->get_name();

    ExperimentConfig c;
    try {
        if (!f.config.empty()) {
            c = barren::cli::load_config(f.config);
            if (!command_accepts(command, c.experiment)) {
                std::cerr << "config error: experiment '" << barren::cli::to_string(c.experiment)
                          << "' does not match command '" << command << "'\n";
                return barren::cli::kExitConfig;
            }
        } else if (command == "sweep") {
            std::cerr << "config error: sweep needs --config\n";
            return barren::cli::kExitConfig;
        } else {
            c = defaults_for(command);
        }
        if (f.seed) c.master_seed = *f.seed;
        if (f.samples) c.samples = *f.samples;
        if (f.out) c.output_path = *f.out;
        if (f.observable) c.observables = {*f.observable};
        if (f.sequential && f.parallel) {
            throw barren::cli::ConfigError("--sequential and --parallel are exclusive");
        }
        if (f.sequential) c.sequential_reduction = true;
        if (f.parallel) c.sequential_reduction = false;
        c.validate();
    } catch (const barren::cli::ConfigError &e) {
        std::cerr << "config error: " << e.what() << '\n';
        return barren::cli::kExitConfig;
    } catch (const std::ios_base::failure &e) {
        std::cerr << "I/O error: " << e.what() << '\n';
        return barren::cli::kExitIo;
    }

    barren::cli::RunOptions opts;
    opts.circuit_path = f.circuit;
    opts.index = f.index;
    if (command == "sample") {
        // The config's output path names the sweep CSV; a sampled circuit goes to --out only.
        c.output_path = f.out.value_or("");
        return barren::cli::run_sample(c, opts, std::cout, std::cerr);
    }
    std::signal(SIGINT, on_sigint);
    return barren::cli::run(c, opts, std::cout, std::cerr);
}
