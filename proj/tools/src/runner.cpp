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
#include "barren_cli/runner.hpp"

#include "barren/lightcone.hpp"
#include "barren/moments.hpp"
#include "barren/verify.hpp"

#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <limits>
#include <sstream>

namespace barren::cli {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr std::size_t kChannelMaxQubits = 8;

std::string utc_now() {
    const std::time_t t = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void write_text(const std::string &path, const std::string &text) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    f << text;
    f.flush();
    if (!f) {
        throw IoError("write to '" + path + "' failed");
    }
}

std::string read_text(const std::string &path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) {
        throw IoError("cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

EnsembleSpec make_spec(const ExperimentConfig &c, std::size_t n, std::size_t d,
                       const std::string &observable, double fraction) {
    EnsembleSpec s;
    s.n = n;
    s.d = d;
    s.entangler = c.entangler;
    s.observable = make_observable(observable, n);
    s.replacement = fraction > 0.0 ? c.replacement : ReplacementMode::None;
    s.replacement_fraction = fraction;
    s.samples = c.samples;
    s.master_seed = c.master_seed;
    return s;
}

int run_sweep(const ExperimentConfig &c, std::ostream &out) {
    const auto t0 = std::chrono::steady_clock::now();
    const std::string started = utc_now();
    const SweepResult res = compute_sweep(c);
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    const std::string path = csv_path(c);
    emit_csv(path, res.rows, res.truncated);

    nlohmann::ordered_json m;
    m["config"] = nlohmann::ordered_json::parse(config_to_json(c));
    m["seed"] = c.master_seed;
    m["version"] = BARREN_VERSION;
    m["started"] = started;
    m["elapsed_s"] = elapsed;
    m["csv"] = path;
    m["rows"] = res.rows.size();
    m["truncated"] = res.truncated;
    if (res.fit) {
        m["alpha_fit"] = {{"alpha", res.fit->alpha},
                          {"residual", res.fit->residual},
                          {"observations", res.fit->observations}};
    } else {
        m["alpha_fit"] = nullptr;
    }
    write_text(manifest_path(c), m.dump(2) + "\n");

    out << "wrote " << res.rows.size() << " rows to " << path << '\n';
    if (res.truncated) {
        out << "interrupted; CSV marked " << kTruncatedMarker << '\n';
        return kExitInterrupted;
    }
    return kExitOk;
}

int run_verify(const ExperimentConfig &c, std::ostream &out) {
    const auto rows = run_verify_suite();
    const std::string table = render_verify_table(rows);
    out << table;
    if (!c.output_path.empty()) {
        write_text(c.output_path, table);
    }
    const bool ok = suite_passed(rows);
    out << (ok ? "verify: all checks passed\n" : "verify: FAILED\n");
    return ok ? kExitOk : kExitVerifyFailed;
}

int run_lightcone(const ExperimentConfig &c, const RunOptions &o, std::ostream &out) {
    std::optional<Circuit> circuit;
    if (o.circuit_path) {
        circuit = deserialize(read_text(*o.circuit_path));
    } else {
        const std::size_t n = c.n_list.front();
        circuit = layered_ry_circuit(n, c.depths_for(n).front(), c.entangler);
    }
    const Observable obs = make_observable(c.observables.front(), circuit->qubits());
    const LightConeReport r = analyze(*circuit, obs);
    const std::string json = report_json(*circuit, obs, r);
    out << render_grid(*circuit, r);
    out << "m = " << r.m << " of " << circuit->num_slots() << " slots, "
        << r.gray_params.size() << " gray parameters\n";
    if (c.output_path.empty()) {
        out << json << '\n';
    } else {
        write_text(c.output_path, json + "\n");
    }
    return kExitOk;
}

int run_channel(const ExperimentConfig &c, std::ostream &out) {
    std::ostringstream csv;
    csv << "n,d,observable,unitality_exact,unitality_printed,max_coefficient_gap,"
           "max_abs_diff_on_observable\n";
    for (const std::size_t n : c.n_list) {
        if (n > kChannelMaxQubits) {
            throw ConfigError("channel experiment supports n <= " +
                              std::to_string(kChannelMaxQubits));
        }
        for (const std::string &name : c.observables) {
            const Observable obs = make_observable(name, n);
            const ComplexMatrix om = observable_matrix(obs);
            for (const std::size_t d : c.depths_for(n)) {
                const auto ex = first_moment_expansion_exact(n, d);
                const auto pr = first_moment_expansion_paper(n, d);
                double gap = 0.0;
                for (std::size_t i = 0; i < ex.coefficients.size(); ++i) {
                    gap = std::max(gap, std::abs(ex.coefficients[i] - pr.coefficients[i]));
                }
                const double diff = max_abs_diff(ex.apply(om), pr.apply(om));
                csv << n << ',' << d << ',' << obs.str() << ','
                    << format_double(ex.unitality_sum()) << ','
                    << format_double(pr.unitality_sum()) << ',' << format_double(gap) << ','
                    << format_double(diff) << '\n';
            }
        }
    }
    if (c.output_path.empty()) {
        out << csv.str();
    } else {
        write_text(c.output_path, csv.str());
        out << "wrote " << c.output_path << '\n';
    }
    return kExitOk;
}

} // namespace

std::atomic<bool> &stop_flag() {
    static std::atomic<bool> flag{false};
    return flag;
}

Circuit layered_ry_circuit(std::size_t n, std::size_t d, EntanglerPattern pattern) {
    const auto pairs = entangler_pairs(pattern, n);
    std::vector<Layer> layers(d);
    for (std::size_t l = 0; l < d; ++l) {
        layers[l].entanglers = pairs;
        for (std::size_t q = 0; q < n; ++q) {
            layers[l].rotations.push_back({SlotKind::RY, l * n + q});
        }
    }
    return Circuit(n, std::move(layers), std::vector<double>(n * d, 0.0));
}

std::string csv_path(const ExperimentConfig &c) {
    return c.output_path.empty() ? to_string(c.experiment) + ".csv" : c.output_path;
}

std::string manifest_path(const ExperimentConfig &c) {
    return csv_path(c) + ".manifest.json";
}

SweepResult compute_sweep(const ExperimentConfig &c) {
    c.validate();
    SweepResult res;
    std::vector<VarianceObservation> obs;
    for (const std::size_t n : c.n_list) {
        const double eq6 = predict_weingarten(n, c.tr_o2, c.tr_rho2).value;
        for (const std::size_t d : c.depths_for(n)) {
            for (const std::string &name : c.observables) {
                for (const double fraction : c.fractions) {
                    if (res.truncated || stop_flag().load()) {
                        res.truncated = true;
                        continue;
                    }
                    const EnsembleSpec spec = make_spec(c, n, d, name, fraction);
                    const GradientStats s = estimate(spec, c.sequential_reduction);
                    SweepRow r;
                    r.n = n;
                    r.d = d;
                    r.observable = spec.observable.str();
                    r.entangler = to_string(c.entangler);
                    r.replacement_mode = to_string(spec.replacement);
                    r.fraction = fraction;
                    r.samples = c.samples;
                    r.seed = c.master_seed;
                    r.m_effective = s.effective_count.mean();
                    r.mean_grad = s.pooled.mean();
                    r.stderr_mean = s.pooled.stderr_mean();
                    r.var_grad = s.pooled.variance();
                    r.stderr_var = s.pooled.stderr_variance();
                    r.pred_eq6 = eq6;
                    res.rows.push_back(r);
                    obs.push_back({n, d, r.m_effective, r.var_grad});
                }
            }
        }
    }

    double alpha = kNaN;
    if (c.alpha) {
        alpha = *c.alpha;
    } else {
        try {
            res.fit = fit_alpha(obs);
            alpha = res.fit->alpha;
        } catch (const std::invalid_argument &) {
            // Too few or degenerate rows; the prediction column stays NaN.
        }
    }
    for (SweepRow &r : res.rows) {
        r.alpha_used = alpha;
        r.pred_eq12_alpha =
            std::isnan(alpha) || !(alpha > 1.0)
                ? kNaN
                : predict_direct(r.n, r.d, r.m_effective, alpha, c.tr_o2, c.tr_rho2).value;
    }
    return res;
}

int run(const ExperimentConfig &c, const RunOptions &o, std::ostream &out, std::ostream &err) {
    try {
        c.validate();
        switch (c.experiment) {
        case Experiment::Verify:
            return run_verify(c, out);
        case Experiment::Lightcone:
            return run_lightcone(c, o, out);
        case Experiment::Channel:
            return run_channel(c, out);
        default:
            return run_sweep(c, out);
        }
    } catch (const ConfigError &e) {
        err << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const CircuitFormatError &e) {
        err << "circuit error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const IoError &e) {
        err << "I/O error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::invalid_argument &e) {
        err << "config error: " << e.what() << '\n';
        return kExitConfig;
    }
}

int run_sample(const ExperimentConfig &c, const RunOptions &o, std::ostream &out,
               std::ostream &err) {
    try {
        c.validate();
        const std::size_t n = c.n_list.front();
        EnsembleSpec spec = make_spec(c, n, c.depths_for(n).front(), c.observables.front(),
                                      c.fractions.front());
        spec.samples = std::max(spec.samples, o.index + 1);
        const std::string text = serialize(sample_circuit(spec, o.index));
        if (c.output_path.empty()) {
            out << text << '\n';
        } else {
            write_text(c.output_path, text + "\n");
        }
        return kExitOk;
    } catch (const ConfigError &e) {
        err << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const IoError &e) {
        err << "I/O error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::invalid_argument &e) {
        err << "config error: " << e.what() << '\n';
        return kExitConfig;
    }
}

} // namespace barren::cli
