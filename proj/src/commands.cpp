// Copyright 2026 The fixedzz Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fixedzz/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "fixedzz/circuit.hpp"
#include "fixedzz/io.hpp"
#include "fixedzz/metrics.hpp"
#include "fixedzz/schedule_io.hpp"
#include "fixedzz/synth.hpp"

namespace fixedzz {

DecouplingMode parse_mode(const std::string &name) {
    if (name == "stochastic") {
        return DecouplingMode::Stochastic;
    }
    if (name == "expectation") {
        return DecouplingMode::Expectation;
    }
    throw ValidationError("mode must be \"stochastic\" or \"expectation\", got \"" + name + "\"");
}

namespace {

const char *mode_name(DecouplingMode mode) {
    return mode == DecouplingMode::Expectation ? "expectation" : "stochastic";
}

std::filesystem::path resolve(const std::filesystem::path &base, const std::string &p) {
    std::filesystem::path path(p);
    return (path.is_relative() && !base.empty()) ? base / path : path;
}

QubitPair pair_from(const nlohmann::json &v, const char *key) {
    const auto items = v.get<std::vector<long long>>();
    if (items.size() != 2 || items[0] < 0 || items[1] < 0) {
        throw ValidationError(std::string(key) + " must be a pair of qubit indices");
    }
    return {static_cast<QubitIndex>(items[0]), static_cast<QubitIndex>(items[1])};
}

void check_config(const ExperimentConfig &cfg) {
    if (cfg.lambdas.empty()) {
        throw ValidationError("at least one lambda is required");
    }
    for (double l : cfg.lambdas) {
        if (!(l > 0.0) || !std::isfinite(l)) {
            throw ValidationError("lambda must be positive");
        }
    }
    if (cfg.trials == 0) {
        throw ValidationError("trials must be positive");
    }
    if (cfg.n_max == 0) {
        throw ValidationError("n_max must be positive");
    }
    if (!(cfg.duration > 0.0) || !std::isfinite(cfg.duration)) {
        throw ValidationError("duration must be positive");
    }
    if (cfg.workers == 0) {
        throw ValidationError("workers must be positive");
    }
}

void require_path(const std::filesystem::path &p, const char *what) {
    if (p.empty()) {
        throw ValidationError(std::string("missing ") + what);
    }
}

DecouplingConfig decoupling_of(const ExperimentConfig &cfg) {
    return DecouplingConfig{cfg.lambdas.front(), cfg.mode, cfg.master_seed};
}

void write_file(const std::filesystem::path &path, const std::string &content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw ValidationError("cannot write " + path.string());
    }
    f << content;
    if (!f) {
        throw ValidationError("error writing " + path.string());
    }
}

struct CompiledRun {
    DeviceModel model;
    CircuitIR circuit;
    RoutedCircuit routed;
};

CompiledRun compile_inputs(const ExperimentConfig &cfg) {
    require_path(cfg.device_path, "--device");
    require_path(cfg.circuit_path, "--circuit");
    CompiledRun run;
    run.model = load_device(cfg.device_path);
    if (run.model.n_qubits() > kDefaultReconstructCap) {
        throw ValidationError("device has " + std::to_string(run.model.n_qubits()) +
                              " qubits; simulation is capped at " +
                              std::to_string(kDefaultReconstructCap));
    }
    try {
        run.circuit = parse_circuit(read_text_file(cfg.circuit_path));
    } catch (const ValidationError &e) {
        throw ValidationError(cfg.circuit_path.string() + ": " + e.what());
    }
    run.routed = route(run.circuit, run.model);
    return run;
}

double worst_residual(const LoweredProgram &p) {
    double worst = 0.0;
    for (const auto &s : p.cnot_searches) {
        worst = std::max(worst, s.residual);
    }
    return worst;
}

} // namespace

ExperimentConfig config_from_json(const nlohmann::json &doc, const std::filesystem::path &base) {
    ExperimentConfig cfg;
    try {
        if (!doc.is_object()) {
            throw ValidationError("config document must be an object");
        }
        if (doc.contains("device")) {
            cfg.device_path = resolve(base, doc["device"].get<std::string>());
        }
        if (doc.contains("circuit")) {
            cfg.circuit_path = resolve(base, doc["circuit"].get<std::string>());
        }
        if (doc.contains("out")) {
            cfg.out_path = resolve(base, doc["out"].get<std::string>());
        }
        if (doc.contains("summary")) {
            cfg.summary_path = resolve(base, doc["summary"].get<std::string>());
        }
        if (doc.contains("mode")) {
            cfg.mode = parse_mode(doc["mode"].get<std::string>());
        }
        const char *lambda_key = doc.contains("lambdas") ? "lambdas" : "lambda";
        if (doc.contains(lambda_key)) {
            const auto &l = doc[lambda_key];
            cfg.lambdas = l.is_array() ? l.get<std::vector<double>>()
                                       : std::vector<double>{l.get<double>()};
        }
        if (doc.contains("trials")) {
            cfg.trials = doc["trials"].get<std::size_t>();
        }
        if (doc.contains("master_seed")) {
            cfg.master_seed = doc["master_seed"].get<std::uint64_t>();
        }
        if (doc.contains("n_max")) {
            cfg.n_max = doc["n_max"].get<std::uint64_t>();
        }
        if (doc.contains("separated") && !doc["separated"].is_null()) {
            cfg.separated = pair_from(doc["separated"], "separated");
        }
        if (doc.contains("pair")) {
            cfg.pair = pair_from(doc["pair"], "pair");
        }
        if (doc.contains("duration")) {
            cfg.duration = doc["duration"].get<double>();
        }
        if (doc.contains("workers")) {
            cfg.workers = doc["workers"].get<unsigned>();
        }
        if (doc.contains("max_residual")) {
            cfg.max_residual = doc["max_residual"].get<double>();
        }
    } catch (const nlohmann::json::exception &e) {
        throw ValidationError(std::string("malformed config: ") + e.what());
    }
    check_config(cfg);
    return cfg;
}

int cmd_synth(const ExperimentConfig &cfg, std::ostream &out, std::ostream &err) {
    require_path(cfg.device_path, "--device");
    check_config(cfg);
    const DeviceModel model = load_device(cfg.device_path);
    const auto [j, k] = cfg.pair;
    if (j >= model.n_qubits() || k >= model.n_qubits() || j == k) {
        throw ValidationError("--pair must name two distinct qubits of the device");
    }
    if (effective_zz(model, j, k) == 0.0) {
        err << "error: no coupling between qubits " << j << " and " << k << '\n';
        return kExitNumerical;
    }
    const SynthesizedGate cnot = synthesize_cnot(model, j, k, cfg.n_max, decoupling_of(cfg));
    const SynthesisResult &r = cnot.search;
    nlohmann::json doc{{"delta_e", r.delta_e},
                       {"n", r.n},
                       {"m", r.m},
                       {"residual", r.residual},
                       {"fidelity_bound", r.fidelity_bound},
                       {"pulse_count", cnot.schedule.events().size()}};
    out << dump_json(doc);
    if (cfg.max_residual && r.residual > *cfg.max_residual) {
        err << "error: best residual " << format_real(r.residual) << " over n <= " << cfg.n_max
            << " exceeds requested " << format_real(*cfg.max_residual) << '\n';
        return kExitNumerical;
    }
    return kExitOk;
}

int cmd_idle_bench(const ExperimentConfig &cfg, std::ostream &out, std::ostream &) {
    require_path(cfg.device_path, "--device");
    require_path(cfg.out_path, "--out (CSV path)");
    check_config(cfg);
    const DeviceModel model = load_device(cfg.device_path);
    const auto separated = cfg.separated;
    const double duration = cfg.duration;
    const DecouplingMode mode = cfg.mode;
    ScheduleGenerator generator = [&model, separated, duration, mode](
                                      double lambda, std::uint64_t trial, std::uint64_t seed) {
        return build_idle_schedule(model, separated, duration,
                                   DecouplingConfig{lambda, mode, seed}, FrameCursor{trial, 0});
    };
    const McTarget target = ideal_idle_unitary(model, separated, duration);
    const McSweepResult sweep =
        mc_sweep(model, generator, target, cfg.lambdas,
                 SweepOptions{cfg.trials, cfg.master_seed, cfg.workers});

    std::ostringstream csv;
    write_trials_csv(csv, sweep.records);
    write_file(cfg.out_path, csv.str());

    nlohmann::json summary;
    summary["mode"] = mode_name(mode);
    summary["master_seed"] = cfg.master_seed;
    summary["duration"] = duration;
    summary["infidelity"] = "1 - |Tr(U_target^dagger U)|/dim";
    summary["points"] = nlohmann::json::array();
    for (const auto &s : sweep.summaries) {
        summary["points"].push_back({{"lambda", s.lambda},
                                     {"trials", s.trials},
                                     {"mean", s.mean_infidelity},
                                     {"stderr", s.stderr_infidelity}});
    }
    summary["fit_slope"] = sweep.fit_slope ? nlohmann::json(*sweep.fit_slope) : nlohmann::json();
    if (!sweep.fit_slope) {
        summary["fit_note"] = sweep.fit_note;
    }
    std::filesystem::path summary_path = cfg.summary_path;
    if (summary_path.empty()) {
        summary_path = cfg.out_path;
        summary_path.replace_extension(".summary.json");
    }
    const std::string text = dump_json(summary);
    write_file(summary_path, text);
    out << text;
    return kExitOk;
}

int cmd_run(const ExperimentConfig &cfg, std::ostream &out, std::ostream &) {
    check_config(cfg);
    const CompiledRun run = compile_inputs(cfg);
    const unsigned n = run.model.n_qubits();
    const StateVector ideal = simulate_ideal(run.circuit, StateVector(n));

    std::vector<double> fidelities;
    std::size_t pulse_count = 0;
    double duration = 0.0;
    std::size_t frames = 0;
    double residual = 0.0;
    Propagator propagator(run.model);
    for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
        const LoweredProgram program =
            lower(run.routed, run.model, cfg.n_max, decoupling_of(cfg), trial);
        StateVector state(n);
        simulate_schedule(state, propagator, program.schedule);
        fidelities.push_back(state_fidelity(ideal, state));
        if (trial == 0) {
            pulse_count = program.schedule.events().size();
            duration = program.schedule.duration();
            frames = program.frames;
            residual = worst_residual(program);
            if (!cfg.out_path.empty()) {
                write_file(cfg.out_path, schedule_to_string(program.schedule));
            }
        }
    }
    std::vector<double> sorted = fidelities;
    std::sort(sorted.begin(), sorted.end());
    const std::size_t mid = sorted.size() / 2;
    const double median =
        sorted.size() % 2 == 1 ? sorted[mid] : 0.5 * (sorted[mid - 1] + sorted[mid]);
    double mean = 0.0;
    for (double f : fidelities) {
        mean += f;
    }
    mean /= static_cast<double>(fidelities.size());

    nlohmann::json doc{{"mode", mode_name(cfg.mode)},
                       {"trials", cfg.trials},
                       {"fidelity", median},
                       {"mean_fidelity", mean},
                       {"min_fidelity", sorted.front()},
                       {"pulse_count", pulse_count},
                       {"swap_count", run.routed.swap_count},
                       {"frames", frames},
                       {"duration", duration},
                       {"worst_residual", residual}};
    out << dump_json(doc);
    return kExitOk;
}

int cmd_reconstruct(const ExperimentConfig &cfg, std::ostream &out, std::ostream &) {
    check_config(cfg);
    const CompiledRun run = compile_inputs(cfg);
    const LoweredProgram program = lower(run.routed, run.model, cfg.n_max, decoupling_of(cfg), 0);
    const Matrix u = reconstruct_unitary(run.model, program.schedule);
    const Matrix ideal = ideal_unitary(run.circuit, run.model.n_qubits());
    if (!cfg.out_path.empty()) {
        write_file(cfg.out_path, schedule_to_string(program.schedule));
    }
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index r = 0; r < u.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (Eigen::Index c = 0; c < u.cols(); ++c) {
            row.push_back({u(r, c).real(), u(r, c).imag()});
        }
        rows.push_back(row);
    }
    nlohmann::json doc{{"n_qubits", run.model.n_qubits()},
                       {"mode", mode_name(cfg.mode)},
                       {"fidelity", phase_invariant_fidelity(ideal, u)},
                       {"pulse_count", program.schedule.events().size()},
                       {"swap_count", run.routed.swap_count},
                       {"duration", program.schedule.duration()},
                       {"unitary", rows}};
    out << dump_json(doc);
    return kExitOk;
}

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Compile and simulate circuits on a fixed always-on ZZ device"};
    app.require_subcommand(1);

    std::string config_path;
    std::string device;
    std::string circuit;
    std::string out_path;
    std::string summary;
    std::string mode;
    std::vector<double> lambdas;
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    std::uint64_t n_max = 0;
    std::vector<unsigned> pair;
    std::vector<unsigned> separated;
    double duration = 0.0;
    unsigned workers = 0;
    double max_residual = 0.0;

    auto common = [&](CLI::App *sub) {
        sub->add_option("--config", config_path, "JSON experiment config");
        sub->add_option("--device", device, "JSON device file");
        sub->add_option("--mode", mode, "stochastic | expectation");
        sub->add_option("--lambda", lambdas, "pulse density (repeatable)");
        sub->add_option("--seed", seed, "master seed");
        sub->add_option("--n-max", n_max, "largest repetition count searched");
        sub->add_option("--out", out_path, "output path");
    };
    CLI::App *synth = app.add_subcommand("synth", "CNOT synthesis search for one coupled pair");
    common(synth);
    synth->add_option("--pair", pair, "control and target")->expected(2);
    synth->add_option("--max-residual", max_residual, "exit 2 if the best residual is larger");

    CLI::App *idle = app.add_subcommand("idle-bench", "Monte Carlo of the decoupled idle gate");
    common(idle);
    idle->add_option("--trials", trials, "trials per lambda");
    idle->add_option("--separated", separated, "kept pair")->expected(2);
    idle->add_option("--duration", duration, "idle duration");
    idle->add_option("--workers", workers, "worker threads");
    idle->add_option("--summary", summary, "summary JSON path");

    CLI::App *run = app.add_subcommand("run", "compile, simulate and compare a circuit");
    common(run);
    run->add_option("--circuit", circuit, "circuit text file");
    run->add_option("--trials", trials, "independent compilations");

    CLI::App *recon = app.add_subcommand("reconstruct", "unitary of a compiled circuit");
    common(recon);
    recon->add_option("--circuit", circuit, "circuit text file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        CLI::App *sub = app.get_subcommands().front();
        ExperimentConfig cfg;
        if (!config_path.empty()) {
            cfg = config_from_json(read_json_file(config_path),
                                   std::filesystem::path(config_path).parent_path());
        }
        auto given = [sub](const char *flag) { return sub->count(flag) > 0; };
        if (given("--device")) {
            cfg.device_path = device;
        }
        if (sub->get_option_no_throw("--circuit") != nullptr && given("--circuit")) {
            cfg.circuit_path = circuit;
        }
        if (given("--out")) {
            cfg.out_path = out_path;
        }
        if (given("--mode")) {
            cfg.mode = parse_mode(mode);
        } else if (sub == synth && config_path.empty()) {
            cfg.mode = DecouplingMode::Expectation;
        }
        if (given("--lambda")) {
            cfg.lambdas = lambdas;
        }
        if (given("--seed")) {
            cfg.master_seed = seed;
        }
        if (given("--n-max")) {
            cfg.n_max = n_max;
        }
        if (sub->get_option_no_throw("--trials") != nullptr && given("--trials")) {
            cfg.trials = trials;
        }
        if (sub == synth) {
            if (given("--pair")) {
                cfg.pair = {pair[0], pair[1]};
            }
            if (given("--max-residual")) {
                cfg.max_residual = max_residual;
            }
            return cmd_synth(cfg, out, err);
        }
        if (sub == idle) {
            if (given("--separated")) {
                cfg.separated = QubitPair{separated[0], separated[1]};
            }
            if (given("--duration")) {
                cfg.duration = duration;
            }
            if (given("--workers")) {
                cfg.workers = workers;
            }
            if (given("--summary")) {
                cfg.summary_path = summary;
            }
            if (!given("--trials") && config_path.empty()) {
                cfg.trials = 200;
            }
            return cmd_idle_bench(cfg, out, err);
        }
        if (sub == run) {
            return cmd_run(cfg, out, err);
        }
        return cmd_reconstruct(cfg, out, err);
    } catch (const SynthesisError &e) {
        err << "error: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

} // namespace fixedzz
