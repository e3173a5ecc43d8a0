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

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <vector>

#include <json.hpp>

#include "fixedzz/decoupler.hpp"
#include "fixedzz/device.hpp"

namespace fixedzz {

/// Process exit codes.
enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitNumerical = 2 };

/// Everything a subcommand may need. Loaded from a JSON config file (same
/// format family as the device file), then overridden by command-line flags.
///
///   {"device": "dev.json", "circuit": "ghz.txt", "mode": "stochastic",
///    "lambda": [50, 100], "trials": 200, "master_seed": 7, "n_max": 30,
///    "separated": [0, 1], "duration": 1.0, "out": "bench.csv",
///    "summary": "bench.json", "workers": 4}
///
/// Relative paths resolve against the config file's directory.
struct ExperimentConfig {
    std::filesystem::path device_path;
    std::filesystem::path circuit_path;
    DecouplingMode mode = DecouplingMode::Stochastic;
    std::vector<double> lambdas{100.0};
    std::size_t trials = 1;
    std::uint64_t master_seed = 0;
    std::uint64_t n_max = 1000;
    std::optional<QubitPair> separated;
    double duration = 1.0;
    std::filesystem::path out_path;
    std::filesystem::path summary_path;
    unsigned workers = 1;
    QubitPair pair{0, 1};                 // synth
    std::optional<double> max_residual;   // synth
};

ExperimentConfig config_from_json(const nlohmann::json &doc,
                                  const std::filesystem::path &base_dir = {});
DecouplingMode parse_mode(const std::string &name);

/// {delta_e, n, m, residual, fidelity_bound, pulse_count}. Exit 2 with "no
/// coupling" if the pair has no ZZ part, or if max_residual is set and not met
/// (the best-effort result is still printed).
int cmd_synth(const ExperimentConfig &cfg, std::ostream &out, std::ostream &err);

/// Monte Carlo of the decoupled idle gate: CSV rows to cfg.out_path, summary
/// JSON (per-lambda mean and stderr, fit_slope) to cfg.summary_path and stdout.
int cmd_idle_bench(const ExperimentConfig &cfg, std::ostream &out, std::ostream &err);

/// Compile + simulate a circuit from |0..0>, compare against ideal gates:
/// {fidelity, mean_fidelity, min_fidelity, pulse_count, swap_count, ...}.
int cmd_run(const ExperimentConfig &cfg, std::ostream &out, std::ostream &err);

/// Full unitary of the compiled circuit plus its fidelity to the ideal one.
int cmd_reconstruct(const ExperimentConfig &cfg, std::ostream &out, std::ostream &err);

/// Parses argv and dispatches; maps exceptions to exit codes.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace fixedzz
