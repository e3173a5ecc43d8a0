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
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fixedzz/device.hpp"
#include "fixedzz/state.hpp"

namespace fixedzz {

/// |Tr(U^† V)| / dim, clamped to [0, 1]. Throws ValidationError on shape mismatch.
double phase_invariant_fidelity(const Matrix &u, const Matrix &v);

/// |<ψ|φ>|². Throws ValidationError on dimension mismatch.
double state_fidelity(const StateVector &psi, const StateVector &phi);

struct McSummary {
    double lambda = 0.0;
    std::size_t trials = 0;
    double mean_infidelity = 0.0;
    double stderr_infidelity = 0.0;
};

struct TrialRecord {
    double lambda = 0.0;
    std::uint64_t trial = 0;
    double duration = 0.0;
    double infidelity = 0.0; // 1 - F
    std::uint64_t seed = 0;  // trial_key(master_seed, trial)
};

struct McSweepResult {
    std::vector<McSummary> summaries;
    std::vector<TrialRecord> records; // lambda-major, then trial
    std::optional<double> fit_slope;  // d ln(mean) / d ln(lambda)
    std::string fit_note;             // why fit_slope is empty
};

/// Builds the schedule of one trial at one density.
using ScheduleGenerator =
    std::function<PulseSchedule(double lambda, std::uint64_t trial, std::uint64_t master_seed)>;

/// Fidelity to a unitary, or to `expected` after running from `initial`.
struct StateTarget {
    StateVector initial;
    StateVector expected;
};
using McTarget = std::variant<Matrix, StateTarget>;

struct SweepOptions {
    std::size_t trials = 200;
    std::uint64_t master_seed = 0;
    unsigned workers = 1;
};

/// Runs every (lambda, trial) point on up to `workers` threads. Output does
/// not depend on the worker count. Throws ValidationError if trials < 2.
McSweepResult mc_sweep(const DeviceModel &model, const ScheduleGenerator &generator,
                       const McTarget &target, const std::vector<double> &lambdas,
                       const SweepOptions &options);

/// Mean and standard error of a sample (stderr 0 for a single value).
McSummary summarize(double lambda, const std::vector<double> &infidelities);

/// Unweighted least-squares slope of ln(y) against ln(x); empty when fewer
/// than two distinct x, or any y ≤ 0.
std::optional<double> fit_loglog_slope(const std::vector<double> &x, const std::vector<double> &y,
                                       std::string *note = nullptr);

void write_trials_csv(std::ostream &out, const std::vector<TrialRecord> &records);

} // namespace fixedzz
