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
#include <map>
#include <optional>
#include <vector>

#include "fixedzz/device.hpp"
#include "fixedzz/rng.hpp"
#include "fixedzz/state.hpp"

namespace fixedzz {

enum class DecouplingMode {
    /// Independent Poisson NOT trains on every non-separated qubit.
    Stochastic,
    /// No pulses; each decoupled frame carries an averaging window, i.e. the
    /// exact λ→∞ exposure (½ against a kept qubit, ¼ between two flipped ones).
    Expectation,
};

struct DecouplingConfig {
    double lambda = 100.0; // pulses per unit time; ignored in expectation mode
    DecouplingMode mode = DecouplingMode::Stochastic;
    std::uint64_t master_seed = 0;
};

/// Which random streams a decoupled frame draws from. Frames within one trial
/// are numbered in the order they are laid out.
struct FrameCursor {
    std::uint64_t trial = 0;
    std::uint64_t frame = 0;
};

struct PulseTrain {
    QubitIndex qubit = 0;
    std::vector<double> times; // strictly increasing, inside (0, duration)
    bool close_with_not = false; // odd number of flips
};

/// Phase e^{+i z} on |1> of each listed qubit, plus e^{+i global_phase}.
struct CompensationPlan {
    std::map<QubitIndex, double> z_phase;
    double global_phase = 0.0;
};

/// Throws ValidationError unless lambda > 0 and duration > 0.
PulseTrain sample_pulse_train(QubitIndex qubit, double lambda, double duration, RngStream &rng);

/// Cancels the expected phase deposited by the non-separated qubits over
/// `duration`. With FormB couplings:
///   z_phase[j] = ½ T Σ_{p∉{j,k}} E_pj,  z_phase[k] likewise,
///   global     = ¼ T Σ_{p<q, p,q∉{j,k}} E_pq.
/// FormA couplings contribute their averaged diagonals the same way. The
/// separated pair's own coupling is left alone. With no separated pair every
/// coupling is averaged and only a global phase remains.
CompensationPlan compensation_plan(const DeviceModel &model, std::optional<QubitPair> separated,
                                   double duration);

/// Idle frame of length `duration` in which every coupling except the
/// separated pair's is suppressed, compensation included. In expectation mode
/// the result is exactly exp(-i T D_jk(a_j, a_k)) on the pair and identity
/// elsewhere.
PulseSchedule build_idle_schedule(const DeviceModel &model, std::optional<QubitPair> separated,
                                  double duration, const DecouplingConfig &config,
                                  const FrameCursor &cursor = {});

/// exp(-i θ a_j a_k) from one decoupled frame of length θ/ΔE (θ reduced into
/// [0, 2π); negative ΔE runs for (2π - θ)/|ΔE|), with the FormA one-qubit and
/// constant parts of the (j, k) coupling undone at the end of the frame.
/// Throws SynthesisError if j and k are not coupled.
PulseSchedule decoupled_zz_gate(const DeviceModel &model, QubitIndex j, QubitIndex k,
                                double theta, const DecouplingConfig &config,
                                const FrameCursor &cursor = {});

/// Appends, at the end of `schedule`, the RZ pulses and global phase that
/// turn exp(-i T D_jk) into exp(-i T ΔE a_j a_k).
void add_pair_local_correction(PulseSchedule &schedule, const CouplingSpec &spec, QubitIndex j,
                               QubitIndex k, double duration);

/// diag_x exp(-i T e_zz(j,k) a_j a_k) over the full register; identity when
/// there is no separated pair.
Matrix ideal_idle_unitary(const DeviceModel &model, std::optional<QubitPair> separated,
                          double duration);

} // namespace fixedzz
