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

#include "fixedzz/decoupler.hpp"
#include "fixedzz/device.hpp"
#include "fixedzz/state.hpp"

namespace fixedzz {

/// Best n ≤ n_max for |n |ΔE| - π(2m+1)| → min.
struct SynthesisResult {
    double delta_e = 0.0;
    std::uint64_t n = 0;
    std::uint64_t m = 0;
    double residual = 0.0;
    /// 1 - residual²/4; lower bound on the phase-invariant fidelity of U^n to Π.
    double fidelity_bound = 0.0;
};

/// Exhaustive over n = 1..n_max, m = round((n|ΔE|/π - 1)/2) clamped to ≥ 0;
/// ties go to the smaller n. Throws SynthesisError if delta_e == 0.
SynthesisResult diophantine_odd_pi(double delta_e, std::uint64_t n_max);

/// One unit frame of the fixed interaction on (j, k) with everything else
/// decoupled, followed by the one-qubit phase rotations that strip the FormA
/// local terms.
struct UnitStep {
    PulseSchedule recipe;
    /// (E_engine)(A ⊗ B) in the |a_j a_k> basis, a_j the high bit;
    /// equals diag(1, 1, 1, e^{-iΔE}).
    Eigen::Matrix4cd matrix;
};

/// Throws SynthesisError if (j, k) has no coupling or ΔE == 0.
UnitStep build_u(const DeviceModel &model, QubitIndex j, QubitIndex k,
                 const DecouplingConfig &config, const FrameCursor &cursor = {});

struct SynthesizedGate {
    PulseSchedule schedule;
    SynthesisResult search;
};

/// n repetitions of build_u, each its own decoupled frame. Advances
/// cursor.frame by n.
SynthesizedGate synthesize_pi(const DeviceModel &model, QubitIndex j, QubitIndex k,
                              std::uint64_t n_max, const DecouplingConfig &config,
                              FrameCursor &cursor);
SynthesizedGate synthesize_pi(const DeviceModel &model, QubitIndex j, QubitIndex k,
                              std::uint64_t n_max, const DecouplingConfig &config);

/// H on the target, synthesize_pi, H on the target.
SynthesizedGate synthesize_cnot(const DeviceModel &model, QubitIndex control, QubitIndex target,
                                std::uint64_t n_max, const DecouplingConfig &config,
                                FrameCursor &cursor);
SynthesizedGate synthesize_cnot(const DeviceModel &model, QubitIndex control, QubitIndex target,
                                std::uint64_t n_max, const DecouplingConfig &config);

/// Lifts a 4x4 matrix in the |a_j a_k> basis (a_j high bit) to the full
/// n-qubit register, identity elsewhere.
Matrix embed_two_qubit(const Eigen::Matrix4cd &pair_matrix, unsigned n_qubits, QubitIndex j,
                       QubitIndex k);

/// Π = diag(1, 1, 1, -1) and CNOT (first qubit controls), in the pair basis.
Eigen::Matrix4cd pi_gate();
Eigen::Matrix4cd cnot_gate();

} // namespace fixedzz
