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
#include <string>
#include <string_view>
#include <vector>

#include "fixedzz/decoupler.hpp"
#include "fixedzz/device.hpp"
#include "fixedzz/state.hpp"
#include "fixedzz/synth.hpp"

namespace fixedzz {

enum class OpKind { H, X, RZ, RX, CNOT, CPHASE };

/// For two-qubit ops q0 is the control (CNOT) or first operand (CPHASE).
/// CPHASE θ is diag(1, 1, 1, e^{iθ}).
struct CircuitOp {
    OpKind kind = OpKind::H;
    QubitIndex q0 = 0;
    QubitIndex q1 = 0;
    double angle = 0.0;

    bool two_qubit() const { return kind == OpKind::CNOT || kind == OpKind::CPHASE; }
};

struct CircuitIR {
    unsigned n_qubits = 0;
    std::vector<CircuitOp> ops;
};

/// Grammar, one statement per line, '#' to end of line is a comment:
///
///   qubits N
///   H q | X q | RZ θ q | RX θ q | CNOT c t | CPHASE θ a b
///
/// Angles are radians. Errors carry the line number.
CircuitIR parse_circuit(std::string_view text);
std::string circuit_to_string(const CircuitIR &ir);

struct RoutedCircuit {
    CircuitIR circuit;
    std::size_t swap_count = 0;
};

/// BFS over pairs with nonzero effective ZZ; neighbours are expanded in
/// increasing index order. Empty when unreachable.
std::vector<QubitIndex> shortest_path(const DeviceModel &model, QubitIndex from, QubitIndex to);

/// Brings the first operand of every uncoupled two-qubit op next to the
/// second one with SWAPs (3 CNOTs each) along a shortest path, applies the op,
/// then undoes the SWAPs. The logical-to-physical map never changes.
RoutedCircuit route(const CircuitIR &ir, const DeviceModel &model);

struct LoweredProgram {
    PulseSchedule schedule;
    std::size_t frames = 0;
    std::vector<SynthesisResult> cnot_searches;
};

/// One-qubit ops become single pulses at the current end of the schedule,
/// CNOT expands through synthesize_cnot and CPHASE θ through
/// decoupled_zz_gate(-θ). Every frame decouples all idle qubits.
LoweredProgram lower(const RoutedCircuit &routed, const DeviceModel &model, std::uint64_t n_max,
                     const DecouplingConfig &config, std::uint64_t trial = 0);

/// Textbook gate semantics, for reference runs.
void apply_ideal(StateVector &state, const CircuitOp &op);
StateVector simulate_ideal(const CircuitIR &ir, StateVector state);
Matrix ideal_unitary(const CircuitIR &ir, unsigned n_qubits);

} // namespace fixedzz
