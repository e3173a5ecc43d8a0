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

#include "fixedzz/circuit.hpp"

namespace fixedzz {

LoweredProgram lower(const RoutedCircuit &routed, const DeviceModel &model, std::uint64_t n_max,
                     const DecouplingConfig &config, std::uint64_t trial) {
    if (routed.circuit.n_qubits > model.n_qubits()) {
        throw ValidationError("circuit does not fit the device");
    }
    LoweredProgram out;
    FrameCursor cursor{trial, 0};
    auto &schedule = out.schedule;
    for (const auto &op : routed.circuit.ops) {
        switch (op.kind) {
        case OpKind::H:
            schedule.add(schedule.duration(), op.q0, Gate::hadamard());
            break;
        case OpKind::X:
            schedule.add(schedule.duration(), op.q0, Gate::not_gate());
            break;
        case OpKind::RZ:
            schedule.add(schedule.duration(), op.q0, Gate::rz(op.angle));
            break;
        case OpKind::RX:
            schedule.add(schedule.duration(), op.q0, Gate::rx(op.angle));
            break;
        case OpKind::CNOT: {
            auto cnot = synthesize_cnot(model, op.q0, op.q1, n_max, config, cursor);
            schedule.append(cnot.schedule);
            out.cnot_searches.push_back(cnot.search);
            break;
        }
        case OpKind::CPHASE: {
            // The device realizes exp(-iθ a a'); CPHASE θ wants e^{+iθ}.
            schedule.append(decoupled_zz_gate(model, op.q0, op.q1, -op.angle, config, cursor));
            ++cursor.frame;
            break;
        }
        }
    }
    out.frames = cursor.frame;
    return out;
}

} // namespace fixedzz
