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

#include <algorithm>
#include <deque>
#include <limits>

#include "fixedzz/circuit.hpp"

namespace fixedzz {

std::vector<QubitIndex> shortest_path(const DeviceModel &model, QubitIndex from, QubitIndex to) {
    const unsigned n = model.n_qubits();
    if (from >= n || to >= n) {
        throw ValidationError("qubit index out of range");
    }
    std::vector<std::vector<QubitIndex>> adjacency(n);
    for (const auto &c : model.couplings()) {
        if (effective_zz(model, c.j, c.k) != 0.0) {
            adjacency[c.j].push_back(c.k);
            adjacency[c.k].push_back(c.j);
        }
    }
    for (auto &nbrs : adjacency) {
        std::sort(nbrs.begin(), nbrs.end());
    }
    constexpr QubitIndex kUnseen = std::numeric_limits<QubitIndex>::max();
    std::vector<QubitIndex> parent(n, kUnseen);
    parent[from] = from;
    std::deque<QubitIndex> queue{from};
    while (!queue.empty()) {
        const QubitIndex u = queue.front();
        queue.pop_front();
        if (u == to) {
            break;
        }
        for (QubitIndex v : adjacency[u]) {
            if (parent[v] == kUnseen) {
                parent[v] = u;
                queue.push_back(v);
            }
        }
    }
    if (parent[to] == kUnseen) {
        return {};
    }
    std::vector<QubitIndex> path{to};
    while (path.back() != from) {
        path.push_back(parent[path.back()]);
    }
    std::reverse(path.begin(), path.end());
    return path;
}

namespace {

void emit_swap(std::vector<CircuitOp> &ops, QubitIndex a, QubitIndex b) {
    ops.push_back({OpKind::CNOT, a, b, 0.0});
    ops.push_back({OpKind::CNOT, b, a, 0.0});
    ops.push_back({OpKind::CNOT, a, b, 0.0});
}

} // namespace

RoutedCircuit route(const CircuitIR &ir, const DeviceModel &model) {
    if (ir.n_qubits > model.n_qubits()) {
        throw ValidationError("circuit needs " + std::to_string(ir.n_qubits) +
                              " qubits, device has " + std::to_string(model.n_qubits()));
    }
    RoutedCircuit out;
    out.circuit.n_qubits = ir.n_qubits;
    auto &ops = out.circuit.ops;
    for (const auto &op : ir.ops) {
        if (!op.two_qubit() || effective_zz(model, op.q0, op.q1) != 0.0) {
            ops.push_back(op);
            continue;
        }
        const auto path = shortest_path(model, op.q0, op.q1);
        if (path.empty()) {
            throw ValidationError("qubits " + std::to_string(op.q0) + " and " +
                                  std::to_string(op.q1) + " are disconnected on the device");
        }
        // path = q0, v1, ..., v_{d-1}, q1; walk q0's state to v_{d-1}.
        const std::size_t hops = path.size() - 2;
        for (std::size_t i = 0; i < hops; ++i) {
            emit_swap(ops, path[i], path[i + 1]);
        }
        CircuitOp moved = op;
        moved.q0 = path[hops];
        ops.push_back(moved);
        for (std::size_t i = hops; i-- > 0;) {
            emit_swap(ops, path[i], path[i + 1]);
        }
        out.swap_count += 2 * hops;
    }
    return out;
}

} // namespace fixedzz
