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

#include <charconv>
#include <cmath>
#include <sstream>

#include "fixedzz/schedule_io.hpp"

namespace fixedzz {
namespace {

[[noreturn]] void fail(std::size_t line, const std::string &msg) {
    throw ValidationError("line " + std::to_string(line) + ": " + msg);
}

std::vector<std::string_view> words_of(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    auto space = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
    while (i < line.size()) {
        while (i < line.size() && space(line[i])) {
            ++i;
        }
        const std::size_t start = i;
        while (i < line.size() && !space(line[i])) {
            ++i;
        }
        if (i > start) {
            out.push_back(line.substr(start, i - start));
        }
    }
    return out;
}

unsigned parse_index(std::string_view w, std::size_t line) {
    unsigned v = 0;
    auto [p, ec] = std::from_chars(w.data(), w.data() + w.size(), v);
    if (ec != std::errc{} || p != w.data() + w.size()) {
        fail(line, "bad qubit index '" + std::string(w) + "'");
    }
    return v;
}

double parse_angle(std::string_view w, std::size_t line) {
    double v = 0.0;
    auto [p, ec] = std::from_chars(w.data(), w.data() + w.size(), v);
    if (ec != std::errc{} || p != w.data() + w.size() || !std::isfinite(v)) {
        fail(line, "bad angle '" + std::string(w) + "'");
    }
    return v;
}

struct GateSyntax {
    std::string_view name;
    OpKind kind;
    bool has_angle;
    unsigned qubits;
};

constexpr GateSyntax kGates[] = {
    {"H", OpKind::H, false, 1},       {"X", OpKind::X, false, 1},
    {"RZ", OpKind::RZ, true, 1},      {"RX", OpKind::RX, true, 1},
    {"CNOT", OpKind::CNOT, false, 2}, {"CPHASE", OpKind::CPHASE, true, 2},
};

} // namespace

CircuitIR parse_circuit(std::string_view text) {
    CircuitIR ir;
    bool have_header = false;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const std::size_t nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        const auto w = words_of(line);
        if (w.empty()) {
            continue;
        }
        if (w[0] == "qubits") {
            if (have_header) {
                fail(line_no, "duplicate 'qubits' header");
            }
            if (w.size() != 2) {
                fail(line_no, "expected 'qubits N'");
            }
            ir.n_qubits = parse_index(w[1], line_no);
            if (ir.n_qubits == 0) {
                fail(line_no, "qubit count must be positive");
            }
            have_header = true;
            continue;
        }
        const GateSyntax *syntax = nullptr;
        for (const auto &g : kGates) {
            if (g.name == w[0]) {
                syntax = &g;
            }
        }
        if (syntax == nullptr) {
            fail(line_no, "unknown gate '" + std::string(w[0]) + "'");
        }
        const std::size_t arity = (syntax->has_angle ? 1 : 0) + syntax->qubits;
        if (w.size() != 1 + arity) {
            fail(line_no, std::string(syntax->name) + " takes " + std::to_string(arity) +
                              " operand(s), got " + std::to_string(w.size() - 1));
        }
        CircuitOp op;
        op.kind = syntax->kind;
        std::size_t at = 1;
        if (syntax->has_angle) {
            op.angle = parse_angle(w[at++], line_no);
        }
        op.q0 = parse_index(w[at++], line_no);
        if (syntax->qubits == 2) {
            op.q1 = parse_index(w[at++], line_no);
            if (op.q0 == op.q1) {
                fail(line_no, "operands must differ");
            }
        }
        if (!have_header) {
            fail(line_no, "missing 'qubits N' header before the first gate");
        }
        if (op.q0 >= ir.n_qubits || (syntax->qubits == 2 && op.q1 >= ir.n_qubits)) {
            fail(line_no, "qubit index out of range (circuit has " + std::to_string(ir.n_qubits) +
                              " qubits)");
        }
        ir.ops.push_back(op);
    }
    if (!have_header) {
        throw ValidationError("missing 'qubits N' header");
    }
    return ir;
}

std::string circuit_to_string(const CircuitIR &ir) {
    std::ostringstream os;
    os << "qubits " << ir.n_qubits << '\n';
    for (const auto &op : ir.ops) {
        for (const auto &g : kGates) {
            if (g.kind == op.kind) {
                os << g.name;
            }
        }
        if (op.kind == OpKind::RZ || op.kind == OpKind::RX || op.kind == OpKind::CPHASE) {
            os << ' ' << format_real(op.angle);
        }
        os << ' ' << op.q0;
        if (op.two_qubit()) {
            os << ' ' << op.q1;
        }
        os << '\n';
    }
    return os.str();
}

void apply_ideal(StateVector &state, const CircuitOp &op) {
    switch (op.kind) {
    case OpKind::H:
        apply_gate(state, op.q0, Gate::hadamard());
        return;
    case OpKind::X:
        apply_gate(state, op.q0, Gate::not_gate());
        return;
    case OpKind::RZ:
        apply_gate(state, op.q0, Gate::rz(op.angle));
        return;
    case OpKind::RX:
        apply_gate(state, op.q0, Gate::rx(op.angle));
        return;
    default:
        break;
    }
    if (op.q0 >= state.n_qubits() || op.q1 >= state.n_qubits() || op.q0 == op.q1) {
        throw ValidationError("bad two-qubit operands");
    }
    auto amps = state.amplitudes();
    const std::size_t b0 = std::size_t{1} << op.q0;
    const std::size_t b1 = std::size_t{1} << op.q1;
    if (op.kind == OpKind::CNOT) {
        for (std::size_t x = 0; x < amps.size(); ++x) {
            if ((x & b0) && !(x & b1)) {
                std::swap(amps[x], amps[x | b1]);
            }
        }
        return;
    }
    const Complex phase = cis(op.angle);
    for (std::size_t x = 0; x < amps.size(); ++x) {
        if ((x & b0) && (x & b1)) {
            amps[x] *= phase;
        }
    }
}

StateVector simulate_ideal(const CircuitIR &ir, StateVector state) {
    for (const auto &op : ir.ops) {
        apply_ideal(state, op);
    }
    return state;
}

Matrix ideal_unitary(const CircuitIR &ir, unsigned n_qubits) {
    const std::size_t dim = std::size_t{1} << n_qubits;
    Matrix u(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::size_t c = 0; c < dim; ++c) {
        const StateVector out = simulate_ideal(ir, StateVector(n_qubits, c));
        for (std::size_t r = 0; r < dim; ++r) {
            u(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = out.amplitudes()[r];
        }
    }
    return u;
}

} // namespace fixedzz
