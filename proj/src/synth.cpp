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

#include "fixedzz/synth.hpp"

#include <cmath>
#include <string>

namespace fixedzz {

SynthesisResult diophantine_odd_pi(double delta_e, std::uint64_t n_max) {
    if (delta_e == 0.0 || !std::isfinite(delta_e)) {
        throw SynthesisError("no coupling: delta_e must be finite and nonzero");
    }
    if (n_max == 0) {
        throw ValidationError("n_max must be at least 1");
    }
    const double step = std::abs(delta_e);
    SynthesisResult best;
    best.delta_e = delta_e;
    best.residual = INFINITY;
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        const double x = static_cast<double>(n) * step;
        const double m_real = std::round((x / kPi - 1.0) / 2.0);
        const std::uint64_t m = m_real > 0.0 ? static_cast<std::uint64_t>(m_real) : 0;
        const double residual = std::abs(x - kPi * static_cast<double>(2 * m + 1));
        if (residual < best.residual) {
            best.n = n;
            best.m = m;
            best.residual = residual;
        }
    }
    best.fidelity_bound = 1.0 - best.residual * best.residual / 4.0;
    return best;
}

namespace {

// E_x for |a_j a_k> in the caller's (j, k) order.
double pair_energy(const CouplingSpec &spec, QubitIndex j, int a_j, int a_k) {
    return spec.j == j ? spec.diagonal(a_j, a_k) : spec.diagonal(a_k, a_j);
}

} // namespace

UnitStep build_u(const DeviceModel &model, QubitIndex j, QubitIndex k,
                 const DecouplingConfig &config, const FrameCursor &cursor) {
    if (effective_zz(model, j, k) == 0.0) {
        throw SynthesisError("no coupling between qubits " + std::to_string(j) + " and " +
                             std::to_string(k));
    }
    const CouplingSpec &spec = *model.find(j, k);
    const double e1 = pair_energy(spec, j, 0, 0);
    const double e2 = pair_energy(spec, j, 0, 1);
    const double e3 = pair_energy(spec, j, 1, 0);
    const double e4 = pair_energy(spec, j, 1, 1);

    // The device evolves as exp(-iH), so the textbook rotations
    //   A = diag(1, e^{i(E1-E3)}),  B = diag(e^{-iE1}, e^{-iE2})
    // are applied with negated angles:
    //   A = diag(1, e^{-i(E1-E3)}),  B = e^{iE1} diag(1, e^{i(E2-E1)}).
    const double a_angle = -(e1 - e3);
    const double b_angle = e2 - e1;

    UnitStep step;
    step.recipe = build_idle_schedule(model, QubitPair{j, k}, 1.0, config, cursor);
    const double t = step.recipe.duration();
    if (a_angle != 0.0) {
        step.recipe.add(t, j, Gate::rz(a_angle));
    }
    if (b_angle != 0.0) {
        step.recipe.add(t, k, Gate::rz(b_angle));
    }
    step.recipe.add_global_phase(a_angle / 2 + e1 + b_angle / 2);

    const Eigen::Vector4cd free_evolution(cis(-e1), cis(-e2), cis(-e3), cis(-e4));
    const Eigen::Vector2cd a_diag(1.0, cis(a_angle));
    const Eigen::Vector2cd b_diag(cis(e1), cis(e1 + b_angle));
    Eigen::Vector4cd product;
    for (int aj = 0; aj < 2; ++aj) {
        for (int ak = 0; ak < 2; ++ak) {
            product(2 * aj + ak) = free_evolution(2 * aj + ak) * a_diag(aj) * b_diag(ak);
        }
    }
    step.matrix = product.asDiagonal();
    return step;
}

SynthesizedGate synthesize_pi(const DeviceModel &model, QubitIndex j, QubitIndex k,
                              std::uint64_t n_max, const DecouplingConfig &config,
                              FrameCursor &cursor) {
    const double delta_e = effective_zz(model, j, k);
    if (delta_e == 0.0) {
        throw SynthesisError("no coupling between qubits " + std::to_string(j) + " and " +
                             std::to_string(k));
    }
    SynthesizedGate out;
    out.search = diophantine_odd_pi(delta_e, n_max);
    for (std::uint64_t rep = 0; rep < out.search.n; ++rep) {
        out.schedule.append(build_u(model, j, k, config, cursor).recipe);
        ++cursor.frame;
    }
    return out;
}

SynthesizedGate synthesize_pi(const DeviceModel &model, QubitIndex j, QubitIndex k,
                              std::uint64_t n_max, const DecouplingConfig &config) {
    FrameCursor cursor;
    return synthesize_pi(model, j, k, n_max, config, cursor);
}

SynthesizedGate synthesize_cnot(const DeviceModel &model, QubitIndex control, QubitIndex target,
                                std::uint64_t n_max, const DecouplingConfig &config,
                                FrameCursor &cursor) {
    SynthesizedGate pi = synthesize_pi(model, control, target, n_max, config, cursor);
    SynthesizedGate out;
    out.search = pi.search;
    out.schedule.add(0.0, target, Gate::hadamard());
    out.schedule.append(pi.schedule);
    out.schedule.add(out.schedule.duration(), target, Gate::hadamard());
    return out;
}

SynthesizedGate synthesize_cnot(const DeviceModel &model, QubitIndex control, QubitIndex target,
                                std::uint64_t n_max, const DecouplingConfig &config) {
    FrameCursor cursor;
    return synthesize_cnot(model, control, target, n_max, config, cursor);
}

Matrix embed_two_qubit(const Eigen::Matrix4cd &pair_matrix, unsigned n_qubits, QubitIndex j,
                       QubitIndex k) {
    if (j == k || j >= n_qubits || k >= n_qubits) {
        throw ValidationError("embed_two_qubit: operands must be distinct and in range");
    }
    const std::size_t dim = std::size_t{1} << n_qubits;
    const std::size_t mask = (std::size_t{1} << j) | (std::size_t{1} << k);
    Matrix u = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::size_t col = 0; col < dim; ++col) {
        const int in = static_cast<int>(2 * ((col >> j) & 1U) + ((col >> k) & 1U));
        for (int out = 0; out < 4; ++out) {
            const std::size_t row = (col & ~mask) | ((std::size_t(out >> 1) & 1U) << j) |
                                    ((std::size_t(out) & 1U) << k);
            u(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) =
                pair_matrix(out, in);
        }
    }
    return u;
}

Eigen::Matrix4cd pi_gate() {
    return Eigen::Vector4cd(1.0, 1.0, 1.0, -1.0).asDiagonal();
}

Eigen::Matrix4cd cnot_gate() {
    Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
    m(0, 0) = 1.0;
    m(1, 1) = 1.0;
    m(2, 3) = 1.0;
    m(3, 2) = 1.0;
    return m;
}

} // namespace fixedzz
