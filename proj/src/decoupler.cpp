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

#include "fixedzz/decoupler.hpp"

#include <cmath>
#include <string>

namespace fixedzz {
namespace {

void check_pair(const DeviceModel &model, const QubitPair &pair) {
    if (pair.first >= model.n_qubits() || pair.second >= model.n_qubits()) {
        throw ValidationError("separated pair (" + std::to_string(pair.first) + ", " +
                              std::to_string(pair.second) + ") out of range");
    }
    if (pair.first == pair.second) {
        throw ValidationError("separated pair must name two distinct qubits");
    }
}

bool is_separated(const std::optional<QubitPair> &sep, QubitIndex q) {
    return sep && (q == sep->first || q == sep->second);
}

// Applies e^{+i z} to |1> of `qubit` at time t as RZ(z) and a global z/2.
void add_z_phase(PulseSchedule &schedule, double t, QubitIndex qubit, double z) {
    if (z == 0.0) {
        return;
    }
    schedule.add(t, qubit, Gate::rz(z));
    schedule.add_global_phase(z / 2);
}

} // namespace

PulseTrain sample_pulse_train(QubitIndex qubit, double lambda, double duration, RngStream &rng) {
    if (!(lambda > 0.0) || !std::isfinite(lambda)) {
        throw ValidationError("pulse density lambda must be positive");
    }
    if (!(duration > 0.0) || !std::isfinite(duration)) {
        throw ValidationError("pulse train duration must be positive");
    }
    PulseTrain train;
    train.qubit = qubit;
    double t = 0.0;
    for (;;) {
        const double gap = rng.next_exponential(lambda);
        if (gap == 0.0) {
            continue;
        }
        t += gap;
        if (!(t < duration)) {
            break;
        }
        train.times.push_back(t);
    }
    train.close_with_not = train.times.size() % 2 == 1;
    return train;
}

CompensationPlan compensation_plan(const DeviceModel &model, std::optional<QubitPair> separated,
                                   double duration) {
    if (separated) {
        check_pair(model, *separated);
    }
    CompensationPlan plan;
    for (const auto &c : model.couplings()) {
        const bool sep_j = is_separated(separated, c.j);
        const bool sep_k = is_separated(separated, c.k);
        if (sep_j && sep_k) {
            continue;
        }
        if (!sep_j && !sep_k) {
            const double mean = 0.25 * (c.diagonal(0, 0) + c.diagonal(0, 1) + c.diagonal(1, 0) +
                                        c.diagonal(1, 1));
            plan.global_phase += duration * mean;
            continue;
        }
        // One end kept (s), the other flipped: exposure averages over the
        // flipped bit and is affine in a_s.
        const QubitIndex s = sep_j ? c.j : c.k;
        auto averaged = [&](int a_s) {
            return sep_j ? 0.5 * (c.diagonal(a_s, 0) + c.diagonal(a_s, 1))
                         : 0.5 * (c.diagonal(0, a_s) + c.diagonal(1, a_s));
        };
        const double base = averaged(0);
        plan.global_phase += duration * base;
        plan.z_phase[s] += duration * (averaged(1) - base);
    }
    return plan;
}

void add_pair_local_correction(PulseSchedule &schedule, const CouplingSpec &spec, QubitIndex j,
                               QubitIndex k, double duration) {
    const ReducedCoupling r = reduce(spec, j, k);
    const double t = schedule.duration();
    add_z_phase(schedule, t, j, duration * r.local_j);
    add_z_phase(schedule, t, k, duration * r.local_k);
    schedule.add_global_phase(duration * r.constant);
}

PulseSchedule build_idle_schedule(const DeviceModel &model, std::optional<QubitPair> separated,
                                  double duration, const DecouplingConfig &config,
                                  const FrameCursor &cursor) {
    if (separated) {
        check_pair(model, *separated);
    }
    if (!(duration >= 0.0) || !std::isfinite(duration)) {
        throw ValidationError("idle duration must be finite and nonnegative");
    }
    if (model.n_qubits() > 64) {
        throw ValidationError("decoupling supports at most 64 qubits");
    }
    PulseSchedule schedule(duration);
    if (duration == 0.0) {
        return schedule;
    }

    std::uint64_t flipped = 0;
    for (QubitIndex q = 0; q < model.n_qubits(); ++q) {
        if (!is_separated(separated, q)) {
            flipped |= std::uint64_t{1} << q;
        }
    }

    if (config.mode == DecouplingMode::Expectation) {
        if (flipped != 0) {
            schedule.add_window({0.0, duration, flipped});
        }
    } else {
        for (QubitIndex q = 0; q < model.n_qubits(); ++q) {
            if (((flipped >> q) & 1U) == 0) {
                continue;
            }
            RngStream rng = pulse_stream(config.master_seed, cursor.trial, cursor.frame, q);
            const PulseTrain train = sample_pulse_train(q, config.lambda, duration, rng);
            for (double t : train.times) {
                schedule.add(t, q, Gate::not_gate());
            }
            if (train.close_with_not) {
                schedule.add(duration, q, Gate::not_gate());
            }
        }
    }

    const CompensationPlan plan = compensation_plan(model, separated, duration);
    for (const auto &[q, z] : plan.z_phase) {
        add_z_phase(schedule, duration, q, z);
    }
    schedule.add_global_phase(plan.global_phase);
    return schedule;
}

PulseSchedule decoupled_zz_gate(const DeviceModel &model, QubitIndex j, QubitIndex k,
                                double theta, const DecouplingConfig &config,
                                const FrameCursor &cursor) {
    const double e_zz = effective_zz(model, j, k);
    if (e_zz == 0.0) {
        throw SynthesisError("no coupling between qubits " + std::to_string(j) + " and " +
                             std::to_string(k));
    }
    if (!std::isfinite(theta)) {
        throw ValidationError("phase angle must be finite");
    }
    double reduced = std::fmod(theta, kTwoPi);
    if (reduced < 0.0) {
        reduced += kTwoPi;
    }
    if (reduced >= kTwoPi) {
        reduced = 0.0;
    }
    const double span = (e_zz > 0.0 || reduced == 0.0) ? reduced : kTwoPi - reduced;
    const double dt = span / std::abs(e_zz);
    if (dt == 0.0) {
        return PulseSchedule(0.0);
    }
    PulseSchedule schedule = build_idle_schedule(model, QubitPair{j, k}, dt, config, cursor);
    add_pair_local_correction(schedule, *model.find(j, k), j, k, dt);
    return schedule;
}

Matrix ideal_idle_unitary(const DeviceModel &model, std::optional<QubitPair> separated,
                          double duration) {
    const std::size_t dim = std::size_t{1} << model.n_qubits();
    Matrix u = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    const double e_zz = separated ? effective_zz(model, separated->first, separated->second) : 0.0;
    for (std::size_t x = 0; x < dim; ++x) {
        const bool both = separated && ((x >> separated->first) & 1U) &&
                          ((x >> separated->second) & 1U);
        u(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(x)) =
            both ? cis(-duration * e_zz) : Complex{1.0, 0.0};
    }
    return u;
}

} // namespace fixedzz
