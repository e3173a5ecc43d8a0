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

#include "fixedzz/state.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fixedzz/kernels/kernels.hpp"

namespace fixedzz {

bool is_unitary(const Matrix2 &m, double tol) {
    // G^dagger G - I, entry by entry.
    const Complex g00 = std::conj(m[0]) * m[0] + std::conj(m[2]) * m[2] - 1.0;
    const Complex g01 = std::conj(m[0]) * m[1] + std::conj(m[2]) * m[3];
    const Complex g11 = std::conj(m[1]) * m[1] + std::conj(m[3]) * m[3] - 1.0;
    return std::abs(g00) <= tol && std::abs(g01) <= tol && std::abs(g11) <= tol;
}

Gate Gate::from_matrix(const Matrix2 &m) {
    if (!is_unitary(m)) {
        throw ValidationError("gate matrix is not unitary");
    }
    return {GateKind::Matrix, 0.0, m};
}

Matrix2 Gate::matrix() const {
    switch (kind) {
    case GateKind::Not:
        return {0.0, 1.0, 1.0, 0.0};
    case GateKind::H: {
        const double s = 1.0 / std::sqrt(2.0);
        return {s, s, s, -s};
    }
    case GateKind::RZ:
        return {cis(-angle / 2), 0.0, 0.0, cis(angle / 2)};
    case GateKind::RX: {
        const double c = std::cos(angle / 2);
        const Complex s{0.0, -std::sin(angle / 2)};
        return {c, s, s, c};
    }
    case GateKind::Matrix:
        return explicit_matrix;
    }
    return explicit_matrix;
}

namespace {

bool event_before(const PulseEvent &a, const PulseEvent &b) {
    return a.time < b.time || (a.time == b.time && a.qubit < b.qubit);
}

} // namespace

void PulseSchedule::add(double time, QubitIndex qubit, const Gate &gate) {
    PulseEvent ev{time, qubit, gate};
    // upper_bound keeps same-(time, qubit) events in insertion order.
    auto pos = std::upper_bound(events_.begin(), events_.end(), ev, event_before);
    events_.insert(pos, std::move(ev));
}

void PulseSchedule::add_window(const AveragingWindow &window) { windows_.push_back(window); }

void PulseSchedule::append(const PulseSchedule &next) {
    const double offset = duration_;
    for (const auto &e : next.events_) {
        add(offset + e.time, e.qubit, e.gate);
    }
    for (const auto &w : next.windows_) {
        windows_.push_back({offset + w.begin, offset + w.end, w.qubits});
    }
    duration_ = offset + next.duration_;
    global_phase_ += next.global_phase_;
}

void PulseSchedule::validate(unsigned n_qubits) const {
    if (!(duration_ >= 0.0) || !std::isfinite(duration_)) {
        throw ValidationError("schedule duration must be finite and nonnegative");
    }
    for (std::size_t i = 0; i < events_.size(); ++i) {
        const auto &e = events_[i];
        if (!(e.time >= 0.0 && e.time <= duration_)) {
            throw ValidationError("event time " + std::to_string(e.time) +
                                  " outside [0, duration]");
        }
        if (e.qubit >= n_qubits) {
            throw ValidationError("event qubit " + std::to_string(e.qubit) + " out of range");
        }
        if (e.gate.kind == GateKind::Matrix && !is_unitary(e.gate.explicit_matrix)) {
            throw ValidationError("event gate is not unitary");
        }
        if (i > 0 && event_before(e, events_[i - 1])) {
            throw ValidationError("events not sorted by (time, qubit)");
        }
    }
    for (const auto &w : windows_) {
        if (!(w.begin >= 0.0 && w.begin <= w.end && w.end <= duration_)) {
            throw ValidationError("averaging window outside [0, duration]");
        }
        if (n_qubits < 64 && (w.qubits >> n_qubits) != 0) {
            throw ValidationError("averaging window names a qubit out of range");
        }
    }
}

StateVector::StateVector(unsigned n_qubits, std::size_t basis_index)
    : n_qubits_(n_qubits), amps_(std::size_t{1} << n_qubits, Complex{0.0, 0.0}) {
    if (basis_index >= amps_.size()) {
        throw ValidationError("basis index out of range");
    }
    amps_[basis_index] = 1.0;
}

StateVector::StateVector(unsigned n_qubits, std::vector<Complex> amplitudes)
    : n_qubits_(n_qubits), amps_(std::move(amplitudes)) {
    if (amps_.size() != (std::size_t{1} << n_qubits)) {
        throw ValidationError("amplitude count does not match 2^n_qubits");
    }
}

std::vector<Complex> StateVector::with_global_phase() const {
    std::vector<Complex> out(amps_);
    const Complex phase = cis(global_phase_);
    for (auto &a : out) {
        a *= phase;
    }
    return out;
}

double StateVector::norm() const {
    return std::sqrt(kernels::active().inner_product(amps_, amps_).real());
}

void apply_one_qubit(StateVector &state, QubitIndex qubit, const Matrix2 &gate) {
    if (qubit >= state.n_qubits()) {
        throw ValidationError("qubit index " + std::to_string(qubit) + " out of range");
    }
    if (!is_unitary(gate)) {
        throw ValidationError("gate matrix is not unitary");
    }
    kernels::active().apply_1q(state.amplitudes(), qubit, gate);
}

void apply_gate(StateVector &state, QubitIndex qubit, const Gate &gate) {
    if (qubit >= state.n_qubits()) {
        throw ValidationError("qubit index " + std::to_string(qubit) + " out of range");
    }
    if (gate.kind == GateKind::Not) {
        kernels::active().apply_not(state.amplitudes(), qubit);
        return;
    }
    if (gate.kind == GateKind::Matrix) {
        apply_one_qubit(state, qubit, gate.explicit_matrix);
        return;
    }
    kernels::active().apply_1q(state.amplitudes(), qubit, gate.matrix());
}

std::vector<double> averaged_energies(const DeviceModel &model, std::uint64_t averaged_qubits) {
    const std::size_t dim = std::size_t{1} << model.n_qubits();
    std::vector<double> energies(dim, 0.0);
    for (const auto &c : model.couplings()) {
        const bool avg_j = ((averaged_qubits >> c.j) & 1U) != 0;
        const bool avg_k = ((averaged_qubits >> c.k) & 1U) != 0;
        for (std::size_t x = 0; x < dim; ++x) {
            const int a_j = static_cast<int>((x >> c.j) & 1U);
            const int a_k = static_cast<int>((x >> c.k) & 1U);
            double d;
            if (avg_j && avg_k) {
                d = 0.25 * (c.diagonal(0, 0) + c.diagonal(0, 1) + c.diagonal(1, 0) +
                            c.diagonal(1, 1));
            } else if (avg_j) {
                d = 0.5 * (c.diagonal(0, a_k) + c.diagonal(1, a_k));
            } else if (avg_k) {
                d = 0.5 * (c.diagonal(a_j, 0) + c.diagonal(a_j, 1));
            } else {
                d = c.diagonal(a_j, a_k);
            }
            energies[x] += d;
        }
    }
    return energies;
}

Propagator::Propagator(const DeviceModel &model)
    : model_(&model), phase_buffer_(std::size_t{1} << model.n_qubits()) {}

const std::vector<double> &Propagator::energies(std::uint64_t averaged_qubits) {
    auto it = energy_cache_.find(averaged_qubits);
    if (it == energy_cache_.end()) {
        it = energy_cache_.emplace(averaged_qubits, averaged_energies(*model_, averaged_qubits))
                 .first;
    }
    return it->second;
}

void Propagator::evolve(StateVector &state, double dt, std::uint64_t averaged_qubits) {
    if (dt < 0.0) {
        throw ValidationError("negative evolution time");
    }
    if (state.n_qubits() != model_->n_qubits()) {
        throw ValidationError("state and device qubit counts differ");
    }
    if (dt == 0.0) {
        return;
    }
    const auto &e = energies(averaged_qubits);
    for (std::size_t i = 0; i < e.size(); ++i) {
        phase_buffer_[i] = cis(-dt * e[i]);
    }
    kernels::active().apply_diagonal(state.amplitudes(), phase_buffer_);
}

void evolve_free(StateVector &state, const DeviceModel &model, double dt) {
    Propagator propagator(model);
    propagator.evolve(state, dt);
}

namespace {

struct Segment {
    double begin;
    double end;
    std::uint64_t mask;
};

std::vector<Segment> averaging_timeline(const PulseSchedule &schedule) {
    std::vector<double> cuts{0.0, schedule.duration()};
    for (const auto &w : schedule.windows()) {
        cuts.push_back(w.begin);
        cuts.push_back(w.end);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    std::vector<Segment> out;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        std::uint64_t mask = 0;
        for (const auto &w : schedule.windows()) {
            if (w.begin <= cuts[i] && w.end >= cuts[i + 1]) {
                mask |= w.qubits;
            }
        }
        out.push_back({cuts[i], cuts[i + 1], mask});
    }
    return out;
}

} // namespace

void simulate_schedule(StateVector &state, Propagator &propagator, const PulseSchedule &schedule) {
    if (state.n_qubits() != propagator.model().n_qubits()) {
        throw ValidationError("state and device qubit counts differ");
    }
    const auto timeline = averaging_timeline(schedule);
    std::size_t seg = 0;
    double now = 0.0;
    auto advance = [&](double until) {
        while (now < until) {
            while (seg + 1 < timeline.size() && timeline[seg].end <= now) {
                ++seg;
            }
            const double step_end =
                timeline.empty() ? until : std::min(until, timeline[seg].end);
            const std::uint64_t mask = timeline.empty() ? 0 : timeline[seg].mask;
            const double stop = step_end > now ? step_end : until;
            propagator.evolve(state, stop - now, mask);
            now = stop;
        }
    };
    for (const auto &e : schedule.events()) {
        advance(e.time);
        apply_gate(state, e.qubit, e.gate);
    }
    advance(schedule.duration());
    state.add_global_phase(schedule.global_phase_correction());
}

StateVector simulate_schedule(StateVector state, const DeviceModel &model,
                              const PulseSchedule &schedule) {
    Propagator propagator(model);
    simulate_schedule(state, propagator, schedule);
    return state;
}

Matrix reconstruct_unitary(const DeviceModel &model, const PulseSchedule &schedule,
                           unsigned max_qubits) {
    Propagator propagator(model);
    return reconstruct_unitary(propagator, schedule, max_qubits);
}

Matrix reconstruct_unitary(Propagator &propagator, const PulseSchedule &schedule,
                           unsigned max_qubits) {
    const unsigned n = propagator.model().n_qubits();
    if (n > max_qubits) {
        throw ValidationError("unitary reconstruction capped at " + std::to_string(max_qubits) +
                              " qubits, device has " + std::to_string(n));
    }
    const std::size_t dim = std::size_t{1} << n;
    Matrix u(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::size_t c = 0; c < dim; ++c) {
        StateVector column(n, c);
        simulate_schedule(column, propagator, schedule);
        const auto amps = column.with_global_phase();
        for (std::size_t r = 0; r < dim; ++r) {
            u(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = amps[r];
        }
    }
    return u;
}

} // namespace fixedzz
