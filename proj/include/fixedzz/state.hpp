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
#include <span>
#include <unordered_map>
#include <vector>

#include "fixedzz/device.hpp"
#include "fixedzz/types.hpp"

namespace fixedzz {

enum class GateKind { Not, H, RZ, RX, Matrix };

/// Instantaneous one-qubit gate.
///   RZ(θ) = diag(e^{-iθ/2}, e^{iθ/2}),  RX(θ) = exp(-iθX/2).
struct Gate {
    GateKind kind = GateKind::Not;
    double angle = 0.0;
    Matrix2 explicit_matrix{};

    static Gate not_gate() { return {GateKind::Not, 0.0, {}}; }
    static Gate hadamard() { return {GateKind::H, 0.0, {}}; }
    static Gate rz(double theta) { return {GateKind::RZ, theta, {}}; }
    static Gate rx(double theta) { return {GateKind::RX, theta, {}}; }
    /// Throws ValidationError if m is not unitary to 1e-12.
    static Gate from_matrix(const Matrix2 &m);

    Matrix2 matrix() const;
};

bool is_unitary(const Matrix2 &m, double tol = 1e-12);

struct PulseEvent {
    double time = 0.0;
    QubitIndex qubit = 0;
    Gate gate;
};

/// During [begin, end] the free evolution of `qubits` (bit mask) is replaced by
/// its average over both values of each masked bit. This is the λ→∞ limit of
/// randomized NOT decoupling and is what expectation mode emits instead of
/// pulse trains.
struct AveragingWindow {
    double begin = 0.0;
    double end = 0.0;
    std::uint64_t qubits = 0;
};

/// Time-ordered instantaneous one-qubit pulses over [0, duration], with free
/// evolution of the device Hamiltonian in between.
class PulseSchedule {
  public:
    PulseSchedule() = default;
    explicit PulseSchedule(double duration) : duration_(duration) {}

    double duration() const { return duration_; }
    double global_phase_correction() const { return global_phase_; }
    const std::vector<PulseEvent> &events() const { return events_; }
    const std::vector<AveragingWindow> &windows() const { return windows_; }

    void set_duration(double duration) { duration_ = duration; }
    void add_global_phase(double phase) { global_phase_ += phase; }

    /// Appends an event. Events at equal times on the same qubit keep the
    /// order in which they were added.
    void add(double time, QubitIndex qubit, const Gate &gate);
    void add_window(const AveragingWindow &window);

    /// Sequential composition: `next` runs after this schedule ends.
    void append(const PulseSchedule &next);

    /// Throws ValidationError on times outside [0, duration], unsorted events
    /// or non-unitary explicit gates.
    void validate(unsigned n_qubits) const;

  private:
    double duration_ = 0.0;
    double global_phase_ = 0.0;
    std::vector<PulseEvent> events_;
    std::vector<AveragingWindow> windows_;
};

/// 2^n amplitudes; bit q of the basis index is the value of qubit q. The
/// global phase is kept apart from the amplitudes so tests can compare with
/// or without it.
class StateVector {
  public:
    explicit StateVector(unsigned n_qubits, std::size_t basis_index = 0);
    StateVector(unsigned n_qubits, std::vector<Complex> amplitudes);

    unsigned n_qubits() const { return n_qubits_; }
    std::span<Complex> amplitudes() { return amps_; }
    std::span<const Complex> amplitudes() const { return amps_; }
    double global_phase() const { return global_phase_; }
    void add_global_phase(double phase) { global_phase_ += phase; }

    /// Amplitudes multiplied by e^{i global_phase}.
    std::vector<Complex> with_global_phase() const;
    double norm() const;

  private:
    unsigned n_qubits_;
    std::vector<Complex> amps_;
    double global_phase_ = 0.0;
};

/// Throws ValidationError on a bad qubit index or a non-unitary gate.
void apply_one_qubit(StateVector &state, QubitIndex qubit, const Matrix2 &gate);
void apply_gate(StateVector &state, QubitIndex qubit, const Gate &gate);

/// Free evolution exp(-i H dt) with H the raw stored device diagonal.
void evolve_free(StateVector &state, const DeviceModel &model, double dt);

/// Caches per-basis energies of one device, optionally averaged over masked
/// qubits. One instance per thread.
class Propagator {
  public:
    explicit Propagator(const DeviceModel &model);

    const DeviceModel &model() const { return *model_; }
    void evolve(StateVector &state, double dt, std::uint64_t averaged_qubits = 0);
    const std::vector<double> &energies(std::uint64_t averaged_qubits);

  private:
    const DeviceModel *model_;
    std::unordered_map<std::uint64_t, std::vector<double>> energy_cache_;
    std::vector<Complex> phase_buffer_;
};

/// Per-basis diagonal energies with each masked qubit's value averaged out of
/// every coupling it takes part in.
std::vector<double> averaged_energies(const DeviceModel &model, std::uint64_t averaged_qubits);

void simulate_schedule(StateVector &state, Propagator &propagator, const PulseSchedule &schedule);
StateVector simulate_schedule(StateVector state, const DeviceModel &model,
                              const PulseSchedule &schedule);

inline constexpr unsigned kDefaultReconstructCap = 12;

/// Column c is the schedule applied to |c>, global phase included.
Matrix reconstruct_unitary(const DeviceModel &model, const PulseSchedule &schedule,
                           unsigned max_qubits = kDefaultReconstructCap);
Matrix reconstruct_unitary(Propagator &propagator, const PulseSchedule &schedule,
                           unsigned max_qubits = kDefaultReconstructCap);

} // namespace fixedzz
