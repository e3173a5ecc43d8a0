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

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "fixedzz/types.hpp"

namespace fixedzz {

/// General diagonal two-qubit Hamiltonian diag(e1, e2, e3, e4) in the basis
/// |a_j a_k> = |00>, |01>, |10>, |11> (first qubit of the pair is the high bit).
struct FormA {
    double e1 = 0.0;
    double e2 = 0.0;
    double e3 = 0.0;
    double e4 = 0.0;
};

/// Pure |11><11| interaction of strength e.
struct FormB {
    double e = 0.0;
};

struct CouplingSpec {
    QubitIndex j = 0;
    QubitIndex k = 0;
    std::variant<FormA, FormB> energies;

    /// Diagonal entry for qubit values (a_j, a_k).
    double diagonal(int a_j, int a_k) const;
};

/// ZZ strength plus the one-qubit and constant parts split off a FormA term.
struct ReducedCoupling {
    double e_zz = 0.0;
    double local_j = 0.0;
    double local_k = 0.0;
    double constant = 0.0;
};

using QubitPair = std::pair<QubitIndex, QubitIndex>;

/// The machine's fixed interaction graph. Unordered pairs are stored as
/// (min, max); FormA energies are permuted to match when a spec is given in
/// the other order.
class DeviceModel {
  public:
    DeviceModel() = default;
    DeviceModel(unsigned n_qubits, std::vector<CouplingSpec> couplings);

    unsigned n_qubits() const { return n_qubits_; }
    const std::vector<CouplingSpec> &couplings() const { return couplings_; }

    /// nullptr if the pair is uncoupled. Order of j, k does not matter.
    const CouplingSpec *find(QubitIndex j, QubitIndex k) const;

    /// Total diagonal energy of a computational basis state.
    double basis_energy(std::size_t basis_index) const;

  private:
    unsigned n_qubits_ = 0;
    std::vector<CouplingSpec> couplings_;
};

/// Canonical (min, max) pair; the FormA payload is reordered accordingly.
CouplingSpec canonicalize(CouplingSpec spec);

/// Returns the model unchanged if it is well-formed, otherwise throws
/// ValidationError ("self-coupling", "duplicate pair", "qubit index out of
/// range", "non-finite energy", "n_qubits must be positive").
DeviceModel validate_device(DeviceModel model);

ReducedCoupling reduce_form_a(const FormA &energies);

/// The reduction of any coupling spec (FormB maps to e_zz = e, rest zero),
/// expressed relative to the (j, k) order the caller asks for.
ReducedCoupling reduce(const CouplingSpec &spec, QubitIndex j, QubitIndex k);

/// e_zz of the (j, k) coupling, 0 when uncoupled. Throws on invalid indices.
double effective_zz(const DeviceModel &model, QubitIndex j, QubitIndex k);

} // namespace fixedzz
