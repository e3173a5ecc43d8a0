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

#include "fixedzz/device.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace fixedzz {

double CouplingSpec::diagonal(int a_j, int a_k) const {
    if (const auto *b = std::get_if<FormB>(&energies)) {
        return (a_j != 0 && a_k != 0) ? b->e : 0.0;
    }
    const auto &a = std::get<FormA>(energies);
    switch ((a_j != 0 ? 2 : 0) + (a_k != 0 ? 1 : 0)) {
    case 0:
        return a.e1;
    case 1:
        return a.e2;
    case 2:
        return a.e3;
    default:
        return a.e4;
    }
}

CouplingSpec canonicalize(CouplingSpec spec) {
    if (spec.j > spec.k) {
        std::swap(spec.j, spec.k);
        if (auto *a = std::get_if<FormA>(&spec.energies)) {
            std::swap(a->e2, a->e3);
        }
    }
    return spec;
}

DeviceModel::DeviceModel(unsigned n_qubits, std::vector<CouplingSpec> couplings)
    : n_qubits_(n_qubits) {
    couplings_.reserve(couplings.size());
    for (auto &c : couplings) {
        couplings_.push_back(canonicalize(std::move(c)));
    }
}

const CouplingSpec *DeviceModel::find(QubitIndex j, QubitIndex k) const {
    const QubitIndex lo = std::min(j, k);
    const QubitIndex hi = std::max(j, k);
    for (const auto &c : couplings_) {
        if (c.j == lo && c.k == hi) {
            return &c;
        }
    }
    return nullptr;
}

double DeviceModel::basis_energy(std::size_t basis_index) const {
    double total = 0.0;
    for (const auto &c : couplings_) {
        total += c.diagonal(static_cast<int>((basis_index >> c.j) & 1U),
                            static_cast<int>((basis_index >> c.k) & 1U));
    }
    return total;
}

namespace {

bool all_finite(const CouplingSpec &c) {
    if (const auto *b = std::get_if<FormB>(&c.energies)) {
        return std::isfinite(b->e);
    }
    const auto &a = std::get<FormA>(c.energies);
    return std::isfinite(a.e1) && std::isfinite(a.e2) && std::isfinite(a.e3) &&
           std::isfinite(a.e4);
}

} // namespace

DeviceModel validate_device(DeviceModel model) {
    if (model.n_qubits() == 0) {
        throw ValidationError("n_qubits must be positive");
    }
    std::set<QubitPair> seen;
    for (const auto &c : model.couplings()) {
        if (c.j >= model.n_qubits() || c.k >= model.n_qubits()) {
            throw ValidationError("qubit index out of range in coupling (" + std::to_string(c.j) +
                                  ", " + std::to_string(c.k) + ")");
        }
        if (c.j == c.k) {
            throw ValidationError("self-coupling on qubit " + std::to_string(c.j));
        }
        if (!seen.emplace(c.j, c.k).second) {
            throw ValidationError("duplicate pair (" + std::to_string(c.j) + ", " +
                                  std::to_string(c.k) + ")");
        }
        if (!all_finite(c)) {
            throw ValidationError("non-finite energy in coupling (" + std::to_string(c.j) + ", " +
                                  std::to_string(c.k) + ")");
        }
    }
    return model;
}

ReducedCoupling reduce_form_a(const FormA &e) {
    return ReducedCoupling{
        .e_zz = e.e1 - e.e2 - e.e3 + e.e4,
        .local_j = e.e3 - e.e1,
        .local_k = e.e2 - e.e1,
        .constant = e.e1,
    };
}

ReducedCoupling reduce(const CouplingSpec &spec, QubitIndex j, QubitIndex k) {
    ReducedCoupling r;
    if (const auto *b = std::get_if<FormB>(&spec.energies)) {
        r.e_zz = b->e;
        return r;
    }
    r = reduce_form_a(std::get<FormA>(spec.energies));
    if (spec.j != j || spec.k != k) {
        std::swap(r.local_j, r.local_k);
    }
    return r;
}

double effective_zz(const DeviceModel &model, QubitIndex j, QubitIndex k) {
    if (j >= model.n_qubits() || k >= model.n_qubits()) {
        throw ValidationError("qubit index out of range");
    }
    if (j == k) {
        throw ValidationError("operands must differ");
    }
    const CouplingSpec *c = model.find(j, k);
    return c == nullptr ? 0.0 : reduce(*c, j, k).e_zz;
}

} // namespace fixedzz
