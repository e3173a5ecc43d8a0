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

#include <cstddef>
#include <utility>

#include "fixedzz/kernels/kernels.hpp"

namespace fixedzz::kernels {
namespace {

void apply_1q_scalar(std::span<Complex> amps, unsigned qubit, const Matrix2 &m) {
    const std::size_t stride = std::size_t{1} << qubit;
    const std::size_t size = amps.size();
    for (std::size_t base = 0; base < size; base += 2 * stride) {
        for (std::size_t i = base; i < base + stride; ++i) {
            const Complex a0 = amps[i];
            const Complex a1 = amps[i + stride];
            amps[i] = m[0] * a0 + m[1] * a1;
            amps[i + stride] = m[2] * a0 + m[3] * a1;
        }
    }
}

void apply_not_scalar(std::span<Complex> amps, unsigned qubit) {
    const std::size_t stride = std::size_t{1} << qubit;
    const std::size_t size = amps.size();
    for (std::size_t base = 0; base < size; base += 2 * stride) {
        for (std::size_t i = base; i < base + stride; ++i) {
            std::swap(amps[i], amps[i + stride]);
        }
    }
}

void apply_diagonal_scalar(std::span<Complex> amps, std::span<const Complex> diag) {
    for (std::size_t i = 0; i < amps.size(); ++i) {
        amps[i] *= diag[i];
    }
}

Complex inner_product_scalar(std::span<const Complex> a, std::span<const Complex> b) {
    Complex sum{0.0, 0.0};
    for (std::size_t i = 0; i < a.size(); ++i) {
        sum += std::conj(a[i]) * b[i];
    }
    return sum;
}

} // namespace

const KernelTable &scalar_kernels() {
    static const KernelTable table{"scalar", apply_1q_scalar, apply_not_scalar,
                                   apply_diagonal_scalar, inner_product_scalar};
    return table;
}

} // namespace fixedzz::kernels
