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

#include <span>
#include <string_view>

#include "fixedzz/types.hpp"

/**
 * @file
 * Data-parallel inner loops of the state-vector engine.
 *
 * Every kernel has a scalar reference implementation. Vector variants are
 * compiled in separate translation units with their own ISA flags and picked
 * once at startup from the CPU feature bits; the environment variable
 * FIXEDZZ_KERNELS=scalar forces the reference set.
 */
namespace fixedzz::kernels {

struct KernelTable {
    std::string_view name;

    /// amps <- (I ⊗ .. ⊗ m ⊗ .. ⊗ I) amps, where m acts on bit `qubit`.
    void (*apply_1q)(std::span<Complex> amps, unsigned qubit, const Matrix2 &m);

    /// Swap the amplitude pairs that differ in bit `qubit`.
    void (*apply_not)(std::span<Complex> amps, unsigned qubit);

    /// amps[i] *= diag[i].
    void (*apply_diagonal)(std::span<Complex> amps, std::span<const Complex> diag);

    /// Σ conj(a[i]) b[i].
    Complex (*inner_product)(std::span<const Complex> a, std::span<const Complex> b);
};

const KernelTable &scalar_kernels();

/// nullptr when the build or the host CPU lacks AVX2+FMA.
const KernelTable *avx2_kernels();

/// The table selected for this process.
const KernelTable &active();

} // namespace fixedzz::kernels
