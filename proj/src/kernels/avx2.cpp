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

// Compiled with -mavx2 -mfma. Nothing in here may run before the dispatcher
// has checked the CPU feature bits.

#include <immintrin.h>

#include <cstddef>

#include "fixedzz/kernels/kernels.hpp"

namespace fixedzz::kernels {
namespace {

// One __m256d holds two interleaved complex doubles (re0, im0, re1, im1).
inline __m256d load2(const Complex *p) {
    return _mm256_loadu_pd(reinterpret_cast<const double *>(p));
}

inline void store2(Complex *p, __m256d v) {
    _mm256_storeu_pd(reinterpret_cast<double *>(p), v);
}

inline __m256d broadcast(const Complex &c) {
    return _mm256_setr_pd(c.real(), c.imag(), c.real(), c.imag());
}

// Lane-wise complex product x * c.
inline __m256d cmul(__m256d x, __m256d c) {
    const __m256d c_re = _mm256_movedup_pd(c);
    const __m256d c_im = _mm256_permute_pd(c, 0b1111);
    const __m256d x_swap = _mm256_permute_pd(x, 0b0101);
    return _mm256_fmaddsub_pd(x, c_re, _mm256_mul_pd(x_swap, c_im));
}

void apply_1q_avx2(std::span<Complex> amps, unsigned qubit, const Matrix2 &m) {
    const std::size_t size = amps.size();
    Complex *data = amps.data();
    if (size < 2) {
        return;
    }
    if (qubit == 0) {
        // The pair (a0, a1) shares one register.
        const __m256d diag = _mm256_setr_pd(m[0].real(), m[0].imag(), m[3].real(), m[3].imag());
        const __m256d anti = _mm256_setr_pd(m[1].real(), m[1].imag(), m[2].real(), m[2].imag());
        for (std::size_t i = 0; i < size; i += 2) {
            const __m256d v = load2(data + i);
            const __m256d swapped = _mm256_permute2f128_pd(v, v, 0x01);
            store2(data + i, _mm256_add_pd(cmul(v, diag), cmul(swapped, anti)));
        }
        return;
    }
    const std::size_t stride = std::size_t{1} << qubit;
    const __m256d m00 = broadcast(m[0]);
    const __m256d m01 = broadcast(m[1]);
    const __m256d m10 = broadcast(m[2]);
    const __m256d m11 = broadcast(m[3]);
    for (std::size_t base = 0; base < size; base += 2 * stride) {
        for (std::size_t i = base; i < base + stride; i += 2) {
            const __m256d a0 = load2(data + i);
            const __m256d a1 = load2(data + i + stride);
            store2(data + i, _mm256_add_pd(cmul(a0, m00), cmul(a1, m01)));
            store2(data + i + stride, _mm256_add_pd(cmul(a0, m10), cmul(a1, m11)));
        }
    }
}

void apply_not_avx2(std::span<Complex> amps, unsigned qubit) {
    const std::size_t size = amps.size();
    Complex *data = amps.data();
    if (size < 2) {
        return;
    }
    if (qubit == 0) {
        for (std::size_t i = 0; i < size; i += 2) {
            const __m256d v = load2(data + i);
            store2(data + i, _mm256_permute2f128_pd(v, v, 0x01));
        }
        return;
    }
    const std::size_t stride = std::size_t{1} << qubit;
    for (std::size_t base = 0; base < size; base += 2 * stride) {
        for (std::size_t i = base; i < base + stride; i += 2) {
            const __m256d a0 = load2(data + i);
            const __m256d a1 = load2(data + i + stride);
            store2(data + i, a1);
            store2(data + i + stride, a0);
        }
    }
}

void apply_diagonal_avx2(std::span<Complex> amps, std::span<const Complex> diag) {
    const std::size_t size = amps.size();
    std::size_t i = 0;
    for (; i + 2 <= size; i += 2) {
        store2(amps.data() + i, cmul(load2(amps.data() + i), load2(diag.data() + i)));
    }
    for (; i < size; ++i) {
        amps[i] *= diag[i];
    }
}

Complex inner_product_avx2(std::span<const Complex> a, std::span<const Complex> b) {
    const std::size_t size = a.size();
    // conj(a) b = (ar br + ai bi) + i (ar bi - ai br)
    __m256d direct = _mm256_setzero_pd();
    __m256d crossed = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= size; i += 2) {
        const __m256d va = load2(a.data() + i);
        const __m256d vb = load2(b.data() + i);
        direct = _mm256_fmadd_pd(va, vb, direct);
        crossed = _mm256_fmadd_pd(va, _mm256_permute_pd(vb, 0b0101), crossed);
    }
    alignas(32) double d[4];
    alignas(32) double c[4];
    _mm256_store_pd(d, direct);
    _mm256_store_pd(c, crossed);
    Complex sum{d[0] + d[1] + d[2] + d[3], c[0] - c[1] + c[2] - c[3]};
    for (; i < size; ++i) {
        sum += std::conj(a[i]) * b[i];
    }
    return sum;
}

} // namespace

const KernelTable &avx2_kernel_table() {
    static const KernelTable table{"avx2", apply_1q_avx2, apply_not_avx2, apply_diagonal_avx2,
                                   inner_product_avx2};
    return table;
}

} // namespace fixedzz::kernels
