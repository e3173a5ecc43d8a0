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

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "fixedzz/kernels/kernels.hpp"
#include "oracles.hpp"

using namespace fixedzz;

namespace {

Matrix2 random_matrix2(std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    Matrix2 m;
    for (auto &z : m) {
        z = {g(rng), g(rng)};
    }
    return m;
}

double max_diff(std::span<const Complex> a, std::span<const Complex> b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        d = std::max(d, std::abs(a[i] - b[i]));
    }
    return d;
}

} // namespace

TEST_CASE("scalar apply_1q matches the dense Kronecker oracle") {
    std::mt19937_64 rng(11);
    const auto &k = kernels::scalar_kernels();
    for (unsigned n = 1; n <= 5; ++n) {
        for (unsigned q = 0; q < n; ++q) {
            auto psi = oracle::random_state(n, rng);
            const Matrix2 m = random_matrix2(rng);
            Eigen::VectorXcd ref = oracle::embed_1q(oracle::mat2(m), n, q) *
                                   Eigen::Map<Eigen::VectorXcd>(psi.data(), psi.size());
            k.apply_1q(psi, q, m);
            for (std::size_t i = 0; i < psi.size(); ++i) {
                REQUIRE(std::abs(psi[i] - ref(static_cast<Eigen::Index>(i))) < 1e-13);
            }
        }
    }
}

TEST_CASE("vector kernels agree with the scalar reference") {
    const kernels::KernelTable *vec = kernels::avx2_kernels();
    if (vec == nullptr) {
        SKIP("no AVX2+FMA on this host");
    }
    const auto &ref = kernels::scalar_kernels();
    std::mt19937_64 rng(12);

    SECTION("apply_1q on every qubit") {
        for (unsigned n = 1; n <= 10; ++n) {
            for (unsigned q = 0; q < n; ++q) {
                auto a = oracle::random_state(n, rng);
                auto b = a;
                const Matrix2 m = random_matrix2(rng);
                ref.apply_1q(a, q, m);
                vec->apply_1q(b, q, m);
                REQUIRE(max_diff(a, b) < 1e-14);
            }
        }
    }
    SECTION("apply_not on every qubit is exact") {
        for (unsigned n = 1; n <= 10; ++n) {
            for (unsigned q = 0; q < n; ++q) {
                auto a = oracle::random_state(n, rng);
                auto b = a;
                ref.apply_not(a, q);
                vec->apply_not(b, q);
                REQUIRE(max_diff(a, b) == 0.0);
            }
        }
    }
    SECTION("apply_diagonal, including odd lengths") {
        for (std::size_t len : {1u, 2u, 3u, 8u, 33u, 1024u}) {
            std::vector<Complex> a(len);
            std::vector<Complex> d(len);
            std::normal_distribution<double> g;
            for (std::size_t i = 0; i < len; ++i) {
                a[i] = {g(rng), g(rng)};
                d[i] = {g(rng), g(rng)};
            }
            auto b = a;
            ref.apply_diagonal(a, d);
            vec->apply_diagonal(b, d);
            REQUIRE(max_diff(a, b) < 1e-14);
        }
    }
    SECTION("inner_product") {
        for (unsigned n = 0; n <= 10; ++n) {
            const auto a = oracle::random_state(n, rng);
            const auto b = oracle::random_state(n, rng);
            REQUIRE(std::abs(ref.inner_product(a, b) - vec->inner_product(a, b)) < 1e-13);
        }
        std::vector<Complex> odd{{1, 2}, {3, -1}, {0.5, 0.25}};
        std::vector<Complex> odd2{{-1, 1}, {2, 2}, {1, -3}};
        REQUIRE(std::abs(ref.inner_product(odd, odd2) - vec->inner_product(odd, odd2)) < 1e-14);
    }
}

TEST_CASE("active kernel table is one of the known ones") {
    const auto name = kernels::active().name;
    REQUIRE((name == "scalar" || name == "avx2"));
}
