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

#include "fixedzz/metrics.hpp"
#include "fixedzz/synth.hpp"
#include "oracles.hpp"

using namespace fixedzz;

namespace {

const DecouplingConfig kExpect{1.0, DecouplingMode::Expectation, 0};

// Fidelity of diag(1,1,1,-e^{iδ}) against Π, by hand.
double pi_fidelity_for_residual(double delta) {
    return std::abs(3.0 + std::polar(1.0, delta)) / 4.0;
}

Matrix basis_state(unsigned n, std::uint64_t x) {
    Matrix v = Matrix::Zero(Eigen::Index{1} << n, 1);
    v(static_cast<Eigen::Index>(x), 0) = 1.0;
    return v;
}

} // namespace

TEST_CASE("diophantine_odd_pi") {
    SECTION("ΔE = 1, n_max = 30") {
        const auto r = diophantine_odd_pi(1.0, 30);
        REQUIRE(r.n == 22);
        REQUIRE(r.m == 3);
        REQUIRE(r.residual == Catch::Approx(0.008851424871448188).margin(1e-12));
        REQUIRE(r.fidelity_bound == Catch::Approx(1.0 - r.residual * r.residual / 4).margin(1e-15));
    }
    SECTION("ΔE = 1, n_max = 3") {
        const auto r = diophantine_odd_pi(1.0, 3);
        REQUIRE(r.n == 3);
        REQUIRE(r.m == 0);
        REQUIRE(r.residual == Catch::Approx(kPi - 3.0).margin(1e-12));
    }
    SECTION("ΔE = π/2 is exact at n = 2") {
        const auto r = diophantine_odd_pi(kPi / 2, 10);
        REQUIRE(r.n == 2);
        REQUIRE(r.m == 0);
        REQUIRE(r.residual <= 1e-15);
    }
    SECTION("ΔE = 0 and n_max = 0 are rejected") {
        REQUIRE_THROWS_AS(diophantine_odd_pi(0.0, 10), SynthesisError);
        REQUIRE_THROWS(diophantine_odd_pi(1.0, 0));
    }
    SECTION("matches exhaustive search and is monotone in n_max") {
        std::mt19937_64 rng(5);
        std::uniform_real_distribution<double> e(-4.0, 4.0);
        for (int rep = 0; rep < 200; ++rep) {
            double de = e(rng);
            if (std::abs(de) < 1e-3) {
                continue;
            }
            double previous = INFINITY;
            for (std::uint64_t n_max : {1u, 2u, 5u, 17u, 64u, 200u}) {
                const auto r = diophantine_odd_pi(de, n_max);
                const auto ref = oracle::diophantine_brute(de, n_max);
                REQUIRE(r.n == ref.n);
                REQUIRE(r.m == ref.m);
                REQUIRE(std::abs(r.residual - ref.residual) < 1e-12);
                REQUIRE(std::abs(r.residual - oracle::odd_pi_distance(r.n * std::abs(de))) < 1e-12);
                REQUIRE(r.residual <= previous);
                previous = r.residual;
            }
        }
    }
}

TEST_CASE("build_u") {
    SECTION("FormB: diag(1, 1, 1, e^{-iE}) on a lone pair") {
        DeviceModel m(2, {{0, 1, FormB{0.9}}});
        const auto step = build_u(m, 0, 1, kExpect);
        Eigen::Matrix4cd want = Eigen::Matrix4cd::Identity();
        want(3, 3) = std::polar(1.0, -0.9);
        REQUIRE((step.matrix - want).cwiseAbs().maxCoeff() <= 1e-12);
        REQUIRE(oracle::max_abs_diff(reconstruct_unitary(m, step.recipe), want) <= 1e-12);
    }
    SECTION("FormA reduces to the same shape with ΔE = E1 - E2 - E3 + E4") {
        DeviceModel m(2, {{0, 1, FormA{0.1, 0.2, 0.3, 1.3}}});
        const auto step = build_u(m, 0, 1, kExpect);
        Eigen::Matrix4cd want = Eigen::Matrix4cd::Identity();
        want(3, 3) = std::polar(1.0, -0.9);
        REQUIRE((step.matrix - want).cwiseAbs().maxCoeff() <= 1e-12);
        REQUIRE(oracle::max_abs_diff(reconstruct_unitary(m, step.recipe), want) <= 1e-12);
    }
    SECTION("inside a larger register, either operand order") {
        DeviceModel m(4, {{0, 1, FormB{1.0}},
                          {1, 2, FormA{0.4, -0.1, 0.6, 0.2}},
                          {2, 3, FormB{0.7}},
                          {0, 3, FormB{0.3}}});
        for (auto [j, k] : {std::pair{1u, 2u}, std::pair{2u, 1u}, std::pair{3u, 0u}}) {
            const auto step = build_u(m, j, k, kExpect);
            REQUIRE(oracle::max_abs_diff(reconstruct_unitary(m, step.recipe),
                                         embed_two_qubit(step.matrix, 4, j, k)) <= 1e-10);
        }
    }
    SECTION("errors") {
        DeviceModel m(3, {{0, 1, FormB{1.0}}, {1, 2, FormA{0.1, 0.2, 0.3, 0.4}}});
        REQUIRE_THROWS_AS(build_u(m, 0, 2, kExpect), SynthesisError);
        REQUIRE_THROWS_AS(build_u(m, 1, 2, kExpect), SynthesisError); // ΔE = 0
    }
}

TEST_CASE("synthesized Π and CNOT") {
    SECTION("exact at E = π: one frame") {
        DeviceModel m(2, {{0, 1, FormB{kPi}}});
        const auto pi = synthesize_pi(m, 0, 1, 10, kExpect);
        REQUIRE(pi.search.n == 1);
        REQUIRE(oracle::max_abs_diff(reconstruct_unitary(m, pi.schedule), pi_gate()) <= 1e-12);
        const auto cx = synthesize_cnot(m, 0, 1, 10, kExpect);
        REQUIRE(oracle::max_abs_diff(reconstruct_unitary(m, cx.schedule),
                                     embed_two_qubit(cnot_gate(), 2, 0, 1)) <= 1e-12);
    }
    SECTION("E = 1, n_max = 30: fidelity matches the residual and clears the bound") {
        DeviceModel m(2, {{0, 1, FormB{1.0}}});
        const auto pi = synthesize_pi(m, 0, 1, 30, kExpect);
        REQUIRE(pi.search.n == 22);
        REQUIRE(pi.schedule.duration() == Catch::Approx(22.0).margin(1e-12));
        const double f_pi =
            phase_invariant_fidelity(pi_gate(), reconstruct_unitary(m, pi.schedule));
        REQUIRE(f_pi == Catch::Approx(pi_fidelity_for_residual(pi.search.residual)).margin(1e-12));
        REQUIRE(f_pi >= pi.search.fidelity_bound);
        const auto cx = synthesize_cnot(m, 0, 1, 30, kExpect);
        const double f_cx =
            phase_invariant_fidelity(embed_two_qubit(cnot_gate(), 2, 0, 1),
                                     reconstruct_unitary(m, cx.schedule));
        REQUIRE(f_cx >= cx.search.fidelity_bound);
        REQUIRE(f_cx >= 1.0 - 1e-5);
    }
    SECTION("reversed roles and |10> → |11>") {
        DeviceModel m(3, {{0, 1, FormB{kPi}}, {1, 2, FormB{kPi / 2}}});
        const Matrix rev = reconstruct_unitary(m, synthesize_cnot(m, 1, 0, 10, kExpect).schedule);
        REQUIRE(oracle::max_abs_diff(rev, embed_two_qubit(cnot_gate(), 3, 1, 0)) <= 1e-10);
        // control 2, target 1: |a2 a1 a0> = |1 0 0> → |1 1 0>
        const Matrix cx = reconstruct_unitary(m, synthesize_cnot(m, 2, 1, 10, kExpect).schedule);
        const Matrix out = cx * basis_state(3, 0b100);
        REQUIRE(std::abs(std::abs(out(0b110, 0)) - 1.0) <= 1e-10);
    }
    SECTION("CNOT twice is the identity") {
        std::mt19937_64 rng(7);
        for (int rep = 0; rep < 5; ++rep) {
            const DeviceModel m = oracle::random_form_b_device(3, 1.0, rng);
            const auto cx = synthesize_cnot(m, 0, 2, 200, kExpect);
            PulseSchedule twice = cx.schedule;
            twice.append(cx.schedule);
            const double f = phase_invariant_fidelity(Matrix::Identity(8, 8),
                                                      reconstruct_unitary(m, twice));
            const double r = cx.search.residual;
            // each half is off by a phase δ on one of four states
            REQUIRE(f >= 1.0 - r * r - 1e-12);
        }
    }
    SECTION("the frame cursor advances once per repetition") {
        DeviceModel m(2, {{0, 1, FormB{1.0}}});
        FrameCursor cursor{4, 10};
        const auto pi = synthesize_pi(m, 0, 1, 30, kExpect, cursor);
        REQUIRE(cursor.trial == 4);
        REQUIRE(cursor.frame == 10 + pi.search.n);
    }
    SECTION("stochastic frames converge on the same gate") {
        DeviceModel m(3, {{0, 1, FormB{kPi}}, {1, 2, FormB{0.8}}, {0, 2, FormB{0.5}}});
        const DecouplingConfig cfg{2000.0, DecouplingMode::Stochastic, 11};
        FrameCursor cursor{0, 0};
        const auto cx = synthesize_cnot(m, 0, 1, 10, cfg, cursor);
        const double f = phase_invariant_fidelity(embed_two_qubit(cnot_gate(), 3, 0, 1),
                                                  reconstruct_unitary(m, cx.schedule));
        REQUIRE(f >= 0.99);
    }
}

TEST_CASE("embed_two_qubit agrees with a Kronecker product") {
    std::mt19937_64 rng(3);
    const Eigen::Matrix4cd g = oracle::random_unitary(4, rng);
    // qubits (2, 1) on 3 qubits: dense layout is q2 ⊗ q1 ⊗ q0
    const Matrix want = oracle::kron(g, Matrix::Identity(2, 2));
    REQUIRE(oracle::max_abs_diff(embed_two_qubit(g, 3, 2, 1), want) <= 1e-14);
    REQUIRE_THROWS_AS(embed_two_qubit(g, 3, 1, 1), ValidationError);
}
