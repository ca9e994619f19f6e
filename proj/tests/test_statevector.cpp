// Copyright 2026 The ffcirc Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <catch_amalgamated.hpp>

#include <cmath>

#include "ffc/ffc.hpp"

using namespace ffc;
using Catch::Matchers::WithinAbs;

namespace {
Gate random_unitary_2q(std::uint64_t seed) {
    // Product of known unitaries with a random-angle B gate in between.
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    Matrix m = fourier_gate(static_cast<int>(seed % 8), 8).entries *
               bogoliubov_gate_phi(u(rng)).entries *
               fourier_gate(3, 4).entries;
    return custom_gate(m);
}
} // namespace

TEST_CASE("basis index uses qubit 0 as the most significant bit",
          "[statevector]") {
    auto s = StateVector::basis(3, 4);
    CHECK(qubit_bit(3, 4, 0) == 1);
    CHECK(qubit_bit(3, 4, 2) == 0);
    Matrix x{{0, 1}, {1, 0}};
    auto flipped = apply_gate(StateVector(3), custom_gate(x), {0});
    CHECK(std::abs(flipped[4] - cplx{1.0, 0.0}) < 1e-15);
    CHECK(s.num_qubits() == 3);
}

TEST_CASE("identity gate leaves a state unchanged", "[statevector]") {
    auto s = StateVector::random(3, 11);
    auto out = apply_gate(s, custom_gate(Matrix::identity(4)), {2, 0});
    CHECK(distance(s.amplitudes(), out.amplitudes()) < 1e-15);
}

TEST_CASE("fSWAP exchanges |01> and |10> and signs |11>", "[statevector]") {
    auto s01 = apply_gate(StateVector::basis(2, 1), fswap(), {0, 1});
    CHECK(std::abs(s01[2] - cplx{1.0, 0.0}) < 1e-15);
    auto s11 = apply_gate(StateVector::basis(2, 3), fswap(), {0, 1});
    CHECK(std::abs(s11[3] - cplx{-1.0, 0.0}) < 1e-15);
}

TEST_CASE("apply_gate validates targets", "[statevector]") {
    StateVector s(3);
    CHECK_THROWS_AS(apply_gate(s, fswap(), {0, 3}), std::out_of_range);
    CHECK_THROWS_AS(apply_gate(s, fswap(), {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(apply_gate(s, fswap(), {1}), std::invalid_argument);
    CHECK_THROWS_AS(apply_gate(s, phase_evolution_gate(1.0, 1.0), {0, 1}),
                    std::invalid_argument);
}

TEST_CASE("state construction enforces length and norm", "[statevector]") {
    CHECK_THROWS(StateVector(2, std::vector<cplx>(3, 0.5)));
    CHECK_THROWS(StateVector(1, std::vector<cplx>{1.0, 1.0}));
    CHECK_NOTHROW(StateVector(1, std::vector<cplx>{1.0, 0.0}));
}

TEST_CASE("gates preserve the norm on random states", "[statevector][property]") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto s = StateVector::random(5, seed);
        const auto g = random_unitary_2q(seed);
        s.apply(g, std::vector<std::size_t>{seed % 5, (seed + 2) % 5});
        CHECK_THAT(s.norm(), WithinAbs(1.0, 1e-12));
    }
}

TEST_CASE("gate followed by its adjoint is the identity",
          "[statevector][property]") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto s = StateVector::random(4, 100 + seed);
        const auto g = random_unitary_2q(seed);
        const std::vector<std::size_t> t{(seed + 1) % 4, seed % 4};
        auto out = apply_gate(apply_gate(s, g, t), adjoint(g), t);
        CHECK(distance(s.amplitudes(), out.amplitudes()) < 1e-12);
    }
}

TEST_CASE("reversed targets equal the swap-conjugated gate",
          "[statevector][property]") {
    const Matrix swap{{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}};
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto s = StateVector::random(4, 200 + seed);
        const auto g = random_unitary_2q(seed);
        const auto gs = custom_gate(swap * g.entries * swap);
        auto a = apply_gate(s, g, {1, 3});
        auto b = apply_gate(s, gs, {3, 1});
        CHECK(distance(a.amplitudes(), b.amplitudes()) < 1e-12);
    }
}

TEST_CASE("fidelity of simple pairs", "[statevector]") {
    const auto psi = StateVector::random(3, 5);
    CHECK_THAT(fidelity(psi, psi), WithinAbs(1.0, 1e-12));
    CHECK_THAT(fidelity(StateVector::basis(2, 0), StateVector::basis(2, 3)),
               WithinAbs(0.0, 1e-15));
    CHECK_THROWS(fidelity(StateVector(2), StateVector(3)));
}

TEST_CASE("expectation of Z on simple states", "[statevector]") {
    const auto z0 = as_sum(PauliString("Z"));
    CHECK_THAT(expectation(StateVector(1), z0), WithinAbs(1.0, 1e-15));
    const double r = 1.0 / std::sqrt(2.0);
    const StateVector plus(1, {r, r});
    CHECK_THAT(expectation(plus, z0), WithinAbs(0.0, 1e-15));
    CHECK_THROWS(expectation(StateVector(2), z0));
}

TEST_CASE("mixed-state expectations", "[statevector]") {
    const auto mm = DensityMatrix::maximally_mixed(3);
    CHECK_THAT(expectation_mixed(mm, as_sum(PauliString("XZY"))),
               WithinAbs(0.0, 1e-15));
    const auto psi = StateVector::random(3, 9);
    const auto obs = build_xy_hamiltonian({2, 0.3, 0.4});
    PauliSum h3(3);
    h3.add(0.7, "XYZ");
    h3.add(-1.3, "ZZI");
    h3.add(0.2, "IXX");
    CHECK_THAT(expectation_mixed(DensityMatrix::pure(psi), h3),
               WithinAbs(expectation(psi, h3), 1e-12));
    CHECK_THROWS(expectation_mixed(mm, obs));
}

TEST_CASE("density matrix invariants are checked", "[statevector]") {
    Matrix bad{{0.5, 0.1}, {0.2, 0.5}};
    CHECK_THROWS(DensityMatrix(1, bad));
    Matrix trace2{{1.0, 0.0}, {0.0, 1.0}};
    CHECK_THROWS(DensityMatrix(1, trace2));
}
