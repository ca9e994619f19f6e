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

#include "ffc/ffc.hpp"

using namespace ffc;

namespace {
Circuit mixed_circuit(std::size_t n) {
    Circuit c(n);
    c.append(fourier_gate(1, 8), {1, 0});
    c.append(bogoliubov_gate_phi(0.4), {2, 3});
    c.append(phase_evolution_gate(0.7, 1.3), {n - 1});
    c.append(fswap(), {0, 1});
    c.append(fourier_gate(3, 8), {3, 2});
    c.append(custom_gate(Matrix{{0, 1}, {1, 0}}), {1});
    return c;
}
} // namespace

TEST_CASE("empty circuit", "[circuit]") {
    const Circuit c(3);
    const auto s = StateVector::random(3, 1);
    CHECK(distance(run(c, s).amplitudes(), s.amplitudes()) == 0.0);
    CHECK(inverse(c).empty());
    CHECK(max_abs_diff(unitary_of(c), Matrix::identity(8)) == 0.0);
    const auto st = stats(c);
    CHECK(st.total_gates == 0);
    CHECK(st.depth == 0);
    CHECK(st.cut_crossings[1] == 0);
}

TEST_CASE("single fSWAP", "[circuit]") {
    Circuit c(2);
    c.append(fswap(), {0, 1});
    const auto out = run(c, StateVector::basis(2, 1));
    CHECK(out[2] == cplx{1.0, 0.0});
    CHECK(max_abs_diff(unitary_of(c), fswap().entries) == 0.0);
    const auto inv = inverse(c);
    REQUIRE(inv.size() == 1);
    CHECK(inv.ops()[0].gate.label == GateLabel::FSWAP);
    CHECK(max_abs_diff(inv.ops()[0].gate.entries, fswap().entries) == 0.0);
}

TEST_CASE("append rejects bad targets", "[circuit]") {
    Circuit c(3);
    CHECK_THROWS(c.append(fswap(), {0, 3}));
    CHECK_THROWS(c.append(fswap(), {0, 0}));
    CHECK_THROWS(c.append(fswap(), {0}));
}

TEST_CASE("circuit then inverse is the identity on 100 random states",
          "[circuit][property]") {
    const auto c = mixed_circuit(5);
    const auto inv = inverse(c);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto s = StateVector::random(5, seed);
        const auto back = run(inv, run(c, s));
        CHECK(distance(back.amplitudes(), s.amplitudes()) < 1e-12);
    }
}

TEST_CASE("unitary of inverse is the adjoint", "[circuit][property]") {
    const auto c = mixed_circuit(4);
    CHECK(max_abs_diff(unitary_of(inverse(c)), unitary_of(c).adjoint()) <
          1e-12);
    CHECK(unitarity_error(unitary_of(c)) < 1e-12);
}

TEST_CASE("kernel and dense unitary agree", "[circuit][property]") {
    for (std::size_t n : {4, 6, 8}) {
        const auto c = mixed_circuit(n);
        const auto u = unitary_of(c);
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            const auto s = StateVector::random(n, seed + 17);
            const auto a = run(c, s);
            const auto b = u * s.amplitudes();
            CHECK(distance(a.amplitudes(), b) < 1e-11);
        }
    }
}

TEST_CASE("unitary_of guards against large n", "[circuit]") {
    CHECK_THROWS(unitary_of(Circuit(13)));
}

TEST_CASE("depth uses greedy earliest layering", "[circuit]") {
    Circuit c(4);
    c.append(phase_evolution_gate(1.0, 1.0), {0});
    c.append(phase_evolution_gate(1.0, 1.0), {3});
    CHECK(depth(c) == 1);
    c.append(fswap(), {0, 1});
    c.append(fswap(), {2, 3});
    CHECK(depth(c) == 2);
    c.append(fswap(), {1, 2});
    CHECK(depth(c) == 3);
    const auto st = stats(c);
    CHECK(st.total_gates == 5);
    CHECK(st.two_qubit_gates == 3);
    CHECK(st.gates_by_label.at("FSWAP") == 3);
    CHECK(st.gates_by_label.at("PHASE") == 2);
    CHECK(st.depth <= st.total_gates);
}

TEST_CASE("cut crossings count straddling two-qubit gates", "[circuit]") {
    Circuit c(4);
    c.append(fswap(), {1, 2});
    c.append(fswap(), {3, 0});
    c.append(fswap(), {0, 1});
    CHECK(cut_crossings(c, 1) == 2);
    CHECK(cut_crossings(c, 2) == 2);
    CHECK(cut_crossings(c, 3) == 1);
    CHECK_THROWS(cut_crossings(c, 0));
    CHECK_THROWS(cut_crossings(c, 4));
}
