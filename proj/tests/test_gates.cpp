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

TEST_CASE("fSWAP matrix and involution", "[gates]") {
    const auto g = fswap();
    CHECK(g.arity == 2);
    CHECK(g.entries(1, 2) == cplx{1.0, 0.0});
    CHECK(g.entries(2, 1) == cplx{1.0, 0.0});
    CHECK(g.entries(3, 3) == cplx{-1.0, 0.0});
    CHECK(max_abs_diff(g.entries * g.entries, Matrix::identity(4)) == 0.0);
}

TEST_CASE("F_0 is the Hadamard-like butterfly with a -1 corner", "[gates]") {
    const auto f = fourier_gate(0, 4);
    const double s = 1.0 / std::sqrt(2.0);
    const Matrix want{{1, 0, 0, 0}, {0, s, s, 0}, {0, s, -s, 0}, {0, 0, 0, -1}};
    CHECK(max_abs_diff(f.entries, want) < 1e-16);
}

TEST_CASE("F_{n/2} has alpha = -1 and a +1 corner", "[gates]") {
    const auto f = fourier_gate(4, 8);
    CHECK(f.entries(3, 3) == cplx{1.0, 0.0});
    CHECK(f.entries(1, 2).real() < 0.0);
}

TEST_CASE("F_k entries for a quarter twiddle", "[gates]") {
    const auto f = fourier_gate(1, 4); // alpha = i
    const double s = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(f.entries(1, 2) - cplx{0.0, s}) < 1e-16);
    CHECK(std::abs(f.entries(2, 2) - cplx{0.0, -s}) < 1e-16);
    CHECK(std::abs(f.entries(3, 3) - cplx{0.0, -1.0}) < 1e-16);
}

TEST_CASE("F gates are unitary and periodic in k", "[gates][property]") {
    for (int n : {2, 4, 8, 16}) {
        for (int k = -n; k < 2 * n; ++k) {
            const auto f = fourier_gate(k, n);
            CHECK(unitarity_error(f.entries) < 1e-14);
            CHECK(max_abs_diff(f.entries, fourier_gate(k + n, n).entries) ==
                  0.0);
        }
    }
    CHECK_THROWS(fourier_gate(0, 6));
}

TEST_CASE("Bogoliubov gate angles", "[gates]") {
    SECTION("zero angle is the identity") {
        // gamma 0, lambda -1: cos q - lambda = omega at k = 1
        const auto b = bogoliubov_gate(1, {4, -1.0, 0.0}, AngleConvention::Full);
        CHECK(*b.params.theta == 0.0);
        CHECK(max_abs_diff(b.entries, Matrix::identity(4)) == 0.0);
    }
    SECTION("theta_1 = pi/2 at lambda 0, gamma 1, n 4") {
        const ModelParams p{4, 0.0, 1.0};
        const auto full = bogoliubov_gate(1, p, AngleConvention::Full);
        CHECK_THAT(*full.params.theta, WithinAbs(kPi / 2, 1e-15));
        CHECK_THAT(full.entries(0, 0).real(), WithinAbs(0.0, 1e-15));
        CHECK_THAT(full.entries(0, 3).imag(), WithinAbs(1.0, 1e-15));
        const auto half = bogoliubov_gate(1, p, AngleConvention::Half);
        CHECK_THAT(half.entries(0, 0).real(),
                   WithinAbs(std::cos(kPi / 4), 1e-15));
    }
    SECTION("k outside the mode range is rejected") {
        CHECK_THROWS(bogoliubov_gate(3, {4, 0.0, 1.0}, AngleConvention::Half));
        CHECK_THROWS(bogoliubov_gate(-2, {4, 0.0, 1.0}, AngleConvention::Half));
    }
}

TEST_CASE("Bogoliubov gate commutes with two-qubit parity",
          "[gates][property]") {
    const cplx par[4] = {1.0, -1.0, -1.0, 1.0};
    const Matrix p = Matrix::diagonal(par);
    for (double phi : {0.1, 0.7, 2.0, -1.3}) {
        const auto b = bogoliubov_gate_phi(phi).entries;
        CHECK(max_abs_diff(b * p, p * b) < 1e-15);
        CHECK(unitarity_error(b) < 1e-15);
    }
}

TEST_CASE("phase gate identities", "[gates]") {
    CHECK(max_abs_diff(phase_evolution_gate(1.3, 0.0).entries,
                       Matrix::identity(2)) == 0.0);
    CHECK(max_abs_diff(phase_evolution_gate(0.0, 2.0).entries,
                       Matrix::identity(2)) == 0.0);
    for (double w : {0.4, 1.7}) {
        const auto a = phase_evolution_gate(w, 0.3).entries *
                       phase_evolution_gate(w, 1.1).entries;
        CHECK(max_abs_diff(a, phase_evolution_gate(w, 1.4).entries) < 1e-12);
    }
    const auto plus = phase_evolution_gate(1.0, 0.5, OccupationSign::Plus);
    const auto minus = phase_evolution_gate(1.0, 0.5, OccupationSign::Minus);
    CHECK(std::abs(plus.entries(1, 1) - std::polar(1.0, -0.5)) < 1e-15);
    CHECK(std::abs(minus.entries(1, 1) - std::polar(1.0, 0.5)) < 1e-15);
}

TEST_CASE("adjoint keeps the parameterization", "[gates]") {
    const auto f = fourier_gate(3, 8);
    const auto fa = adjoint(f);
    CHECK(fa.params.adjoint);
    CHECK(max_abs_diff(fa.entries * f.entries, Matrix::identity(4)) < 1e-15);
    const auto b = adjoint(bogoliubov_gate_phi(0.3, 1, 0.6));
    CHECK(*b.params.phi == -0.3);
    const auto ph = adjoint(phase_evolution_gate(2.0, 0.25));
    CHECK(*ph.params.omega_t == -0.5);
}

TEST_CASE("rebuild reproduces entries from params", "[gates][property]") {
    for (const auto &g :
         {fswap(), fourier_gate(5, 8), adjoint(fourier_gate(1, 4)),
          bogoliubov_gate_phi(-0.77, 2, 1.54), phase_evolution_gate(0.9, 3.0)}) {
        const auto r = rebuild(g.label, g.params, g.arity);
        CHECK(max_abs_diff(r.entries, g.entries) == 0.0);
    }
}
