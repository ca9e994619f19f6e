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
const ConventionChoice &resolved() {
    static const ConventionChoice c = resolve_conventions(4).resolved();
    return c;
}

double max_column_error_vs_plane_waves(const FourierNetwork &net) {
    const auto sp = single_particle_matrix(net.circuit);
    const std::size_t n = sp.rows();
    double worst = 0.0;
    for (std::size_t l = 0; l < n; ++l) {
        const auto pw = plane_wave(net.labeling[l], n);
        worst = std::max(worst, distance(sp.column(l), pw));
    }
    return worst;
}
} // namespace

TEST_CASE("Fourier network labels", "[builder]") {
    CHECK(build_fourier_network(2).labeling.mapping == std::vector<int>{0, 1});
    CHECK(build_fourier_network(4).labeling.mapping ==
          std::vector<int>{0, 2, 1, -1});
    CHECK(build_fourier_network(8).labeling.mapping ==
          std::vector<int>{0, 4, 2, -2, 1, -3, 3, -1});
    CHECK_THROWS_WITH(build_fourier_network(6), "n must be a power of two");
}

TEST_CASE("Fourier network n=2 is a single F gate", "[builder]") {
    const auto net = build_fourier_network(2);
    REQUIRE(net.circuit.size() == 1);
    CHECK(net.circuit.ops()[0].gate.label == GateLabel::FOURIER);
}

TEST_CASE("Fourier network n=4 structure", "[builder]") {
    const auto net = build_fourier_network(4);
    std::vector<std::string> labels;
    for (const auto &op : net.circuit.ops()) {
        labels.push_back(to_string(op.gate.label));
    }
    CHECK(labels == std::vector<std::string>{"FOURIER", "FOURIER", "FSWAP",
                                             "FOURIER", "FOURIER", "FSWAP"});
}

TEST_CASE("Fourier network columns are exact plane waves",
          "[builder][property]") {
    for (int n : {2, 4, 8, 16}) {
        const auto net = build_fourier_network(n);
        CHECK(max_column_error_vs_plane_waves(net) < 1e-12);
        CHECK(net.circuit.size() ==
              static_cast<std::size_t>(n * (n - 1) / 2));
        for (const auto &op : net.circuit.ops()) {
            const auto a = op.targets[0];
            const auto b = op.targets[1];
            CHECK((a > b ? a - b : b - a) == 1);
        }
    }
}

TEST_CASE("structural bounds on the disentangler", "[builder][property]") {
    // depth <= c n log2 n with c = 1
    for (int n : {2, 4, 8, 16}) {
        const auto d = build_disentangler({n, 0.4, 0.8}, resolved());
        const auto st = stats(d.circuit);
        const double log2n = std::log2(static_cast<double>(n));
        CHECK(st.total_gates <= static_cast<std::size_t>(n * n));
        CHECK(static_cast<double>(st.depth) <= 1.0 * n * log2n);
    }
}

TEST_CASE("pair arrangement keeps (k, -k) adjacent", "[builder]") {
    const auto a = pair_arrangement(build_fourier_network(8).labeling);
    for (int k = 1; k < 4; ++k) {
        const auto i = a.line_of(k);
        const auto j = a.line_of(-k);
        CHECK((i > j ? i - j : j - i) == 1);
    }
}

TEST_CASE("Bogoliubov layer degenerates at trivial angles", "[builder]") {
    SECTION("theta all zero gives the identity") {
        // gamma 0 and lambda below -1: every cos q - lambda > 0
        const ModelParams p{8, -1.5, 0.0};
        const auto net = build_fourier_network(8);
        const auto layer = build_bogoliubov_layer(p, net.labeling, resolved());
        const auto u = unitary_of(layer);
        // remaining ops are routing swaps; strip them by comparing to the
        // routing alone
        Circuit route_only(8);
        for (const auto &op : layer.ops()) {
            if (op.gate.label == GateLabel::FSWAP) {
                route_only.append(op.gate, op.targets);
            }
        }
        CHECK(max_abs_diff(u, unitary_of(route_only)) < 1e-12);
    }
    SECTION("gamma 0 gives only diagonal or swap-like B gates") {
        const ModelParams p{8, 0.3, 0.0};
        const auto net = build_fourier_network(8);
        const auto layer = build_bogoliubov_layer(p, net.labeling, resolved());
        for (const auto &op : layer.ops()) {
            if (op.gate.label == GateLabel::BOGOLIUBOV) {
                const double c = std::abs(op.gate.entries(0, 0));
                CHECK((c < 1e-12 || std::abs(c - 1.0) < 1e-12 ||
                       std::abs(c - std::sqrt(0.5)) < 1e-12));
            }
        }
        const auto d = build_disentangler(p, resolved());
        CHECK(conjugation_residual(d).value() < 1e-10);
    }
    SECTION("inconsistent labeling is rejected") {
        CHECK_THROWS(build_bogoliubov_layer({4, 0.5, 1.0},
                                            ModeLabeling{{0, 1, 1, 2}},
                                            resolved()));
    }
}

TEST_CASE("disentangler conjugation at the central point", "[builder]") {
    const ModelParams p{4, 0.5, 1.0};
    const auto d = build_disentangler(p, resolved());
    const auto rep = verify_diagonalization(d.circuit, build_xy_hamiltonian(p),
                                            d.modes, 1e-10);
    CHECK(rep.max_offdiag <= 1e-10);
    CHECK(rep.spectral_error <= 1e-10);
    CHECK(d.labeling.mapping == std::vector<int>{0, 2, 1, -1});
}

TEST_CASE("columns of the disentangler are eigenvectors", "[builder]") {
    const ModelParams p{4, 0.5, 1.0};
    const auto d = build_disentangler(p, resolved());
    const auto u = unitary_of(d.circuit);
    const auto h = pauli_sum_to_matrix(build_xy_hamiltonian(p));
    for (std::size_t x = 0; x < 16; ++x) {
        const auto col = u.column(x);
        auto hv = h * std::span<const cplx>(col);
        const double e = predicted_energy(d, x);
        for (std::size_t r = 0; r < 16; ++r) {
            hv[r] -= e * col[r];
        }
        CHECK(norm2(hv) < 1e-9);
    }
}

TEST_CASE("sorted diagonal matches the free spectrum across parameters",
          "[builder][property]") {
    for (int n : {2, 4, 8}) {
        for (double l : {0.0, 0.3, 1.0, 2.5}) {
            for (double g : {1.0, 0.5, 0.2}) {
                const ModelParams p{n, l, g};
                const auto d = build_disentangler(p, resolved());
                const auto rep = verify_diagonalization(
                    d.circuit, build_xy_hamiltonian(p), d.modes, 1e-10);
                CHECK(rep.pass);
            }
        }
    }
}

TEST_CASE("build_disentangler is deterministic", "[builder][property]") {
    const ModelParams p{8, 0.7, 0.6};
    CHECK(to_json(build_disentangler(p, resolved()).circuit).dump() ==
          to_json(build_disentangler(p, resolved()).circuit).dump());
}

TEST_CASE("convention resolution has exactly one survivor", "[builder]") {
    const auto rep = resolve_conventions(4);
    REQUIRE(rep.survivors.size() == 1);
    const auto c = rep.resolved();
    CHECK(c.angle == AngleConvention::Half);
    CHECK(c.boundary == BoundarySign::AsWritten);
    CHECK(c.occupation == OccupationSign::Plus);
    REQUIRE(rep.candidates.size() == 8);
    for (const auto &cand : rep.candidates) {
        if (!(cand.choice == c)) {
            CHECK(cand.residual() > 1e-3);
        }
    }
    CHECK(evaluate_convention(c, 8).residual() <= 1e-10);
}

TEST_CASE("six-gate n=4 circuit", "[builder]") {
    for (double l : {0.25, 0.5, 0.9, 1.1, 1.5, 2.0}) {
        const auto d = build_ising4(l, resolved());
        CHECK(d.circuit.size() == 6);
        CHECK(stats(d.circuit).gates_by_label.at("BOGOLIUBOV") == 1);
        CHECK(conjugation_residual(d).value() < 1e-10);
        const auto h = pauli_sum_to_matrix(build_xy_hamiltonian(d.params));
        const auto e = eigh(h);
        const auto s = run(d.circuit,
                           StateVector::basis(4, initial_basis_state(d).index));
        CHECK(fidelity(s, StateVector(4, e.vectors.column(0))) >= 1 - 1e-10);
    }
}

TEST_CASE("six-gate circuit inputs follow ground-state parity", "[builder]") {
    // Line 3 carries k = 2, which is always filled; line 0 carries k = 0,
    // filled only above the critical field.
    CHECK(initial_basis_state(build_ising4(0.5, resolved())).index == 0b0001);
    CHECK(initial_basis_state(build_ising4(1.5, resolved())).index == 0b1001);
}

TEST_CASE("initial basis states of the general disentangler", "[builder]") {
    const auto below = build_disentangler({4, 0.5, 1.0}, resolved());
    // labeling {0, 2, 1, -1}: k = 2 sits on line 1
    CHECK(initial_basis_state(below).index == 0b0100);
    const auto above = build_disentangler({4, 1.5, 1.0}, resolved());
    CHECK(initial_basis_state(above).index == 0b1100);
    const auto crit = build_disentangler({4, 1.0, 1.0}, resolved());
    const auto s = initial_basis_state(crit);
    CHECK(s.degenerate());
    CHECK(s.indices == std::vector<std::size_t>{0b0100, 0b1100});
}

TEST_CASE("strong-field ground state matches the oracle", "[builder]") {
    const ModelParams p{4, 10.0, 1.0};
    const auto d = build_disentangler(p, resolved());
    const auto s = run(d.circuit, StateVector::basis(4, initial_basis_state(d).index));
    const auto e = eigh(pauli_sum_to_matrix(build_xy_hamiltonian(p)));
    CHECK(fidelity(s, StateVector(4, e.vectors.column(0))) >= 1 - 1e-10);
}

TEST_CASE("pair determinant helper", "[builder]") {
    const auto net = build_fourier_network(4);
    const auto sp = single_particle_matrix(net.circuit);
    // lines 2, 3 carry +1, -1
    const auto det = pair_determinant(sp, 2, 1);
    CHECK_THAT(det.real(), WithinAbs(1.0, 1e-12));
    CHECK_THAT(det.imag(), WithinAbs(0.0, 1e-12));
    CHECK_THROWS_AS(pair_angle(cplx{0.0, 1.0}, 1, {4, 0.5, 1.0}, resolved()),
                    std::logic_error);
}
