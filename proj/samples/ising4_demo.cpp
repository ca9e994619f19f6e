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
/**
 * @file ising4_demo.cpp
 * Prepares the n = 4 Ising ground state with the six-gate circuit and
 * prints energy, fidelity and <X_0 X_1> across the transverse field.
 */
#include <cstdio>

#include "ffc/ffc.hpp"

using namespace ffc;

int main() {
    const auto conv = resolve_conventions(4).resolved();
    std::printf("convention %s\n", to_string(conv).c_str());
    std::printf("%6s %6s %18s %14s %12s\n", "lambda", "input", "energy",
                "fidelity", "<X0X1>");
    for (double l = 0.25; l <= 2.0 + 1e-9; l += 0.25) {
        const auto d = build_ising4(l, conv);
        const auto in = initial_basis_state(d).index;
        const auto s = run(d.circuit, StateVector::basis(4, in));
        const auto h = build_xy_hamiltonian(d.params);
        const auto e = eigh(pauli_sum_to_matrix(h));
        const double f = fidelity(s, StateVector(4, e.vectors.column(0)));
        std::printf("%6.2f %6zu %18.12f %14.12f %12.8f\n", l, in,
                    expectation(s, h), f,
                    expectation(s, as_sum(PauliString("XXII"))));
    }
    return 0;
}
