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
 * @file
 * Eigenstate preparation, time evolution, thermal states and observable
 * scans, all through the disentangling circuit.
 */
#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "builder.hpp"
#include "circuit.hpp"
#include "pauli.hpp"
#include "statevector.hpp"

namespace ffc {

struct PreparedState {
    StateVector state;
    double energy = 0.0;
};

/// Eigenstate for a quasi-particle occupation given in ModeTable order.
inline PreparedState prepare_eigenstate(const Disentangler &d,
                                        const std::vector<int> &occupation) {
    const std::size_t n = d.circuit.num_qubits();
    const std::size_t idx = basis_index_for(d, occupation);
    PreparedState out{run(d.circuit, StateVector::basis(n, idx)),
                      d.modes.e0};
    for (std::size_t i = 0; i < n; ++i) {
        if (occupation[i] == 1) {
            out.energy += d.modes.modes[i].excitation();
        }
    }
    return out;
}

inline PreparedState prepare_eigenstate(const ModelParams &p,
                                        const ConventionChoice &conv,
                                        const std::vector<int> &occupation) {
    return prepare_eigenstate(build_disentangler(p, conv), occupation);
}

/// Ground state; for degenerate points the first of initial_basis_state's
/// indices is used.
inline PreparedState prepare_ground_state(const Disentangler &d) {
    const std::size_t n = d.circuit.num_qubits();
    return {run(d.circuit,
                StateVector::basis(n, initial_basis_state(d).index)),
            d.modes.e0};
}

/**
 * @brief exp(-i t H) as a circuit: undo the disentangler, one phase gate
 * per line, redo the disentangler. The gate count does not depend on t.
 */
inline Circuit evolution_circuit(const Disentangler &d, double t) {
    const std::size_t n = d.circuit.num_qubits();
    Circuit c = inverse(d.circuit);
    for (std::size_t l = 0; l < n; ++l) {
        c.append(phase_evolution_gate(d.line_energy[l], t,
                                      d.convention.occupation),
                 {l});
    }
    c.extend(d.circuit);
    return c;
}

inline StateVector evolve(const StateVector &state, const Disentangler &d,
                          double t) {
    if (state.num_qubits() != d.circuit.num_qubits()) {
        throw std::invalid_argument("evolve: qubit count mismatch");
    }
    return run(evolution_circuit(d, t), state);
}

inline StateVector evolve(const StateVector &state, const ModelParams &p,
                          const ConventionChoice &conv, double t) {
    return evolve(state, build_disentangler(p, conv), t);
}

inline constexpr int kMaxGibbsQubits = 10;

/**
 * @brief exp(-beta H) / Z built as U exp(-beta H~) U^dagger.
 *
 * The Boltzmann weights are taken relative to the lowest predicted level,
 * so the constant E0 drops out with the normalization.
 */
inline DensityMatrix gibbs_state(const Disentangler &d, double beta) {
    if (!(beta >= 0.0) || !std::isfinite(beta)) {
        throw std::invalid_argument("gibbs_state: beta must be >= 0");
    }
    const std::size_t n = d.circuit.num_qubits();
    if (n > static_cast<std::size_t>(kMaxGibbsQubits)) {
        throw std::invalid_argument("gibbs_state: n > 10");
    }
    const std::size_t dim = dim_of(n);
    std::vector<double> e(dim);
    double emin = 0.0;
    for (std::size_t x = 0; x < dim; ++x) {
        e[x] = predicted_energy(d, x);
        emin = x == 0 ? e[x] : std::min(emin, e[x]);
    }
    std::vector<double> w(dim);
    double z = 0.0;
    for (std::size_t x = 0; x < dim; ++x) {
        w[x] = std::exp(-beta * (e[x] - emin));
        z += w[x];
    }
    const Matrix u = unitary_of(d.circuit);
    Matrix left = u;
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            left(r, c) *= w[c] / z;
        }
    }
    Matrix rho = left * u.adjoint();
    Matrix sym = rho + rho.adjoint();
    sym *= 0.5;
    return {n, std::move(sym)};
}

inline DensityMatrix gibbs_state(const ModelParams &p,
                                 const ConventionChoice &conv, double beta) {
    p.validate();
    if (p.n > kMaxGibbsQubits) {
        throw std::invalid_argument("gibbs_state: n > 10");
    }
    return gibbs_state(build_disentangler(p, conv), beta);
}

struct ScanRow {
    double lambda = 0.0;
    std::string observable;
    int site_i = -1;
    int site_j = -1; ///< -1 for one-site observables
    double value = 0.0;
};

struct ScanResult {
    std::vector<ScanRow> rows;
};

/**
 * @brief Observable families by name.
 *
 * "xx": X_i X_j for all i < j. "z", "x": every site. "xxx", "xxxx": strings
 * of X on consecutive sites starting at i (site_j is the last site).
 */
struct NamedObservable {
    std::string family;
    int site_i = -1;
    int site_j = -1;
    PauliString ops;
};

inline std::vector<NamedObservable> expand_observable(const std::string &fam,
                                                      int n) {
    std::vector<NamedObservable> out;
    const auto un = static_cast<std::size_t>(n);
    auto one = [&](char c) {
        for (int i = 0; i < n; ++i) {
            std::string s(un, 'I');
            s[static_cast<std::size_t>(i)] = c;
            out.push_back({fam, i, -1, PauliString(s)});
        }
    };
    if (fam == "xx") {
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                std::string s(un, 'I');
                s[static_cast<std::size_t>(i)] = 'X';
                s[static_cast<std::size_t>(j)] = 'X';
                out.push_back({fam, i, j, PauliString(s)});
            }
        }
    } else if (fam == "z") {
        one('Z');
    } else if (fam == "x") {
        one('X');
    } else if (fam == "xxx" || fam == "xxxx") {
        const int len = static_cast<int>(fam.size());
        for (int i = 0; i + len <= n; ++i) {
            std::string s(un, 'I');
            for (int j = i; j < i + len; ++j) {
                s[static_cast<std::size_t>(j)] = 'X';
            }
            out.push_back({fam, i, i + len - 1, PauliString(s)});
        }
    } else {
        throw std::invalid_argument("unknown observable: " + fam);
    }
    return out;
}

/**
 * @brief Ground-state expectation values over a lambda grid. Rows are
 * ordered by lambda, then by observable family, then by site.
 */
inline ScanResult scan_correlators(const ModelParams &base,
                                   const std::vector<double> &lambdas,
                                   const std::vector<std::string> &families,
                                   const ConventionChoice &conv) {
    base.validate();
    std::vector<NamedObservable> obs;
    for (const auto &f : families) {
        auto e = expand_observable(f, base.n);
        obs.insert(obs.end(), e.begin(), e.end());
    }
    ScanResult res;
    for (double l : lambdas) {
        ModelParams p = base;
        p.lambda = l;
        const auto gs = prepare_ground_state(build_disentangler(p, conv));
        for (const auto &o : obs) {
            res.rows.push_back({l, o.family, o.site_i, o.site_j,
                                expectation(gs.state, as_sum(o.ops))});
        }
    }
    return res;
}

/// lambda_from + i (lambda_to - lambda_from) / (steps - 1), i < steps.
inline std::vector<double> linspace(double from, double to, int steps) {
    if (steps < 1) {
        throw std::invalid_argument("steps must be >= 1");
    }
    std::vector<double> v;
    for (int i = 0; i < steps; ++i) {
        v.push_back(steps == 1 ? from
                               : from + (to - from) * i / (steps - 1));
    }
    return v;
}

} // namespace ffc
