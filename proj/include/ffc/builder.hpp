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
 * Disentangling circuits for the periodic XY chain.
 *
 * The circuit acting on states is: Bogoliubov mixers on adjacent (k, -k)
 * lines, fermionic swaps that restore the Fourier network's input order,
 * then the Fourier network itself. Line l at the circuit input carries
 * momentum labeling[l]; after the network that mode is the plane wave
 * e^{i 2 pi k j / n} / sqrt(n) over sites j.
 */
#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "circuit.hpp"
#include "conventions.hpp"
#include "gates.hpp"
#include "linalg.hpp"
#include "oracle.hpp"
#include "pauli.hpp"
#include "spectrum.hpp"

namespace ffc {

/**
 * @brief Momentum carried by each line, k in {-n/2+1, ..., n/2}.
 */
struct ModeLabeling {
    std::vector<int> mapping;

    [[nodiscard]] std::size_t size() const { return mapping.size(); }
    [[nodiscard]] int operator[](std::size_t line) const {
        return mapping[line];
    }

    /// Line that carries momentum k.
    [[nodiscard]] std::size_t line_of(int k) const {
        auto it = std::find(mapping.begin(), mapping.end(), k);
        if (it == mapping.end()) {
            throw std::out_of_range("ModeLabeling: momentum not present");
        }
        return static_cast<std::size_t>(it - mapping.begin());
    }

    void validate(int n) const {
        if (mapping.size() != static_cast<std::size_t>(n)) {
            throw std::invalid_argument("ModeLabeling: wrong length");
        }
        std::vector<int> sorted = mapping;
        std::sort(sorted.begin(), sorted.end());
        for (int i = 0; i < n; ++i) {
            if (sorted[static_cast<std::size_t>(i)] != i - n / 2 + 1) {
                throw std::invalid_argument("ModeLabeling: not a bijection");
            }
        }
    }

    friend bool operator==(const ModeLabeling &,
                           const ModeLabeling &) = default;
};

/// Centre a momentum index into (-n/2, n/2].
inline int centred_momentum(int k, int n) {
    k = ((k % n) + n) % n;
    return k > n / 2 ? k - n : k;
}

namespace detail {

/// Bubble `order` into `target` with adjacent fSWAPs on lines offset+i.
template <class T>
void route(std::vector<T> order, const std::vector<T> &target, Circuit &c,
           std::size_t offset = 0) {
    std::map<T, std::size_t> pos;
    for (std::size_t i = 0; i < target.size(); ++i) {
        pos[target[i]] = i;
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < order.size(); ++i) {
            if (pos.at(order[i]) > pos.at(order[i + 1])) {
                c.append(fswap(), {offset + i, offset + i + 1});
                std::swap(order[i], order[i + 1]);
                changed = true;
            }
        }
    }
}

struct FftBlock {
    std::vector<int> labels; ///< input line -> frequency (0..m-1)
    std::vector<int> outpos; ///< output line -> site position in the block
};

/**
 * Decimation in frequency. The two half blocks transform the even and odd
 * frequencies, their outputs are interleaved by fSWAPs and combined
 * pairwise by F gates.
 */
inline FftBlock fft_block(int m, std::size_t offset, Circuit &c) {
    if (m == 1) {
        return {{0}, {0}};
    }
    const int h = m / 2;
    const auto lo = fft_block(h, offset, c);
    const auto hi = fft_block(h, offset + static_cast<std::size_t>(h), c);
    FftBlock out;
    for (int x : lo.labels) {
        out.labels.push_back(2 * x);
    }
    for (int x : hi.labels) {
        out.labels.push_back(2 * x + 1);
    }
    std::vector<int> cur(static_cast<std::size_t>(m));
    std::vector<int> tgt;
    for (int i = 0; i < m; ++i) {
        cur[static_cast<std::size_t>(i)] = i;
    }
    for (int i = 0; i < h; ++i) {
        tgt.push_back(i);
        tgt.push_back(h + i);
    }
    route(cur, tgt, c, offset);
    for (int i = 0; i < h; ++i) {
        const int p = lo.outpos[static_cast<std::size_t>(i)];
        const auto a = offset + 2 * static_cast<std::size_t>(i);
        c.append(fourier_gate(p, m), {a + 1, a});
        out.outpos.push_back(p);
        out.outpos.push_back(p + h);
    }
    return out;
}

} // namespace detail

struct FourierNetwork {
    Circuit circuit;
    ModeLabeling labeling; ///< input line -> momentum
};

/**
 * @brief Fermionic FFT on n = 2^k adjacent lines.
 *
 * Uses n(n-1)/2 gates: n log2(n) / 2 F gates, the rest fSWAPs.
 */
inline FourierNetwork build_fourier_network(int n) {
    if (n < 2 || !is_power_of_two(n)) {
        throw std::invalid_argument("n must be a power of two");
    }
    FourierNetwork net;
    net.circuit = Circuit(static_cast<std::size_t>(n));
    const auto blk = detail::fft_block(n, 0, net.circuit);
    std::vector<int> natural(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        natural[static_cast<std::size_t>(i)] = i;
    }
    detail::route(blk.outpos, natural, net.circuit);
    for (int k : blk.labels) {
        net.labeling.mapping.push_back(centred_momentum(k, n));
    }
    return net;
}

/**
 * @brief One-particle matrix of a circuit of number-conserving gates.
 *
 * Column l is the site amplitude profile of the mode entering on line l.
 */
inline Matrix single_particle_matrix(const Circuit &c) {
    const std::size_t n = c.num_qubits();
    Matrix u = Matrix::identity(n);
    for (const auto &op : c.ops()) {
        if (op.gate.arity != 2 || !is_number_conserving(op.gate)) {
            throw std::invalid_argument(
                "single_particle_matrix: gate is not a two-line mode mixer");
        }
        const auto &g = op.gate.entries;
        const std::size_t a = op.targets[0];
        const std::size_t b = op.targets[1];
        Matrix e = Matrix::identity(n);
        e(a, a) = g(2, 2);
        e(a, b) = g(2, 1);
        e(b, a) = g(1, 2);
        e(b, b) = g(1, 1);
        u = e * u;
    }
    return u;
}

/// e^{i 2 pi k j / n} / sqrt(n)
inline std::vector<cplx> plane_wave(int k, std::size_t n) {
    std::vector<cplx> v(n);
    const double s = 1.0 / std::sqrt(static_cast<double>(n));
    for (std::size_t j = 0; j < n; ++j) {
        v[j] = s * fourier_phase(k * static_cast<int>(j), static_cast<int>(n));
    }
    return v;
}

/**
 * @brief det of the overlaps of lines (line, line+1) with plane waves
 * (+k, -k). A B gate on those lines is usable iff this is +-1.
 */
inline cplx pair_determinant(const Matrix &sp, std::size_t line, int k) {
    const std::size_t n = sp.rows();
    const auto up = sp.column(line);
    const auto lo = sp.column(line + 1);
    const auto pk = plane_wave(k, n);
    const auto mk = plane_wave(-k, n);
    const cplx m00 = inner(pk, up);
    const cplx m01 = inner(pk, lo);
    const cplx m10 = inner(mk, up);
    const cplx m11 = inner(mk, lo);
    return m00 * m11 - m01 * m10;
}

inline constexpr double kPairDetTol = 1e-10;

/// Mixing angle for a pair whose overlap determinant is D.
inline double pair_angle(cplx det, int k, const ModelParams &p,
                         const ConventionChoice &conv) {
    if (std::abs(det.imag()) > kPairDetTol ||
        std::abs(std::abs(det.real()) - 1.0) > kPairDetTol) {
        throw std::logic_error("pair lines do not span the (k, -k) modes");
    }
    return -det.real() * conv.angle_factor() * bogoliubov_angle(k, p);
}

/**
 * @brief Line order used at the Bogoliubov stage: each (k, -k) pair is
 * made adjacent by moving the later partner up next to the earlier one.
 */
inline ModeLabeling pair_arrangement(const ModeLabeling &fourier_labels) {
    auto a = fourier_labels.mapping;
    const int n = static_cast<int>(a.size());
    for (int k = 1; k < n / 2; ++k) {
        auto i = std::find(a.begin(), a.end(), k) - a.begin();
        auto j = std::find(a.begin(), a.end(), -k) - a.begin();
        if (i > j) {
            std::swap(i, j);
        }
        const int moved = a[static_cast<std::size_t>(j)];
        a.erase(a.begin() + j);
        a.insert(a.begin() + i + 1, moved);
    }
    return {a};
}

/**
 * @brief Bogoliubov stage for a Fourier network with the given input
 * labeling: B gates on adjacent pairs, then fSWAP routing back to the
 * network's input order.
 *
 * After routing the fSWAPs only permute lines, so the upper line of a pair
 * holds plane wave +k or -k exactly; the overlap determinant is +1 or -1
 * accordingly.
 */
inline Circuit build_bogoliubov_layer(const ModelParams &p,
                                      const ModeLabeling &fourier_labels,
                                      const ConventionChoice &conv) {
    p.validate();
    fourier_labels.validate(p.n);
    const auto arr = pair_arrangement(fourier_labels);
    Circuit c(static_cast<std::size_t>(p.n));
    for (std::size_t line = 0; line + 1 < arr.size(); ++line) {
        const int ku = arr[line];
        const int kl = arr[line + 1];
        if (ku != -kl || ku == 0) {
            continue;
        }
        const int k = std::abs(ku);
        const cplx det = ku > 0 ? 1.0 : -1.0;
        c.append(bogoliubov_gate_phi(pair_angle(det, k, p, conv), k,
                                     bogoliubov_angle(k, p)),
                 {line, line + 1});
    }
    detail::route(arr.mapping, fourier_labels.mapping, c);
    return c;
}

/**
 * @brief A built circuit together with its energy bookkeeping.
 *
 * line_energy[l] is eps_l: the line contributes occ * eps_l * (2 b_l - 1)
 * to the energy of input basis state b, with occ = +1 for PLUS. Lines that
 * carry an unpaired mode (k = 0 or n/2) whose angle exceeds pi/2 have
 * eps = -omega; all others have eps = +omega.
 */
struct Disentangler {
    Circuit circuit;
    ModeTable modes;
    ModeLabeling labeling; ///< circuit input line -> momentum
    std::vector<double> line_energy;
    ConventionChoice convention;
    ModelParams params;
};

namespace detail {
inline std::vector<double> line_energies(const ModelParams &p,
                                         const ModeLabeling &lab) {
    std::vector<double> eps;
    for (int k : lab.mapping) {
        const double w = dispersion(k, p);
        const double th = bogoliubov_angle(k, p);
        const bool unpaired = (k == 0 || 2 * k == p.n);
        eps.push_back(unpaired && th > kPi / 2 ? -w : w);
    }
    return eps;
}
} // namespace detail

inline Disentangler build_disentangler(const ModelParams &p,
                                       const ConventionChoice &conv) {
    p.validate();
    const auto net = build_fourier_network(p.n);
    Disentangler d;
    d.params = p;
    d.convention = conv;
    d.modes = mode_table(p);
    d.circuit = build_bogoliubov_layer(p, net.labeling, conv);
    d.circuit.extend(net.circuit);
    d.labeling = pair_arrangement(net.labeling);
    d.line_energy = detail::line_energies(p, d.labeling);
    return d;
}

/**
 * @brief Six-gate circuit for the n = 4 Ising chain (gamma = 1).
 *
 * Lines 0 and 3 carry k = 0 and k = 2. Lines 1 and 2 leave the network as
 * an unresolved combination of k = +-1; the pair block of the Hamiltonian
 * is invariant under rotations within that span, so one B gate on (1, 2)
 * still diagonalizes it.
 */
inline Disentangler build_ising4(double lambda, const ConventionChoice &conv) {
    const ModelParams p{4, lambda, 1.0};
    p.validate();
    Circuit net(4);
    net.append(fourier_gate(0, 4), {1, 0});
    net.append(fourier_gate(0, 4), {2, 3});
    net.append(fswap(), {1, 2});
    net.append(fourier_gate(1, 4), {1, 0});
    net.append(fourier_gate(1, 4), {3, 2});
    const cplx det = pair_determinant(single_particle_matrix(net), 1, 1);

    Disentangler d;
    d.params = p;
    d.convention = conv;
    d.modes = mode_table(p);
    d.circuit = Circuit(4);
    d.circuit.append(bogoliubov_gate_phi(pair_angle(det, 1, p, conv), 1,
                                         bogoliubov_angle(1, p)),
                     {1, 2});
    d.circuit.extend(net);
    d.labeling = ModeLabeling{{0, 1, -1, 2}};
    d.line_energy = detail::line_energies(p, d.labeling);
    return d;
}

/// occ * sum_l eps_l (2 b_l - 1) for input basis index x.
inline double predicted_energy(const Disentangler &d, std::size_t x) {
    const std::size_t n = d.circuit.num_qubits();
    double e = 0.0;
    for (std::size_t l = 0; l < n; ++l) {
        e += d.line_energy[l] * (2.0 * qubit_bit(n, x, l) - 1.0);
    }
    return d.convention.occupation_factor() * e;
}

struct InitialState {
    std::size_t index = 0;            ///< preferred basis index
    std::vector<std::size_t> indices; ///< every degenerate choice
    [[nodiscard]] bool degenerate() const { return indices.size() > 1; }
};

/**
 * @brief Basis input whose image is the ground state: set each line whose
 * |1> lowers the energy. Zero-energy lines are free; all resulting indices
 * are returned.
 */
inline InitialState initial_basis_state(const Disentangler &d) {
    const std::size_t n = d.circuit.num_qubits();
    std::size_t base = 0;
    std::vector<std::size_t> free_lines;
    for (std::size_t l = 0; l < n; ++l) {
        const double e = d.convention.occupation_factor() * d.line_energy[l];
        if (std::abs(e) <= kZeroModeTol) {
            free_lines.push_back(l);
        } else if (e < 0.0) {
            base |= qubit_mask(n, l);
        }
    }
    InitialState s;
    for (std::size_t combo = 0; combo < (std::size_t{1} << free_lines.size());
         ++combo) {
        std::size_t idx = base;
        for (std::size_t j = 0; j < free_lines.size(); ++j) {
            if ((combo >> j) & 1U) {
                idx |= qubit_mask(n, free_lines[j]);
            }
        }
        s.indices.push_back(idx);
    }
    s.index = s.indices.front();
    return s;
}

/**
 * @brief Basis input for a quasi-particle occupation (one entry per mode in
 * ModeTable order, k = -n/2+1..n/2): flip the ground input on every line
 * whose mode is occupied.
 */
inline std::size_t basis_index_for(const Disentangler &d,
                                   const std::vector<int> &occupation) {
    const std::size_t n = d.circuit.num_qubits();
    if (occupation.size() != n) {
        throw std::invalid_argument("occupation length must equal n");
    }
    std::size_t idx = initial_basis_state(d).index;
    for (std::size_t i = 0; i < n; ++i) {
        if (occupation[i] != 0 && occupation[i] != 1) {
            throw std::invalid_argument("occupation entries must be 0 or 1");
        }
        if (occupation[i] == 1) {
            idx ^= qubit_mask(n, d.labeling.line_of(d.modes.modes[i].k));
        }
    }
    return idx;
}

/// Largest of the off-diagonal of U^dagger H U and the diagonal's deviation
/// from predicted_energy.
struct ConjugationResidual {
    double max_offdiag = 0.0;
    double max_diag_error = 0.0;
    [[nodiscard]] double value() const {
        return std::max(max_offdiag, max_diag_error);
    }
};

inline ConjugationResidual conjugation_residual(const Disentangler &d) {
    const auto h = build_xy_hamiltonian(d.params, d.convention.boundary);
    const Matrix u = unitary_of(d.circuit);
    const Matrix m = u.adjoint() * pauli_sum_to_matrix(h) * u;
    ConjugationResidual r;
    r.max_offdiag = max_offdiag(m);
    for (std::size_t x = 0; x < m.rows(); ++x) {
        r.max_diag_error = std::max(
            r.max_diag_error, std::abs(m(x, x) - predicted_energy(d, x)));
    }
    return r;
}

struct CandidateResidual {
    ConventionChoice choice;
    double max_offdiag = 0.0;
    double max_diag_error = 0.0;
    [[nodiscard]] double residual() const {
        return std::max(max_offdiag, max_diag_error);
    }
};

struct ResolutionReport {
    int n = 4;
    double tol = 1e-10;
    std::vector<CandidateResidual> candidates;
    std::vector<ConventionChoice> survivors;

    /// The unique surviving choice; throws otherwise.
    [[nodiscard]] ConventionChoice resolved() const {
        if (survivors.size() != 1) {
            std::string msg = "convention resolution found " +
                              std::to_string(survivors.size()) +
                              " surviving choices:";
            for (const auto &c : candidates) {
                msg += " " + to_string(c.choice) + "=" +
                       std::to_string(c.residual());
            }
            throw std::runtime_error(msg);
        }
        return survivors.front();
    }
};

inline const std::vector<double> &probe_lambdas() {
    static const std::vector<double> v{0.0, 0.5, 1.5};
    return v;
}
inline const std::vector<double> &probe_gammas() {
    static const std::vector<double> v{1.0, 0.5};
    return v;
}

/// Worst residual of one choice over the probe grid at size n.
inline CandidateResidual evaluate_convention(const ConventionChoice &c,
                                             int n) {
    CandidateResidual cr{c, 0.0, 0.0};
    for (double l : probe_lambdas()) {
        for (double g : probe_gammas()) {
            const auto r =
                conjugation_residual(build_disentangler({n, l, g}, c));
            cr.max_offdiag = std::max(cr.max_offdiag, r.max_offdiag);
            cr.max_diag_error = std::max(cr.max_diag_error, r.max_diag_error);
        }
    }
    return cr;
}

/**
 * @brief Try all eight conventions on the probe grid; a choice survives if
 * its residual is within tol at every point.
 */
inline ResolutionReport resolve_conventions(int n = 4, double tol = 1e-10) {
    if (n < 2 || !is_power_of_two(n) || n > 8) {
        throw std::invalid_argument("resolve_conventions: n must be 2, 4 or 8");
    }
    ResolutionReport rep;
    rep.n = n;
    rep.tol = tol;
    for (const auto &c : all_conventions()) {
        auto cr = evaluate_convention(c, n);
        if (cr.residual() <= tol) {
            rep.survivors.push_back(c);
        }
        rep.candidates.push_back(cr);
    }
    return rep;
}

} // namespace ffc
