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
 * Gate constructors: fermionic swap, Fourier butterfly F_k, Bogoliubov
 * mixer B and the single-line phase gate.
 *
 * Two-qubit matrices are indexed |q_a q_b> with the first target as the
 * high bit.
 */
#pragma once

#include <bit>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "conventions.hpp"
#include "linalg.hpp"
#include "spectrum.hpp"

namespace ffc {

enum class GateLabel { FSWAP, FOURIER, BOGOLIUBOV, PHASE, CUSTOM };

inline std::string to_string(GateLabel l) {
    switch (l) {
    case GateLabel::FSWAP:
        return "FSWAP";
    case GateLabel::FOURIER:
        return "FOURIER";
    case GateLabel::BOGOLIUBOV:
        return "BOGOLIUBOV";
    case GateLabel::PHASE:
        return "PHASE";
    case GateLabel::CUSTOM:
        return "CUSTOM";
    }
    return "CUSTOM";
}

inline GateLabel label_from_string(std::string_view s) {
    for (auto l : {GateLabel::FSWAP, GateLabel::FOURIER, GateLabel::BOGOLIUBOV,
                   GateLabel::PHASE, GateLabel::CUSTOM}) {
        if (to_string(l) == s) {
            return l;
        }
    }
    throw std::invalid_argument("unknown gate label: " + std::string(s));
}

/**
 * @brief Parameters that regenerate a gate's entries.
 *
 * FOURIER uses k, n and the adjoint flag. BOGOLIUBOV uses phi (the mixing
 * angle actually applied); k and theta record the mode it came from.
 * PHASE uses omega_t.
 */
struct GateParams {
    std::optional<int> k;
    std::optional<int> n;
    std::optional<double> theta;
    std::optional<double> phi;
    std::optional<double> omega_t;
    bool adjoint = false;

    friend bool operator==(const GateParams &, const GateParams &) = default;
};

struct Gate {
    GateLabel label = GateLabel::CUSTOM;
    std::size_t arity = 1;
    GateParams params;
    Matrix entries;

    [[nodiscard]] std::size_t dim() const { return std::size_t{1} << arity; }
};

inline Gate fswap() {
    Gate g;
    g.label = GateLabel::FSWAP;
    g.arity = 2;
    g.entries = Matrix{{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, -1}};
    return g;
}

/// exp(i 2 pi k / n)
inline cplx fourier_phase(int k, int n) {
    const int kr = ((k % n) + n) % n;
    if (kr == 0) {
        return 1.0;
    }
    if (2 * kr == n) {
        return -1.0;
    }
    const double a = 2.0 * kPi * kr / n;
    return {std::cos(a), std::sin(a)};
}

namespace detail {
inline Matrix fourier_entries(int k, int n) {
    const cplx a = fourier_phase(k, n);
    const double s = 1.0 / std::sqrt(2.0);
    return Matrix{{1, 0, 0, 0},
                  {0, s, a * s, 0},
                  {0, s, -a * s, 0},
                  {0, 0, 0, -a}};
}

inline Matrix bogoliubov_entries(double phi) {
    const double c = std::cos(phi);
    const cplx is = kI * std::sin(phi);
    return Matrix{{c, 0, 0, is}, {0, 1, 0, 0}, {0, 0, 1, 0}, {is, 0, 0, c}};
}

inline Matrix phase_entries(double omega_t) {
    return Matrix{{std::polar(1.0, omega_t), 0},
                  {0, std::polar(1.0, -omega_t)}};
}
} // namespace detail

/**
 * @brief Fourier butterfly for twiddle k of an n-point transform.
 * @param k Twiddle index, reduced mod n.
 * @param n Transform length, a power of two.
 */
inline Gate fourier_gate(int k, int n) {
    if (!is_power_of_two(n)) {
        throw std::invalid_argument("fourier_gate: n must be a power of two");
    }
    Gate g;
    g.label = GateLabel::FOURIER;
    g.arity = 2;
    g.params.k = ((k % n) + n) % n;
    g.params.n = n;
    g.entries = detail::fourier_entries(k, n);
    return g;
}

/// B gate with an explicit mixing angle phi: cos phi on |00>,|11>, i sin phi
/// between them.
inline Gate bogoliubov_gate_phi(double phi, int k = 0, double theta = 0.0) {
    Gate g;
    g.label = GateLabel::BOGOLIUBOV;
    g.arity = 2;
    g.params.k = k;
    g.params.theta = theta;
    g.params.phi = phi;
    g.entries = detail::bogoliubov_entries(phi);
    return g;
}

/**
 * @brief B gate for mode pair (k, -k) with phi = theta_k or theta_k / 2.
 */
inline Gate bogoliubov_gate(int k, const ModelParams &params,
                            AngleConvention convention) {
    params.validate();
    if (k <= -params.n / 2 || k > params.n / 2) {
        throw std::invalid_argument("bogoliubov_gate: k out of mode range");
    }
    const double theta = bogoliubov_angle(k, params);
    const double factor = convention == AngleConvention::Half ? 0.5 : 1.0;
    return bogoliubov_gate_phi(factor * theta, k, theta);
}

/**
 * @brief Single-line factor of exp(-i t H~).
 *
 * With the PLUS occupation sign, |1> carries energy +omega and |0> carries
 * -omega, so the gate is diag(e^{i omega t}, e^{-i omega t}). MINUS swaps
 * the roles.
 */
inline Gate phase_evolution_gate(double omega, double t,
                                 OccupationSign occ = OccupationSign::Plus) {
    if (!std::isfinite(omega) || !std::isfinite(t)) {
        throw std::invalid_argument("phase_evolution_gate: non-finite input");
    }
    const double s = occ == OccupationSign::Plus ? 1.0 : -1.0;
    Gate g;
    g.label = GateLabel::PHASE;
    g.arity = 1;
    g.params.omega_t = s * omega * t;
    g.entries = detail::phase_entries(*g.params.omega_t);
    return g;
}

inline Gate custom_gate(Matrix entries) {
    if (!entries.square() || (entries.rows() != 2 && entries.rows() != 4)) {
        throw std::invalid_argument("custom_gate: expected 2x2 or 4x4 matrix");
    }
    Gate g;
    g.label = GateLabel::CUSTOM;
    g.arity = entries.rows() == 2 ? 1 : 2;
    g.entries = std::move(entries);
    return g;
}

/// Conjugate transpose, keeping the parameterization where one exists.
inline Gate adjoint(const Gate &g) {
    Gate out = g;
    out.entries = g.entries.adjoint();
    switch (g.label) {
    case GateLabel::FOURIER:
        out.params.adjoint = !g.params.adjoint;
        break;
    case GateLabel::BOGOLIUBOV:
        out.params.phi = -*g.params.phi;
        out.entries = detail::bogoliubov_entries(*out.params.phi);
        break;
    case GateLabel::PHASE:
        out.params.omega_t = -*g.params.omega_t;
        out.entries = detail::phase_entries(*out.params.omega_t);
        break;
    default:
        break;
    }
    return out;
}

/**
 * @brief Rebuild entries from label and params. CUSTOM gates are returned
 * unchanged.
 */
inline Gate rebuild(GateLabel label, const GateParams &p, std::size_t arity,
                    const Matrix &custom = {}) {
    Gate g;
    switch (label) {
    case GateLabel::FSWAP:
        return fswap();
    case GateLabel::FOURIER:
        if (!p.k || !p.n) {
            throw std::invalid_argument("FOURIER gate needs k and n");
        }
        g = fourier_gate(*p.k, *p.n);
        if (p.adjoint) {
            g = adjoint(g);
        }
        return g;
    case GateLabel::BOGOLIUBOV:
        if (!p.phi) {
            throw std::invalid_argument("BOGOLIUBOV gate needs phi");
        }
        return bogoliubov_gate_phi(*p.phi, p.k.value_or(0),
                                   p.theta.value_or(0.0));
    case GateLabel::PHASE:
        if (!p.omega_t) {
            throw std::invalid_argument("PHASE gate needs omega_t");
        }
        g.label = GateLabel::PHASE;
        g.arity = 1;
        g.params.omega_t = p.omega_t;
        g.entries = detail::phase_entries(*p.omega_t);
        return g;
    case GateLabel::CUSTOM:
        g = custom_gate(custom);
        if (g.arity != arity) {
            throw std::invalid_argument("CUSTOM gate arity mismatch");
        }
        return g;
    }
    throw std::invalid_argument("rebuild: bad label");
}

/// True when the gate conserves the number of |1>s on its targets.
inline bool is_number_conserving(const Gate &g, double tol = 1e-14) {
    const std::size_t d = g.dim();
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) {
            if (std::popcount(r) != std::popcount(c) &&
                std::abs(g.entries(r, c)) > tol) {
                return false;
            }
        }
    }
    return true;
}

} // namespace ffc
