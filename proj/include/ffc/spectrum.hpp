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
 * Free-fermion solution of the periodic XY chain.
 *
 * With the Hamiltonian normalized as sum of (1+g)/2 XX + (1-g)/2 YY + l Z,
 * each momentum contributes +-omega_k to the energy, so creating one
 * quasi-particle costs 2 omega_k and the vacuum sits at E0 = -sum omega_k.
 */
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "conventions.hpp"
#include "linalg.hpp"

namespace ffc {

/// Single-mode energy scale omega_k; always >= 0.
inline double dispersion(int k, const ModelParams &p) {
    const double q = 2.0 * kPi * k / p.n;
    const double a = p.lambda - std::cos(q);
    const double b = p.gamma * std::sin(q);
    return std::sqrt(a * a + b * b);
}

/// Below this omega a mode is treated as a zero mode.
inline constexpr double kSingularOmega = 1e-14;

/**
 * @brief theta_k = arccos((cos q - lambda) / omega_k); zero when omega_k
 * vanishes.
 */
inline double bogoliubov_angle(int k, const ModelParams &p) {
    const double w = dispersion(k, p);
    if (w <= kSingularOmega) {
        return 0.0;
    }
    const double q = 2.0 * kPi * k / p.n;
    const double c = std::clamp((std::cos(q) - p.lambda) / w, -1.0, 1.0);
    return std::acos(c);
}

struct Mode {
    int k = 0;
    double theta = 0.0;
    double omega = 0.0;

    /// Energy of one quasi-particle in this mode.
    [[nodiscard]] double excitation() const { return 2.0 * omega; }
};

struct ModeTable {
    int n = 0;
    std::vector<Mode> modes; ///< k = -n/2+1, ..., n/2 in order
    double e0 = 0.0;

    [[nodiscard]] const Mode &mode(int k) const {
        const int idx = k + n / 2 - 1;
        if (idx < 0 || idx >= n) {
            throw std::out_of_range("ModeTable: k out of range");
        }
        return modes[static_cast<std::size_t>(idx)];
    }
};

inline ModeTable mode_table(const ModelParams &p) {
    p.validate();
    ModeTable t;
    t.n = p.n;
    double sum = 0.0;
    for (int k = -p.n / 2 + 1; k <= p.n / 2; ++k) {
        Mode m{k, bogoliubov_angle(k, p), dispersion(k, p)};
        sum += m.omega;
        t.modes.push_back(m);
    }
    t.e0 = -sum;
    return t;
}

/// Sorted {E0 + sum_k n_k 2 omega_k} over all 2^n occupations.
inline std::vector<double> assemble_spectrum(const ModeTable &t) {
    if (t.n > 24) {
        throw std::invalid_argument("many_body_spectrum: n > 24");
    }
    std::vector<double> e{t.e0};
    e.reserve(std::size_t{1} << t.n);
    for (const auto &m : t.modes) {
        const std::size_t sz = e.size();
        for (std::size_t i = 0; i < sz; ++i) {
            e.push_back(e[i] + m.excitation());
        }
    }
    std::sort(e.begin(), e.end());
    return e;
}

inline std::vector<double> many_body_spectrum(const ModelParams &p) {
    p.validate();
    if (p.n > 24) {
        throw std::invalid_argument("many_body_spectrum: n > 24");
    }
    return assemble_spectrum(mode_table(p));
}

struct GroundOccupation {
    std::vector<int> occupation; ///< per mode, in ModeTable order
    double energy = 0.0;
    std::vector<int> zero_modes; ///< k values free to be 0 or 1
};

inline constexpr double kZeroModeTol = 1e-12;

inline GroundOccupation ground_occupation(const ModelParams &p) {
    const auto t = mode_table(p);
    GroundOccupation g;
    g.occupation.assign(static_cast<std::size_t>(p.n), 0);
    g.energy = t.e0;
    for (const auto &m : t.modes) {
        if (m.omega <= kZeroModeTol) {
            g.zero_modes.push_back(m.k);
        }
    }
    return g;
}

} // namespace ffc
