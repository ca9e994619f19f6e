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
 * Pauli strings, weighted sums of them, the periodic XY chain Hamiltonian
 * and expectation values.
 */
#pragma once

#include <array>
#include <bit>
#include <initializer_list>
#include <span>
#include <utility>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "conventions.hpp"
#include "linalg.hpp"
#include "statevector.hpp"

namespace ffc {

/**
 * @brief Tensor product of single-qubit Paulis, one symbol per qubit.
 */
class PauliString {
  public:
    PauliString() = default;
    explicit PauliString(std::string ops) : ops_(std::move(ops)) {
        for (char c : ops_) {
            if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') {
                throw std::invalid_argument("PauliString: bad symbol");
            }
            ny_ += (c == 'Y') ? 1 : 0;
        }
        xm_ = mask("XY");
        zm_ = mask("ZY");
    }

    /// Identity on n qubits with the given symbols placed at sites.
    static PauliString
    from_sites(std::size_t n,
               std::initializer_list<std::pair<std::size_t, char>> sites) {
        std::string s(n, 'I');
        for (auto [q, c] : sites) {
            if (q >= n) {
                throw std::out_of_range("PauliString: site out of range");
            }
            s[q] = c;
        }
        return PauliString(std::move(s));
    }

    [[nodiscard]] std::size_t size() const { return ops_.size(); }
    [[nodiscard]] const std::string &ops() const { return ops_; }
    [[nodiscard]] char operator[](std::size_t q) const { return ops_[q]; }

    /// Mask of qubits flipped by the string (X or Y).
    [[nodiscard]] std::size_t x_mask() const { return xm_; }
    /// Mask of qubits that pick up a sign (Z or Y).
    [[nodiscard]] std::size_t z_mask() const { return zm_; }
    [[nodiscard]] int y_count() const { return ny_; }

    /// P|x> = phase(x) |x ^ x_mask>
    [[nodiscard]] cplx phase(std::size_t x) const {
        static constexpr std::array<cplx, 4> ipow{
            cplx{1, 0}, cplx{0, 1}, cplx{-1, 0}, cplx{0, -1}};
        const cplx base = ipow[static_cast<std::size_t>(ny_ % 4)];
        return (std::popcount(x & zm_) % 2 == 0) ? base : -base;
    }

    friend bool operator==(const PauliString &a, const PauliString &b) {
        return a.ops_ == b.ops_;
    }

  private:
    [[nodiscard]] std::size_t mask(const char *which) const {
        const std::size_t n = ops_.size();
        std::size_t m = 0;
        for (std::size_t q = 0; q < n; ++q) {
            if (ops_[q] == which[0] || ops_[q] == which[1]) {
                m |= qubit_mask(n, q);
            }
        }
        return m;
    }

    std::string ops_;
    std::size_t xm_ = 0;
    std::size_t zm_ = 0;
    int ny_ = 0;
};

struct PauliTerm {
    double coeff = 0.0;
    PauliString ops;

    friend bool operator==(const PauliTerm &, const PauliTerm &) = default;
};

/**
 * @brief Real-weighted sum of Pauli strings on n qubits.
 */
class PauliSum {
  public:
    PauliSum() = default;
    explicit PauliSum(std::size_t n) : n_{n} {}

    void add(double coeff, PauliString ops) {
        if (ops.size() != n_) {
            throw std::invalid_argument("PauliSum: string length is not n");
        }
        if (!std::isfinite(coeff)) {
            throw std::invalid_argument("PauliSum: coefficient not finite");
        }
        terms_.push_back({coeff, std::move(ops)});
    }
    void add(double coeff, const std::string &ops) {
        add(coeff, PauliString(ops));
    }

    [[nodiscard]] std::size_t num_qubits() const { return n_; }
    [[nodiscard]] const std::vector<PauliTerm> &terms() const {
        return terms_;
    }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }

    friend bool operator==(const PauliSum &, const PauliSum &) = default;

  private:
    std::size_t n_ = 0;
    std::vector<PauliTerm> terms_;
};

namespace detail {
inline void add_if_nonzero(PauliSum &h, double c, std::string ops) {
    if (c != 0.0) {
        h.add(c, PauliString(std::move(ops)));
    }
}
} // namespace detail

/**
 * @brief Periodic XY chain in transverse field.
 *
 * Bulk (1+g)/2 X_i X_{i+1} + (1-g)/2 Y_i Y_{i+1} for i = 0..n-2, field
 * l Z_i on every site, and the closing pair
 * s (1+g)/2 Y_0 Z..Z Y_{n-1} + s (1-g)/2 X_0 Z..Z X_{n-1} with s = +1 for
 * AS_WRITTEN. Zero coefficients are dropped.
 */
inline PauliSum build_xy_hamiltonian(const ModelParams &p,
                                     BoundarySign sign = BoundarySign::AsWritten) {
    p.validate();
    const auto n = static_cast<std::size_t>(p.n);
    const double cp = (1.0 + p.gamma) / 2.0;
    const double cm = (1.0 - p.gamma) / 2.0;
    const double s = sign == BoundarySign::AsWritten ? 1.0 : -1.0;
    PauliSum h(n);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        std::string xx(n, 'I');
        xx[i] = xx[i + 1] = 'X';
        detail::add_if_nonzero(h, cp, xx);
        std::string yy(n, 'I');
        yy[i] = yy[i + 1] = 'Y';
        detail::add_if_nonzero(h, cm, yy);
    }
    for (std::size_t i = 0; i < n; ++i) {
        std::string z(n, 'I');
        z[i] = 'Z';
        detail::add_if_nonzero(h, p.lambda, z);
    }
    std::string yzy(n, 'Z');
    yzy.front() = yzy.back() = 'Y';
    detail::add_if_nonzero(h, s * cp, yzy);
    std::string xzx(n, 'Z');
    xzx.front() = xzx.back() = 'X';
    detail::add_if_nonzero(h, s * cm, xzx);
    return h;
}

inline constexpr std::size_t kMaxDenseQubits = 14;

namespace detail {
/// Column c_q of a single-qubit Pauli: its one nonzero row and value.
inline std::pair<int, cplx> pauli_column(char p, int c) {
    switch (p) {
    case 'X':
        return {1 - c, 1.0};
    case 'Y':
        return {1 - c, c == 0 ? cplx{0, 1} : cplx{0, -1}};
    case 'Z':
        return {c, c == 0 ? 1.0 : -1.0};
    default:
        return {c, 1.0};
    }
}
} // namespace detail

/**
 * @brief Dense matrix of a Pauli sum; n <= 14.
 *
 * Built column by column as a tensor product of the 2x2 factors, which keeps
 * it independent of the bit-mask arithmetic used by apply_pauli_sum.
 */
inline Matrix pauli_sum_to_matrix(const PauliSum &h) {
    const std::size_t n = h.num_qubits();
    if (n > kMaxDenseQubits) {
        throw std::invalid_argument("pauli_sum_to_matrix: n too large");
    }
    const std::size_t d = dim_of(n);
    Matrix m(d, d);
    for (const auto &t : h.terms()) {
        for (std::size_t c = 0; c < d; ++c) {
            std::size_t r = 0;
            cplx v = t.coeff;
            for (std::size_t q = 0; q < n; ++q) {
                const auto [rq, f] =
                    detail::pauli_column(t.ops[q], qubit_bit(n, c, q));
                r = (r << 1) | static_cast<std::size_t>(rq);
                v *= f;
            }
            m(r, c) += v;
        }
    }
    return m;
}

/// H|psi> without building H; the result is not normalized.
inline std::vector<cplx> apply_pauli_sum(std::span<const cplx> psi,
                                         const PauliSum &h) {
    if (psi.size() != dim_of(h.num_qubits())) {
        throw std::invalid_argument("apply_pauli_sum: dimension mismatch");
    }
    std::vector<cplx> out(psi.size());
    for (const auto &t : h.terms()) {
        const std::size_t xm = t.ops.x_mask();
        for (std::size_t x = 0; x < psi.size(); ++x) {
            out[x ^ xm] += t.coeff * t.ops.phase(x) * psi[x];
        }
    }
    return out;
}

inline std::vector<cplx> apply_pauli_sum(const StateVector &psi,
                                         const PauliSum &h) {
    if (psi.num_qubits() != h.num_qubits()) {
        throw std::invalid_argument("apply_pauli_sum: qubit count mismatch");
    }
    return apply_pauli_sum(psi.amplitudes(), h);
}

inline constexpr double kImagTol = 1e-10;

/// <psi|O|psi>; throws if the imaginary part exceeds 1e-10.
inline double expectation(const StateVector &psi, const PauliSum &obs) {
    const auto o = apply_pauli_sum(psi, obs);
    const cplx v = inner(psi.amplitudes(), o);
    if (std::abs(v.imag()) > kImagTol) {
        throw std::runtime_error("expectation: imaginary part above 1e-10");
    }
    return v.real();
}

/// tr(rho O); throws if the imaginary part exceeds 1e-10.
inline double expectation_mixed(const DensityMatrix &rho,
                                const PauliSum &obs) {
    if (rho.num_qubits() != obs.num_qubits()) {
        throw std::invalid_argument("expectation_mixed: dimension mismatch");
    }
    // tr(rho P) = sum_x <x|rho|P x> phase: P|x> = ph(x)|x^m>, so
    // tr(rho P) = sum_x ph(x) rho(x, x^m).
    const Matrix &r = rho.matrix();
    cplx acc = 0.0;
    for (const auto &t : obs.terms()) {
        const std::size_t xm = t.ops.x_mask();
        cplx s = 0.0;
        for (std::size_t x = 0; x < r.rows(); ++x) {
            s += t.ops.phase(x) * r(x, x ^ xm);
        }
        acc += t.coeff * s;
    }
    if (std::abs(acc.imag()) > kImagTol) {
        throw std::runtime_error(
            "expectation_mixed: imaginary part above 1e-10");
    }
    return acc.real();
}

/// Single string as a one-term sum.
inline PauliSum as_sum(const PauliString &p, double coeff = 1.0) {
    PauliSum s(p.size());
    s.add(coeff, p);
    return s;
}

} // namespace ffc
