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
 * Brute-force reference: cyclic Jacobi eigensolver for Hermitian matrices,
 * matrix functions built on it, Gibbs states and the diagonalization report.
 */
#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "circuit.hpp"
#include "conventions.hpp"
#include "linalg.hpp"
#include "pauli.hpp"
#include "spectrum.hpp"
#include "statevector.hpp"

namespace ffc {

struct EigenDecomposition {
    std::vector<double> values; ///< ascending
    Matrix vectors;             ///< column j pairs with values[j]
    std::size_t sweeps = 0;
};

inline constexpr std::size_t kJacobiMaxSweeps = 100;
inline constexpr double kJacobiRelTol = 1e-13;
inline constexpr double kHermitianInputTol = 1e-10;

namespace detail {
inline double off_norm(const Matrix &a) {
    double s = 0.0;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            if (r != c) {
                s += std::norm(a(r, c));
            }
        }
    }
    return std::sqrt(s);
}

/// Plain complex product, skipping the inf/nan recovery of operator*.
inline cplx mul(cplx x, cplx y) {
    return {x.real() * y.real() - x.imag() * y.imag(),
            x.real() * y.imag() + x.imag() * y.real()};
}
} // namespace detail

/**
 * @brief Eigen-decomposition of a Hermitian matrix by cyclic Jacobi sweeps.
 *
 * Each rotation first removes the phase of a_pq, then applies the real
 * symmetric Jacobi rotation. Stops when the off-diagonal Frobenius norm is
 * below 1e-13 ||M||_F, or after 100 sweeps (throws).
 */
inline EigenDecomposition eigh(const Matrix &m) {
    if (!m.square()) {
        throw std::invalid_argument("eigh: matrix not square");
    }
    const double scale = std::max(frobenius_norm(m), 1e-300);
    if (hermiticity_error(m) > kHermitianInputTol * std::max(1.0, scale)) {
        throw std::invalid_argument("eigh: matrix not Hermitian");
    }
    const std::size_t d = m.rows();
    Matrix a = m;
    for (std::size_t i = 0; i < d; ++i) {
        a(i, i) = a(i, i).real();
    }
    Matrix v = Matrix::identity(d);
    const double target = kJacobiRelTol * scale;
    std::size_t sweep = 0;
    double off = detail::off_norm(a);
    while (off > target) {
        if (sweep == kJacobiMaxSweeps) {
            throw std::runtime_error("eigh: no convergence after 100 sweeps");
        }
        ++sweep;
        for (std::size_t p = 0; p + 1 < d; ++p) {
            for (std::size_t q = p + 1; q < d; ++q) {
                const cplx apq = a(p, q);
                const double mag = std::abs(apq);
                if (mag == 0.0) {
                    continue;
                }
                const cplx ph = apq / mag; // e^{i alpha}
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double th = (aqq - app) / (2.0 * mag);
                const double t = (th >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(th) + std::sqrt(th * th + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                // J restricted to (p, q): [[c, s], [-s e^{-ia}, c e^{-ia}]].
                // Columns of A J are updated; rows follow by Hermiticity.
                const cplx w = std::conj(ph);
                for (std::size_t k = 0; k < d; ++k) {
                    const cplx akp = a(k, p);
                    const cplx akq = detail::mul(w, a(k, q));
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < d; ++k) {
                    if (k != p && k != q) {
                        a(p, k) = std::conj(a(k, p));
                        a(q, k) = std::conj(a(k, q));
                    }
                }
                a(p, p) = app - t * mag;
                a(q, q) = aqq + t * mag;
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                for (std::size_t k = 0; k < d; ++k) {
                    const cplx vkp = v(k, p);
                    const cplx vkq = detail::mul(w, v(k, q));
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
        off = detail::off_norm(a);
    }

    std::vector<std::size_t> order(d);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) {
                         return a(i, i).real() < a(j, j).real();
                     });
    EigenDecomposition out;
    out.sweeps = sweep;
    out.values.resize(d);
    out.vectors = Matrix(d, d);
    for (std::size_t j = 0; j < d; ++j) {
        out.values[j] = a(order[j], order[j]).real();
        for (std::size_t r = 0; r < d; ++r) {
            out.vectors(r, j) = v(r, order[j]);
        }
    }
    return out;
}

/// V diag(f(E)) V^dagger
template <class F>
inline Matrix apply_spectral(const EigenDecomposition &e, F &&f) {
    const std::size_t d = e.values.size();
    Matrix left = e.vectors;
    for (std::size_t j = 0; j < d; ++j) {
        const cplx fj = f(e.values[j]);
        for (std::size_t r = 0; r < d; ++r) {
            left(r, j) *= fj;
        }
    }
    return left * e.vectors.adjoint();
}

/// exp(scale * M) for Hermitian M; scale is typically -i t or -beta.
inline Matrix expm_hermitian(const Matrix &m, cplx scale) {
    const auto e = eigh(m);
    return apply_spectral(e, [&](double x) { return std::exp(scale * x); });
}

/// exp(-beta (M - E_min)) / Z
inline DensityMatrix gibbs_oracle(const Matrix &m, double beta) {
    if (!(beta >= 0.0) || !std::isfinite(beta)) {
        throw std::invalid_argument("gibbs_oracle: beta must be >= 0");
    }
    const auto e = eigh(m);
    const double emin = e.values.front();
    double z = 0.0;
    for (double x : e.values) {
        z += std::exp(-beta * (x - emin));
    }
    Matrix rho = apply_spectral(
        e, [&](double x) { return cplx{std::exp(-beta * (x - emin)) / z}; });
    // Symmetrize away rounding so the Hermitian check is exact.
    Matrix sym = rho + rho.adjoint();
    sym *= 0.5;
    const std::size_t n = static_cast<std::size_t>(std::countr_zero(m.rows()));
    return {n, std::move(sym)};
}

/// (1/2) sum |eig(A - B)|
inline double trace_distance(const Matrix &a, const Matrix &b) {
    const auto e = eigh(a - b);
    double s = 0.0;
    for (double x : e.values) {
        s += std::abs(x);
    }
    return 0.5 * s;
}

inline double trace_distance(const DensityMatrix &a, const DensityMatrix &b) {
    return trace_distance(a.matrix(), b.matrix());
}

/// Smallest eigenvalue >= -tol.
inline bool is_positive_semidefinite(const DensityMatrix &rho,
                                     double tol = 1e-10) {
    return eigh(rho.matrix()).values.front() >= -tol;
}

/// max_j ||M v_j - e_j v_j||
inline double eigen_residual(const Matrix &m, const EigenDecomposition &e) {
    const std::size_t d = e.values.size();
    double worst = 0.0;
    for (std::size_t j = 0; j < d; ++j) {
        const auto col = e.vectors.column(j);
        auto mv = m * std::span<const cplx>(col);
        double s = 0.0;
        for (std::size_t r = 0; r < d; ++r) {
            s += std::norm(mv[r] - e.values[j] * col[r]);
        }
        worst = std::max(worst, std::sqrt(s));
    }
    return worst;
}

struct VerificationReport {
    double max_offdiag = 0.0;
    double spectral_error = 0.0;
    bool pass = false;
    ConventionChoice convention;
    ModelParams params;
};

/**
 * @brief Conjugate H through the circuit and compare with the free spectrum.
 *
 * max_offdiag is the largest |(U^dagger H U)_{ij}|, i != j. spectral_error
 * is the largest gap between the sorted real diagonal and the sorted
 * spectrum assembled from the mode table.
 */
inline VerificationReport verify_diagonalization(const Circuit &circuit,
                                                 const PauliSum &h,
                                                 const ModeTable &table,
                                                 double tol) {
    if (circuit.num_qubits() != h.num_qubits() ||
        static_cast<std::size_t>(table.n) != h.num_qubits()) {
        throw std::invalid_argument("verify_diagonalization: size mismatch");
    }
    if (h.num_qubits() > 10) {
        throw std::invalid_argument("verify_diagonalization: n > 10");
    }
    const Matrix u = unitary_of(circuit);
    const Matrix m = u.adjoint() * pauli_sum_to_matrix(h) * u;
    VerificationReport rep;
    rep.max_offdiag = max_offdiag(m);
    std::vector<double> diag(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        diag[i] = m(i, i).real();
    }
    std::sort(diag.begin(), diag.end());
    const auto spec = assemble_spectrum(table);
    for (std::size_t i = 0; i < diag.size(); ++i) {
        rep.spectral_error =
            std::max(rep.spectral_error, std::abs(diag[i] - spec[i]));
    }
    rep.pass = rep.max_offdiag <= tol && rep.spectral_error <= tol;
    return rep;
}

/**
 * @brief Orthonormal basis of the lowest eigenspace (eigenvalues within tol
 * of the minimum).
 */
inline std::vector<std::vector<cplx>> ground_space(const EigenDecomposition &e,
                                                   double tol = 1e-9) {
    std::vector<std::vector<cplx>> out;
    for (std::size_t j = 0; j < e.values.size(); ++j) {
        if (e.values[j] - e.values.front() <= tol) {
            out.push_back(e.vectors.column(j));
        }
    }
    return out;
}

} // namespace ffc
