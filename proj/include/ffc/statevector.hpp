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
 * Dense state vectors, density matrices and the gate kernel.
 *
 * Qubit 0 is the most significant bit of the basis index: on 3 qubits,
 * |q0 q1 q2> = |1 0 0> is index 4.
 */
#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gates.hpp"
#include "linalg.hpp"

namespace ffc {

inline constexpr double kNormTol = 1e-12;

/// Bit mask of qubit q in an n-qubit index.
inline std::size_t qubit_mask(std::size_t n, std::size_t q) {
    return std::size_t{1} << (n - 1 - q);
}

/// Value of qubit q in basis index x.
inline int qubit_bit(std::size_t n, std::size_t x, std::size_t q) {
    return (x & qubit_mask(n, q)) != 0 ? 1 : 0;
}

/**
 * @brief Normalized amplitude vector over n qubits.
 */
class StateVector {
  public:
    StateVector() = default;

    /// |0...0>
    explicit StateVector(std::size_t n) : n_{n}, amps_(dim_of(n)) {
        check_n(n);
        amps_[0] = 1.0;
    }

    /// Takes ownership of amplitudes; length must be 2^n and norm 1.
    StateVector(std::size_t n, std::vector<cplx> amps)
        : n_{n}, amps_(std::move(amps)) {
        check_n(n);
        if (amps_.size() != dim_of(n)) {
            throw std::invalid_argument(
                "StateVector: amplitude count is not 2^n");
        }
        check_norm();
    }

    static StateVector basis(std::size_t n, std::size_t index) {
        StateVector s;
        check_n(n);
        if (index >= dim_of(n)) {
            throw std::out_of_range("StateVector::basis: index out of range");
        }
        s.n_ = n;
        s.amps_.assign(dim_of(n), 0.0);
        s.amps_[index] = 1.0;
        return s;
    }

    /// Haar-like random state from complex Gaussian amplitudes.
    static StateVector random(std::size_t n, std::uint64_t seed) {
        check_n(n);
        std::mt19937_64 rng(seed);
        std::normal_distribution<double> g(0.0, 1.0);
        std::vector<cplx> v(dim_of(n));
        for (auto &a : v) {
            const double re = g(rng);
            const double im = g(rng);
            a = {re, im};
        }
        const double nrm = norm2(v);
        for (auto &a : v) {
            a /= nrm;
        }
        return {n, std::move(v)};
    }

    /// Normalizes a nonzero vector.
    static StateVector normalized(std::size_t n, std::vector<cplx> amps) {
        const double nrm = norm2(amps);
        if (nrm == 0.0) {
            throw std::invalid_argument("StateVector: zero vector");
        }
        for (auto &a : amps) {
            a /= nrm;
        }
        return {n, std::move(amps)};
    }

    [[nodiscard]] std::size_t num_qubits() const { return n_; }
    [[nodiscard]] std::size_t size() const { return amps_.size(); }
    [[nodiscard]] std::span<const cplx> amplitudes() const { return amps_; }
    [[nodiscard]] std::span<cplx> amplitudes_mut() { return amps_; }
    [[nodiscard]] const cplx &operator[](std::size_t i) const {
        return amps_[i];
    }

    [[nodiscard]] double norm() const { return norm2(amps_); }

    void check_norm() const {
        if (std::abs(norm2(amps_) * norm2(amps_) - 1.0) > kNormTol) {
            throw std::invalid_argument("StateVector: norm is not 1");
        }
    }

    /**
     * @brief Apply a 1- or 2-qubit gate in place.
     * @param targets Ordered targets; targets[0] is the high bit of the
     * gate's local index.
     */
    void apply(const Gate &gate, std::span<const std::size_t> targets) {
        check_targets(n_, gate.arity, targets);
        if (gate.arity == 1) {
            apply1(gate.entries, targets[0]);
        } else {
            apply2(gate.entries, targets[0], targets[1]);
        }
    }

    static void check_n(std::size_t n) {
        if (n < 1 || n > 30) {
            throw std::invalid_argument("StateVector: n must be in [1, 30]");
        }
    }

    static void check_targets(std::size_t n, std::size_t arity,
                              std::span<const std::size_t> targets) {
        if (targets.size() != arity) {
            throw std::invalid_argument("apply_gate: arity mismatch");
        }
        for (std::size_t i = 0; i < targets.size(); ++i) {
            if (targets[i] >= n) {
                throw std::out_of_range("apply_gate: target out of range");
            }
            for (std::size_t j = 0; j < i; ++j) {
                if (targets[i] == targets[j]) {
                    throw std::invalid_argument("apply_gate: duplicate target");
                }
            }
        }
    }

  private:
    void apply1(const Matrix &m, std::size_t q) {
        const std::size_t mq = qubit_mask(n_, q);
        const cplx m00 = m(0, 0), m01 = m(0, 1), m10 = m(1, 0), m11 = m(1, 1);
        for (std::size_t i = 0; i < amps_.size(); ++i) {
            if ((i & mq) != 0) {
                continue;
            }
            const cplx a0 = amps_[i];
            const cplx a1 = amps_[i | mq];
            amps_[i] = m00 * a0 + m01 * a1;
            amps_[i | mq] = m10 * a0 + m11 * a1;
        }
    }

    void apply2(const Matrix &m, std::size_t qa, std::size_t qb) {
        const std::size_t ma = qubit_mask(n_, qa);
        const std::size_t mb = qubit_mask(n_, qb);
        std::array<std::size_t, 4> idx{};
        std::array<cplx, 4> in{};
        for (std::size_t i = 0; i < amps_.size(); ++i) {
            if ((i & (ma | mb)) != 0) {
                continue;
            }
            idx = {i, i | mb, i | ma, i | ma | mb};
            for (std::size_t r = 0; r < 4; ++r) {
                in[r] = amps_[idx[r]];
            }
            for (std::size_t r = 0; r < 4; ++r) {
                const auto row = m.row(r);
                amps_[idx[r]] = row[0] * in[0] + row[1] * in[1] +
                                row[2] * in[2] + row[3] * in[3];
            }
        }
    }

    std::size_t n_ = 0;
    std::vector<cplx> amps_;
};

/// Functional form of StateVector::apply.
inline StateVector apply_gate(StateVector state, const Gate &gate,
                              std::span<const std::size_t> targets) {
    state.apply(gate, targets);
    return state;
}

inline StateVector apply_gate(StateVector state, const Gate &gate,
                              std::initializer_list<std::size_t> targets) {
    state.apply(gate, std::span<const std::size_t>(targets.begin(),
                                                   targets.size()));
    return state;
}

/// |<a|b>|^2
inline double fidelity(const StateVector &a, const StateVector &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("fidelity: qubit count mismatch");
    }
    return std::norm(inner(a.amplitudes(), b.amplitudes()));
}

inline constexpr double kDensityTol = 1e-12;

/**
 * @brief Dense density matrix. Construction checks hermiticity and unit
 * trace; positivity is checked by the oracle (it needs an eigensolver).
 */
class DensityMatrix {
  public:
    DensityMatrix() = default;

    DensityMatrix(std::size_t n, Matrix rho) : n_{n}, rho_(std::move(rho)) {
        if (rho_.rows() != dim_of(n) || !rho_.square()) {
            throw std::invalid_argument("DensityMatrix: side is not 2^n");
        }
        if (hermiticity_error(rho_) > kDensityTol) {
            throw std::invalid_argument("DensityMatrix: not Hermitian");
        }
        if (std::abs(rho_.trace() - 1.0) > kDensityTol) {
            throw std::invalid_argument("DensityMatrix: trace is not 1");
        }
    }

    static DensityMatrix pure(const StateVector &s) {
        const auto a = s.amplitudes();
        Matrix m(a.size(), a.size());
        for (std::size_t r = 0; r < a.size(); ++r) {
            for (std::size_t c = 0; c < a.size(); ++c) {
                m(r, c) = a[r] * std::conj(a[c]);
            }
        }
        return {s.num_qubits(), std::move(m)};
    }

    static DensityMatrix maximally_mixed(std::size_t n) {
        auto m = Matrix::identity(dim_of(n));
        m *= 1.0 / static_cast<double>(dim_of(n));
        return {n, std::move(m)};
    }

    [[nodiscard]] std::size_t num_qubits() const { return n_; }
    [[nodiscard]] const Matrix &matrix() const { return rho_; }

  private:
    std::size_t n_ = 0;
    Matrix rho_;
};

} // namespace ffc
