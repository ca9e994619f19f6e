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
 * Gate programs: construction, execution, inversion, dense unitary and
 * structural statistics.
 */
#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "gates.hpp"
#include "linalg.hpp"
#include "statevector.hpp"

namespace ffc {

struct CircuitOp {
    Gate gate;
    std::vector<std::size_t> targets;
};

/**
 * @brief Ordered list of gate applications; ops[0] acts first.
 */
class Circuit {
  public:
    Circuit() = default;
    explicit Circuit(std::size_t n) : n_{n} {}

    void append(Gate gate, std::vector<std::size_t> targets) {
        StateVector::check_targets(n_, gate.arity, targets);
        ops_.push_back({std::move(gate), std::move(targets)});
    }

    /// Append every op of another circuit on the same register.
    void extend(const Circuit &other) {
        if (other.n_ != n_) {
            throw std::invalid_argument("Circuit::extend: qubit count mismatch");
        }
        ops_.insert(ops_.end(), other.ops_.begin(), other.ops_.end());
    }

    [[nodiscard]] std::size_t num_qubits() const { return n_; }
    [[nodiscard]] const std::vector<CircuitOp> &ops() const { return ops_; }
    [[nodiscard]] std::size_t size() const { return ops_.size(); }
    [[nodiscard]] bool empty() const { return ops_.empty(); }

  private:
    std::size_t n_ = 0;
    std::vector<CircuitOp> ops_;
};

inline StateVector run(const Circuit &c, StateVector state) {
    if (state.num_qubits() != c.num_qubits()) {
        throw std::invalid_argument("run: qubit count mismatch");
    }
    for (const auto &op : c.ops()) {
        state.apply(op.gate, op.targets);
    }
    return state;
}

inline Circuit inverse(const Circuit &c) {
    Circuit out(c.num_qubits());
    for (auto it = c.ops().rbegin(); it != c.ops().rend(); ++it) {
        out.append(adjoint(it->gate), it->targets);
    }
    return out;
}

inline constexpr std::size_t kMaxUnitaryQubits = 12;

/**
 * @brief Dense unitary of the whole circuit, n <= 12.
 *
 * Each gate is embedded as a full operator and left-multiplied onto the
 * running product, row by row.
 */
inline Matrix unitary_of(const Circuit &c) {
    const std::size_t n = c.num_qubits();
    if (n > kMaxUnitaryQubits) {
        throw std::invalid_argument("unitary_of: n too large");
    }
    const std::size_t d = dim_of(n);
    Matrix u = Matrix::identity(d);
    Matrix next(d, d);
    for (const auto &op : c.ops()) {
        const std::size_t k = op.gate.arity;
        const std::size_t gd = op.gate.dim();
        std::size_t tmask = 0;
        for (auto q : op.targets) {
            tmask |= qubit_mask(n, q);
        }
        for (std::size_t r = 0; r < d; ++r) {
            // local row index of r on the targets, high bit first
            std::size_t lr = 0;
            for (std::size_t j = 0; j < k; ++j) {
                lr = (lr << 1) |
                     static_cast<std::size_t>(qubit_bit(n, r, op.targets[j]));
            }
            auto out = next.row(r);
            std::fill(out.begin(), out.end(), cplx{0.0, 0.0});
            for (std::size_t lc = 0; lc < gd; ++lc) {
                const cplx g = op.gate.entries(lr, lc);
                if (g == cplx{0.0, 0.0}) {
                    continue;
                }
                std::size_t src = r & ~tmask;
                for (std::size_t j = 0; j < k; ++j) {
                    if ((lc >> (k - 1 - j)) & 1U) {
                        src |= qubit_mask(n, op.targets[j]);
                    }
                }
                const auto in = u.row(src);
                for (std::size_t col = 0; col < d; ++col) {
                    out[col] += g * in[col];
                }
            }
        }
        std::swap(u, next);
    }
    return u;
}

struct CircuitStats {
    std::size_t total_gates = 0;
    std::size_t two_qubit_gates = 0;
    std::map<std::string, std::size_t> gates_by_label;
    std::size_t depth = 0;
    /// cut_crossings[c] for c = 1..n-1; index 0 unused.
    std::vector<std::size_t> cut_crossings;
};

/// Two-qubit gates with one target above and one below the cut between
/// qubit cut-1 and qubit cut.
inline std::size_t cut_crossings(const Circuit &c, std::size_t cut) {
    if (cut < 1 || cut >= c.num_qubits()) {
        throw std::invalid_argument("cut_crossings: cut out of range");
    }
    std::size_t count = 0;
    for (const auto &op : c.ops()) {
        if (op.targets.size() != 2) {
            continue;
        }
        const auto lo = std::min(op.targets[0], op.targets[1]);
        const auto hi = std::max(op.targets[0], op.targets[1]);
        if (lo < cut && hi >= cut) {
            ++count;
        }
    }
    return count;
}

/// Greedy layering on the as-built order.
inline std::size_t depth(const Circuit &c) {
    std::vector<std::size_t> busy(c.num_qubits(), 0);
    std::size_t d = 0;
    for (const auto &op : c.ops()) {
        std::size_t layer = 0;
        for (auto q : op.targets) {
            layer = std::max(layer, busy[q]);
        }
        for (auto q : op.targets) {
            busy[q] = layer + 1;
        }
        d = std::max(d, layer + 1);
    }
    return d;
}

inline CircuitStats stats(const Circuit &c) {
    CircuitStats s;
    s.total_gates = c.size();
    for (const auto &op : c.ops()) {
        ++s.gates_by_label[to_string(op.gate.label)];
        if (op.gate.arity == 2) {
            ++s.two_qubit_gates;
        }
    }
    s.depth = depth(c);
    s.cut_crossings.assign(c.num_qubits(), 0);
    for (std::size_t cut = 1; cut < c.num_qubits(); ++cut) {
        s.cut_crossings[cut] = cut_crossings(c, cut);
    }
    return s;
}

} // namespace ffc
