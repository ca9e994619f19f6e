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
 * JSON and CSV forms of the library's values. JSON keys keep insertion
 * order so emitted documents are byte-stable.
 */
#pragma once

#include <cstdio>
#include <string>
#include <vector>

#include "json.hpp"

#include "builder.hpp"
#include "circuit.hpp"
#include "conventions.hpp"
#include "dynamics.hpp"
#include "gates.hpp"
#include "oracle.hpp"
#include "pauli.hpp"
#include "spectrum.hpp"

namespace ffc {

using json = nlohmann::ordered_json;

/// %.17g, enough digits to round-trip a double.
inline std::string fmt_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

inline json to_json(const ModelParams &p) {
    return json{{"n", p.n}, {"lambda", p.lambda}, {"gamma", p.gamma}};
}

inline ModelParams params_from_json(const json &j) {
    ModelParams p{j.at("n").get<int>(), j.at("lambda").get<double>(),
                  j.at("gamma").get<double>()};
    p.validate();
    return p;
}

inline json to_json(const ConventionChoice &c) {
    return json{{"bogoliubov_angle", to_string(c.angle)},
                {"boundary_sign", to_string(c.boundary)},
                {"occupation_sign", to_string(c.occupation)}};
}

inline ConventionChoice convention_from_json(const json &j) {
    return {angle_from_string(j.at("bogoliubov_angle").get<std::string>()),
            boundary_from_string(j.at("boundary_sign").get<std::string>()),
            occupation_from_string(j.at("occupation_sign").get<std::string>())};
}

inline json to_json(const PauliSum &h) {
    json terms = json::array();
    for (const auto &t : h.terms()) {
        terms.push_back(json{{"coeff", t.coeff}, {"ops", t.ops.ops()}});
    }
    return json{{"n", h.num_qubits()}, {"terms", terms}};
}

inline PauliSum pauli_sum_from_json(const json &j) {
    PauliSum h(j.at("n").get<std::size_t>());
    for (const auto &t : j.at("terms")) {
        h.add(t.at("coeff").get<double>(), t.at("ops").get<std::string>());
    }
    return h;
}

inline json params_json(const Gate &g) {
    json p = json::object();
    const auto &gp = g.params;
    if (gp.k) {
        p["k"] = *gp.k;
    }
    if (gp.n) {
        p["n"] = *gp.n;
    }
    if (gp.theta) {
        p["theta"] = *gp.theta;
    }
    if (gp.phi) {
        p["phi"] = *gp.phi;
    }
    if (gp.omega_t) {
        p["omega_t"] = *gp.omega_t;
    }
    if (gp.adjoint) {
        p["adjoint"] = true;
    }
    if (g.label == GateLabel::CUSTOM) {
        json e = json::array();
        for (const auto &v : g.entries.data()) {
            e.push_back(json::array({v.real(), v.imag()}));
        }
        p["entries"] = e;
    }
    return p;
}

inline json to_json(const CircuitOp &op) {
    return json{{"label", to_string(op.gate.label)},
                {"targets", op.targets},
                {"params", params_json(op.gate)}};
}

inline CircuitOp op_from_json(const json &j) {
    const auto label = label_from_string(j.at("label").get<std::string>());
    const auto targets = j.at("targets").get<std::vector<std::size_t>>();
    const json &pj = j.at("params");
    GateParams gp;
    if (pj.contains("k")) {
        gp.k = pj.at("k").get<int>();
    }
    if (pj.contains("n")) {
        gp.n = pj.at("n").get<int>();
    }
    if (pj.contains("theta")) {
        gp.theta = pj.at("theta").get<double>();
    }
    if (pj.contains("phi")) {
        gp.phi = pj.at("phi").get<double>();
    }
    if (pj.contains("omega_t")) {
        gp.omega_t = pj.at("omega_t").get<double>();
    }
    gp.adjoint = pj.value("adjoint", false);
    Matrix custom;
    if (label == GateLabel::CUSTOM) {
        const auto &e = pj.at("entries");
        const std::size_t d = targets.size() == 1 ? 2 : 4;
        if (e.size() != d * d) {
            throw std::invalid_argument("CUSTOM gate: wrong entry count");
        }
        custom = Matrix(d, d);
        for (std::size_t i = 0; i < d * d; ++i) {
            custom.data()[i] = {e[i].at(0).get<double>(),
                                e[i].at(1).get<double>()};
        }
    }
    return {rebuild(label, gp, targets.size(), custom), targets};
}

inline json to_json(const Circuit &c) {
    json ops = json::array();
    for (const auto &op : c.ops()) {
        ops.push_back(to_json(op));
    }
    return json{{"n", c.num_qubits()}, {"ops", ops}};
}

inline Circuit circuit_from_json(const json &j) {
    Circuit c(j.at("n").get<std::size_t>());
    for (const auto &o : j.at("ops")) {
        auto op = op_from_json(o);
        c.append(std::move(op.gate), std::move(op.targets));
    }
    return c;
}

inline json to_json(const CircuitStats &s) {
    json by = json::object();
    for (const auto &[k, v] : s.gates_by_label) {
        by[k] = v;
    }
    json cuts = json::object();
    for (std::size_t c = 1; c < s.cut_crossings.size(); ++c) {
        cuts[std::to_string(c)] = s.cut_crossings[c];
    }
    return json{{"total_gates", s.total_gates},
                {"two_qubit_gates", s.two_qubit_gates},
                {"gates_by_label", by},
                {"depth", s.depth},
                {"cut_crossings", cuts}};
}

inline json to_json(const VerificationReport &r) {
    return json{{"max_offdiag", r.max_offdiag},
                {"spectral_error", r.spectral_error},
                {"pass", r.pass},
                {"convention", to_json(r.convention)},
                {"params", to_json(r.params)}};
}

inline json to_json(const ResolutionReport &r) {
    json cands = json::array();
    for (const auto &c : r.candidates) {
        cands.push_back(json{{"convention", to_json(c.choice)},
                             {"max_offdiag", c.max_offdiag},
                             {"max_diag_error", c.max_diag_error},
                             {"residual", c.residual()}});
    }
    json surv = json::array();
    for (const auto &c : r.survivors) {
        surv.push_back(to_json(c));
    }
    return json{{"n", r.n},
                {"tol", r.tol},
                {"candidates", cands},
                {"survivors", surv}};
}

/// Header row plus one row per mode.
inline std::string mode_table_csv(const ModeTable &t) {
    std::string s = "k,theta_k,omega_k\n";
    for (const auto &m : t.modes) {
        s += std::to_string(m.k) + "," + fmt_double(m.theta) + "," +
             fmt_double(m.omega) + "\n";
    }
    return s;
}

inline std::string spectrum_csv(const std::vector<double> &e) {
    std::string s = "index,energy\n";
    for (std::size_t i = 0; i < e.size(); ++i) {
        s += std::to_string(i) + "," + fmt_double(e[i]) + "\n";
    }
    return s;
}

inline std::string scan_csv(const ScanResult &r) {
    std::string s = "lambda,observable,site_i,site_j,value\n";
    for (const auto &row : r.rows) {
        s += fmt_double(row.lambda) + "," + row.observable + "," +
             (row.site_i >= 0 ? std::to_string(row.site_i) : "") + "," +
             (row.site_j >= 0 ? std::to_string(row.site_j) : "") + "," +
             fmt_double(row.value) + "\n";
    }
    return s;
}

} // namespace ffc
