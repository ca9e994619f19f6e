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
 * @file ffc_cli.cpp
 * Command-line front end: build, verify, spectrum, scan, evolve, gibbs,
 * resolve.
 */
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ffc/ffc.hpp"

using namespace ffc;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

/// Thrown for anything the user got wrong on the command line.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown when a check (verification, oracle comparison, sidecar) fails.
struct CheckFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string subcommand;
    int n = 4;
    double lambda = 0.5;
    double gamma = 1.0;
    double t = 1.0;
    double beta = 1.0;
    double lambda_from = 0.0;
    double lambda_to = 2.0;
    int steps = 41;
    std::string observable = "xx,z";
    double tol = 1e-10;
    bool tol_given = false;
    std::uint64_t seed = 0;
    std::string out;
    std::string format;
    std::string conventions = "ffc_conventions.json";
    bool reresolve = false;
    bool ising4 = false;
    bool check_oracle = false;
    std::string many_body;
};

/// Oracle comparisons for evolve and gibbs default to a looser bound than
/// the conjugation check.
constexpr double kOracleTol = 1e-8;

void validate(const RunConfig &cfg) {
    if (cfg.n < 2 || !is_power_of_two(cfg.n)) {
        throw UsageError("n must be a power of two");
    }
    if (cfg.steps < 1) {
        throw UsageError("steps must be >= 1");
    }
    if (!(cfg.tol > 0.0)) {
        throw UsageError("tol must be > 0");
    }
    if (!(cfg.beta >= 0.0)) {
        throw UsageError("beta must be >= 0");
    }
}

ModelParams params_of(const RunConfig &cfg) {
    return {cfg.n, cfg.lambda, cfg.gamma};
}

void emit(const RunConfig &cfg, const std::string &text) {
    if (cfg.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) {
        throw UsageError("cannot write " + cfg.out);
    }
    f << text;
}

std::string dump(const json &j) { return j.dump(2) + "\n"; }

json resolve_and_store(const RunConfig &cfg) {
    const auto rep = resolve_conventions(4);
    json doc{{"convention", to_json(rep.resolved())},
             {"resolution", to_json(rep)}};
    std::ofstream f(cfg.conventions, std::ios::binary);
    if (!f) {
        throw UsageError("cannot write " + cfg.conventions);
    }
    f << dump(doc);
    return doc;
}

/// Reads the sidecar, creating it on first use.
ConventionChoice load_convention(const RunConfig &cfg) {
    if (cfg.reresolve || !std::filesystem::exists(cfg.conventions)) {
        return convention_from_json(resolve_and_store(cfg).at("convention"));
    }
    std::ifstream f(cfg.conventions);
    try {
        return convention_from_json(json::parse(f).at("convention"));
    } catch (const std::exception &e) {
        throw CheckFailure("unreadable convention file " + cfg.conventions +
                           ": " + e.what() + " (rerun with --reresolve)");
    }
}

std::string format_or(const RunConfig &cfg, const std::string &fallback,
                      std::initializer_list<const char *> allowed) {
    const std::string f = cfg.format.empty() ? fallback : cfg.format;
    for (const char *a : allowed) {
        if (f == a) {
            return f;
        }
    }
    throw UsageError("--format " + f + " is not supported by " +
                     cfg.subcommand);
}

int cmd_build(const RunConfig &cfg) {
    format_or(cfg, "json", {"json"});
    const auto conv = load_convention(cfg);
    if (cfg.ising4 && cfg.n != 4) {
        throw UsageError("--ising4 requires n = 4");
    }
    const auto d = cfg.ising4 ? build_ising4(cfg.lambda, conv)
                              : build_disentangler(params_of(cfg), conv);
    json doc{{"params", to_json(d.params)},
             {"convention", to_json(conv)},
             {"labeling", d.labeling.mapping},
             {"circuit", to_json(d.circuit)},
             {"stats", to_json(stats(d.circuit))}};
    emit(cfg, dump(doc));
    return 0;
}

int cmd_verify(const RunConfig &cfg) {
    format_or(cfg, "json", {"json"});
    if (cfg.n > 10) {
        throw UsageError("verify supports n <= 10");
    }
    const auto conv = load_convention(cfg);
    const auto p = params_of(cfg);
    const auto d = build_disentangler(p, conv);
    const auto rep = verify_diagonalization(
        d.circuit, build_xy_hamiltonian(p), d.modes, cfg.tol);
    emit(cfg, dump(to_json(rep)));
    if (!rep.pass) {
        std::cerr << "verification failed: max_offdiag=" << rep.max_offdiag
                  << " spectral_error=" << rep.spectral_error
                  << " tol=" << cfg.tol << "\n";
        return kExitFail;
    }
    return 0;
}

int cmd_spectrum(const RunConfig &cfg) {
    const auto fmt = format_or(cfg, "csv", {"csv", "json"});
    load_convention(cfg);
    const auto p = params_of(cfg);
    const auto table = mode_table(p);
    if (fmt == "csv") {
        emit(cfg, mode_table_csv(table));
    } else {
        json modes = json::array();
        for (const auto &m : table.modes) {
            modes.push_back({{"k", m.k}, {"theta_k", m.theta},
                             {"omega_k", m.omega}});
        }
        emit(cfg, dump(json{{"params", to_json(p)},
                            {"e0", table.e0},
                            {"modes", modes}}));
    }
    if (!cfg.many_body.empty()) {
        std::ofstream f(cfg.many_body, std::ios::binary);
        if (!f) {
            throw UsageError("cannot write " + cfg.many_body);
        }
        f << spectrum_csv(many_body_spectrum(p));
    }
    return 0;
}

std::vector<std::string> split_commas(const std::string &s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) {
            out.push_back(item);
        }
    }
    return out;
}

int cmd_scan(const RunConfig &cfg) {
    const auto fmt = format_or(cfg, "csv", {"csv", "json"});
    const auto fams = split_commas(cfg.observable);
    if (fams.empty()) {
        throw UsageError("--observable is empty");
    }
    for (const auto &f : fams) {
        try {
            expand_observable(f, cfg.n);
        } catch (const std::invalid_argument &e) {
            throw UsageError(e.what());
        }
    }
    const auto conv = load_convention(cfg);
    const auto res =
        scan_correlators(params_of(cfg),
                         linspace(cfg.lambda_from, cfg.lambda_to, cfg.steps),
                         fams, conv);
    if (fmt == "csv") {
        emit(cfg, scan_csv(res));
    } else {
        json rows = json::array();
        for (const auto &r : res.rows) {
            rows.push_back({{"lambda", r.lambda},
                            {"observable", r.observable},
                            {"site_i", r.site_i},
                            {"site_j", r.site_j},
                            {"value", r.value}});
        }
        emit(cfg, dump(json{{"convention", to_json(conv)}, {"rows", rows}}));
    }
    return 0;
}

int cmd_evolve(const RunConfig &cfg) {
    const auto fmt = format_or(cfg, "csv", {"csv", "json"});
    const auto conv = load_convention(cfg);
    const auto p = params_of(cfg);
    const auto d = build_disentangler(p, conv);
    const auto s0 = StateVector::random(static_cast<std::size_t>(cfg.n),
                                        cfg.seed);
    const auto s = evolve(s0, d, cfg.t);
    if (fmt == "csv") {
        std::string text = "index,re,im\n";
        for (std::size_t i = 0; i < s.size(); ++i) {
            text += std::to_string(i) + "," + fmt_double(s[i].real()) + "," +
                    fmt_double(s[i].imag()) + "\n";
        }
        emit(cfg, text);
    } else {
        json amps = json::array();
        for (const auto &a : s.amplitudes()) {
            amps.push_back(json::array({a.real(), a.imag()}));
        }
        emit(cfg, dump(json{{"params", to_json(p)},
                            {"t", cfg.t},
                            {"seed", cfg.seed},
                            {"gate_count", evolution_circuit(d, cfg.t).size()},
                            {"amplitudes", amps}}));
    }
    if (cfg.check_oracle) {
        if (static_cast<std::size_t>(cfg.n) > kMaxDenseQubits) {
            throw UsageError("--check-oracle supports n <= 14");
        }
        const auto u = expm_hermitian(
            pauli_sum_to_matrix(build_xy_hamiltonian(p)), cplx{0.0, -cfg.t});
        const double dev = distance(s.amplitudes(), u * s0.amplitudes());
        const double tol = cfg.tol_given ? cfg.tol : kOracleTol;
        std::cerr << "max_deviation " << fmt_double(dev) << "\n";
        if (dev > tol) {
            throw CheckFailure("oracle deviation exceeds " + fmt_double(tol));
        }
    }
    return 0;
}

int cmd_gibbs(const RunConfig &cfg) {
    const auto fmt = format_or(cfg, "csv", {"csv", "json"});
    if (cfg.n > kMaxGibbsQubits) {
        throw UsageError("gibbs supports n <= 10");
    }
    const auto conv = load_convention(cfg);
    const auto p = params_of(cfg);
    const auto rho = gibbs_state(p, conv, cfg.beta);
    ScanResult res;
    for (const char *fam : {"xx", "z"}) {
        for (const auto &o : expand_observable(fam, cfg.n)) {
            res.rows.push_back({cfg.lambda, o.family, o.site_i, o.site_j,
                                expectation_mixed(rho, as_sum(o.ops))});
        }
    }
    if (fmt == "csv") {
        emit(cfg, scan_csv(res));
    } else {
        json rows = json::array();
        for (const auto &r : res.rows) {
            rows.push_back({{"observable", r.observable},
                            {"site_i", r.site_i},
                            {"site_j", r.site_j},
                            {"value", r.value}});
        }
        emit(cfg, dump(json{{"params", to_json(p)},
                            {"beta", cfg.beta},
                            {"rows", rows}}));
    }
    if (cfg.check_oracle) {
        const double dist = trace_distance(
            rho, gibbs_oracle(pauli_sum_to_matrix(build_xy_hamiltonian(p)),
                              cfg.beta));
        const double tol = cfg.tol_given ? cfg.tol : kOracleTol;
        std::cerr << "trace_distance " << fmt_double(dist) << "\n";
        if (dist > tol) {
            throw CheckFailure("oracle trace distance exceeds " +
                               fmt_double(tol));
        }
    }
    return 0;
}

int cmd_resolve(const RunConfig &cfg) {
    format_or(cfg, "json", {"json"});
    const auto doc = resolve_and_store(cfg);
    emit(cfg, dump(doc));
    return 0;
}

void add_model_flags(CLI::App *sub, RunConfig &cfg) {
    sub->add_option("--n", cfg.n, "number of sites (power of two)");
    sub->add_option("--lambda", cfg.lambda, "transverse field");
    sub->add_option("--gamma", cfg.gamma, "anisotropy");
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Free-fermion disentangling circuits for the XY chain"};
    app.require_subcommand(1);
    // Global flags may also follow the subcommand; subcommands inherit this
    // setting when they are created.
    app.fallthrough();
    RunConfig cfg;

    app.add_option("--conventions", cfg.conventions,
                   "convention sidecar file")
        ->capture_default_str();
    app.add_flag("--reresolve", cfg.reresolve,
                 "redo convention resolution and rewrite the sidecar");
    app.add_option("--out", cfg.out, "write output here instead of stdout");
    app.add_option("--format", cfg.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--seed", cfg.seed, "RNG seed");
    auto *tol = app.add_option("--tol", cfg.tol, "tolerance");

    auto *build = app.add_subcommand("build", "emit the disentangling circuit");
    add_model_flags(build, cfg);
    build->add_flag("--ising4", cfg.ising4, "six-gate n = 4 Ising circuit");

    auto *verify = app.add_subcommand("verify", "check U^dagger H U");
    add_model_flags(verify, cfg);

    auto *spectrum = app.add_subcommand("spectrum", "mode table");
    add_model_flags(spectrum, cfg);
    spectrum->add_option("--many-body", cfg.many_body,
                         "also write the sorted many-body spectrum here");

    auto *scan = app.add_subcommand("scan", "ground-state correlator scan");
    add_model_flags(scan, cfg);
    scan->add_option("--lambda-from", cfg.lambda_from);
    scan->add_option("--lambda-to", cfg.lambda_to);
    scan->add_option("--steps", cfg.steps);
    scan->add_option("--observable", cfg.observable,
                     "comma list of xx, z, x, xxx, xxxx");

    auto *evolve_cmd = app.add_subcommand("evolve", "time-evolve a random state");
    add_model_flags(evolve_cmd, cfg);
    evolve_cmd->add_option("--t", cfg.t, "evolution time");
    evolve_cmd->add_flag("--check-oracle", cfg.check_oracle,
                         "compare with dense expm");

    auto *gibbs = app.add_subcommand("gibbs", "thermal-state observables");
    add_model_flags(gibbs, cfg);
    gibbs->add_option("--beta", cfg.beta, "inverse temperature");
    gibbs->add_flag("--check-oracle", cfg.check_oracle,
                    "compare with the dense Gibbs state");

    app.add_subcommand("resolve", "resolve conventions and write the sidecar");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUsage;
    }
    cfg.subcommand = app.get_subcommands().front()->get_name();
    cfg.tol_given = tol->count() > 0;

    try {
        validate(cfg);
        if (cfg.subcommand == "build") {
            return cmd_build(cfg);
        }
        if (cfg.subcommand == "verify") {
            return cmd_verify(cfg);
        }
        if (cfg.subcommand == "spectrum") {
            return cmd_spectrum(cfg);
        }
        if (cfg.subcommand == "scan") {
            return cmd_scan(cfg);
        }
        if (cfg.subcommand == "evolve") {
            return cmd_evolve(cfg);
        }
        if (cfg.subcommand == "gibbs") {
            return cmd_gibbs(cfg);
        }
        return cmd_resolve(cfg);
    } catch (const UsageError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const CheckFailure &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
}
