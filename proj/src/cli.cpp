// Copyright 2026 The sparsepqc Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "sparsepqc/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "sparsepqc/circuit_ir.hpp"
#include "sparsepqc/gate_matrix.hpp"
#include "sparsepqc/hamiltonian.hpp"
#include "sparsepqc/io.hpp"
#include "sparsepqc/verify.hpp"

namespace sparsepqc::cli {

namespace {

using io::json;

/// Bad input files and flag values that CLI11 cannot catch.
class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A check that ran and exceeded its tolerance.
class CheckFailed : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw UsageError("cannot read '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json read_json(const std::string &path) {
    const std::string text = read_file(path);
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        throw UsageError(path + ": " + e.what());
    }
}

void write_output(const std::string &path, const std::string &text,
                  std::ostream &out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f || !(f << text)) {
        throw UsageError("cannot write '" + path + "'");
    }
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << v;
    return os.str();
}

} // namespace

GateChoice parse_gate_spec(std::string_view spec) {
    const auto colon = spec.find(':');
    const auto head = spec.substr(0, colon);
    if (colon == std::string_view::npos) {
        try {
            return {OneQubitGate::named(head), std::nullopt};
        } catch (const ValidationError &) {
            throw UsageError("unknown gate '" + std::string(spec) + "'");
        }
    }
    const auto arg = spec.substr(colon + 1);
    if (head == "rx" || head == "ry" || head == "rz") {
        const auto theta = parse_angle_literal(arg);
        if (!theta) {
            throw UsageError("bad angle in gate spec '" + std::string(spec) +
                             "'");
        }
        const Axis axis = parse_axis(head.substr(1));
        return {rotation_gate(axis, *theta), RotationLabel{axis, *theta}};
    }
    if (head == "u") {
        std::vector<Amplitude> e;
        std::size_t pos = 0;
        while (pos <= arg.size()) {
            const auto semi = arg.find(';', pos);
            const auto tok = arg.substr(
                pos, semi == std::string_view::npos ? std::string_view::npos
                                                    : semi - pos);
            const auto a = parse_complex_literal(tok);
            if (!a) {
                throw UsageError("bad matrix entry '" + std::string(tok) +
                                 "'");
            }
            e.push_back(*a);
            pos = semi == std::string_view::npos ? arg.size() + 1 : semi + 1;
        }
        if (e.size() != 4) {
            throw UsageError("u: needs 4 entries separated by ';'");
        }
        return {OneQubitGate(e[0], e[1], e[2], e[3]), std::nullopt};
    }
    throw UsageError("unknown gate '" + std::string(spec) + "'");
}

double resolve_tolerance(std::optional<double> flag, const char *env) {
    if (flag) {
        if (!(*flag > 0.0)) {
            throw UsageError("--tol must be positive");
        }
        return *flag;
    }
    if (env != nullptr && *env != '\0') {
        char *end = nullptr;
        const double v = std::strtod(env, &end);
        if (end == env || *end != '\0' || !(v > 0.0)) {
            throw UsageError(std::string("bad QSIM_TOL value '") + env + "'");
        }
        return v;
    }
    return kDefaultTol;
}

namespace {

struct GateFlags {
    int n = 0;
    std::optional<int> i;
    int j = 0;
    std::string gate;

    void add_to(CLI::App *cmd, bool required) {
        auto *on = cmd->add_option("-n,--qubits", n, "Number of qubits");
        auto *oj = cmd->add_option("-j,--target", j, "Target qubit (1-based)");
        cmd->add_option("-i,--control", i,
                        "Control qubit; omit for a single-qubit gate");
        auto *og = cmd->add_option("--gate", gate,
                                   "x|y|z|h|s|t|i, rx:THETA, u:E11;E12;E21;E22");
        if (required) {
            on->required();
            oj->required();
            og->required();
        }
    }

    [[nodiscard]] GateDescription description(const OneQubitGate &u) const {
        if (i) {
            ControlledGateSpec spec{n, *i, j, u};
            spec.validate();
            return spec;
        }
        SingleQubitSpec spec{n, j, u};
        spec.validate();
        return spec;
    }

    void put(json &doc, const OneQubitGate &u) const {
        doc["n"] = n;
        if (i) {
            doc["i"] = *i;
        }
        doc["j"] = j;
        doc["gate"] = io::to_json(u);
    }
};

struct BindFlags {
    std::string params;
    std::vector<std::string> set;
    std::string fill;

    void add_to(CLI::App *cmd) {
        cmd->add_option("--params", params, "JSON object of parameter values");
        cmd->add_option("--set", set, "NAME=VALUE, repeatable");
        cmd->add_option("--fill", fill,
                        "Value for every parameter not otherwise set");
    }

    [[nodiscard]] Circuit bind_template(const CircuitTemplate &t) const {
        ParamTable table;
        if (!params.empty()) {
            table = io::params_from_json(read_json(params));
        }
        for (const auto &kv : set) {
            const auto eq = kv.find('=');
            const auto v = eq == std::string::npos
                               ? std::nullopt
                               : parse_angle_literal(kv.substr(eq + 1));
            if (!v || eq == 0) {
                throw UsageError("--set expects NAME=VALUE, got '" + kv + "'");
            }
            auto name = kv.substr(0, eq);
            if (!name.empty() && name[0] == '$') {
                name.erase(0, 1);
            }
            table[name] = *v;
        }
        if (!fill.empty()) {
            const auto v = parse_angle_literal(fill);
            if (!v) {
                throw UsageError("bad --fill value '" + fill + "'");
            }
            for (const auto &name : t.parameters()) {
                table.try_emplace(name, *v);
            }
        }
        return sparsepqc::bind(t, table);
    }
};

CircuitTemplate load_template(const std::string &path) {
    return parse_circuit(read_file(path));
}

void require_dense(int n, const char *what) {
    if (n > kDenseOracleCap) {
        throw UsageError(std::string(what) + " needs n <= " +
                         std::to_string(kDenseOracleCap));
    }
}

// ---------------------------------------------------------------------------
// Commands

int cmd_build_gate(const GateFlags &g, bool dense, const std::string &output,
                   std::ostream &out) {
    const auto choice = parse_gate_spec(g.gate);
    const auto desc = g.description(choice.u);
    const SparseUnitary s = build_sparse(desc);
    json doc = io::document("sparse_unitary", io::to_json(s));
    g.put(doc, choice.u);
    if (dense) {
        require_dense(g.n, "--dense");
        doc["dense"] = io::to_json(s.to_dense());
    }
    write_output(output, doc.dump() + "\n", out);
    return kOk;
}

int cmd_hamiltonian(const GateFlags &g, const std::string &circuit_path,
                    const BindFlags &binds, bool check, double tol,
                    const std::string &output, std::ostream &out,
                    std::ostream &err) {
    json doc;
    double error = 0.0;
    if (!circuit_path.empty()) {
        if (!g.gate.empty()) {
            throw UsageError("give either --gate or --circuit, not both");
        }
        const Circuit c = binds.bind_template(load_template(circuit_path));
        const auto groups = circuit_hamiltonians(c);
        json arr = json::array();
        for (const auto &grp : groups) {
            arr.push_back(io::to_json(grp));
        }
        doc = io::document("circuit_hamiltonian", {{"n", c.n}});
        doc["groups"] = std::move(arr);
        if (check) {
            require_dense(c.n, "--check");
            error = frobenius_error(circuit_dense_unitary(c),
                                    reconstruct_unitary(groups, c.n));
        }
    } else {
        if (g.gate.empty() || g.n == 0 || g.j == 0) {
            throw UsageError("hamiltonian needs -n, -j and --gate, or "
                             "--circuit");
        }
        const auto choice = parse_gate_spec(g.gate);
        const auto desc = g.description(choice.u);
        const LocalHamiltonian h =
            g.i ? hamiltonian_cu(std::get<ControlledGateSpec>(desc))
                : hamiltonian_sj(g.n, g.j, eigenpairs_2x2(choice.u));
        doc = io::document("local_hamiltonian", io::to_json(h));
        g.put(doc, choice.u);
        if (check) {
            require_dense(g.n, "--check");
            error = frobenius_error(build_sparse(desc).to_dense(),
                                    exp_minus_iH(h));
        }
    }
    if (check) {
        doc["check"] = {{"frobenius_error", error},
                        {"tolerance", tol},
                        {"pass", error <= tol}};
    }
    write_output(output, doc.dump() + "\n", out);
    if (check) {
        err << "reconstruction error " << fmt(error) << " (tol " << fmt(tol)
            << ")\n";
        if (!(error <= tol)) {
            throw CheckFailed("reconstruction error above tolerance");
        }
    }
    return kOk;
}

StateVector make_input(const std::string &spec, int n) {
    if (spec.empty() || spec == "zero") {
        return StateVector(n);
    }
    if (spec == "uniform") {
        return StateVector::uniform(n);
    }
    if (spec.rfind("basis:", 0) == 0) {
        const auto k = spec.substr(6);
        char *end = nullptr;
        const auto v = std::strtoull(k.c_str(), &end, 10);
        if (k.empty() || *end != '\0') {
            throw UsageError("bad basis index '" + k + "'");
        }
        return StateVector::basis(n, v);
    }
    StateVector s = io::state_from_json(read_json(spec));
    if (s.num_qubits() != n) {
        throw ValidationError("input state has " +
                              std::to_string(s.num_qubits()) +
                              " qubits, circuit has " + std::to_string(n));
    }
    return s;
}

int cmd_run(const std::string &path, const BindFlags &binds,
            const std::string &input, bool amplitudes, bool oracle,
            const std::string &format, double tol, const std::string &output,
            std::ostream &out, std::ostream &err) {
    const Circuit c = binds.bind_template(load_template(path));
    const StateVector psi0 = make_input(input, c.n);
    const StateVector psi = run_circuit(c, psi0);
    const auto p = probabilities(psi);

    std::string text;
    if (format == "json") {
        json doc = amplitudes
                       ? io::document("state", {{"n", c.n}})
                       : io::document("probabilities", {{"n", c.n}});
        if (amplitudes) {
            doc["amplitudes"] = io::state_to_json(psi);
        } else {
            doc["probabilities"] = p;
        }
        text = doc.dump() + "\n";
    } else {
        text = amplitudes ? io::amplitudes_csv(psi) : io::probabilities_csv(p);
    }
    write_output(output, text, out);

    if (oracle) {
        require_dense(c.n, "--oracle");
        std::vector<Amplitude> ref = psi0.amplitudes();
        for (const auto &op : c.ops) {
            ref = dense_apply_oracle(dense_kron_oracle(op.description(c.n)),
                                     ref);
        }
        double dev = 0.0;
        for (std::size_t k = 0; k < ref.size(); ++k) {
            dev = std::max(dev, std::abs(ref[k] - psi[k]));
        }
        double total = 0.0;
        for (const double v : p) {
            total += v;
        }
        const double sum_err = std::abs(total - 1.0);
        err << "oracle max deviation " << fmt(dev) << ", probability sum error "
            << fmt(sum_err) << " (tol " << fmt(tol) << ")\n";
        if (!(dev <= tol) || !(sum_err <= tol)) {
            throw CheckFailed("oracle deviation above tolerance");
        }
    }
    return kOk;
}

struct VerifyFlags {
    std::string suite = "all";
    int n = 4;
    int circuits = 200;
    int max_gates = 20;
    std::uint64_t seed = 42;
    std::string out_dir = "sweeps";
    int points = 100;
    std::string method = "jacobi";
};

int cmd_verify(const VerifyFlags &f, double tol, std::ostream &out) {
    static const std::vector<std::string> suites = {"crx", "cry", "crz",
                                                    "strings", "engine", "all"};
    if (std::find(suites.begin(), suites.end(), f.suite) == suites.end()) {
        throw UsageError("unknown suite '" + f.suite + "'");
    }
    if (f.method != "jacobi" && f.method != "projector") {
        throw UsageError("--method must be jacobi or projector");
    }
    check_register(f.n);
    if (f.points < 1 || f.circuits < 1 || f.max_gates < 1) {
        throw UsageError("--points, --circuits and --max-gates must be >= 1");
    }
    const ExpMethod method =
        f.method == "jacobi" ? ExpMethod::Jacobi : ExpMethod::Projector;
    std::filesystem::create_directories(f.out_dir);
    const auto grid = theta_grid(static_cast<std::size_t>(f.points));
    std::vector<std::string> failed;
    int ran = 0;

    const auto report = [&](const ErrorSweep &s, double limit) {
        write_output((std::filesystem::path(f.out_dir) / (s.label + ".csv"))
                         .string(),
                     io::sweep_csv(s), out);
        const double m = s.max_error();
        const bool ok = m <= limit;
        out << (ok ? "PASS " : "FAIL ") << s.label << " max_error=" << fmt(m)
            << '\n';
        ++ran;
        if (!ok) {
            failed.push_back(s.label);
        }
    };

    const auto want = [&](const char *name) {
        return f.suite == name || f.suite == "all";
    };
    const std::pair<const char *, Axis> families[] = {
        {"crx", Axis::X}, {"cry", Axis::Y}, {"crz", Axis::Z}};
    for (const auto &[name, axis] : families) {
        if (!want(name)) {
            continue;
        }
        if (f.n < 2) {
            throw UsageError("controlled sweeps need -n >= 2");
        }
        require_dense(f.n, "verify");
        for (int i = 1; i <= f.n; ++i) {
            for (int j = 1; j <= f.n; ++j) {
                if (i != j) {
                    report(gate_hamiltonian_sweep(f.n, i, j, axis, grid, method),
                           tol);
                }
            }
        }
    }
    if (want("strings")) {
        require_dense(f.n, "verify");
        for (const Axis axis : {Axis::X, Axis::Y, Axis::Z}) {
            report(string_hamiltonian_sweep(f.n, axis, grid, method), tol);
        }
    }
    if (want("engine")) {
        require_dense(f.n, "verify");
        // Amplitude deviations accumulate over up to max_gates products.
        const double limit = 10.0 * tol;
        const auto rep =
            engine_equivalence(f.circuits, 1, f.n, f.max_gates, f.seed);
        std::ostringstream csv;
        csv << "circuit,n,gates,deviation\n";
        for (std::size_t k = 0; k < rep.cases.size(); ++k) {
            csv << k << ',' << rep.cases[k].n << ',' << rep.cases[k].gates
                << ',' << format_real(rep.cases[k].deviation) << '\n';
        }
        const std::string label = "engine_n" + std::to_string(f.n) + "_seed" +
                                  std::to_string(f.seed);
        write_output((std::filesystem::path(f.out_dir) / (label + ".csv"))
                         .string(),
                     csv.str(), out);
        const bool ok = rep.max_deviation <= limit;
        out << (ok ? "PASS " : "FAIL ") << label
            << " max_deviation=" << fmt(rep.max_deviation)
            << " circuits=" << rep.cases.size() << '\n';
        ++ran;
        if (!ok) {
            failed.push_back(label);
        }
    }
    out << "verify: " << ran << " checks, " << failed.size() << " failed";
    if (!failed.empty()) {
        out << ":";
        for (const auto &l : failed) {
            out << ' ' << l;
        }
    }
    out << '\n';
    return failed.empty() ? kOk : kVerificationFailed;
}

int cmd_hea(int n, int layers, const std::string &axis,
            const std::string &entangler, bool paper16,
            const std::string &output, std::ostream &out) {
    HeaOptions opts;
    opts.rotation_axis = parse_axis(axis);
    opts.entangler_axis = parse_axis(entangler);
    opts.paper16 = paper16;
    write_output(output, serialize(hea_template(n, layers, opts)), out);
    return kOk;
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out,
            std::ostream &err) {
    CLI::App app{"Sparse unitary construction, local Hamiltonians and "
                 "state-vector simulation for parametrized circuits",
                 "sparsepqc"};
    app.require_subcommand(1);
    std::optional<double> tol_flag;
    app.add_option("--tol", tol_flag,
                   "Tolerance (default 1e-12, or $QSIM_TOL)");

    GateFlags build_flags;
    bool dense = false;
    std::string build_out;
    auto *build = app.add_subcommand("build-gate", "Sparse matrix of a gate");
    build_flags.add_to(build, true);
    build->add_flag("--dense", dense, "Include the dense matrix");
    build->add_option("-o,--output", build_out, "Output file (default stdout)");

    GateFlags ham_flags;
    BindFlags ham_binds;
    std::string ham_circuit, ham_out;
    bool ham_check = false;
    auto *ham =
        app.add_subcommand("hamiltonian", "Local Hamiltonian of a gate/circuit");
    ham_flags.add_to(ham, false);
    ham->add_option("--circuit", ham_circuit, "Circuit file");
    ham_binds.add_to(ham);
    ham->add_flag("--check", ham_check, "Report the reconstruction error");
    ham->add_option("-o,--output", ham_out, "Output file (default stdout)");

    std::string run_path, run_input, run_out, run_format = "csv";
    BindFlags run_binds;
    bool run_amps = false, run_oracle = false;
    auto *run = app.add_subcommand("run", "Simulate a circuit");
    run->add_option("circuit", run_path, "Circuit file")->required();
    run_binds.add_to(run);
    run->add_option("--input", run_input,
                    "zero (default), uniform, basis:K or a JSON state file");
    run->add_flag("--amplitudes", run_amps, "Print amplitudes");
    run->add_flag("--oracle", run_oracle, "Cross-check with the dense chain");
    run->add_option("--format", run_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    run->add_option("-o,--output", run_out, "Output file (default stdout)");

    VerifyFlags vf;
    auto *ver = app.add_subcommand("verify", "Reconstruction and engine sweeps");
    ver->add_option("--suite", vf.suite, "crx|cry|crz|strings|engine|all");
    ver->add_option("-n,--qubits", vf.n, "Qubits (max qubits for engine)");
    ver->add_option("--circuits", vf.circuits, "Random circuits (engine)");
    ver->add_option("--max-gates", vf.max_gates, "Gates per random circuit");
    ver->add_option("--seed", vf.seed, "Random seed");
    ver->add_option("--out-dir", vf.out_dir, "Directory for CSV files");
    ver->add_option("--points", vf.points, "Theta grid size");
    ver->add_option("--method", vf.method, "jacobi or projector exponential");

    int hea_n = 4, hea_layers = 1;
    std::string hea_axis = "x", hea_ent = "x", hea_out;
    bool hea_paper16 = false;
    auto *hea = app.add_subcommand("hea", "Write a hardware-efficient ansatz");
    hea->add_option("-n,--qubits", hea_n, "Qubits");
    hea->add_option("--layers", hea_layers, "Layers");
    hea->add_option("--axis", hea_axis, "Rotation axis");
    hea->add_option("--entangler", hea_ent, "Controlled rotation axis");
    hea->add_flag("--paper-16,--paper16", hea_paper16,
                  "Four rotation columns with CX entanglers");
    hea->add_option("-o,--output", hea_out, "Output file (default stdout)");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(std::move(rev));
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        const double tol = resolve_tolerance(tol_flag, std::getenv("QSIM_TOL"));
        if (build->parsed()) {
            return cmd_build_gate(build_flags, dense, build_out, out);
        }
        if (ham->parsed()) {
            return cmd_hamiltonian(ham_flags, ham_circuit, ham_binds, ham_check,
                                   tol, ham_out, out, err);
        }
        if (run->parsed()) {
            return cmd_run(run_path, run_binds, run_input, run_amps, run_oracle,
                           run_format, tol, run_out, out, err);
        }
        if (ver->parsed()) {
            return cmd_verify(vf, tol, out);
        }
        if (hea->parsed()) {
            return cmd_hea(hea_n, hea_layers, hea_axis, hea_ent, hea_paper16,
                           hea_out, out);
        }
    } catch (const CheckFailed &e) {
        err << "error: " << e.what() << '\n';
        return kVerificationFailed;
    } catch (const ParseError &e) {
        err << "error: line " << e.line() << ", column " << e.column() << ": "
            << e.message() << '\n';
        return kUsage;
    } catch (const BindError &e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const UsageError &e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const io::json::exception &e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ValidationError &e) {
        err << "error: " << e.what() << '\n';
        return kValidation;
    } catch (const std::filesystem::filesystem_error &e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

} // namespace sparsepqc::cli
