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
//
// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "sparsepqc/circuit_ir.hpp"
#include "sparsepqc/cli.hpp"
#include "sparsepqc/engine.hpp"
#include "sparsepqc/gate_matrix.hpp"
#include "sparsepqc/hamiltonian.hpp"
#include "sparsepqc/io.hpp"
#include "sparsepqc/verify.hpp"
#include "../unit/test_util.hpp"

namespace sparsepqc {
namespace {

using testing::bit_rule_controlled;
using testing::bit_rule_single;
using testing::generic_gate;
using testing::symbol_grid;
using Grid = std::vector<std::string>;

// Tolerances.
constexpr double kCrxTol = 1e-12;
constexpr double kStringTol = 1e-12;
constexpr double kEngineTol = 1e-11;
constexpr double kRatioLow = 1.5;
constexpr double kRatioHigh = 3.0;
constexpr double kUnitarityTol = 1e-12;
constexpr double kOrthonormalTol = 1e-10;
constexpr double kHeaTol = 1e-12;

struct Outcome {
    bool pass;
    std::string detail;
};

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

// ---------------------------------------------------------------------------
// 1. Controlled-rotation Hamiltonian reconstruction.

Outcome crx_reconstruction() {
    const auto grid = theta_grid(100);
    double worst = 0.0;
    int pairs = 0;
    for (int i = 1; i <= 4; ++i) {
        for (int j = 1; j <= 4; ++j) {
            if (i == j) continue;
            ++pairs;
            for (auto m : {ExpMethod::Projector, ExpMethod::Jacobi}) {
                worst = std::max(
                    worst, gate_hamiltonian_sweep(4, i, j, Axis::X, grid, m).max_error());
            }
        }
    }
    return {pairs == 12 && worst <= kCrxTol,
            "12 pairs x 100 theta, both exponentials, max error " + sci(worst) +
                " (tol " + sci(kCrxTol) + ")"};
}

// ---------------------------------------------------------------------------
// 2. Rotation-string reconstruction.

Outcome string_reconstruction() {
    const auto grid = theta_grid(100);
    double worst = 0.0;
    for (Axis a : {Axis::X, Axis::Y, Axis::Z}) {
        for (auto m : {ExpMethod::Projector, ExpMethod::Jacobi}) {
            worst = std::max(worst, string_hamiltonian_sweep(4, a, grid, m).max_error());
        }
    }
    return {worst <= kStringTol, "n=4, axes X/Y/Z, 100 theta, max error " +
                                     sci(worst) + " (tol " + sci(kStringTol) + ")"};
}

// ---------------------------------------------------------------------------
// 3. Engine against a dense mat-vec chain built from the bit rule.

Outcome engine_correctness() {
    std::mt19937_64 rng(20260101);
    std::uniform_int_distribution<int> pick_n(1, 8);
    std::uniform_int_distribution<int> pick_k(1, 20);
    double worst = 0.0;
    for (int c = 0; c < 200; ++c) {
        const int n = pick_n(rng);
        const Circuit circ = random_circuit(n, pick_k(rng), rng);
        const StateVector in(n, random_state(n, rng));
        const StateVector got = run_circuit(circ, in);
        std::vector<Amplitude> ref = in.amplitudes();
        for (const auto &op : circ.ops) {
            const DenseMatrix m = op.kind == GateOp::Kind::Controlled
                                      ? bit_rule_controlled(n, op.control, op.target, op.u)
                                      : bit_rule_single(n, op.target, op.u);
            ref = m.apply(ref);
        }
        for (std::size_t k = 0; k < ref.size(); ++k) {
            worst = std::max(worst, std::abs(ref[k] - got[k]));
        }
    }
    return {worst <= kEngineTol, "200 circuits, n<=8, K<=20, max deviation " +
                                     sci(worst) + " (tol " + sci(kEngineTol) + ")"};
}

// ---------------------------------------------------------------------------
// 4. Worked-example patterns.

// Expands a grid of block tokens into entry symbols. "I" is the b x b
// identity, "Upq" is u_pq times it and "0" is the zero block.
Grid expand_blocks(const std::vector<std::vector<std::string>> &blocks,
                   std::size_t b) {
    const std::size_t nb = blocks.size();
    const std::size_t dim = nb * b;
    Grid g(dim * dim, "0");
    for (std::size_t br = 0; br < nb; ++br) {
        for (std::size_t bc = 0; bc < nb; ++bc) {
            const std::string &t = blocks[br][bc];
            if (t == "0") continue;
            const std::string sym = t == "I" ? "1" : "u" + t.substr(1);
            for (std::size_t d = 0; d < b; ++d) {
                g[(br * b + d) * dim + bc * b + d] = sym;
            }
        }
    }
    return g;
}

Grid identity_grid(std::size_t b) { return expand_blocks({{"I"}}, b); }

Grid block_diag(const std::vector<Grid> &parts) {
    std::vector<std::size_t> dims;
    std::size_t dim = 0;
    for (const auto &p : parts) {
        std::size_t d = 0;
        while (d * d < p.size()) ++d;
        dims.push_back(d);
        dim += d;
    }
    Grid g(dim * dim, "0");
    std::size_t off = 0;
    for (std::size_t k = 0; k < parts.size(); ++k) {
        for (std::size_t r = 0; r < dims[k]; ++r) {
            for (std::size_t c = 0; c < dims[k]; ++c) {
                g[(off + r) * dim + off + c] = parts[k][r * dims[k] + c];
            }
        }
        off += dims[k];
    }
    return g;
}

bool same_pattern(int n, int i, int j, const Grid &want, std::string &why) {
    const OneQubitGate u = generic_gate();
    const Grid got = symbol_grid(build_cu_sparse({n, i, j, u}).to_dense(), u);
    if (got == want) return true;
    why = "n=" + std::to_string(n) + " i=" + std::to_string(i) +
          " j=" + std::to_string(j) + " pattern mismatch";
    return false;
}

bool amplitude_rows(int n, int i, int j, std::string &why) {
    // Display label L, partner label, and which row of u applies, for every
    // label in the selected blocks. Labels outside are unchanged.
    struct Row {
        int label;
        int a;
        int b;
        bool top; // u11 a + u12 b, otherwise u21 a + u22 b
    };
    std::vector<Row> rows;
    if (i == 2 && j == 3) {
        for (int base : {9, 25}) {
            for (int d = 0; d < 4; ++d) {
                rows.push_back({base + d, base + d, base + d + 4, true});
                rows.push_back({base + d + 4, base + d, base + d + 4, false});
            }
        }
    } else {
        for (int base : {9, 13, 25, 29}) {
            for (int d = 0; d < 2; ++d) {
                rows.push_back({base + d, base + d, base + d + 2, true});
                rows.push_back({base + d + 2, base + d, base + d + 2, false});
            }
        }
    }
    const OneQubitGate u = generic_gate();
    std::mt19937_64 rng(5);
    const auto a = random_state(n, rng);
    StateVector s(n, a);
    apply_controlled(s, i, j, u);
    std::vector<bool> touched(a.size(), false);
    for (const Row &r : rows) {
        const Amplitude x = a[r.a - 1], y = a[r.b - 1];
        const Amplitude want = r.top ? u.u11() * x + u.u12() * y : u.u21() * x + u.u22() * y;
        touched[r.label - 1] = true;
        if (s[r.label - 1] != want) {
            why = "amplitude row " + std::to_string(r.label) + " differs";
            return false;
        }
    }
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (!touched[k] && s[k] != a[k]) {
            why = "amplitude " + std::to_string(k + 1) + " should be unchanged";
            return false;
        }
    }
    return true;
}

Outcome example_fidelity() {
    std::string why;
    bool ok = true;

    // 5 qubits, control 2, target 3: diag{I8, U, I8, U}.
    const Grid u8 = expand_blocks({{"U11", "U12"}, {"U21", "U22"}}, 4);
    ok = ok && same_pattern(5, 2, 3, block_diag({identity_grid(8), u8, identity_grid(8), u8}), why);

    // 5 qubits, control 2, target 4: diag{I8, U1, U1, I8, U1, U1}.
    const Grid u1 = expand_blocks({{"U11", "U12"}, {"U21", "U22"}}, 2);
    ok = ok && same_pattern(5, 2, 4,
                            block_diag({identity_grid(8), u1, u1, identity_grid(8), u1, u1}),
                            why);

    // 5 qubits, control 3, target 2: diag{I4, U, I4, U}, U of order 12.
    const Grid u12 = expand_blocks({{"U11", "0", "U12"}, {"0", "I", "0"}, {"U21", "0", "U22"}}, 4);
    ok = ok && same_pattern(5, 3, 2, block_diag({identity_grid(4), u12, identity_grid(4), u12}), why);

    // 5 qubits, control 4, target 2: diag{I2, U, I2, U}, U of order 14.
    const Grid u14 = expand_blocks({{"U11", "0", "0", "0", "U12", "0", "0"},
                                    {"0", "I", "0", "0", "0", "0", "0"},
                                    {"0", "0", "U11", "0", "0", "0", "U12"},
                                    {"0", "0", "0", "I", "0", "0", "0"},
                                    {"U21", "0", "0", "0", "U22", "0", "0"},
                                    {"0", "0", "0", "0", "0", "I", "0"},
                                    {"0", "0", "U21", "0", "0", "0", "U22"}},
                                   2);
    ok = ok && same_pattern(5, 4, 2, block_diag({identity_grid(2), u14, identity_grid(2), u14}), why);

    // Two qubits, both orders.
    ok = ok && same_pattern(2, 1, 2,
                            Grid{"1", "0", "0", "0", "0", "1", "0", "0",
                                 "0", "0", "u11", "u12", "0", "0", "u21", "u22"},
                            why);
    ok = ok && same_pattern(2, 2, 1,
                            Grid{"1", "0", "0", "0", "0", "u11", "0", "u12",
                                 "0", "0", "1", "0", "0", "u21", "0", "u22"},
                            why);

    ok = ok && amplitude_rows(5, 2, 3, why);
    ok = ok && amplitude_rows(5, 2, 4, why);
    return {ok, ok ? "6 matrix patterns and 2 amplitude expansions exact" : why};
}

// ---------------------------------------------------------------------------
// 5. Kernel timing growth per added qubit.

Outcome timing_growth() {
    constexpr int kRuns = 20;
    std::vector<double> medians;
    const OneQubitGate u = rotation_gate(Axis::Y, 0.3);
    std::string times;
    for (int n = 16; n <= 22; ++n) {
        std::vector<Amplitude> amps(pow2(n), Amplitude(0.0));
        amps[0] = 1.0;
        const int i = 2, j = n - 1;
        apply_controlled_kernel(amps, n, i, j, u);
        std::vector<double> t;
        for (int r = 0; r < kRuns; ++r) {
            const auto t0 = std::chrono::steady_clock::now();
            apply_controlled_kernel(amps, n, i, j, u);
            const auto t1 = std::chrono::steady_clock::now();
            t.push_back(std::chrono::duration<double>(t1 - t0).count());
        }
        std::nth_element(t.begin(), t.begin() + kRuns / 2, t.end());
        medians.push_back(t[kRuns / 2]);
    }
    bool ok = true;
    std::string ratios;
    for (std::size_t k = 1; k < medians.size(); ++k) {
        const double r = medians[k] / medians[k - 1];
        char buf[16];
        std::snprintf(buf, sizeof buf, "%.2f", r);
        ratios += (k > 1 ? " " : "") + std::string(buf);
        ok = ok && r >= kRatioLow && r <= kRatioHigh;
    }
    return {ok, "n=16..22 median ratios [" + ratios + "] (bounds " +
                    std::to_string(kRatioLow).substr(0, 3) + ".." +
                    std::to_string(kRatioHigh).substr(0, 3) + ")"};
}

// ---------------------------------------------------------------------------
// 6. Structural invariants, exhaustive over positions for n <= 6.

Outcome structural_invariants() {
    std::mt19937_64 rng(6);
    std::vector<OneQubitGate> gates = {
        OneQubitGate::pauli_x(), OneQubitGate::pauli_y(), OneQubitGate::pauli_z(),
        OneQubitGate::hadamard(), OneQubitGate::phase_s(), OneQubitGate::phase_t(),
        rotation_gate(Axis::X, 0.9), rotation_gate(Axis::Z, -2.5)};
    for (int k = 0; k < 8; ++k) {
        gates.push_back(random_unitary(rng));
    }
    std::size_t checked = 0;
    for (int n = 2; n <= 6; ++n) {
        for (int i = 1; i <= n; ++i) {
            for (int j = 1; j <= n; ++j) {
                for (const auto &u : gates) {
                    const SparseUnitary s =
                        i == j ? build_sj_sparse(n, j, u) : build_cu_sparse({n, i, j, u});
                    if (s.max_row_count() > 2 || s.max_column_count() > 2) {
                        return {false, "sparsity violated"};
                    }
                    if (!s.is_unitary(kUnitarityTol) ||
                        !validate_unitary(s.to_dense(), kUnitarityTol)) {
                        return {false, "unitarity violated"};
                    }
                    if (i == j) {
                        ++checked;
                        continue;
                    }
                    const LocalHamiltonian h = hamiltonian_cu({n, i, j, u});
                    if (h.orthonormality_defect() > kOrthonormalTol) {
                        return {false, "term orthonormality violated"};
                    }
                    std::size_t non_unit = 0;
                    for (const auto &p : eigenpairs_2x2(u)) {
                        non_unit += std::abs(phase_of(p.lambda).z) >= kZeroPhase ? 1 : 0;
                    }
                    if (h.terms().size() != non_unit * pow2(n - 2)) {
                        return {false, "term count wrong at n=" + std::to_string(n)};
                    }
                    const auto pairs = eigenpairs_2x2(u);
                    for (const auto &p : pairs) {
                        const double z = phase_of(p.lambda).z;
                        if (std::abs(z) < kZeroPhase) continue;
                        std::size_t same = 0, count = 0;
                        for (const auto &q : pairs) {
                            same += phase_of(q.lambda).z == z ? 1 : 0;
                        }
                        for (const auto &t : h.terms()) {
                            count += t.z == z ? 1 : 0;
                        }
                        if (count != same * pow2(n - 2)) {
                            return {false, "per-eigenvalue count wrong"};
                        }
                    }
                    ++checked;
                }
            }
        }
    }
    return {true, std::to_string(checked) + " gate placements, n=2..6"};
}

// ---------------------------------------------------------------------------
// 7. HEA demo through the command line.

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult cli(const std::vector<std::string> &args) {
    std::ostringstream out, err;
    const int code = cli::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

Outcome hea_demo() {
    namespace fs = std::filesystem;
    const fs::path dir =
        fs::temp_directory_path() / ("sparsepqc_accept_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    const std::string path = (dir / "hea4.txt").string();
    const auto cleanup = [&] { fs::remove_all(dir); };

    if (cli({"hea", "-n", "4", "-o", path}).code != 0) {
        cleanup();
        return {false, "hea command failed"};
    }
    const CliResult probs = cli({"run", path, "--fill", "pi/4", "--format", "json"});
    const CliResult amps = cli({"run", path, "--fill", "pi/4", "--format", "json", "--amplitudes"});
    const CliResult checked = cli({"run", path, "--fill", "pi/4", "--oracle"});
    std::ifstream in(path);
    std::stringstream src;
    src << in.rdbuf();
    cleanup();
    if (probs.code != 0 || amps.code != 0 || checked.code != 0) {
        return {false, "run exited non-zero: " + probs.err + amps.err + checked.err};
    }

    double sum = 0.0;
    const io::json doc = io::json::parse(probs.out);
    for (const auto &v : doc.at("probabilities")) {
        sum += v.get<double>();
    }
    const double sum_err = std::abs(sum - 1.0);

    // Dense chain built from the bit rule, independent of the engine.
    const CircuitTemplate t = parse_circuit(src.str());
    ParamTable p;
    for (const auto &name : t.parameters()) p[name] = kPi / 4;
    const Circuit c = sparsepqc::bind(t, p);
    std::vector<Amplitude> ref = StateVector(4).amplitudes();
    for (const auto &op : c.ops) {
        const DenseMatrix m = op.kind == GateOp::Kind::Controlled
                                  ? bit_rule_controlled(4, op.control, op.target, op.u)
                                  : bit_rule_single(4, op.target, op.u);
        ref = m.apply(ref);
    }
    const StateVector got = io::state_from_json(io::json::parse(amps.out));
    double dev = 0.0;
    for (std::size_t k = 0; k < ref.size(); ++k) {
        dev = std::max(dev, std::abs(ref[k] - got[k]));
    }
    return {sum_err <= kHeaTol && dev <= kHeaTol && c.ops.size() == 15,
            "HEA(4) at pi/4: sum error " + sci(sum_err) + ", oracle deviation " +
                sci(dev) + " (tol " + sci(kHeaTol) + ")"};
}

} // namespace
} // namespace sparsepqc

int main() {
    using namespace sparsepqc;
    const std::vector<std::pair<const char *, std::function<Outcome()>>> criteria = {
        {"controlled Hamiltonian reconstruction", crx_reconstruction},
        {"rotation string reconstruction", string_reconstruction},
        {"engine correctness", engine_correctness},
        {"worked-example fidelity", example_fidelity},
        {"per-qubit timing growth", timing_growth},
        {"structural invariants", structural_invariants},
        {"HEA demo", hea_demo},
    };
    int failed = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[k].second();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%s criterion %zu %s: %s [%.2fs]\n", o.pass ? "PASS" : "FAIL", k + 1,
                    criteria[k].first, o.detail.c_str(), secs);
        failed += o.pass ? 0 : 1;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
                criteria.size());
    return failed == 0 ? 0 : 1;
}
