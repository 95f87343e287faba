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
#include "sparsepqc/verify.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sparsepqc/gate_matrix.hpp"

namespace sparsepqc {

double ErrorSweep::max_error() const {
    double m = 0.0;
    for (const double e : errors) {
        m = std::max(m, e);
    }
    return m;
}

double frobenius_error(const DenseMatrix &a, const DenseMatrix &b) {
    if (a.dim() != b.dim()) {
        throw ValidationError("frobenius_error: shape mismatch " +
                              std::to_string(a.dim()) + " vs " +
                              std::to_string(b.dim()));
    }
    return (a - b).frobenius_norm();
}

std::vector<Amplitude> dense_apply_oracle(const DenseMatrix &m,
                                          const std::vector<Amplitude> &state) {
    if (m.dim() != state.size()) {
        throw ValidationError("dense_apply_oracle: dimension mismatch");
    }
    std::vector<Amplitude> out(state.size());
    for (std::size_t r = 0; r < m.dim(); ++r) {
        Amplitude acc{};
        for (std::size_t c = 0; c < m.dim(); ++c) {
            acc += m(r, c) * state[c];
        }
        out[r] = acc;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Jacobi

namespace {

double off_diagonal_norm(const DenseMatrix &a) {
    double acc = 0.0;
    for (std::size_t r = 0; r < a.dim(); ++r) {
        for (std::size_t c = 0; c < a.dim(); ++c) {
            if (r != c) {
                acc += std::norm(a(r, c));
            }
        }
    }
    return std::sqrt(acc);
}

} // namespace

HermitianEigen jacobi_eigh(const DenseMatrix &h, double herm_tol) {
    const std::size_t d = h.dim();
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = r; c < d; ++c) {
            if (std::abs(h(r, c) - std::conj(h(c, r))) > herm_tol) {
                throw ValidationError("matrix is not Hermitian");
            }
        }
    }
    DenseMatrix a = h;
    DenseMatrix v = DenseMatrix::identity(d);
    const double scale = std::max(h.frobenius_norm(), 1.0);
    for (int sweep = 0; sweep < 100; ++sweep) {
        if (off_diagonal_norm(a) <= 1e-16 * scale) {
            break;
        }
        for (std::size_t p = 0; p + 1 < d; ++p) {
            for (std::size_t q = p + 1; q < d; ++q) {
                const Amplitude apq = a(p, q);
                const double r = std::abs(apq);
                if (r <= 1e-18 * scale) {
                    continue;
                }
                // G = diag(1, e^{-i phi}) times a real plane rotation, so
                // G^dagger A G has a zero (p, q) entry.
                const Amplitude ph = std::conj(apq) / r; // e^{-i phi}
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double tau = (aqq - app) / (2.0 * r);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const Amplitude gpp = c, gpq = s, gqp = -s * ph, gqq = c * ph;
                for (std::size_t k = 0; k < d; ++k) {
                    const Amplitude akp = a(k, p), akq = a(k, q);
                    a(k, p) = akp * gpp + akq * gqp;
                    a(k, q) = akp * gpq + akq * gqq;
                    const Amplitude vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = vkp * gpp + vkq * gqp;
                    v(k, q) = vkp * gpq + vkq * gqq;
                }
                for (std::size_t k = 0; k < d; ++k) {
                    const Amplitude apk = a(p, k), aqk = a(q, k);
                    a(p, k) = std::conj(gpp) * apk + std::conj(gqp) * aqk;
                    a(q, k) = std::conj(gpq) * apk + std::conj(gqq) * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
            }
        }
    }
    HermitianEigen out{std::vector<double>(d), std::move(v)};
    for (std::size_t k = 0; k < d; ++k) {
        out.values[k] = a(k, k).real();
    }
    return out;
}

DenseMatrix exp_oracle(const DenseMatrix &h, double herm_tol) {
    const auto eig = jacobi_eigh(h, herm_tol);
    const std::size_t d = h.dim();
    DenseMatrix out(d);
    std::vector<Amplitude> phase(d);
    for (std::size_t k = 0; k < d; ++k) {
        phase[k] = std::polar(1.0, -eig.values[k]);
    }
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) {
            Amplitude acc{};
            for (std::size_t k = 0; k < d; ++k) {
                acc += eig.vectors(r, k) * phase[k] *
                       std::conj(eig.vectors(c, k));
            }
            out(r, c) = acc;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Sweeps

std::vector<double> theta_grid(std::size_t count) {
    std::vector<double> out(count);
    if (count == 1) {
        out[0] = 0.0;
        return out;
    }
    for (std::size_t k = 0; k < count; ++k) {
        out[k] = -kPi + 2.0 * kPi * static_cast<double>(k) /
                            static_cast<double>(count - 1);
    }
    out.back() = kPi;
    return out;
}

ErrorSweep gate_hamiltonian_sweep(int n, int i, int j, Axis axis,
                                  const std::vector<double> &grid,
                                  ExpMethod method) {
    ControlledGateSpec{n, i, j, {}}.validate();
    ErrorSweep sweep;
    sweep.label = std::string("cr") +
                  static_cast<char>(std::tolower(axis_name(axis))) + "_n" +
                  std::to_string(n) + "_i" + std::to_string(i) + "_j" +
                  std::to_string(j);
    sweep.thetas = grid;
    sweep.errors.reserve(grid.size());
    for (const double theta : grid) {
        const ControlledGateSpec spec{n, i, j, rotation_gate(axis, theta)};
        const DenseMatrix cu = build_cu_sparse(spec).to_dense();
        const LocalHamiltonian h = hamiltonian_cu(spec);
        const DenseMatrix e = method == ExpMethod::Projector
                                  ? exp_minus_iH(h)
                                  : exp_oracle(realize_dense(h));
        sweep.errors.push_back(frobenius_error(cu, e));
    }
    return sweep;
}

ErrorSweep string_hamiltonian_sweep(int n, Axis axis,
                                    const std::vector<double> &grid,
                                    ExpMethod method) {
    check_register(n);
    ErrorSweep sweep;
    sweep.label = std::string("string_r") +
                  static_cast<char>(std::tolower(axis_name(axis))) + "_n" +
                  std::to_string(n);
    sweep.thetas = grid;
    sweep.errors.reserve(grid.size());
    const std::vector<Axis> axes(n, axis);
    for (const double theta : grid) {
        const OneQubitGate r = rotation_gate(axis, theta);
        DenseMatrix u = r.dense();
        for (int q = 2; q <= n; ++q) {
            u = kron(u, r.dense());
        }
        const std::vector<double> thetas(n, theta);
        DenseMatrix prod = DenseMatrix::identity(pow2(n));
        if (method == ExpMethod::Jacobi) {
            for (const auto &term : rotation_string_hamiltonians(axes, thetas)) {
                prod = exp_oracle(term.dense()) * prod;
            }
        } else {
            const auto pairs = eigenpairs_2x2(r);
            for (int q = 1; q <= n; ++q) {
                prod = exp_minus_iH(hamiltonian_sj(n, q, pairs)) * prod;
            }
        }
        sweep.errors.push_back(frobenius_error(u, prod));
    }
    return sweep;
}

// ---------------------------------------------------------------------------
// Random material

OneQubitGate random_unitary(std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> angle(-kPi, kPi);
    const OneQubitGate g = rotation_gate(Axis::Z, angle(rng)) *
                           rotation_gate(Axis::Y, angle(rng)) *
                           rotation_gate(Axis::Z, angle(rng));
    const Amplitude ph = std::polar(1.0, angle(rng));
    return {ph * g.u11(), ph * g.u12(), ph * g.u21(), ph * g.u22()};
}

std::vector<Amplitude> random_state(int n, std::mt19937_64 &rng) {
    check_register(n);
    std::normal_distribution<double> gauss;
    std::vector<Amplitude> psi(pow2(n));
    double norm2 = 0.0;
    for (auto &a : psi) {
        a = {gauss(rng), gauss(rng)};
        norm2 += std::norm(a);
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto &a : psi) {
        a *= inv;
    }
    return psi;
}

Circuit random_circuit(int n, int gates, std::mt19937_64 &rng) {
    check_register(n);
    std::uniform_int_distribution<int> qubit(1, n);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> angle(-kPi, kPi);
    std::uniform_int_distribution<int> axis(0, 2);
    Circuit c;
    c.n = n;
    for (int k = 0; k < gates; ++k) {
        const bool controlled = n >= 2 && unit(rng) < 0.5;
        std::optional<RotationLabel> rot;
        OneQubitGate u;
        if (unit(rng) < 0.5) {
            rot = RotationLabel{static_cast<Axis>(axis(rng)), angle(rng)};
            u = rotation_gate(rot->axis, rot->theta);
        } else {
            u = random_unitary(rng);
        }
        const int j = qubit(rng);
        if (controlled) {
            int i = qubit(rng);
            while (i == j) {
                i = qubit(rng);
            }
            c.ops.push_back(GateOp::controlled(i, j, u, rot));
        } else {
            c.ops.push_back(GateOp::single(j, u, rot));
        }
    }
    return c;
}

EquivalenceReport engine_equivalence(int count, int min_n, int max_n,
                                     int max_gates, std::uint64_t seed) {
    check_register(min_n);
    check_register(max_n);
    if (min_n > max_n || max_n > kDenseOracleCap) {
        throw ValidationError("engine_equivalence: bad register range");
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick_n(min_n, max_n);
    std::uniform_int_distribution<int> pick_k(1, std::max(1, max_gates));
    EquivalenceReport report;
    for (int t = 0; t < count; ++t) {
        const int n = pick_n(rng);
        const Circuit c = random_circuit(n, pick_k(rng), rng);
        const auto psi = random_state(n, rng);
        const StateVector out = run_circuit(c, StateVector(n, psi));
        std::vector<Amplitude> ref = psi;
        for (const auto &op : c.ops) {
            ref = dense_apply_oracle(dense_kron_oracle(op.description(n)), ref);
        }
        double dev = 0.0;
        for (std::size_t k = 0; k < ref.size(); ++k) {
            dev = std::max(dev, std::abs(out[k] - ref[k]));
        }
        if (report.worst_index < 0 || dev > report.max_deviation) {
            report.max_deviation = dev;
            report.worst_index = t;
        }
        report.cases.push_back(
            {n, static_cast<int>(c.ops.size()), dev});
    }
    return report;
}

} // namespace sparsepqc
