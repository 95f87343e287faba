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
#include "sparsepqc/engine.hpp"

#include <cassert>
#include <cmath>
#include <string>

namespace sparsepqc {

// ---------------------------------------------------------------------------
// StateVector

StateVector::StateVector(int n) : n_(n) {
    check_register(n);
    amps_.assign(pow2(n), Amplitude{});
    amps_[0] = 1.0;
}

StateVector::StateVector(int n, std::vector<Amplitude> amps)
    : n_(n), amps_(std::move(amps)) {
    check_register(n);
    if (amps_.size() != pow2(n)) {
        throw ValidationError("state has " + std::to_string(amps_.size()) +
                              " amplitudes, expected " +
                              std::to_string(pow2(n)));
    }
    for (const auto &a : amps_) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw ValidationError("state amplitudes must be finite");
        }
    }
    if (std::abs(norm() - 1.0) > kNormTol) {
        throw ValidationError("state is not normalized");
    }
}

StateVector StateVector::basis(int n, BasisIndex k) {
    StateVector s(n);
    if (k >= s.size()) {
        throw ValidationError("basis index out of range");
    }
    s.amps_[0] = 0.0;
    s.amps_[k] = 1.0;
    return s;
}

StateVector StateVector::uniform(int n) {
    check_register(n);
    const double a = 1.0 / std::sqrt(static_cast<double>(pow2(n)));
    return StateVector(n, std::vector<Amplitude>(pow2(n), a));
}

double StateVector::norm() const {
    double acc = 0.0;
    for (const auto &a : amps_) {
        acc += std::norm(a);
    }
    return std::sqrt(acc);
}

// ---------------------------------------------------------------------------
// GateOp / Circuit

GateOp GateOp::single(int j, const OneQubitGate &u,
                      std::optional<RotationLabel> rot) {
    return {Kind::SingleQubit, 0, j, u, rot};
}

GateOp GateOp::controlled(int i, int j, const OneQubitGate &u,
                          std::optional<RotationLabel> rot) {
    return {Kind::Controlled, i, j, u, rot};
}

GateDescription GateOp::description(int n) const {
    if (kind == Kind::SingleQubit) {
        return SingleQubitSpec{n, target, u};
    }
    return ControlledGateSpec{n, control, target, u};
}

void Circuit::validate() const {
    check_register(n);
    for (const auto &op : ops) {
        std::visit([](const auto &g) { g.validate(); }, op.description(n));
    }
}

// ---------------------------------------------------------------------------
// Kernels

namespace {

// Spreads the bits of x so that a zero appears at bit position `mask`.
constexpr BasisIndex insert_zero(BasisIndex x, BasisIndex mask) {
    const BasisIndex low = mask - 1;
    return ((x & ~low) << 1) | (x & low);
}

inline void update_pair(Amplitude &a0, Amplitude &a1, const Amplitude u11,
                        const Amplitude u12, const Amplitude u21,
                        const Amplitude u22) {
    const Amplitude x = a0;
    const Amplitude y = a1;
    a0 = u11 * x + u12 * y;
    a1 = u21 * x + u22 * y;
}

} // namespace

void apply_single_qubit_kernel(std::span<Amplitude> amps, int n, int j,
                               const OneQubitGate &u) {
    check_qubit(j, n);
    if (amps.size() != pow2(n)) {
        throw ValidationError("amplitude buffer does not match register");
    }
    const BasisIndex stride = qubit_mask(j, n);
    const BasisIndex dim = amps.size();
    const Amplitude u11 = u.u11(), u12 = u.u12(), u21 = u.u21(),
                    u22 = u.u22();
    for (BasisIndex base = 0; base < dim; base += 2 * stride) {
        for (BasisIndex k = base; k < base + stride; ++k) {
            update_pair(amps[k], amps[k + stride], u11, u12, u21, u22);
        }
    }
}

void apply_controlled_kernel(std::span<Amplitude> amps, int n, int i, int j,
                             const OneQubitGate &u) {
    ControlledGateSpec{n, i, j, u}.validate();
    if (amps.size() != pow2(n)) {
        throw ValidationError("amplitude buffer does not match register");
    }
    const BasisIndex control = qubit_mask(i, n);
    const BasisIndex stride = qubit_mask(j, n);
    const BasisIndex low = std::min(control, stride);
    const BasisIndex high = std::max(control, stride);
    const BasisIndex count = pow2(n - 2);
    const Amplitude u11 = u.u11(), u12 = u.u12(), u21 = u.u21(),
                    u22 = u.u22();
    for (BasisIndex m = 0; m < count; ++m) {
        const BasisIndex k = insert_zero(insert_zero(m, low), high) | control;
        update_pair(amps[k], amps[k | stride], u11, u12, u21, u22);
    }
}

void apply_single_qubit(StateVector &state, int j, const OneQubitGate &u) {
    apply_single_qubit_kernel(state.data(), state.num_qubits(), j, u);
    assert(std::abs(state.norm() - 1.0) <= kNormTol);
}

void apply_controlled(StateVector &state, int i, int j,
                      const OneQubitGate &u) {
    apply_controlled_kernel(state.data(), state.num_qubits(), i, j, u);
    assert(std::abs(state.norm() - 1.0) <= kNormTol);
}

void apply_gate(StateVector &state, const GateOp &op) {
    if (op.kind == GateOp::Kind::SingleQubit) {
        apply_single_qubit(state, op.target, op.u);
    } else {
        apply_controlled(state, op.control, op.target, op.u);
    }
}

StateVector run_circuit(const Circuit &circuit, const StateVector &input) {
    if (input.num_qubits() != circuit.n) {
        throw ValidationError("circuit acts on " + std::to_string(circuit.n) +
                              " qubits but the input state has " +
                              std::to_string(input.num_qubits()));
    }
    circuit.validate();
    StateVector state = input;
    for (const auto &op : circuit.ops) {
        apply_gate(state, op);
    }
    return state;
}

std::vector<double> probabilities(const StateVector &state) {
    std::vector<double> p(state.size());
    for (std::size_t k = 0; k < p.size(); ++k) {
        p[k] = std::norm(state[k]);
    }
    return p;
}

DenseMatrix circuit_dense_unitary(const Circuit &circuit, int max_qubits) {
    circuit.validate();
    DenseMatrix acc = DenseMatrix::identity(pow2(circuit.n));
    for (const auto &op : circuit.ops) {
        acc = dense_kron_oracle(op.description(circuit.n), max_qubits) * acc;
    }
    return acc;
}

} // namespace sparsepqc
