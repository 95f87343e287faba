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
#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sparsepqc/core.hpp"
#include "sparsepqc/gate_matrix.hpp"
#include "sparsepqc/qindex.hpp"

namespace sparsepqc {

inline constexpr double kNormTol = 1e-10;

/// Normalized vector of 2^n amplitudes, index 0 = |0...0>.
class StateVector {
  public:
    /// |0...0>.
    explicit StateVector(int n);
    /// Validates length 2^n and unit norm within kNormTol.
    StateVector(int n, std::vector<Amplitude> amps);

    static StateVector basis(int n, BasisIndex k);
    static StateVector uniform(int n);

    [[nodiscard]] int num_qubits() const { return n_; }
    [[nodiscard]] std::size_t size() const { return amps_.size(); }
    [[nodiscard]] const std::vector<Amplitude> &amplitudes() const {
        return amps_;
    }
    [[nodiscard]] std::span<Amplitude> data() { return amps_; }
    [[nodiscard]] Amplitude operator[](std::size_t k) const {
        return amps_[k];
    }
    [[nodiscard]] double norm() const;

    bool operator==(const StateVector &) const = default;

  private:
    int n_;
    std::vector<Amplitude> amps_;
};

/// Rotation metadata kept alongside the matrix so circuits serialize with
/// their original angles and expose Pauli-string generators.
struct RotationLabel {
    Axis axis;
    double theta;
    bool operator==(const RotationLabel &) const = default;
};

struct GateOp {
    enum class Kind { SingleQubit, Controlled };

    Kind kind;
    int control; ///< 0 for single-qubit gates
    int target;
    OneQubitGate u;
    std::optional<RotationLabel> rotation;

    static GateOp single(int j, const OneQubitGate &u,
                         std::optional<RotationLabel> rot = {});
    static GateOp controlled(int i, int j, const OneQubitGate &u,
                             std::optional<RotationLabel> rot = {});

    [[nodiscard]] GateDescription description(int n) const;
    bool operator==(const GateOp &) const = default;
};

/// Bound circuit: ops apply left to right.
struct Circuit {
    int n = 0;
    std::vector<GateOp> ops;

    void validate() const;
    bool operator==(const Circuit &) const = default;
};

// Raw kernels over 2^n amplitudes; pairs are updated in place.
void apply_single_qubit_kernel(std::span<Amplitude> amps, int n, int j,
                               const OneQubitGate &u);
void apply_controlled_kernel(std::span<Amplitude> amps, int n, int i, int j,
                             const OneQubitGate &u);

/// Updates each pair (k, k + 2^{n-j}) with qubit j of k equal to 0.
void apply_single_qubit(StateVector &state, int j, const OneQubitGate &u);

/// Same pairwise update restricted to indices whose qubit i is 1; other
/// amplitudes are not touched. Works for either order of i and j.
void apply_controlled(StateVector &state, int i, int j,
                      const OneQubitGate &u);

void apply_gate(StateVector &state, const GateOp &op);

StateVector run_circuit(const Circuit &circuit, const StateVector &input);

std::vector<double> probabilities(const StateVector &state);

/// Dense circuit unitary U_K ... U_1 via the Kronecker oracle.
DenseMatrix circuit_dense_unitary(const Circuit &circuit,
                                  int max_qubits = kDenseOracleCap);

} // namespace sparsepqc
