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

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "sparsepqc/core.hpp"
#include "sparsepqc/engine.hpp"
#include "sparsepqc/hamiltonian.hpp"

namespace sparsepqc {

/// Default acceptance ceiling for reconstruction sweeps.
inline constexpr double kSweepTol = 1e-12;

struct ErrorSweep {
    std::string label;
    std::vector<double> thetas;
    std::vector<double> errors;

    [[nodiscard]] double max_error() const;
};

/// sqrt(sum |A - B|^2); throws on dimension mismatch.
double frobenius_error(const DenseMatrix &a, const DenseMatrix &b);

/// Plain O(4^n) matrix-vector product.
std::vector<Amplitude> dense_apply_oracle(const DenseMatrix &m,
                                          const std::vector<Amplitude> &state);

struct HermitianEigen {
    std::vector<double> values;
    DenseMatrix vectors; ///< columns are eigenvectors
};

/// Cyclic complex Jacobi eigendecomposition of a Hermitian matrix.
HermitianEigen jacobi_eigh(const DenseMatrix &h, double herm_tol = 1e-10);

/// e^{-iH} from the spectral decomposition of H.
DenseMatrix exp_oracle(const DenseMatrix &h, double herm_tol = 1e-10);

/// n uniformly spaced points on [-pi, pi], endpoints included.
std::vector<double> theta_grid(std::size_t count = 100);

/// Which exponential checks the reconstruction.
enum class ExpMethod {
    Projector, ///< rank-1 update from the stored projector terms
    Jacobi,    ///< full eigendecomposition of the realized dense H
};

/// Per theta: C_U for the controlled rotation, its Hamiltonian, and
/// ||C_U - e^{-iH}||_F.
ErrorSweep gate_hamiltonian_sweep(int n, int i, int j, Axis axis,
                                  const std::vector<double> &grid,
                                  ExpMethod method = ExpMethod::Jacobi);

/// Per theta: the string of n equal rotations, against the product of the
/// exponentials of theta/2 times the Pauli generators.
ErrorSweep string_hamiltonian_sweep(int n, Axis axis,
                                    const std::vector<double> &grid,
                                    ExpMethod method = ExpMethod::Jacobi);

// Random test material. All generators are deterministic in the engine.

/// e^{i phi} R_Z(a) R_Y(b) R_Z(c) with independent uniform angles.
OneQubitGate random_unitary(std::mt19937_64 &rng);

std::vector<Amplitude> random_state(int n, std::mt19937_64 &rng);

/// Mixed single-qubit and controlled gates, a mix of rotations and general
/// unitaries.
Circuit random_circuit(int n, int gates, std::mt19937_64 &rng);

struct EquivalenceCase {
    int n;
    int gates;
    double deviation;
};

struct EquivalenceReport {
    std::vector<EquivalenceCase> cases;
    double max_deviation = 0.0;
    int worst_index = -1;
};

/// Runs `count` random circuits (n in [min_n, max_n], 1..max_gates gates)
/// on random states through the engine and the dense chain.
EquivalenceReport engine_equivalence(int count, int min_n, int max_n,
                                     int max_gates, std::uint64_t seed);

} // namespace sparsepqc
