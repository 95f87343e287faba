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

// Local Hamiltonians H with U = exp(-iH) for single-qubit and controlled
// gates, built from the eigenpairs of the 2x2 gate. H is kept as a sum of
// weighted rank-1 projectors z |w><w| over orthonormal w; eigendirections
// with eigenvalue 1 carry z = 0 and are not stored.

#include <array>
#include <span>
#include <vector>

#include "sparsepqc/core.hpp"
#include "sparsepqc/gate_matrix.hpp"

namespace sparsepqc {

/// Weights with |z| below this are treated as zero and dropped.
inline constexpr double kZeroPhase = 1e-15;

/// Tolerance for pairwise orthogonality of projector vectors.
inline constexpr double kOrthoTol = 1e-10;

using EigenPairs2 = std::array<EigenPair2, 2>;

struct ProjectorTerm {
    double z;
    std::vector<Amplitude> w;
};

class LocalHamiltonian {
  public:
    LocalHamiltonian() = default;
    explicit LocalHamiltonian(std::size_t dim) : dim_(dim) {}
    LocalHamiltonian(std::size_t dim, std::vector<ProjectorTerm> terms);

    [[nodiscard]] std::size_t dim() const { return dim_; }
    [[nodiscard]] const std::vector<ProjectorTerm> &terms() const {
        return terms_;
    }
    [[nodiscard]] bool empty() const { return terms_.empty(); }

    /// Adds z |w><w|; zero weights are skipped.
    void add_term(double z, std::vector<Amplitude> w);

    /// max |<w_a, w_b> - delta_ab| over all term pairs.
    [[nodiscard]] double orthonormality_defect() const;

  private:
    std::size_t dim_ = 0;
    std::vector<ProjectorTerm> terms_;
};

/// z * I_{2^{j-1}} (x) sigma_axis (x) I_{2^{n-j}}.
struct PauliStringTerm {
    double coefficient;
    Axis axis;
    int position;
    int n;

    /// Dense coefficient * generator.
    [[nodiscard]] DenseMatrix dense() const;
};

struct LiftedEigenPair {
    Amplitude lambda;
    std::vector<Amplitude> vec;
};

/// Eigenpairs of the order-2^{n-j+1} block of a controlled gate (i < j):
/// for each eigenpair s of u and r = 0..2^{n-j}-1, the vector with the
/// eigenvector components at slots r and r + 2^{n-j}. Grouped by s.
std::vector<LiftedEigenPair> eigvecs_uhat1(int n, int i, int j,
                                           const EigenPairs2 &pairs);

/// Eigenpairs of the order (2^{n-j+1} - 2^{n-i}) block (i > j) with
/// eigenvalue of u: odd row blocks l and p = 0..2^{n-i}-1. Grouped by s.
std::vector<LiftedEigenPair> eigvecs_uhat_igj(int n, int i, int j,
                                              const EigenPairs2 &pairs);

LocalHamiltonian hamiltonian_ilj(const ControlledGateSpec &spec,
                                 const EigenPairs2 &pairs);
LocalHamiltonian hamiltonian_igj(const ControlledGateSpec &spec,
                                 const EigenPairs2 &pairs);

/// Dispatches on the control/target order and computes eigenpairs of u.
LocalHamiltonian hamiltonian_cu(const ControlledGateSpec &spec);

LocalHamiltonian hamiltonian_sj(int n, int j, const EigenPairs2 &pairs);

/// theta_j / 2 weighted Pauli generators for a string of rotations.
std::vector<PauliStringTerm>
rotation_string_hamiltonians(std::span<const Axis> axes,
                             std::span<const double> thetas);

/// Sum of the dense Pauli string terms.
DenseMatrix pauli_sum_dense(std::span<const PauliStringTerm> terms);

/// exp(-iH) = I + sum (e^{-iz} - 1) w w^dagger. Requires orthonormal terms.
DenseMatrix exp_minus_iH(const LocalHamiltonian &h);

/// sum z w w^dagger.
DenseMatrix realize_dense(const LocalHamiltonian &h);

} // namespace sparsepqc
