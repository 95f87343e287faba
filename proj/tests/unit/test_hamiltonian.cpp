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
#include <array>
#include <random>

#include <gtest/gtest.h>

#include "sparsepqc/hamiltonian.hpp"
#include "sparsepqc/verify.hpp"
#include "test_util.hpp"

namespace sparsepqc {
namespace {

using testing::generic_gate;
using testing::max_abs_diff;

double residual(const DenseMatrix &m, const LiftedEigenPair &ep) {
    const auto mv = m.apply(ep.vec);
    double r = 0.0;
    for (std::size_t k = 0; k < mv.size(); ++k) {
        r = std::max(r, std::abs(mv[k] - ep.lambda * ep.vec[k]));
    }
    return r;
}

DenseMatrix outer(const std::vector<Amplitude> &w) {
    DenseMatrix m(w.size());
    for (std::size_t r = 0; r < w.size(); ++r) {
        for (std::size_t c = 0; c < w.size(); ++c) {
            m(r, c) = w[r] * std::conj(w[c]);
        }
    }
    return m;
}

TEST(EigvecsUhat1, SmallestCaseIsGateEigenvectors) {
    const OneQubitGate u = generic_gate();
    const auto pairs = eigenpairs_2x2(u);
    const auto lifted = eigvecs_uhat1(2, 1, 2, pairs);
    ASSERT_EQ(lifted.size(), 2U);
    for (int s = 0; s < 2; ++s) {
        EXPECT_EQ(lifted[s].vec[0], pairs[s].vec[0]);
        EXPECT_EQ(lifted[s].vec[1], pairs[s].vec[1]);
    }
}

TEST(EigvecsUhat1, N5I2J4Layout) {
    const OneQubitGate u = generic_gate();
    const auto pairs = eigenpairs_2x2(u);
    const auto lifted = eigvecs_uhat1(5, 2, 4, pairs);
    ASSERT_EQ(lifted.size(), 4U);
    const auto &v = lifted[0].vec;
    ASSERT_EQ(v.size(), 4U);
    EXPECT_EQ(v[0], pairs[0].vec[0]);
    EXPECT_EQ(v[1], Amplitude(0.0));
    EXPECT_EQ(v[2], pairs[0].vec[1]);
    EXPECT_EQ(v[3], Amplitude(0.0));
    const DenseMatrix blk = build_uhat1_ilj(5, 2, 4, u);
    for (const auto &ep : lifted) {
        EXPECT_LT(residual(blk, ep), 1e-12);
    }
    EXPECT_THROW(eigvecs_uhat1(5, 4, 2, pairs), ValidationError);
}

TEST(EigvecsUhatIgj, SmallestCase) {
    const OneQubitGate u = generic_gate();
    const auto pairs = eigenpairs_2x2(u);
    const auto lifted = eigvecs_uhat_igj(2, 2, 1, pairs);
    ASSERT_EQ(lifted.size(), 2U);
    for (int s = 0; s < 2; ++s) {
        const auto &v = lifted[s].vec;
        ASSERT_EQ(v.size(), 3U);
        EXPECT_EQ(v[0], pairs[s].vec[0]);
        EXPECT_EQ(v[1], Amplitude(0.0));
        EXPECT_EQ(v[2], pairs[s].vec[1]);
    }
    EXPECT_THROW(eigvecs_uhat_igj(2, 1, 2, pairs), ValidationError);
}

TEST(EigvecsUhatIgj, MultiplicityAndResiduals) {
    std::mt19937_64 rng(4);
    for (int n = 2; n <= 6; ++n) {
        for (int j = 1; j <= n; ++j) {
            for (int i = j + 1; i <= n; ++i) {
                const OneQubitGate u = random_unitary(rng);
                const auto pairs = eigenpairs_2x2(u);
                const auto lifted = eigvecs_uhat_igj(n, i, j, pairs);
                ASSERT_EQ(lifted.size(), pow2(n - j));
                std::size_t first = 0;
                for (const auto &ep : lifted) {
                    first += ep.lambda == pairs[0].lambda ? 1 : 0;
                }
                ASSERT_EQ(first, pow2(n - j - 1));
                const DenseMatrix blk = build_uhat_igj(n, i, j, u).to_dense();
                for (const auto &ep : lifted) {
                    ASSERT_LT(residual(blk, ep), 1e-12);
                }
            }
        }
    }
}

TEST(EigvecsUhatIgj, PauliZResiduals) {
    const OneQubitGate z = OneQubitGate::pauli_z();
    const DenseMatrix blk = build_uhat_igj(3, 3, 1, z).to_dense();
    for (const auto &ep : eigvecs_uhat_igj(3, 3, 1, eigenpairs_2x2(z))) {
        EXPECT_LT(residual(blk, ep), 1e-12);
    }
}

TEST(HamiltonianIlj, TwoQubitProjectorForm) {
    const OneQubitGate u = generic_gate();
    const auto pairs = eigenpairs_2x2(u);
    const LocalHamiltonian h = hamiltonian_ilj({2, 1, 2, u}, pairs);
    DenseMatrix want(4);
    const DenseMatrix one(2, {0.0, 0.0, 0.0, 1.0});
    for (const auto &p : pairs) {
        const DenseMatrix vv = outer({p.vec[0], p.vec[1]});
        DenseMatrix term = kron(one, vv);
        const double z = phase_of(p.lambda).z;
        for (std::size_t r = 0; r < 4; ++r)
            for (std::size_t c = 0; c < 4; ++c) term(r, c) *= z;
        want += term;
    }
    EXPECT_LT(max_abs_diff(realize_dense(h), want), 1e-15);
}

TEST(HamiltonianIlj, IdentityGateIsEmpty) {
    const OneQubitGate i = OneQubitGate::identity();
    EXPECT_TRUE(hamiltonian_ilj({4, 1, 3, i}, eigenpairs_2x2(i)).empty());
    EXPECT_TRUE(hamiltonian_igj({4, 3, 1, i}, eigenpairs_2x2(i)).empty());
    EXPECT_TRUE(hamiltonian_sj(3, 2, eigenpairs_2x2(i)).empty());
}

TEST(HamiltonianIlj, RxReconstruction) {
    const ControlledGateSpec spec{4, 1, 2, rotation_gate(Axis::X, 0.9)};
    const LocalHamiltonian h = hamiltonian_cu(spec);
    EXPECT_LE(frobenius_error(build_cu_sparse(spec).to_dense(), exp_minus_iH(h)),
              1e-12);
}

TEST(HamiltonianIgj, TwoQubitProjectorForm) {
    const OneQubitGate u = generic_gate();
    const auto pairs = eigenpairs_2x2(u);
    const LocalHamiltonian h = hamiltonian_igj({2, 2, 1, u}, pairs);
    DenseMatrix want(4);
    for (const auto &p : pairs) {
        DenseMatrix term = outer({0.0, p.vec[0], 0.0, p.vec[1]});
        const double z = phase_of(p.lambda).z;
        for (std::size_t r = 0; r < 4; ++r)
            for (std::size_t c = 0; c < 4; ++c) term(r, c) *= z;
        want += term;
    }
    EXPECT_LT(max_abs_diff(realize_dense(h), want), 1e-15);
}

TEST(HamiltonianIgj, RyReconstruction) {
    const ControlledGateSpec spec{4, 3, 1, rotation_gate(Axis::Y, 1.3)};
    EXPECT_LE(frobenius_error(build_cu_sparse(spec).to_dense(),
                              exp_minus_iH(hamiltonian_cu(spec))),
              1e-12);
}

// Reference values from a principal matrix logarithm, H = i log(U).
TEST(HamiltonianCu, MatchesPrincipalLogarithm) {
    const LocalHamiltonian cry = hamiltonian_cu({2, 1, 2, rotation_gate(Axis::Y, 0.7)});
    DenseMatrix want(4);
    want(2, 3) = Amplitude(0.0, -0.35);
    want(3, 2) = Amplitude(0.0, 0.35);
    EXPECT_LT(max_abs_diff(realize_dense(cry), want), 1e-15);

    const LocalHamiltonian crz = hamiltonian_cu({2, 2, 1, rotation_gate(Axis::Z, 1.1)});
    DenseMatrix want_z(4);
    want_z(1, 1) = 0.55;
    want_z(3, 3) = -0.55;
    EXPECT_LT(max_abs_diff(realize_dense(crz), want_z), 1e-15);
}

TEST(HamiltonianSj, SingleQubitIsLogOfGate) {
    const OneQubitGate u = generic_gate();
    const LocalHamiltonian h = hamiltonian_sj(1, 1, eigenpairs_2x2(u));
    EXPECT_LT(max_abs_diff(exp_minus_iH(h), u.dense()), 1e-14);
    EXPECT_LT(max_abs_diff(exp_oracle(realize_dense(h)), u.dense()), 1e-13);
}

TEST(HamiltonianSj, RxReconstruction) {
    const OneQubitGate u = rotation_gate(Axis::X, 0.4);
    EXPECT_LE(frobenius_error(build_sj_sparse(3, 2, u).to_dense(),
                              exp_minus_iH(hamiltonian_sj(3, 2, eigenpairs_2x2(u)))),
              1e-12);
    EXPECT_THROW(hamiltonian_sj(3, 4, eigenpairs_2x2(u)), ValidationError);
}

TEST(HamiltonianCu, ReconstructionSweepUpToSix) {
    std::mt19937_64 rng(12);
    for (int n = 2; n <= 6; ++n) {
        for (int i = 1; i <= n; ++i) {
            for (int j = 1; j <= n; ++j) {
                if (i == j) continue;
                for (int r = 0; r < 25; ++r) {
                    const ControlledGateSpec spec{n, i, j, random_unitary(rng)};
                    const LocalHamiltonian h = hamiltonian_cu(spec);
                    ASSERT_LE(h.orthonormality_defect(), 1e-10);
                    ASSERT_LE(frobenius_error(build_cu_sparse(spec).to_dense(),
                                              exp_minus_iH(h)),
                              1e-12)
                        << n << " " << i << " " << j;
                }
            }
        }
    }
}

TEST(HamiltonianCu, TermCountPerNonUnitEigenvalue) {
    std::mt19937_64 rng(21);
    for (int n = 2; n <= 6; ++n) {
        for (int i = 1; i <= n; ++i) {
            for (int j = 1; j <= n; ++j) {
                if (i == j) continue;
                const OneQubitGate u = random_unitary(rng);
                EXPECT_EQ(hamiltonian_cu({n, i, j, u}).terms().size(),
                          2 * pow2(n - 2));
                // CNOT: eigenvalue 1 is dropped, only -1 remains.
                EXPECT_EQ(hamiltonian_cu({n, i, j, OneQubitGate::pauli_x()})
                              .terms()
                              .size(),
                          pow2(n - 2));
            }
        }
    }
}

TEST(ExpMinusIH, Examples) {
    EXPECT_EQ(exp_minus_iH(LocalHamiltonian(4)), DenseMatrix::identity(4));
    LocalHamiltonian h(2);
    h.add_term(kPi, {1.0, 0.0});
    const DenseMatrix want(2, {-1.0, 0.0, 0.0, 1.0});
    EXPECT_LT(max_abs_diff(exp_minus_iH(h), want), 1e-15);
}

TEST(ExpMinusIH, RejectsNonOrthogonalTerms) {
    LocalHamiltonian h(2);
    h.add_term(0.5, {1.0, 0.0});
    h.add_term(0.5, {std::sqrt(0.5), std::sqrt(0.5)});
    EXPECT_THROW(exp_minus_iH(h), ValidationError);
}

TEST(RealizeDense, CnotBlock) {
    EXPECT_EQ(realize_dense(LocalHamiltonian(4)), DenseMatrix(4));
    const LocalHamiltonian h = hamiltonian_cu({2, 1, 2, OneQubitGate::pauli_x()});
    ASSERT_EQ(h.terms().size(), 1U);
    EXPECT_EQ(h.terms()[0].z, kPi);
    // pi |1><1| (x) |-><-|
    DenseMatrix want(4);
    want(2, 2) = want(3, 3) = kPi / 2;
    want(2, 3) = want(3, 2) = -kPi / 2;
    EXPECT_LT(max_abs_diff(realize_dense(h), want), 1e-15);
}

TEST(RealizeDense, HermitianForRandomCrz) {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> uni(-kPi, kPi);
    for (int r = 0; r < 20; ++r) {
        const DenseMatrix m = realize_dense(
            hamiltonian_cu({4, 2, 4, rotation_gate(Axis::Z, uni(rng))}));
        EXPECT_LE((m - m.adjoint()).max_abs(), 1e-15);
    }
}

TEST(RotationStrings, ZeroAnglesGiveIdentity) {
    const std::array<Axis, 3> axes{Axis::Z, Axis::Z, Axis::Z};
    const std::array<double, 3> thetas{0.0, 0.0, 0.0};
    for (const auto &t : rotation_string_hamiltonians(axes, thetas)) {
        EXPECT_LT(max_abs_diff(exp_oracle(t.dense()), DenseMatrix::identity(8)),
                  1e-15);
    }
}

TEST(RotationStrings, TwoQubitXX) {
    const std::array<Axis, 2> axes{Axis::X, Axis::X};
    const std::array<double, 2> thetas{0.4, -1.7};
    const auto terms = rotation_string_hamiltonians(axes, thetas);
    ASSERT_EQ(terms.size(), 2U);
    EXPECT_EQ(terms[0].coefficient, 0.2);
    const DenseMatrix want =
        kron(rotation_gate(Axis::X, 0.4).dense(), rotation_gate(Axis::X, -1.7).dense());
    EXPECT_LT(max_abs_diff(exp_oracle(pauli_sum_dense(terms)), want), 1e-13);
}

TEST(RotationStrings, FourQubitUniformAxis) {
    const std::array<Axis, 4> axes{Axis::X, Axis::X, Axis::X, Axis::X};
    const std::array<double, 4> thetas{0.7, 0.7, 0.7, 0.7};
    const auto terms = rotation_string_hamiltonians(axes, thetas);
    DenseMatrix prod = DenseMatrix::identity(16);
    for (int j = 1; j <= 4; ++j) {
        prod = build_sj_sparse(4, j, rotation_gate(Axis::X, 0.7)).to_dense() * prod;
    }
    EXPECT_LE(frobenius_error(prod, exp_oracle(pauli_sum_dense(terms))), 1e-12);
}

TEST(RotationStrings, LengthMismatchRejected) {
    const std::array<Axis, 2> axes{Axis::X, Axis::Y};
    const std::array<double, 1> thetas{0.1};
    EXPECT_THROW(rotation_string_hamiltonians(axes, thetas), ValidationError);
}

} // namespace
} // namespace sparsepqc
