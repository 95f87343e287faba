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
#include "sparsepqc/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_map>

namespace sparsepqc {

namespace {

std::vector<std::size_t> support(const std::vector<Amplitude> &w) {
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (w[k] != Amplitude{}) {
            idx.push_back(k);
        }
    }
    return idx;
}

DenseMatrix pauli(Axis axis) {
    switch (axis) {
    case Axis::X:
        return DenseMatrix(2, {0.0, 1.0, 1.0, 0.0});
    case Axis::Y:
        return DenseMatrix(2, {0.0, -kI, kI, 0.0});
    case Axis::Z:
        return DenseMatrix(2, {1.0, 0.0, 0.0, -1.0});
    }
    throw ValidationError("unknown axis");
}

} // namespace

// ---------------------------------------------------------------------------
// LocalHamiltonian

LocalHamiltonian::LocalHamiltonian(std::size_t dim,
                                   std::vector<ProjectorTerm> terms)
    : dim_(dim) {
    for (auto &t : terms) {
        add_term(t.z, std::move(t.w));
    }
}

void LocalHamiltonian::add_term(double z, std::vector<Amplitude> w) {
    if (w.size() != dim_) {
        throw ValidationError("projector vector length does not match dim");
    }
    if (!std::isfinite(z) || z <= -kPi - 1e-12 || z > kPi + 1e-12) {
        throw ValidationError("projector weight outside (-pi, pi]");
    }
    if (std::abs(z) < kZeroPhase) {
        return;
    }
    terms_.push_back({z, std::move(w)});
}

double LocalHamiltonian::orthonormality_defect() const {
    // Inner products only need the overlapping supports; the builders
    // produce 2-sparse vectors, so this stays linear in the term count.
    std::unordered_map<std::size_t, std::vector<std::size_t>> by_index;
    double defect = 0.0;
    for (std::size_t t = 0; t < terms_.size(); ++t) {
        double norm2 = 0.0;
        for (const auto k : support(terms_[t].w)) {
            norm2 += std::norm(terms_[t].w[k]);
            by_index[k].push_back(t);
        }
        defect = std::max(defect, std::abs(norm2 - 1.0));
    }
    std::unordered_map<std::uint64_t, Amplitude> overlaps;
    for (const auto &[k, owners] : by_index) {
        for (std::size_t a = 0; a < owners.size(); ++a) {
            for (std::size_t b = a + 1; b < owners.size(); ++b) {
                const auto ta = owners[a];
                const auto tb = owners[b];
                overlaps[ta * terms_.size() + tb] +=
                    std::conj(terms_[ta].w[k]) * terms_[tb].w[k];
            }
        }
    }
    for (const auto &[key, value] : overlaps) {
        defect = std::max(defect, std::abs(value));
    }
    return defect;
}

DenseMatrix PauliStringTerm::dense() const {
    DenseMatrix gen = kron(kron(DenseMatrix::identity(pow2(position - 1)),
                                pauli(axis)),
                           DenseMatrix::identity(pow2(n - position)));
    for (std::size_t r = 0; r < gen.dim(); ++r) {
        for (std::size_t c = 0; c < gen.dim(); ++c) {
            gen(r, c) *= coefficient;
        }
    }
    return gen;
}

// ---------------------------------------------------------------------------
// Eigenpair lifting

std::vector<LiftedEigenPair> eigvecs_uhat1(int n, int i, int j,
                                           const EigenPairs2 &pairs) {
    ControlledGateSpec{n, i, j, {}}.validate();
    if (i >= j) {
        throw ValidationError("eigvecs_uhat1 requires control < target");
    }
    const BasisIndex stride = pow2(n - j);
    std::vector<LiftedEigenPair> out;
    out.reserve(2 * stride);
    for (const auto &pair : pairs) {
        for (BasisIndex r = 0; r < stride; ++r) {
            std::vector<Amplitude> v(2 * stride);
            v[r] = pair.vec[0];
            v[r + stride] = pair.vec[1];
            out.push_back({pair.lambda, std::move(v)});
        }
    }
    return out;
}

std::vector<LiftedEigenPair> eigvecs_uhat_igj(int n, int i, int j,
                                              const EigenPairs2 &pairs) {
    ControlledGateSpec{n, i, j, {}}.validate();
    if (i <= j) {
        throw ValidationError("eigvecs_uhat_igj requires control > target");
    }
    const BasisIndex block = pow2(n - i);
    const BasisIndex stride = pow2(n - j);
    const BasisIndex order = pow2(n - j + 1) - block;
    const BasisIndex upper_count = pow2(i - j);
    std::vector<LiftedEigenPair> out;
    out.reserve(stride);
    for (const auto &pair : pairs) {
        for (BasisIndex l = 1; l < upper_count; l += 2) {
            for (BasisIndex p = 0; p < block; ++p) {
                std::vector<Amplitude> v(order);
                const BasisIndex slot = p + (l - 1) * block;
                v[slot] = pair.vec[0];
                v[slot + stride] = pair.vec[1];
                out.push_back({pair.lambda, std::move(v)});
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Hamiltonians

LocalHamiltonian hamiltonian_ilj(const ControlledGateSpec &spec,
                                 const EigenPairs2 &pairs) {
    spec.validate();
    if (spec.i >= spec.j) {
        throw ValidationError("hamiltonian_ilj requires control < target");
    }
    const auto [n, i, j, u] = spec;
    const BasisIndex dim = pow2(n);
    const BasisIndex block = pow2(n - i);
    const BasisIndex span = pow2(n - j + 1);
    const BasisIndex sub_blocks = pow2(j - i - 1);
    const BasisIndex controlled = pow2(i - 1);
    const auto lifted = eigvecs_uhat1(n, i, j, pairs);

    LocalHamiltonian h(dim);
    for (const auto &ep : lifted) {
        const double z = phase_of(ep.lambda).z;
        if (std::abs(z) < kZeroPhase) {
            continue;
        }
        const auto nz = support(ep.vec);
        // f_{2 beta} (x) e_l (x) v: the beta-th control block, l-th copy.
        for (BasisIndex beta = 0; beta < controlled; ++beta) {
            for (BasisIndex l = 0; l < sub_blocks; ++l) {
                const BasisIndex offset = (2 * beta + 1) * block + l * span;
                std::vector<Amplitude> w(dim);
                for (const auto k : nz) {
                    w[offset + k] = ep.vec[k];
                }
                h.add_term(z, std::move(w));
            }
        }
    }
    return h;
}

LocalHamiltonian hamiltonian_igj(const ControlledGateSpec &spec,
                                 const EigenPairs2 &pairs) {
    spec.validate();
    if (spec.i <= spec.j) {
        throw ValidationError("hamiltonian_igj requires control > target");
    }
    const auto [n, i, j, u] = spec;
    const BasisIndex dim = pow2(n);
    const BasisIndex block = pow2(n - i);
    const BasisIndex span = pow2(n - j + 1);
    const BasisIndex copies = pow2(j - 1);
    const auto lifted = eigvecs_uhat_igj(n, i, j, pairs);

    LocalHamiltonian h(dim);
    for (const auto &ep : lifted) {
        const double z = phase_of(ep.lambda).z;
        if (std::abs(z) < kZeroPhase) {
            continue;
        }
        const auto nz = support(ep.vec);
        // f_k (x) [0_{2^{n-i}}; v].
        for (BasisIndex k = 0; k < copies; ++k) {
            const BasisIndex offset = k * span + block;
            std::vector<Amplitude> w(dim);
            for (const auto idx : nz) {
                w[offset + idx] = ep.vec[idx];
            }
            h.add_term(z, std::move(w));
        }
    }
    return h;
}

LocalHamiltonian hamiltonian_cu(const ControlledGateSpec &spec) {
    spec.validate();
    const auto pairs = eigenpairs_2x2(spec.u);
    return spec.i < spec.j ? hamiltonian_ilj(spec, pairs)
                           : hamiltonian_igj(spec, pairs);
}

LocalHamiltonian hamiltonian_sj(int n, int j, const EigenPairs2 &pairs) {
    check_qubit(j, n);
    const BasisIndex dim = pow2(n);
    const BasisIndex stride = pow2(n - j);
    const BasisIndex copies = pow2(j - 1);
    LocalHamiltonian h(dim);
    for (const auto &pair : pairs) {
        const double z = phase_of(pair.lambda).z;
        if (std::abs(z) < kZeroPhase) {
            continue;
        }
        for (BasisIndex m = 0; m < copies; ++m) {
            for (BasisIndex r = 0; r < stride; ++r) {
                std::vector<Amplitude> w(dim);
                const BasisIndex base = m * 2 * stride + r;
                w[base] = pair.vec[0];
                w[base + stride] = pair.vec[1];
                h.add_term(z, std::move(w));
            }
        }
    }
    return h;
}

std::vector<PauliStringTerm>
rotation_string_hamiltonians(std::span<const Axis> axes,
                             std::span<const double> thetas) {
    if (axes.size() != thetas.size()) {
        throw ValidationError("rotation string: " +
                              std::to_string(axes.size()) + " axes but " +
                              std::to_string(thetas.size()) + " angles");
    }
    const int n = static_cast<int>(axes.size());
    check_register(n);
    std::vector<PauliStringTerm> out;
    out.reserve(axes.size());
    for (int q = 1; q <= n; ++q) {
        const double theta = thetas[q - 1];
        if (!std::isfinite(theta)) {
            throw ValidationError("rotation angle must be finite");
        }
        out.push_back({theta / 2.0, axes[q - 1], q, n});
    }
    return out;
}

DenseMatrix pauli_sum_dense(std::span<const PauliStringTerm> terms) {
    if (terms.empty()) {
        return DenseMatrix(1);
    }
    DenseMatrix acc(pow2(terms.front().n));
    for (const auto &t : terms) {
        acc += t.dense();
    }
    return acc;
}

DenseMatrix exp_minus_iH(const LocalHamiltonian &h) {
    if (h.orthonormality_defect() > kOrthoTol) {
        throw ValidationError("exp_minus_iH: projector terms not orthonormal");
    }
    DenseMatrix out = DenseMatrix::identity(h.dim());
    for (const auto &t : h.terms()) {
        const Amplitude scale = std::polar(1.0, -t.z) - 1.0;
        const auto nz = support(t.w);
        for (const auto r : nz) {
            for (const auto c : nz) {
                out(r, c) += scale * t.w[r] * std::conj(t.w[c]);
            }
        }
    }
    return out;
}

DenseMatrix realize_dense(const LocalHamiltonian &h) {
    DenseMatrix out(h.dim());
    for (const auto &t : h.terms()) {
        const auto nz = support(t.w);
        for (const auto r : nz) {
            for (const auto c : nz) {
                out(r, c) += t.z * t.w[r] * std::conj(t.w[c]);
            }
        }
    }
    return out;
}

} // namespace sparsepqc
