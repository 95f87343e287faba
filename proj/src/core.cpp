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
#include "sparsepqc/core.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

namespace sparsepqc {

Axis parse_axis(std::string_view name) {
    if (name == "x" || name == "X") {
        return Axis::X;
    }
    if (name == "y" || name == "Y") {
        return Axis::Y;
    }
    if (name == "z" || name == "Z") {
        return Axis::Z;
    }
    throw ValidationError("unknown rotation axis '" + std::string(name) + "'");
}

char axis_name(Axis axis) {
    switch (axis) {
    case Axis::X:
        return 'x';
    case Axis::Y:
        return 'y';
    case Axis::Z:
        return 'z';
    }
    return '?';
}

// ---------------------------------------------------------------------------
// DenseMatrix

DenseMatrix::DenseMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

DenseMatrix::DenseMatrix(std::size_t dim, std::vector<Amplitude> data)
    : dim_(dim), data_(std::move(data)) {
    if (data_.size() != dim_ * dim_) {
        throw ValidationError("dense matrix data does not match dimension");
    }
}

DenseMatrix DenseMatrix::identity(std::size_t dim) {
    DenseMatrix m(dim);
    for (std::size_t k = 0; k < dim; ++k) {
        m(k, k) = 1.0;
    }
    return m;
}

DenseMatrix DenseMatrix::adjoint() const {
    DenseMatrix out(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

DenseMatrix DenseMatrix::operator*(const DenseMatrix &rhs) const {
    if (rhs.dim_ != dim_) {
        throw ValidationError("dense matrix product: dimension mismatch");
    }
    DenseMatrix out(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t k = 0; k < dim_; ++k) {
            const Amplitude a = (*this)(r, k);
            if (a == Amplitude{}) {
                continue;
            }
            for (std::size_t c = 0; c < dim_; ++c) {
                out(r, c) += a * rhs(k, c);
            }
        }
    }
    return out;
}

DenseMatrix &DenseMatrix::operator+=(const DenseMatrix &rhs) {
    if (rhs.dim_ != dim_) {
        throw ValidationError("dense matrix sum: dimension mismatch");
    }
    for (std::size_t k = 0; k < data_.size(); ++k) {
        data_[k] += rhs.data_[k];
    }
    return *this;
}

DenseMatrix DenseMatrix::operator-(const DenseMatrix &rhs) const {
    if (rhs.dim_ != dim_) {
        throw ValidationError("dense matrix difference: dimension mismatch");
    }
    DenseMatrix out(*this);
    for (std::size_t k = 0; k < data_.size(); ++k) {
        out.data_[k] -= rhs.data_[k];
    }
    return out;
}

std::vector<Amplitude>
DenseMatrix::apply(const std::vector<Amplitude> &vec) const {
    if (vec.size() != dim_) {
        throw ValidationError("dense mat-vec: dimension mismatch");
    }
    std::vector<Amplitude> out(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        Amplitude acc{};
        for (std::size_t c = 0; c < dim_; ++c) {
            acc += (*this)(r, c) * vec[c];
        }
        out[r] = acc;
    }
    return out;
}

double DenseMatrix::max_abs() const {
    double best = 0.0;
    for (const auto &v : data_) {
        best = std::max(best, std::abs(v));
    }
    return best;
}

double DenseMatrix::frobenius_norm() const {
    double acc = 0.0;
    for (const auto &v : data_) {
        acc += std::norm(v);
    }
    return std::sqrt(acc);
}

DenseMatrix kron(const DenseMatrix &a, const DenseMatrix &b) {
    const std::size_t n = a.dim();
    const std::size_t m = b.dim();
    DenseMatrix out(n * m);
    for (std::size_t ar = 0; ar < n; ++ar) {
        for (std::size_t ac = 0; ac < n; ++ac) {
            const Amplitude x = a(ar, ac);
            if (x == Amplitude{}) {
                continue;
            }
            for (std::size_t br = 0; br < m; ++br) {
                for (std::size_t bc = 0; bc < m; ++bc) {
                    out(ar * m + br, ac * m + bc) = x * b(br, bc);
                }
            }
        }
    }
    return out;
}

bool validate_unitary(const DenseMatrix &m, double tol) {
    const std::size_t d = m.dim();
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) {
            Amplitude acc{};
            for (std::size_t k = 0; k < d; ++k) {
                acc += std::conj(m(k, r)) * m(k, c);
            }
            if (r == c) {
                acc -= 1.0;
            }
            if (!(std::abs(acc) <= tol)) {
                return false;
            }
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// OneQubitGate

OneQubitGate::OneQubitGate() : m_{1.0, 0.0, 0.0, 1.0} {}

OneQubitGate::OneQubitGate(Amplitude u11, Amplitude u12, Amplitude u21,
                           Amplitude u22, double tol)
    : m_{u11, u12, u21, u22} {
    for (const auto &v : m_) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            throw ValidationError("gate entries must be finite");
        }
    }
    if (!validate_unitary(dense(), tol)) {
        throw ValidationError("gate is not unitary");
    }
}

OneQubitGate OneQubitGate::pauli_x() { return {0.0, 1.0, 1.0, 0.0}; }
OneQubitGate OneQubitGate::pauli_y() { return {0.0, -kI, kI, 0.0}; }
OneQubitGate OneQubitGate::pauli_z() { return {1.0, 0.0, 0.0, -1.0}; }

OneQubitGate OneQubitGate::hadamard() {
    const double h = 1.0 / std::sqrt(2.0);
    return {h, h, h, -h};
}

OneQubitGate OneQubitGate::phase_s() { return {1.0, 0.0, 0.0, kI}; }

OneQubitGate OneQubitGate::phase_t() {
    return {1.0, 0.0, 0.0, std::polar(1.0, kPi / 4.0)};
}

OneQubitGate OneQubitGate::named(std::string_view name) {
    if (name == "i" || name == "id") {
        return identity();
    }
    if (name == "x") {
        return pauli_x();
    }
    if (name == "y") {
        return pauli_y();
    }
    if (name == "z") {
        return pauli_z();
    }
    if (name == "h") {
        return hadamard();
    }
    if (name == "s") {
        return phase_s();
    }
    if (name == "t") {
        return phase_t();
    }
    throw ValidationError("unknown gate '" + std::string(name) + "'");
}

OneQubitGate OneQubitGate::operator*(const OneQubitGate &rhs) const {
    const auto &a = m_;
    const auto &b = rhs.m_;
    // Products of unitaries drift by a few ulps; check loosely.
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
            a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3], 1e-10};
}

OneQubitGate OneQubitGate::adjoint() const {
    return {std::conj(m_[0]), std::conj(m_[2]), std::conj(m_[1]),
            std::conj(m_[3])};
}

DenseMatrix OneQubitGate::dense() const {
    return DenseMatrix(2, {m_[0], m_[1], m_[2], m_[3]});
}

bool OneQubitGate::is_identity() const {
    return m_[0] == 1.0 && m_[1] == 0.0 && m_[2] == 0.0 && m_[3] == 1.0;
}

OneQubitGate rotation_gate(Axis axis, double theta) {
    if (!std::isfinite(theta)) {
        throw ValidationError("rotation angle must be finite");
    }
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    switch (axis) {
    case Axis::X:
        return {c, -kI * s, -kI * s, c};
    case Axis::Y:
        return {c, -s, s, c};
    case Axis::Z:
        return {std::polar(1.0, -theta / 2.0), 0.0, 0.0,
                std::polar(1.0, theta / 2.0)};
    }
    throw ValidationError("unknown rotation axis");
}

// ---------------------------------------------------------------------------
// Eigenpairs and phases

namespace {

std::array<Amplitude, 2> normalize_phase(std::array<Amplitude, 2> v) {
    const double norm = std::sqrt(std::norm(v[0]) + std::norm(v[1]));
    v[0] /= norm;
    v[1] /= norm;
    const Amplitude pivot = std::abs(v[0]) > 1e-14 ? v[0] : v[1];
    const Amplitude rot = std::conj(pivot) / std::abs(pivot);
    v[0] *= rot;
    v[1] *= rot;
    // Force the pivot to be exactly real.
    if (std::abs(v[0]) > 1e-14) {
        v[0] = std::abs(v[0]);
    } else {
        v[1] = std::abs(v[1]);
    }
    return v;
}

} // namespace

std::array<EigenPair2, 2> eigenpairs_2x2(const OneQubitGate &u) {
    const Amplitude det = u.u11() * u.u22() - u.u12() * u.u21();
    if (std::abs(std::abs(det) - 1.0) > 1e-10) {
        throw ValidationError("eigenpairs_2x2: input is not unitary");
    }
    const double alpha = std::arg(det) / 2.0;
    const Amplitude unphase = std::polar(1.0, -alpha);
    const Amplitude a11 = u.u11() * unphase;
    const Amplitude a12 = u.u12() * unphase;
    const Amplitude a21 = u.u21() * unphase;
    const Amplitude a22 = u.u22() * unphase;

    // (V - V^dagger) / 2i for V = e^{-i alpha} U is sin(w) N with N a
    // traceless Hermitian involution: [[zd, w], [conj(w), -zd]].
    const double zd = 0.5 * (a11.imag() - a22.imag());
    const Amplitude w = (a12 - std::conj(a21)) / (2.0 * kI);
    const double r = std::sqrt(zd * zd + std::norm(w));
    const double cos_part = 0.5 * (a11.real() + a22.real());

    std::array<EigenPair2, 2> pairs;
    if (2.0 * r < kDegenerateTol) {
        pairs[0] = {u.u11() / std::abs(u.u11()), {1.0, 0.0}};
        pairs[1] = {u.u22() / std::abs(u.u22()), {0.0, 1.0}};
        return pairs;
    }

    std::array<Amplitude, 2> plus;
    if (zd >= 0.0) {
        plus = {zd + r, std::conj(w)};
    } else {
        plus = {w, r - zd};
    }
    plus = normalize_phase(plus);
    std::array<Amplitude, 2> minus =
        normalize_phase({-std::conj(plus[1]), std::conj(plus[0])});

    const double omega = std::atan2(r, cos_part);
    pairs[0] = {std::polar(1.0, alpha + omega), plus};
    pairs[1] = {std::polar(1.0, alpha - omega), minus};

    const double first0 = std::norm(pairs[0].vec[0]);
    const double first1 = std::norm(pairs[1].vec[0]);
    bool swap = false;
    if (std::abs(first0 - first1) > 1e-12) {
        swap = first1 > first0;
    } else {
        swap = std::abs(phase_of(pairs[1].lambda).z) <
               std::abs(phase_of(pairs[0].lambda).z);
    }
    if (swap) {
        std::swap(pairs[0], pairs[1]);
    }
    return pairs;
}

Phase phase_of(Amplitude lambda) {
    if (std::abs(std::abs(lambda) - 1.0) > kUnitaryTol) {
        throw ValidationError("phase_of: eigenvalue is not of unit modulus");
    }
    if (lambda == Amplitude{1.0, 0.0}) {
        return {0.0};
    }
    double z = -std::arg(lambda);
    if (z <= -kPi) {
        z += 2.0 * kPi;
    }
    return {z};
}

std::string format_real(double v) {
    std::array<char, 64> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), ptr);
}

} // namespace sparsepqc
