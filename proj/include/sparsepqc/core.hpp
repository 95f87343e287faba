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

#include <array>
#include <complex>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sparsepqc {

using Amplitude = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr Amplitude kI{0.0, 1.0};

/// Default entrywise tolerance for unitarity checks.
inline constexpr double kUnitaryTol = 1e-12;

/// Eigenvalues closer than this are treated as degenerate.
inline constexpr double kDegenerateTol = 1e-10;

/// Raised when an input violates a documented precondition (bad positions,
/// non-unitary gates, mismatched sizes).
class ValidationError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

enum class Axis { X, Y, Z };

Axis parse_axis(std::string_view name);
char axis_name(Axis axis);

/**
 * @brief Square complex matrix stored row-major.
 *
 * Used for oracles, small blocks and reference constructions. Nothing in the
 * simulation hot path depends on it.
 */
class DenseMatrix {
  public:
    DenseMatrix() = default;
    explicit DenseMatrix(std::size_t dim);
    DenseMatrix(std::size_t dim, std::vector<Amplitude> data);

    static DenseMatrix identity(std::size_t dim);

    [[nodiscard]] std::size_t dim() const { return dim_; }
    [[nodiscard]] const std::vector<Amplitude> &data() const { return data_; }

    Amplitude &operator()(std::size_t row, std::size_t col) {
        return data_[row * dim_ + col];
    }
    const Amplitude &operator()(std::size_t row, std::size_t col) const {
        return data_[row * dim_ + col];
    }

    [[nodiscard]] DenseMatrix adjoint() const;
    [[nodiscard]] DenseMatrix operator*(const DenseMatrix &rhs) const;
    DenseMatrix &operator+=(const DenseMatrix &rhs);
    [[nodiscard]] DenseMatrix operator-(const DenseMatrix &rhs) const;
    [[nodiscard]] std::vector<Amplitude>
    apply(const std::vector<Amplitude> &vec) const;

    /// Largest entrywise modulus.
    [[nodiscard]] double max_abs() const;
    [[nodiscard]] double frobenius_norm() const;

    bool operator==(const DenseMatrix &) const = default;

  private:
    std::size_t dim_ = 0;
    std::vector<Amplitude> data_;
};

DenseMatrix kron(const DenseMatrix &a, const DenseMatrix &b);

/// 2x2 unitary. Construction validates U^dagger U = I entrywise.
class OneQubitGate {
  public:
    /// Identity gate.
    OneQubitGate();
    OneQubitGate(Amplitude u11, Amplitude u12, Amplitude u21, Amplitude u22,
                 double tol = kUnitaryTol);

    static OneQubitGate identity() { return {}; }
    static OneQubitGate pauli_x();
    static OneQubitGate pauli_y();
    static OneQubitGate pauli_z();
    static OneQubitGate hadamard();
    static OneQubitGate phase_s();
    static OneQubitGate phase_t();

    /// Looks up a named fixed gate: i/id, x, y, z, h, s, t.
    static OneQubitGate named(std::string_view name);

    [[nodiscard]] Amplitude u11() const { return m_[0]; }
    [[nodiscard]] Amplitude u12() const { return m_[1]; }
    [[nodiscard]] Amplitude u21() const { return m_[2]; }
    [[nodiscard]] Amplitude u22() const { return m_[3]; }

    /// 0-based row/column access.
    [[nodiscard]] Amplitude operator()(std::size_t row, std::size_t col) const {
        return m_[2 * row + col];
    }
    [[nodiscard]] const std::array<Amplitude, 4> &entries() const {
        return m_;
    }

    [[nodiscard]] OneQubitGate operator*(const OneQubitGate &rhs) const;
    [[nodiscard]] OneQubitGate adjoint() const;
    [[nodiscard]] DenseMatrix dense() const;
    [[nodiscard]] bool is_identity() const;

    bool operator==(const OneQubitGate &) const = default;

  private:
    std::array<Amplitude, 4> m_;
};

/// Unit eigenvector `vec` of a 2x2 unitary with unit-modulus eigenvalue.
struct EigenPair2 {
    Amplitude lambda;
    std::array<Amplitude, 2> vec;
};

/// Real weight z with e^{-iz} = lambda, z in (-pi, pi].
struct Phase {
    double z = 0.0;
};

/// R_axis(theta) = exp(-i theta sigma_axis / 2).
OneQubitGate rotation_gate(Axis axis, double theta);

/**
 * @brief Closed-form orthonormal eigenpairs of a 2x2 unitary.
 *
 * The gate is split as e^{i alpha} (cos w I + i sin w N) with N a traceless
 * Hermitian involution, so the eigenvalue gap is taken from the magnitude of
 * the anti-Hermitian part rather than from a quadratic discriminant. This
 * keeps residuals near machine precision for nearly degenerate gates.
 *
 * Ordering: the pair whose eigenvector has the larger first component comes
 * first; ties go to the smaller |z|. Each eigenvector is scaled so its first
 * component (or the second, if the first vanishes) is real and positive.
 * When the eigenvalues are within kDegenerateTol the canonical basis is
 * returned with eigenvalues u11/|u11| and u22/|u22|.
 */
std::array<EigenPair2, 2> eigenpairs_2x2(const OneQubitGate &u);

/// Principal weight z = -arg(lambda) in (-pi, pi]; phase_of(1) is exactly 0.
Phase phase_of(Amplitude lambda);

/// True iff max |M^dagger M - I| <= tol.
bool validate_unitary(const DenseMatrix &m, double tol = kUnitaryTol);

/// Shortest decimal text that parses back to the same double.
std::string format_real(double v);

} // namespace sparsepqc
