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

// Line-oriented circuit format:
//
//   # comment
//   qubits 4
//   rx q1 $t1            rotation, angle literal or $name
//   u q2 h               fixed gate, by name or 4 entries u11 u12 u21 u22
//   cx q1 q2             controlled named gate (x y z h s t), control first
//   crz q3 q1 pi/4       controlled rotation
//   cu q1 q3 (0,1) 0 0 (0,-1)
//
// Literals: plain decimals or multiples of pi ("pi", "-pi/2", "3*pi/4").
// Complex entries are either a real literal or "(re,im)" without spaces.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sparsepqc/core.hpp"
#include "sparsepqc/engine.hpp"
#include "sparsepqc/hamiltonian.hpp"

namespace sparsepqc {

class ParseError : public std::runtime_error {
  public:
    ParseError(int line, int column, const std::string &message);
    [[nodiscard]] int line() const { return line_; }
    [[nodiscard]] int column() const { return column_; }
    [[nodiscard]] const std::string &message() const { return message_; }

  private:
    int line_;
    int column_;
    std::string message_;
};

class BindError : public std::invalid_argument {
  public:
    explicit BindError(std::vector<std::string> missing);
    [[nodiscard]] const std::vector<std::string> &missing() const {
        return missing_;
    }

  private:
    std::vector<std::string> missing_;
};

/// An angle: a numeric literal or a reference to a named parameter.
struct ParamExpr {
    double value = 0.0;
    std::string name; ///< empty for literals

    static ParamExpr literal(double v) { return {v, {}}; }
    static ParamExpr ref(std::string n) { return {0.0, std::move(n)}; }
    [[nodiscard]] bool is_ref() const { return !name.empty(); }
    bool operator==(const ParamExpr &) const = default;
};

struct TemplateOp {
    GateOp::Kind kind = GateOp::Kind::SingleQubit;
    int control = 0;
    int target = 1;
    std::optional<Axis> axis; ///< set for rotations
    ParamExpr angle;          ///< used when axis is set
    OneQubitGate u;           ///< used when axis is not set
    std::string gate_name;    ///< named fixed gate, empty for explicit entries

    bool operator==(const TemplateOp &) const = default;
};

struct CircuitTemplate {
    int n = 0;
    std::vector<TemplateOp> ops;

    /// Referenced parameter names in first-use order.
    [[nodiscard]] std::vector<std::string> parameters() const;
    bool operator==(const CircuitTemplate &) const = default;
};

using ParamTable = std::map<std::string, double>;

/// Parses a numeric angle literal; nullopt when the token is not one.
std::optional<double> parse_angle_literal(std::string_view token);

/// A real literal or "(re,im)"; nullopt when malformed.
std::optional<Amplitude> parse_complex_literal(std::string_view token);

CircuitTemplate parse_circuit(std::string_view src);

/// Canonical text form; literals use the shortest round-trip decimal form
/// so parse(serialize(t)) == t.
std::string serialize(const CircuitTemplate &tmpl);

/// Resolves every $name. Throws BindError listing all unbound names.
Circuit bind(const CircuitTemplate &tmpl, const ParamTable &params);

/// Lifts a bound circuit back to a template with literal angles.
CircuitTemplate as_template(const Circuit &circuit);

struct HeaOptions {
    Axis rotation_axis = Axis::X;
    Axis entangler_axis = Axis::X;
    /// Four rotation columns and unparametrized CX entanglers (16 angles on
    /// four qubits) instead of three columns plus controlled rotations.
    bool paper16 = false;
};

/// Layered hardware-efficient ansatz: per layer, rotation columns on every
/// qubit, then a chain of controlled gates C(i -> i+1).
CircuitTemplate hea_template(int n, int layers, const HeaOptions &opts = {});

struct HamiltonianGroup {
    enum class Kind { String, Controlled };

    Kind kind;
    std::size_t dim; ///< 2^n
    std::size_t first_op; ///< index of the first op in the circuit
    std::size_t op_count;
    /// Commuting factors; the group unitary is the product of exp(-iH).
    std::vector<LocalHamiltonian> factors;
    /// Generator form for groups built only from rotations.
    std::optional<std::vector<PauliStringTerm>> pauli;

    /// Sum of the factors as a dense Hermitian matrix.
    [[nodiscard]] DenseMatrix dense_hamiltonian() const;
    /// Product of exp_minus_iH over the factors.
    [[nodiscard]] DenseMatrix unitary() const;
};

/// Splits the circuit into local factors U_K ... U_1: maximal runs of
/// single-qubit gates on distinct qubits form a string group, and each
/// controlled gate forms its own group.
std::vector<HamiltonianGroup> circuit_hamiltonians(const Circuit &circuit);

/// Product of the group unitaries in circuit order.
DenseMatrix reconstruct_unitary(const std::vector<HamiltonianGroup> &groups,
                                int n);

} // namespace sparsepqc
