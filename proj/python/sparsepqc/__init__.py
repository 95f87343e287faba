# Copyright 2026 The sparsepqc Authors.
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#     http://www.apache.org/licenses/LICENSE-2.0
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Sparse controlled-gate unitaries, local Hamiltonians and a state-vector
engine for parametrized circuits."""

from ._sparsepqc import (
    Axis,
    Circuit,
    CircuitTemplate,
    LocalHamiltonian,
    OneQubitGate,
    ParseError,
    SparseUnitary,
    ValidationError,
    apply_controlled,
    apply_single_qubit,
    build_cu_sparse,
    build_sj_sparse,
    eigenpairs_2x2,
    exp_oracle,
    frobenius_error,
    gate_hamiltonian_sweep,
    hamiltonian_cu,
    hamiltonian_sj,
    hea_template,
    parse_circuit,
    phase_of,
    rotation_gate,
    run_cli,
    string_hamiltonian_sweep,
)

__version__ = "0.1.0"

__all__ = [
    "Axis",
    "Circuit",
    "CircuitTemplate",
    "LocalHamiltonian",
    "OneQubitGate",
    "ParseError",
    "SparseUnitary",
    "ValidationError",
    "apply_controlled",
    "apply_single_qubit",
    "build_cu_sparse",
    "build_sj_sparse",
    "eigenpairs_2x2",
    "exp_oracle",
    "frobenius_error",
    "gate_hamiltonian_sweep",
    "hamiltonian_cu",
    "hamiltonian_sj",
    "hea_template",
    "parse_circuit",
    "phase_of",
    "rotation_gate",
    "run_cli",
    "string_hamiltonian_sweep",
]
