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
"""Smoke tests for the Python bindings, checked against numpy/scipy."""

import json

import numpy as np
import pytest
import scipy.linalg

import sparsepqc as sp

P0 = np.diag([1.0, 0.0]).astype(complex)
P1 = np.diag([0.0, 1.0]).astype(complex)


def embed(n, j, m):
    """I (x) m (x) I with m on qubit j (1-based, most significant first)."""
    return np.kron(np.kron(np.eye(2 ** (j - 1)), m), np.eye(2 ** (n - j)))


def controlled(n, i, j, u):
    return embed(n, i, P0) + embed(n, i, P1) @ embed(n, j, u)


def random_gate(rng):
    a, b, c, d = rng.uniform(-np.pi, np.pi, 4)
    rz = lambda t: np.diag([np.exp(-0.5j * t), np.exp(0.5j * t)])
    ry = lambda t: np.array([[np.cos(t / 2), -np.sin(t / 2)], [np.sin(t / 2), np.cos(t / 2)]])
    return np.exp(1j * d) * rz(a) @ ry(b) @ rz(c)


def test_rotation_matches_closed_form():
    t = 0.7
    rx = sp.rotation_gate(sp.Axis.X, t).matrix
    want = np.array([[np.cos(t / 2), -1j * np.sin(t / 2)], [-1j * np.sin(t / 2), np.cos(t / 2)]])
    assert np.abs(rx - want).max() < 1e-15


def test_phase_of_branch():
    assert sp.phase_of(1.0) == 0.0
    assert sp.phase_of(-1.0) == pytest.approx(np.pi)


@pytest.mark.parametrize("i,j", [(1, 2), (2, 1), (1, 3), (3, 1), (2, 4), (4, 2)])
def test_sparse_gate_matches_numpy_kron(i, j):
    rng = np.random.default_rng(i * 10 + j)
    u = random_gate(rng)
    s = sp.build_cu_sparse(4, i, j, sp.OneQubitGate(u))
    assert s.is_unitary()
    assert all(len(r) <= 2 for r in s.rows())
    assert np.abs(s.to_dense() - controlled(4, i, j, u)).max() < 1e-14


@pytest.mark.parametrize("i,j", [(1, 2), (3, 1), (2, 4), (4, 3)])
def test_hamiltonian_matches_scipy_expm(i, j):
    rng = np.random.default_rng(7 + i + j)
    u = random_gate(rng)
    h = sp.hamiltonian_cu(4, i, j, sp.OneQubitGate(u))
    hd = h.dense()
    assert np.abs(hd - hd.conj().T).max() < 1e-15
    assert np.linalg.norm(scipy.linalg.expm(-1j * hd) - controlled(4, i, j, u)) < 1e-12
    assert np.abs(h.exp_minus_iH() - controlled(4, i, j, u)).max() < 1e-13


def test_kernels_match_numpy():
    rng = np.random.default_rng(3)
    psi = rng.normal(size=32) + 1j * rng.normal(size=32)
    psi /= np.linalg.norm(psi)
    u = random_gate(rng)
    g = sp.OneQubitGate(u)
    assert np.abs(sp.apply_single_qubit(psi, 3, g) - embed(5, 3, u) @ psi).max() < 1e-14
    assert np.abs(sp.apply_controlled(psi, 4, 2, g) - controlled(5, 4, 2, u) @ psi).max() < 1e-14


def test_parse_bind_run_bell():
    c = sp.parse_circuit("qubits 2\nu q1 h\ncx q1 q2\n").bind()
    out = c.run()
    assert np.abs(out - np.array([1, 0, 0, 1]) / np.sqrt(2)).max() < 1e-15


def test_hea_runs_and_matches_dense():
    t = sp.hea_template(4)
    assert len(t) == 15
    c = t.bind({name: np.pi / 4 for name in t.parameters()})
    out = c.run()
    assert abs(np.sum(np.abs(out) ** 2) - 1) < 1e-12
    psi0 = np.zeros(16, dtype=complex)
    psi0[0] = 1
    assert np.abs(c.dense_unitary() @ psi0 - out).max() < 1e-12
    assert len(c.hamiltonian_groups()) == 6


def test_errors_are_python_exceptions():
    with pytest.raises(sp.ParseError) as info:
        sp.parse_circuit("qubits 2\nrx q3 0.1")
    assert info.value.line == 2
    with pytest.raises(KeyError):
        sp.parse_circuit("qubits 1\nrx q1 $t1").bind()
    with pytest.raises(sp.ValidationError):
        sp.build_cu_sparse(2, 2, 2, sp.OneQubitGate.named("x"))
    with pytest.raises(ValueError):
        sp.OneQubitGate(np.array([[1, 1], [0, 1]], dtype=complex))


def test_sweeps_below_tolerance():
    assert max(sp.gate_hamiltonian_sweep(4, 3, 2, sp.Axis.X)) <= 1e-12
    assert max(sp.string_hamiltonian_sweep(4, sp.Axis.Y)) <= 1e-12


def test_cli_entry_point():
    code, out, err = sp.run_cli(["build-gate", "-n", "2", "-i", "1", "-j", "2", "--gate", "x"])
    assert code == 0, err
    doc = json.loads(out)
    assert doc["schema"] == 1
    assert doc["dim"] == 4
    code, _, err = sp.run_cli(["build-gate", "-n", "2", "-i", "2", "-j", "2", "--gate", "x"])
    assert code == 3
    assert "control equals target" in err
