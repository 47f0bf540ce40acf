"""Shared oracles and helpers.

The matrix-exponential oracles here build full 2^n unitaries with
scipy/numpy kron products; they share no code with the package's stride
kernels, so agreement between the two is a real cross-check.
"""

import numpy as np
import pytest
from hypothesis import settings
from scipy.linalg import expm

from graphent import StateVector

settings.register_profile("suite", deadline=None)
settings.load_profile("suite")

PAULI = {
    "i": np.eye(2, dtype=complex),
    "x": np.array([[0, 1], [1, 0]], dtype=complex),
    "y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "z": np.array([[1, 0], [0, -1]], dtype=complex),
}


def kron_chain(ops):
    """Full-register operator from per-qubit 2x2 factors, ops[l] acting on qubit l.

    Qubit 0 is the least significant bit, so it sits rightmost in the kron.
    """
    full = np.array([[1.0 + 0.0j]])
    for op in ops:
        full = np.kron(op, full)
    return full


def pauli_on(n, q, name):
    ops = [PAULI["i"]] * n
    ops[q] = PAULI[name]
    return kron_chain(ops)


def edge_unitary_oracle(n, i, j, phi):
    """expm(-i*(phi/2)*XiXj) on the full register."""
    return expm(-0.5j * phi * pauli_on(n, i, "x") @ pauli_on(n, j, "x"))


def graph_unitary_oracle(g, phi):
    u = np.eye(1 << g.n_vertices, dtype=complex)
    for i, j in g.edges:
        u = edge_unitary_oracle(g.n_vertices, i, j, phi) @ u
    return u


def random_state(n, seed):
    rng = np.random.default_rng(seed)
    amps = rng.standard_normal(1 << n) + 1j * rng.standard_normal(1 << n)
    amps /= np.linalg.norm(amps)
    return StateVector(n, amps.astype(np.complex128))


@pytest.fixture
def rng():
    return np.random.default_rng(1234)
