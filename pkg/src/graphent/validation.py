"""Randomized self-check suites with worst-case deviation reporting.

Each property pits one computation route against an independent one (closed
form vs state evolution, stride kernels vs dense edge unitaries, preludes vs
direct expectations) over seeded random graphs and angles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .circuits import apply_circuit, measurement_prelude, synthesize_graph_circuit
from .entanglement import analytic_entanglement, bloch_vector, entanglement_from_bloch
from .errors import ValidationError
from .graphs import Graph
from .statevector import (
    DEFAULT_MAX_QUBITS,
    StateVector,
    apply_gate,
    evolve_edge_exact,
    evolve_graph_exact,
    expectation_pauli,
    init_zero,
    overlap_magnitude,
)


@dataclass(frozen=True)
class PropertyResult:
    name: str
    worst: float
    threshold: float

    @property
    def passed(self) -> bool:
        return self.worst <= self.threshold

    def line(self) -> str:
        status = "pass" if self.passed else "FAIL"
        return f"{status}  {self.name}: worst={self.worst:.3e}  threshold={self.threshold:.0e}"


@dataclass(frozen=True)
class ValidationReport:
    results: tuple[PropertyResult, ...]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def lines(self) -> list[str]:
        return [r.line() for r in self.results]


def random_graph(rng: np.random.Generator, n_min: int = 2, n_max: int = 6) -> Graph:
    """Uniform vertex count in [n_min, n_max], each possible edge kept with p = 1/2."""
    n = int(rng.integers(n_min, n_max + 1))
    edges = tuple(
        (i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.5
    )
    return Graph(n, edges)


def _random_single_qubit_state(rng: np.random.Generator) -> StateVector:
    amps = rng.standard_normal(2) + 1j * rng.standard_normal(2)
    amps /= np.sqrt(np.vdot(amps, amps).real)
    return StateVector(1, amps.astype(np.complex128))


def run_validation(
    max_n: int = 6,
    trials: int = 200,
    seed: int = 7,
    max_qubits: int = DEFAULT_MAX_QUBITS,
) -> ValidationReport:
    """Run every property suite; ``trials`` is the number of random graphs."""
    if trials < 1:
        raise ValidationError(f"trials must be positive, got {trials}")
    if max_n < 2:
        raise ValidationError(f"max_n must be at least 2, got {max_n}")
    rng = np.random.default_rng(seed)
    graphs = [random_graph(rng, 2, max_n) for _ in range(trials)]
    phis_per_graph = [rng.uniform(-2.0 * math.pi, 2.0 * math.pi, 25) for _ in graphs]

    worst_closed_form = 0.0
    worst_transverse = 0.0
    for g, phis in zip(graphs, phis_per_graph):
        for phi in phis:
            state = init_zero(g.n_vertices, max_qubits)
            evolve_graph_exact(state, g, phi)
            for l in range(g.n_vertices):
                b = bloch_vector(state, l)
                exact = entanglement_from_bloch(b)
                analytic = analytic_entanglement(g.degree(l), phi)
                worst_closed_form = max(worst_closed_form, abs(exact - analytic))
                worst_transverse = max(worst_transverse, abs(b.mx), abs(b.my))

    sub = graphs[: min(len(graphs), 30)]
    worst_overlap = 0.0
    worst_order = 0.0
    for g in sub:
        for phi in rng.uniform(-2.0 * math.pi, 2.0 * math.pi, 5):
            reference = init_zero(g.n_vertices, max_qubits)
            evolve_graph_exact(reference, g, phi)
            circ_state = init_zero(g.n_vertices, max_qubits)
            apply_circuit(circ_state, synthesize_graph_circuit(g, phi))
            worst_overlap = max(
                worst_overlap, 1.0 - overlap_magnitude(circ_state, reference)
            )
            if g.edges:
                shuffled = list(g.edges)
                rng.shuffle(shuffled)
                other = init_zero(g.n_vertices, max_qubits)
                for i, j in shuffled:
                    evolve_edge_exact(other, int(i), int(j), phi)
                worst_order = max(worst_order, 1.0 - overlap_magnitude(other, reference))

    worst_prelude = 0.0
    for _ in range(100):
        base = _random_single_qubit_state(rng)
        for axis in ("x", "y", "z"):
            target = expectation_pauli(base, axis, 0)
            rotated = base.copy()
            for gate in measurement_prelude(axis, 0):
                apply_gate(rotated, gate)
            worst_prelude = max(
                worst_prelude, abs(expectation_pauli(rotated, "z", 0) - target)
            )

    worst_symmetry = 0.0
    for g in sub:
        for phi in rng.uniform(0.0, 2.0 * math.pi, 3):
            base = init_zero(g.n_vertices, max_qubits)
            evolve_graph_exact(base, g, phi)
            for other_phi in (-phi, phi + math.pi, math.pi - phi):
                other = init_zero(g.n_vertices, max_qubits)
                evolve_graph_exact(other, g, other_phi)
                for l in range(g.n_vertices):
                    e1 = entanglement_from_bloch(bloch_vector(base, l))
                    e2 = entanglement_from_bloch(bloch_vector(other, l))
                    worst_symmetry = max(worst_symmetry, abs(e1 - e2))

    return ValidationReport(
        (
            PropertyResult("closed form vs exact entanglement", worst_closed_form, 1e-10),
            PropertyResult("transverse means vanish", worst_transverse, 1e-12),
            PropertyResult("circuit vs dense evolution overlap deficit", worst_overlap, 1e-12),
            PropertyResult("edge order independence overlap deficit", worst_order, 1e-12),
            PropertyResult("measurement prelude round trip", worst_prelude, 1e-12),
            PropertyResult("angle symmetry of exact entanglement", worst_symmetry, 1e-10),
        )
    )
