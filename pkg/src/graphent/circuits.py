"""Gate synthesis for coupling graphs, and measurement-basis preludes.

Each graph edge compiles to the five-gate block

    cx(r, p)  h(r)  p(r, phi)  h(r)  cx(r, p)

which equals exp(-i*(phi/2)*XrXp) up to a global phase. The rotation qubit
``r`` is the endpoint with the smaller single-qubit gate error when
calibration data is supplied, otherwise the smaller index.

Measurement preludes rotate a target axis onto z so that z-basis statistics
estimate the requested Pauli mean, sign included: with ry(theta) =
exp(-i*theta*Y/2), conjugation by ry(+pi/2) maps z to -x, so the x prelude
uses ry(-pi/2); the y prelude uses rx(+pi/2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterable, Iterator

from .errors import ValidationError
from .statevector import Gate, StateVector, apply_gate

if TYPE_CHECKING:
    from .calibration import CalibrationData
    from .graphs import Graph

AXES = ("x", "y", "z")


@dataclass(frozen=True)
class Circuit:
    """Ordered gate sequence over a fixed qubit register."""

    n_qubits: int
    gates: tuple[Gate, ...] = ()

    def __post_init__(self):
        if self.n_qubits < 1:
            raise ValidationError(f"qubit count must be positive, got {self.n_qubits}")
        for g in self.gates:
            if g.target >= self.n_qubits or (g.control is not None and g.control >= self.n_qubits):
                raise ValidationError(f"gate {g} out of range for {self.n_qubits} qubits")

    def __len__(self) -> int:
        return len(self.gates)

    def __iter__(self) -> Iterator[Gate]:
        return iter(self.gates)

    def extended(self, gates: Iterable[Gate]) -> "Circuit":
        return Circuit(self.n_qubits, self.gates + tuple(gates))


@dataclass(frozen=True)
class EdgeOrientation:
    """Which endpoint of an edge carries the h-p-h rotation sandwich."""

    edge: tuple[int, int]
    rotation_qubit: int
    partner_qubit: int

    def __post_init__(self):
        if {self.rotation_qubit, self.partner_qubit} != set(self.edge) or len(set(self.edge)) != 2:
            raise ValidationError(
                f"orientation {self} does not cover edge {self.edge}"
            )


def choose_orientation(edge: tuple[int, int], cal: "CalibrationData | None" = None) -> EdgeOrientation:
    """Pick a rotation qubit: lower gate error wins, ties and no-calibration go to the smaller index."""
    i, j = int(edge[0]), int(edge[1])
    if i == j:
        raise ValidationError(f"edge endpoints coincide at {i}")
    if i < 0 or j < 0:
        raise ValidationError(f"negative vertex in edge ({i}, {j})")
    if cal is None:
        rotation = min(i, j)
    else:
        if max(i, j) >= cal.n_qubits:
            raise ValidationError(
                f"calibration covers {cal.n_qubits} qubits, edge ({i}, {j}) is outside"
            )
        ei, ej = cal.gate_error[i], cal.gate_error[j]
        rotation = i if ei < ej else j if ej < ei else min(i, j)
    partner = j if rotation == i else i
    return EdgeOrientation((min(i, j), max(i, j)), rotation, partner)


def synthesize_edge(orientation: EdgeOrientation, phi: float) -> tuple[Gate, ...]:
    """Five-gate block equal to exp(-i*(phi/2)*XX) on the edge, up to global phase."""
    r, p = orientation.rotation_qubit, orientation.partner_qubit
    return (
        Gate.cx(r, p),
        Gate.h(r),
        Gate.p(r, phi),
        Gate.h(r),
        Gate.cx(r, p),
    )


def synthesize_graph_circuit(
    g: "Graph", phi: float, cal: "CalibrationData | None" = None
) -> Circuit:
    """Concatenate one edge block per graph edge, edges in canonical sorted order."""
    gates: list[Gate] = []
    for edge in g.edges:
        gates.extend(synthesize_edge(choose_orientation(edge, cal), phi))
    return Circuit(g.n_vertices, tuple(gates))


def measurement_prelude(axis: str, l: int) -> tuple[Gate, ...]:
    """Gates to run before a z-basis measurement of qubit ``l`` so that the
    z outcome statistics equal the ``axis`` expectation of the original state."""
    if l < 0:
        raise ValidationError(f"negative qubit index {l}")
    if axis == "z":
        return ()
    if axis == "y":
        return (Gate.rx(l, math.pi / 2.0),)
    if axis == "x":
        return (Gate.ry(l, -math.pi / 2.0),)
    raise ValidationError(f"unknown measurement axis {axis!r}")


def apply_circuit(state: StateVector, circuit: Circuit) -> StateVector:
    """Run every gate of ``circuit`` on ``state`` in place."""
    if circuit.n_qubits > state.n_qubits:
        raise ValidationError(
            f"circuit needs {circuit.n_qubits} qubits, state has {state.n_qubits}"
        )
    for gate in circuit.gates:
        apply_gate(state, gate)
    return state


def gate_text(gate: Gate) -> str:
    if gate.kind == "cx":
        return f"cx q[{gate.control}], q[{gate.target}]"
    if gate.kind == "h":
        return f"h q[{gate.target}]"
    return f"{gate.kind}({gate.angle!r}) q[{gate.target}]"


def circuit_text(circuit: Circuit) -> str:
    """One gate per line; empty circuits give an empty listing."""
    if not circuit.gates:
        return ""
    return "\n".join(gate_text(g) for g in circuit.gates) + "\n"
