"""One-spin-versus-rest entanglement: E = (1 - |<sigma>|) / 2.

For the graph states produced by ``evolve_graph_exact`` the transverse means
vanish and <sigma_z> for spin l is cos(phi)**degree(l), so E has the closed
form (1 - |cos(phi)|**k) / 2 with k the vertex degree. ``analytic_entanglement``
evaluates that form after folding phi into [0, pi/2] with exact float
remainders, which makes the symmetries phi -> -phi, phi + pi, pi - phi hold
bit-exactly whenever the shifted argument itself is exactly representable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ValidationError
from .statevector import (
    DEFAULT_MAX_QUBITS,
    StateVector,
    evolve_graph_exact,
    expectation_pauli,
    init_zero,
)

METHODS = ("analytic", "exact", "shots")

NORM_OVERSHOOT_LIMIT = 1e-9
_COMPONENT_LIMIT = 1.0 + 1e-9


@dataclass(frozen=True)
class BlochVector:
    """Single-spin Pauli means (mx, my, mz)."""

    mx: float
    my: float
    mz: float

    def __post_init__(self):
        for name, v in (("mx", self.mx), ("my", self.my), ("mz", self.mz)):
            if not math.isfinite(v) or abs(v) > _COMPONENT_LIMIT:
                raise ValidationError(f"Bloch component {name}={v!r} outside [-1, 1]")

    def norm(self) -> float:
        return math.sqrt(self.mx**2 + self.my**2 + self.mz**2)

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.mx, self.my, self.mz)


@dataclass(frozen=True)
class EntanglementEstimate:
    """Per-spin result: E value, Bloch components, and how they were obtained."""

    spin: int
    value: float
    bloch: BlochVector
    method: str
    std_error: float | None = None
    shots: int | None = None

    def __post_init__(self):
        if self.method not in METHODS:
            raise ValidationError(f"unknown method {self.method!r}")
        if not -1e-12 <= self.value <= 0.5 + 1e-12:
            raise ValidationError(f"entanglement value {self.value!r} outside [0, 1/2]")
        if (self.shots is not None) != (self.method == "shots"):
            raise ValidationError("shot count is present exactly for method='shots'")


def _folded_cos(phi: float) -> float:
    """|cos(phi)| via reduction of phi to [0, pi/2].

    fmod and fabs are exact, and the reflection pi - r is exact for
    r in [pi/2, pi] (Sterbenz), so arguments related by sign flip, shift by
    pi, or reflection about pi/2 fold to the same float whenever they are
    themselves exact.
    """
    r = math.fabs(math.fmod(phi, math.pi))
    if r > 0.5 * math.pi:
        r = math.pi - r
    return math.cos(r)


def analytic_entanglement(k: int, phi: float) -> float:
    """Closed form (1 - |cos(phi)|**k) / 2 for a spin of degree ``k``."""
    if k < 0:
        raise ValidationError(f"degree must be non-negative, got {k}")
    if not math.isfinite(phi):
        raise ValidationError(f"angle must be finite, got {phi!r}")
    return 0.5 * (1.0 - _folded_cos(phi) ** k)


def entanglement_from_bloch(
    b: BlochVector, *, norm_tol: float | None = NORM_OVERSHOOT_LIMIT
) -> float:
    """E = (1 - min(1, |b|)) / 2.

    ``norm_tol`` is the fraud line for exact computations; pass ``None`` for
    finite-shot estimates, where |b| legitimately overshoots 1 by sampling
    noise and is clamped.
    """
    norm = b.norm()
    if norm_tol is not None and norm > 1.0 + norm_tol:
        raise ValidationError(f"Bloch vector norm {norm!r} exceeds 1")
    return 0.5 * (1.0 - min(1.0, norm))


def bloch_vector(state: StateVector, l: int) -> BlochVector:
    """All three exact Pauli means of qubit ``l``."""
    return BlochVector(
        expectation_pauli(state, "x", l),
        expectation_pauli(state, "y", l),
        expectation_pauli(state, "z", l),
    )


def exact_estimate_from_state(state: StateVector, l: int) -> EntanglementEstimate:
    """Entanglement of qubit ``l`` computed from an already-evolved state."""
    b = bloch_vector(state, l)
    return EntanglementEstimate(
        spin=l, value=entanglement_from_bloch(b), bloch=b, method="exact"
    )


def exact_entanglement(
    g, phi: float, l: int, max_qubits: int = DEFAULT_MAX_QUBITS
) -> EntanglementEstimate:
    """Evolve the graph state and measure spin ``l`` exactly."""
    if not 0 <= l < g.n_vertices:
        raise ValidationError(f"spin {l} out of range for {g.n_vertices} vertices")
    state = init_zero(g.n_vertices, max_qubits)
    evolve_graph_exact(state, g, phi)
    return exact_estimate_from_state(state, l)


def analytic_estimate(g, phi: float, l: int) -> EntanglementEstimate:
    """Closed-form estimate for spin ``l``; Bloch vector is (0, 0, cos(phi)**k)."""
    k = g.degree(l)
    if not math.isfinite(phi):
        raise ValidationError(f"angle must be finite, got {phi!r}")
    mz = math.cos(phi) ** k
    return EntanglementEstimate(
        spin=l,
        value=analytic_entanglement(k, phi),
        bloch=BlochVector(0.0, 0.0, mz),
        method="analytic",
    )
