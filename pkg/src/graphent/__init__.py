"""Graph states from pairwise x-x spin couplings.

Evolving |00...0> under commuting exp(-i*(phi/2)*XX) edge terms of an
interaction graph entangles each spin with the rest by an amount set by its
vertex degree: E = (1 - |cos(phi)|**degree) / 2. The package computes that
measure three mutually cross-checking ways (closed form, exact state-vector
simulation, finite-shot sampling with an optional readout-error model) and
synthesizes the preparing gate circuits.
"""

from .calibration import (
    CalibrationData,
    load_calibration,
    parse_calibration,
    valencia_calibration,
)
from .circuits import (
    AXES,
    Circuit,
    EdgeOrientation,
    apply_circuit,
    choose_orientation,
    circuit_text,
    gate_text,
    measurement_prelude,
    synthesize_edge,
    synthesize_graph_circuit,
)
from .entanglement import (
    BlochVector,
    EntanglementEstimate,
    analytic_entanglement,
    analytic_estimate,
    bloch_vector,
    entanglement_from_bloch,
    exact_entanglement,
    exact_estimate_from_state,
)
from .errors import ConsistencyError, GraphentError, ResourceCapError, ValidationError
from .graphs import (
    FORMATS,
    Graph,
    complete,
    parse_graph,
    path,
    preset,
    ring,
    serialize_graph,
    valencia,
)
from .sampling import (
    DEFAULT_SHOTS,
    DepolarizingSampler,
    ShotResult,
    apply_depolarizing_noise,
    corrupt_readout,
    derive_seeds,
    estimate_entanglement_shots,
    estimate_mean_z,
    sample_z,
)
from .statevector import (
    DEFAULT_MAX_QUBITS,
    Gate,
    StateVector,
    apply_gate,
    apply_pauli,
    evolve_edge_exact,
    evolve_graph_exact,
    expectation_pauli,
    init_zero,
    marginal_z_probs,
    overlap_magnitude,
)
from .validation import ValidationReport, random_graph, run_validation

__version__ = "0.1.0"
