"""Command-line surface: entangle, sweep, synthesize, validate.

Exit codes: 0 success, 1 usage, 2 parse/validation, 3 resource cap,
4 internal consistency or failed validation property.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import os
import re
import sys

from .calibration import CalibrationData, load_calibration
from .circuits import circuit_text, synthesize_graph_circuit
from .entanglement import (
    EntanglementEstimate,
    analytic_estimate,
    exact_estimate_from_state,
)
from .errors import ConsistencyError, ResourceCapError, ValidationError
from .graphs import FORMATS, Graph, parse_graph, preset
from .sampling import DEFAULT_SHOTS, derive_seeds, estimate_entanglement_shots
from .statevector import DEFAULT_MAX_QUBITS, evolve_graph_exact, init_zero
from .validation import run_validation

ENV_MAX_QUBITS = "GRAPHENT_MAX_QUBITS"

MODES = ("analytic", "exact", "shots")

CSV_COLUMNS = (
    "phi",
    "spin",
    "mode",
    "mean_x",
    "mean_y",
    "mean_z",
    "bloch_norm",
    "entanglement",
    "std_error",
    "shots",
    "seed",
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


_PI_RE = re.compile(
    r"^\s*([+-]?)(\d+(?:\.\d*)?|\.\d+)?\s*\*?\s*pi\s*(?:/\s*(\d+(?:\.\d*)?|\.\d+))?\s*$",
    re.IGNORECASE,
)


def parse_phi(text: str) -> float:
    """Decimal radians, or multiples and simple fractions of pi: 'pi', 'pi/2', '2pi/3', '-0.5pi'."""
    try:
        return float(text)
    except ValueError:
        pass
    m = _PI_RE.match(text)
    if not m:
        raise UsageError(f"cannot parse angle {text!r}")
    sign = -1.0 if m.group(1) == "-" else 1.0
    coefficient = float(m.group(2)) if m.group(2) else 1.0
    denominator = float(m.group(3)) if m.group(3) else 1.0
    if denominator == 0.0:
        raise UsageError(f"zero denominator in angle {text!r}")
    return sign * coefficient * math.pi / denominator


def _phi_arg(text: str) -> float:
    try:
        return parse_phi(text)
    except UsageError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _sweep_arg(text: str) -> tuple[float, float, int]:
    parts = text.split(":")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"sweep must be START:STOP:COUNT, got {text!r}")
    start, stop = _phi_arg(parts[0]), _phi_arg(parts[1])
    try:
        count = int(parts[2])
    except ValueError:
        raise argparse.ArgumentTypeError(f"sweep count must be an integer, got {parts[2]!r}") from None
    if count < 2:
        raise argparse.ArgumentTypeError(f"sweep needs at least 2 points, got {count}")
    if not start < stop:
        raise argparse.ArgumentTypeError(f"sweep start must be below stop, got {text!r}")
    return start, stop, count


def _detect_format(text: str) -> str:
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return "json"
    data = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.strip().startswith("#")]
    if data:
        head = data[0].split()
        if len(head) == 1 and head[0].isdigit():
            n = int(head[0])
            rows = data[1:]
            if len(rows) == n and all(
                len(r.split()) == n and set(r.split()) <= {"0", "1"} for r in rows
            ):
                return "adjacency"
    return "edge-list"


def _load_graph(args) -> Graph:
    if args.preset is not None:
        try:
            return preset(args.preset)
        except ValidationError as exc:
            raise UsageError(str(exc)) from None
    with open(args.graph, encoding="utf-8") as fh:
        text = fh.read()
    fmt = args.format if args.format != "auto" else _detect_format(text)
    return parse_graph(text, fmt)


def _load_calibration(args) -> CalibrationData | None:
    if args.calibration is None:
        return None
    return load_calibration(args.calibration)


def _max_qubits(args) -> int:
    if args.max_qubits is not None:
        return args.max_qubits
    env = os.environ.get(ENV_MAX_QUBITS)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"{ENV_MAX_QUBITS}={env!r} is not an integer") from None
    return DEFAULT_MAX_QUBITS


def _check_spins(g: Graph, spins) -> None:
    for spin in spins:
        if not 0 <= spin < g.n_vertices:
            raise ValidationError(f"spin {spin} out of range for {g.n_vertices} vertices")


def cmd_entangle(args) -> int:
    g = _load_graph(args)
    _check_spins(g, [args.spin])
    cap = _max_qubits(args)
    if args.mode == "analytic":
        est = analytic_estimate(g, args.phi, args.spin)
    elif args.mode == "exact":
        state = init_zero(g.n_vertices, cap)
        evolve_graph_exact(state, g, args.phi)
        est = exact_estimate_from_state(state, args.spin)
    else:
        est = estimate_entanglement_shots(
            g,
            args.phi,
            args.spin,
            args.shots,
            _load_calibration(args),
            seed=args.seed,
            max_qubits=cap,
        )
    record = {
        "phi": args.phi,
        "spin": args.spin,
        "mode": args.mode,
        "bloch": list(est.bloch.as_tuple()),
        "entanglement": est.value,
        "std_error": est.std_error,
        "shots": est.shots,
        "seed": args.seed,
        "graph": {"n": g.n_vertices, "edges": [list(e) for e in g.edges]},
    }
    print(json.dumps(record))
    return 0


def _open_out(path):
    if path is None:
        return sys.stdout, False
    return open(path, "w", encoding="utf-8", newline=""), True


def cmd_sweep(args) -> int:
    g = _load_graph(args)
    spins = list(dict.fromkeys(args.spin)) if args.spin else list(range(g.n_vertices))
    modes = list(dict.fromkeys(args.mode)) if args.mode else ["analytic"]
    _check_spins(g, spins)
    cap = _max_qubits(args)
    cal = _load_calibration(args)
    start, stop, count = args.sweep
    phis = [start + (stop - start) * i / (count - 1) for i in range(count)]
    row_seeds = derive_seeds(args.seed, count * len(spins) * len(modes))
    out, close = _open_out(args.out)
    try:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        row = 0
        for phi in phis:
            exact_state = None
            for spin in spins:
                for mode in modes:
                    if mode == "exact":
                        if exact_state is None:
                            exact_state = init_zero(g.n_vertices, cap)
                            evolve_graph_exact(exact_state, g, phi)
                        est = exact_estimate_from_state(exact_state, spin)
                    elif mode == "analytic":
                        est = analytic_estimate(g, phi, spin)
                    else:
                        est = estimate_entanglement_shots(
                            g,
                            phi,
                            spin,
                            args.shots,
                            cal,
                            seed=row_seeds[row],
                            max_qubits=cap,
                        )
                    writer.writerow(
                        [
                            repr(phi),
                            spin,
                            mode,
                            repr(est.bloch.mx),
                            repr(est.bloch.my),
                            repr(est.bloch.mz),
                            repr(est.bloch.norm()),
                            repr(est.value),
                            "" if est.std_error is None else repr(est.std_error),
                            "" if est.shots is None else est.shots,
                            args.seed,
                        ]
                    )
                    row += 1
    finally:
        if close:
            out.close()
    return 0


def cmd_synthesize(args) -> int:
    g = _load_graph(args)
    circuit = synthesize_graph_circuit(g, args.phi, _load_calibration(args))
    text = circuit_text(circuit)
    if args.out is None:
        sys.stdout.write(text)
    else:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    return 0


def cmd_validate(args) -> int:
    if args.trials < 1:
        raise UsageError(f"trials must be positive, got {args.trials}")
    cap = _max_qubits(args)
    if args.max_n > cap:
        raise ResourceCapError(f"max_n {args.max_n} exceeds the qubit cap {cap}")
    if args.max_n < 2:
        raise UsageError(f"max_n must be at least 2, got {args.max_n}")
    report = run_validation(max_n=args.max_n, trials=args.trials, seed=args.seed, max_qubits=cap)
    print(f"validation: trials={args.trials} max_n={args.max_n} seed={args.seed}")
    for line in report.lines():
        print(line)
    if not report.passed:
        print("validation FAILED")
        return 4
    print("validation passed")
    return 0


def _add_graph_args(p):
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--graph", help="graph file (edge-list, json, or adjacency)")
    group.add_argument("--preset", help="valencia, complete(n), path(n), or ring(n)")
    p.add_argument(
        "--format",
        choices=("auto",) + FORMATS,
        default="auto",
        help="graph file format (default: detect)",
    )


def _add_common_args(p):
    p.add_argument("--calibration", help="calibration JSON file")
    p.add_argument("--seed", type=int, default=0, help="root RNG seed (default 0)")
    p.add_argument("--max-qubits", type=int, default=None, help=f"qubit cap (default {DEFAULT_MAX_QUBITS}; env {ENV_MAX_QUBITS})")


def _build_parser() -> _Parser:
    parser = _Parser(prog="graphent", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("entangle", help="one entanglement value as a JSON record")
    _add_graph_args(p)
    p.add_argument("--phi", type=_phi_arg, required=True, help="angle: radians or pi expressions")
    p.add_argument("--spin", type=int, required=True)
    p.add_argument("--mode", choices=MODES, default="exact")
    p.add_argument("--shots", type=int, default=DEFAULT_SHOTS)
    _add_common_args(p)
    p.set_defaults(func=cmd_entangle)

    p = sub.add_parser("sweep", help="CSV of entanglement over an angle grid")
    _add_graph_args(p)
    p.add_argument("--sweep", type=_sweep_arg, required=True, metavar="START:STOP:COUNT")
    p.add_argument("--spin", type=int, action="append", help="repeatable; default: all spins")
    p.add_argument("--mode", choices=MODES, action="append", help="repeatable; default: analytic")
    p.add_argument("--shots", type=int, default=DEFAULT_SHOTS)
    p.add_argument("--out", help="output CSV path (default: stdout)")
    _add_common_args(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("synthesize", help="gate listing for the graph circuit")
    _add_graph_args(p)
    p.add_argument("--phi", type=_phi_arg, required=True)
    p.add_argument("--out", help="output path (default: stdout)")
    _add_common_args(p)
    p.set_defaults(func=cmd_synthesize)

    p = sub.add_parser("validate", help="run the randomized self-check suites")
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--max-qubits", type=int, default=None)
    p.set_defaults(func=cmd_validate)

    return parser


def main(argv=None) -> int:
    try:
        args = _build_parser().parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ResourceCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ConsistencyError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
