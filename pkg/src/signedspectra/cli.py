"""Command-line front end over the graph JSON format.

Exit codes: 0 success, 2 input error, 3 definitive negative result
(no bipartition / no certificate / no periodic solution / failed motif
verification), 4 search budget exceeded. Output is deterministic:
identical inputs and flags produce byte-identical bytes.
"""

import argparse
import json
import sys

import numpy as np

from .graph import GraphError, classify_balance, is_bipartite
from .graphio import graph_to_dict, load_graph
from .heat import detect_periodic, heat_simulate, symmetric_eigenvalue_pairs
from .motif import Motif, dirichlet_eigh, replicate, verify_motif_inclusion
from .spectral import is_spectrum_symmetric, spectrum
from .symmetry import (
    BudgetExceeded,
    SearchBudget,
    find_symmetry_certificate,
    find_bipartite_switching,
)

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_NEGATIVE = 3
EXIT_BUDGET = 4


def _print_json(payload) -> None:
    print(json.dumps(payload, sort_keys=True))


def _positive_tol(args) -> float:
    if args.tol <= 0:
        raise ValueError("--tol must be positive")
    return args.tol


def _parse_initial(text: str, graph):
    """A JSON array is taken as a vector in vertex order; anything else
    is a vertex id standing for its indicator vector."""
    try:
        parsed = json.loads(text)
    except json.JSONDecodeError:
        parsed = None
    if isinstance(parsed, list):
        return parsed
    if text in graph.vertex_index:
        vec = np.zeros(len(graph.vertices))
        vec[graph.vertex_index[text]] = 1.0
        return vec
    raise ValueError(f"--init {text!r} is neither a vertex id nor a JSON vector")


def _parse_omega(text: str, graph) -> Motif:
    try:
        parsed = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"--omega must be a JSON list of vertex ids: {exc}") from exc
    if not isinstance(parsed, list) or not all(isinstance(x, str) for x in parsed):
        raise ValueError("--omega must be a JSON list of vertex ids")
    return Motif(graph, tuple(parsed))


def _cmd_spectrum(args) -> int:
    graph = load_graph(args.graph)
    tol = _positive_tol(args)
    eigenvalues = spectrum(graph)
    _print_json(
        {
            "eigenvalues": [float(x) for x in eigenvalues],
            "lambda_min": float(eigenvalues[0]),
            "lambda_max": float(eigenvalues[-1]),
            "symmetric": is_spectrum_symmetric(eigenvalues, tol),
            "tol": tol,
        }
    )
    return EXIT_OK


def _cmd_balance(args) -> int:
    graph = load_graph(args.graph)
    result = classify_balance(graph)
    _print_json(
        {
            "kind": result.kind,
            "balanced_switching": None if result.balanced is None else result.balanced.labels,
            "antibalanced_switching": None
            if result.antibalanced is None
            else result.antibalanced.labels,
        }
    )
    return EXIT_OK


def _cmd_bipartite(args) -> int:
    graph = load_graph(args.graph)
    parts = is_bipartite(graph)
    if parts is None:
        _print_json({"bipartite": False, "parts": None, "switching": None})
        return EXIT_NEGATIVE
    switching = find_bipartite_switching(graph)
    _print_json(
        {
            "bipartite": True,
            "parts": [list(parts[0]), list(parts[1])],
            "switching": switching.labels,
        }
    )
    return EXIT_OK


def _cmd_certificate(args) -> int:
    graph = load_graph(args.graph)
    certificate = find_symmetry_certificate(graph, SearchBudget(args.budget_vertices))
    if certificate is None:
        _print_json(None)
        return EXIT_NEGATIVE
    _print_json(
        {"theta": certificate.switching.labels, "perm": dict(certificate.vertex_map)}
    )
    return EXIT_OK


def _cmd_heat(args) -> int:
    graph = load_graph(args.graph)
    if args.steps < 0:
        raise ValueError("--steps must be nonnegative")
    trajectory = heat_simulate(graph, _parse_initial(args.init, graph), args.steps)
    if args.format == "json":
        _print_json(
            {
                "vertices": list(graph.vertices),
                "states": [[float(x) for x in row] for row in trajectory.states],
            }
        )
    else:
        sys.stdout.write(trajectory.to_csv())
    return EXIT_OK


def _cmd_periodic(args) -> int:
    graph = load_graph(args.graph)
    tol = _positive_tol(args)
    if args.init is None:
        rates = symmetric_eigenvalue_pairs(spectrum(graph), tol)
        _print_json({"decay_rates": rates, "tol": tol})
        return EXIT_OK
    solution = detect_periodic(graph, _parse_initial(args.init, graph), tol)
    if solution is None:
        _print_json(None)
        return EXIT_NEGATIVE
    _print_json(
        {
            "vertices": list(graph.vertices),
            "u": [float(x) for x in solution.u],
            "v": [float(x) for x in solution.v],
            "decay_rate": solution.rate,
        }
    )
    return EXIT_OK


def _cmd_replicate(args) -> int:
    graph = load_graph(args.graph)
    motif = _parse_omega(args.omega, graph)
    _print_json(graph_to_dict(replicate(graph, motif)))
    return EXIT_OK


def _cmd_dirichlet(args) -> int:
    graph = load_graph(args.graph)
    motif = _parse_omega(args.omega, graph)
    decomposition = dirichlet_eigh(graph, motif)
    _print_json(
        {
            "omega": list(motif.members),
            "eigenvalues": [float(x) for x in decomposition.eigenvalues],
        }
    )
    return EXIT_OK


def _cmd_verify_motif(args) -> int:
    graph = load_graph(args.graph)
    motif = _parse_omega(args.omega, graph)
    report = verify_motif_inclusion(graph, motif, _positive_tol(args))
    _print_json(
        {
            "ok": report.ok,
            "tol": report.tol,
            "checks": [
                {
                    "eigenvalue": c.eigenvalue,
                    "spectrum_distance": c.spectrum_distance,
                    "extension_residual": c.extension_residual,
                }
                for c in report.checks
            ],
        }
    )
    return EXIT_OK if report.ok else EXIT_NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="signedspectra",
        description="Spectral analysis of signed weighted graphs (JSON edge lists).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, handler, help_text, *, tol=False, omega=False):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("graph", help="path to a graph JSON file")
        if tol:
            p.add_argument("--tol", type=float, default=1e-8, help="numeric tolerance")
        if omega:
            p.add_argument(
                "--omega", required=True, help="motif as a JSON list of vertex ids"
            )
        p.set_defaults(func=handler)
        return p

    add("spectrum", _cmd_spectrum, "eigenvalues and symmetry of the Laplacian", tol=True)
    add("balance", _cmd_balance, "balance / antibalance classification with witnesses")
    add("bipartite", _cmd_bipartite, "bipartition and its sign-reversing switching")
    cert = add("certificate", _cmd_certificate, "search for a spectrum-symmetry certificate")
    cert.add_argument(
        "--budget-vertices",
        type=int,
        default=SearchBudget().max_vertices,
        help="refuse graphs with more vertices than this",
    )
    heat = add("heat", _cmd_heat, "simulate the discrete-time heat evolution")
    heat.add_argument("--init", required=True, help="vertex id or JSON vector")
    heat.add_argument("--steps", type=int, required=True, help="number of steps")
    heat.add_argument("--format", choices=("csv", "json"), default="csv")
    periodic = add(
        "periodic",
        _cmd_periodic,
        "detect a damped 2-periodic solution, or list available decay rates",
        tol=True,
    )
    periodic.add_argument("--init", help="vertex id or JSON vector; omit to list rates")
    add("replicate", _cmd_replicate, "append an exact replica of a motif", omega=True)
    add("dirichlet", _cmd_dirichlet, "Dirichlet eigenvalues of a motif", omega=True)
    add(
        "verify-motif",
        _cmd_verify_motif,
        "check Dirichlet eigenvalues against the replicated graph",
        tol=True,
        omega=True,
    )
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (GraphError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def entrypoint() -> None:
    raise SystemExit(main())
