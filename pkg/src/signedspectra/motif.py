"""Motif replication and the Dirichlet restriction of the Laplacian.

Replicating a vertex subset appends an exact copy of it: internal edges
and edges toward the rest of the graph are duplicated with their weights
and signs, and no edges connect the subset to its copy. The Laplacian
restricted to the subset with zero boundary values (extension by zero)
is a positive self-adjoint operator whose eigenvalues all reappear in
the spectrum of the replicated graph; the witnessing eigenvectors live
on the subset and its copy with opposite signs and vanish elsewhere.

The degree m(x) inside the Dirichlet operator is the degree in the full
ambient graph, which is what extension by zero dictates; the induced
subgraph degree is deliberately not used.
"""

from dataclasses import dataclass

import numpy as np

from .eigensolver import jacobi_eigh
from .graph import Edge, GraphError, SignedGraph, make_edge
from .spectral import EigenDecomposition, _fix_column_signs, laplacian, spectrum

REPLICA_MARK = "'"


def replica_id(vertex: str) -> str:
    return vertex + REPLICA_MARK


@dataclass(frozen=True)
class Motif:
    """A nonempty ordered subset of a graph's vertices.

    The member order fixes the row order of the Dirichlet matrix and the
    order in which replica vertices are appended. Members whose primed
    replica id already exists in the graph are rejected up front.
    """

    graph: SignedGraph
    members: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(self.members))
        if not self.members:
            raise GraphError("motif must be nonempty")
        if len(set(self.members)) != len(self.members):
            raise GraphError("motif members must be distinct")
        known = set(self.graph.vertices)
        for x in self.members:
            if x not in known:
                raise GraphError(f"motif member {x!r} is not a vertex of the graph")
            if replica_id(x) in known:
                raise GraphError(
                    f"replica id {replica_id(x)!r} collides with an existing vertex"
                )


def dirichlet_laplacian(graph: SignedGraph, motif: Motif) -> np.ndarray:
    """Laplacian restricted to the motif with zero boundary values.

    Entry (x, y) is delta_xy - kappa(x, y) / m(x) for motif members x, y,
    with m the degree in the full graph.
    """
    members = motif.members
    n = len(members)
    mat = np.eye(n)
    for i, x in enumerate(members):
        for j, y in enumerate(members):
            if i != j:
                mat[i, j] -= graph.signed_weight(x, y) / graph.degree(x)
    return mat


def dirichlet_eigh(graph: SignedGraph, motif: Motif) -> EigenDecomposition:
    """Eigendecomposition of the Dirichlet Laplacian on the motif.

    Solved by the same Jacobi routine on the symmetrized form
    M^-1/2 (M - K) M^-1/2 with M = diag(ambient degrees on the motif) and
    K the signed-weight block; eigenvectors are orthonormal in the
    m-weighted inner product on the motif.
    """
    members = motif.members
    m = np.array([graph.degree(x) for x in members])
    kappa = np.zeros((len(members), len(members)))
    for i, x in enumerate(members):
        for j, y in enumerate(members):
            if i != j:
                kappa[i, j] = graph.signed_weight(x, y)
    symmetric = np.eye(len(members)) - kappa / np.sqrt(np.outer(m, m))
    values, vectors = jacobi_eigh(symmetric)
    scaled = vectors / np.sqrt(m)[:, None]
    _fix_column_signs(scaled)
    return EigenDecomposition(members, values, scaled)


def replicate(graph: SignedGraph, motif: Motif) -> SignedGraph:
    """Append an exact replica of the motif.

    Replica vertices (original id plus a prime) copy the motif's internal
    edges and its edges to the rest of the graph; the motif and its
    replica are not connected to each other, so replica degrees equal the
    original degrees while outside neighbors of the motif gain degree.
    """
    inside = set(motif.members)
    new_vertices = graph.vertices + tuple(replica_id(x) for x in motif.members)
    edges: list[Edge] = list(graph.edges)
    for e in graph.edges:
        u_in = e.u in inside
        v_in = e.v in inside
        if u_in and v_in:
            edges.append(make_edge(replica_id(e.u), replica_id(e.v), e.weight, e.sign))
        elif u_in:
            edges.append(make_edge(replica_id(e.u), e.v, e.weight, e.sign))
        elif v_in:
            edges.append(make_edge(e.u, replica_id(e.v), e.weight, e.sign))
    return SignedGraph(new_vertices, tuple(sorted(edges)))


def extend_eigenvector(values, motif: Motif) -> np.ndarray:
    """Extend a motif vector to the replicated graph.

    The result equals the vector on the motif, its negation on the
    replica (under the member/replica correspondence) and zero elsewhere,
    aligned with the vertex order of ``replicate``.
    """
    vec = np.array(values, dtype=float)
    if vec.shape != (len(motif.members),):
        raise ValueError(
            f"expected a vector of length {len(motif.members)}, got shape {vec.shape}"
        )
    if not np.all(np.isfinite(vec)):
        raise ValueError("vector entries must be finite")
    graph = motif.graph
    base = len(graph.vertices)
    out = np.zeros(base + len(motif.members))
    index = graph.vertex_index
    for k, x in enumerate(motif.members):
        out[index[x]] = vec[k]
        out[base + k] = -vec[k]
    return out


@dataclass(frozen=True)
class MotifEigenvalueCheck:
    """Numbers behind one Dirichlet eigenvalue's appearance after replication."""

    eigenvalue: float
    spectrum_distance: float
    extension_residual: float


@dataclass(frozen=True)
class MotifInclusionReport:
    tol: float
    checks: tuple[MotifEigenvalueCheck, ...]

    @property
    def ok(self) -> bool:
        return all(
            c.spectrum_distance <= self.tol and c.extension_residual <= self.tol
            for c in self.checks
        )


def verify_motif_inclusion(
    graph: SignedGraph, motif: Motif, tol: float
) -> MotifInclusionReport:
    """Check that every Dirichlet eigenvalue survives replication.

    For each Dirichlet eigenpair, reports the distance from the
    eigenvalue to the replicated graph's spectrum and the sup-norm
    residual of the extended eigenvector under the replicated Laplacian.
    Both should vanish up to rounding.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    decomposition = dirichlet_eigh(graph, motif)
    replicated = replicate(graph, motif)
    replicated_spectrum = spectrum(replicated)
    lap = laplacian(replicated)
    checks = []
    for k, value in enumerate(decomposition.eigenvalues):
        extended = extend_eigenvector(decomposition.eigenvectors[:, k], motif)
        residual = float(np.max(np.abs(lap @ extended - value * extended)))
        distance = float(np.min(np.abs(replicated_spectrum - value)))
        checks.append(MotifEigenvalueCheck(float(value), distance, residual))
    return MotifInclusionReport(tol, tuple(checks))
