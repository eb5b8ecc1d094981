"""Matrices and spectra of signed graphs.

The normalized signed Laplacian acts on functions over the vertices as

    (L f)(x) = f(x) - (1/m(x)) * sum_y kappa(x, y) f(y)

where kappa = sign * weight and m is the weighted degree. As a matrix
this is I - D^-1 A. The operator is self-adjoint with respect to the
degree-weighted inner product <u, v>_m = sum_x u(x) v(x) m(x), and its
spectrum lies in [0, 2]. Eigendecompositions go through the symmetric
similarity transform D^-1/2 (D - A) D^-1/2, which has the same
eigenvalues and whose eigenvectors become eigenvectors of the Laplacian
after scaling by D^-1/2; the solver is the package's own cyclic Jacobi.
"""

from dataclasses import dataclass

import numpy as np

from .eigensolver import jacobi_eigh
from .graph import SignedGraph, SwitchingFunction, apply_switching


def vertex_vector(graph: SignedGraph, values) -> np.ndarray:
    """Copy ``values`` into a float vector aligned with ``graph.vertices``."""
    vec = np.array(values, dtype=float)
    if vec.shape != (len(graph.vertices),):
        raise ValueError(
            f"expected a vector of length {len(graph.vertices)}, got shape {vec.shape}"
        )
    if not np.all(np.isfinite(vec)):
        raise ValueError("vector entries must be finite")
    return vec


def degree_vector(graph: SignedGraph) -> np.ndarray:
    return np.array([graph.degrees[x] for x in graph.vertices])


def adjacency_matrix(graph: SignedGraph) -> np.ndarray:
    """Signed adjacency matrix: entry (x, y) is kappa(x, y), zero when absent."""
    n = len(graph.vertices)
    index = graph.vertex_index
    a = np.zeros((n, n))
    for e in graph.edges:
        i, j = index[e.u], index[e.v]
        a[i, j] = a[j, i] = e.sign * e.weight
    return a


def degree_matrix(graph: SignedGraph) -> np.ndarray:
    return np.diag(degree_vector(graph))


def laplacian(graph: SignedGraph) -> np.ndarray:
    """Normalized signed Laplacian I - D^-1 A in the graph's vertex order."""
    m = degree_vector(graph)
    return np.eye(len(m)) - adjacency_matrix(graph) / m[:, None]


def transition_matrix(graph: SignedGraph) -> np.ndarray:
    """Generalized transition matrix P = D^-1 A.

    Unlike the random-walk matrix of an unsigned graph, rows need not sum
    to one: negative signs can cancel positive ones.
    """
    m = degree_vector(graph)
    return adjacency_matrix(graph) / m[:, None]


def _symmetric_form(graph: SignedGraph) -> np.ndarray:
    m = degree_vector(graph)
    return np.eye(len(m)) - adjacency_matrix(graph) / np.sqrt(np.outer(m, m))


@dataclass(frozen=True, eq=False)
class EigenDecomposition:
    """Eigenvalues (ascending) with eigenvectors orthonormal in <.,.>_m.

    ``eigenvectors[:, k]`` belongs to ``eigenvalues[k]``; rows follow
    ``vertices``. No canonical basis is promised inside degenerate
    eigenspaces, so comparisons there must be basis-agnostic.
    """

    vertices: tuple[str, ...]
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def _fix_column_signs(vectors: np.ndarray) -> None:
    # Reproducible output: first significant entry of each column made positive.
    for k in range(vectors.shape[1]):
        column = vectors[:, k]
        cutoff = 1e-12 * float(np.max(np.abs(column)))
        for value in column:
            if abs(value) > cutoff:
                if value < 0.0:
                    column *= -1.0
                break


def eigh_m(graph: SignedGraph) -> EigenDecomposition:
    """Full eigendecomposition of the normalized signed Laplacian."""
    m = degree_vector(graph)
    values, vectors = jacobi_eigh(_symmetric_form(graph))
    scaled = vectors / np.sqrt(m)[:, None]
    _fix_column_signs(scaled)
    return EigenDecomposition(graph.vertices, values, scaled)


def spectrum(graph: SignedGraph) -> np.ndarray:
    """Sorted eigenvalues of the normalized signed Laplacian."""
    return eigh_m(graph).eigenvalues


def is_spectrum_symmetric(eigenvalues, tol: float = 1e-8) -> bool:
    """True iff the sorted multiset equals its reflection about 1 within tol."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    values = np.sort(np.asarray(eigenvalues, dtype=float))
    reflected = np.sort(2.0 - values)
    return bool(np.all(np.abs(values - reflected) <= tol))


def m_inner(graph: SignedGraph, u, v) -> float:
    """Degree-weighted inner product sum_x u(x) v(x) m(x)."""
    uu = vertex_vector(graph, u)
    vv = vertex_vector(graph, v)
    return float(np.sum(uu * vv * degree_vector(graph)))


def m_norm(graph: SignedGraph, u) -> float:
    return float(np.sqrt(m_inner(graph, u, u)))


def rayleigh_quotient(graph: SignedGraph, values) -> float:
    """Energy quotient of a nonzero vector.

    Defined as half the sum of weight * (f(x) - sign * f(y))^2 over
    ordered adjacent pairs, divided by sum f(x)^2 m(x). The two ordered
    orientations of an edge contribute equally, so each edge is counted
    once below. The minimum over nonzero vectors is the smallest
    eigenvalue.
    """
    f = vertex_vector(graph, values)
    m = degree_vector(graph)
    denominator = float(np.sum(f * f * m))
    if denominator == 0.0:
        raise ValueError("Rayleigh quotient of the zero vector")
    index = graph.vertex_index
    numerator = 0.0
    for e in graph.edges:
        fu = f[index[e.u]]
        fv = f[index[e.v]]
        numerator += e.weight * (fu - e.sign * fv) ** 2
    return numerator / denominator


def nonnegative_first_eigenvector_switch(
    graph: SignedGraph,
) -> tuple[SignedGraph, SwitchingFunction, np.ndarray]:
    """Switch the graph so its first eigenvector becomes nonnegative.

    The switching flips exactly the vertices where the computed first
    eigenvector is negative. Returns the switched graph, the switching,
    and the transported eigenvector (nonnegative everywhere, same
    eigenvalue).
    """
    decomposition = eigh_m(graph)
    first = decomposition.eigenvectors[:, 0]
    labels = {
        x: (-1 if first[i] < 0.0 else 1) for i, x in enumerate(graph.vertices)
    }
    switching = SwitchingFunction(labels)
    switched = apply_switching(graph, switching)
    transported = np.array([labels[x] for x in graph.vertices]) * first
    return switched, switching, transported
