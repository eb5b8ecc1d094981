"""Discrete-time heat flow on signed graphs and its two-phase solutions.

The evolution is f_{n+1} = P f_n with P the generalized transition
matrix. A damped 2-periodic solution is a nonzero vector that is an
eigenvector of P^2 but not of P; it oscillates between two independent
phases u and v while shrinking by the decay rate each step. Such
solutions exist exactly when the spectrum contains a pair of eigenvalues
reflected about 1, and the phases decompose into the corresponding
eigenvectors.

All norms and inner products here are degree-weighted; that choice makes
the self-adjointness identities behind the decay-rate formulas exact.
"""

import csv
import io
from dataclasses import dataclass

import numpy as np

from .graph import SignedGraph
from .spectral import laplacian, m_inner, m_norm, transition_matrix, vertex_vector

# u and Pu count as parallel when their m-normalized inner product
# exceeds this; makes the exact "not an eigenvector of P" condition
# decidable in floating point.
PARALLEL_COS = 1.0 - 1e-9

# Residual bound used when validating claimed eigenvectors and the
# two-phase system identities.
INVARIANT_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class HeatTrajectory:
    """States f_0 ... f_n of the heat evolution, one row per step."""

    graph: SignedGraph
    states: np.ndarray

    def to_csv(self) -> str:
        """CSV with header ``step,<vertex ids>`` and 17-significant-digit values."""
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["step", *self.graph.vertices])
        for k, row in enumerate(self.states):
            writer.writerow([str(k), *(format(x, ".17g") for x in row)])
        return buffer.getvalue()


@dataclass(frozen=True, eq=False)
class PeriodicSolution:
    """Damped 2-periodic solution: phases u, v and decay rate in (0, 1].

    Satisfies P u = rate * v and P v = rate * u with u, v linearly
    independent; starting the heat flow at u gives rate^n u on even steps
    and rate^n v on odd ones.
    """

    u: np.ndarray
    v: np.ndarray
    rate: float


def heat_simulate(graph: SignedGraph, initial, steps: int) -> HeatTrajectory:
    """Run the evolution f_{k+1} = P f_k for ``steps`` steps from ``initial``."""
    if steps < 0:
        raise ValueError("steps must be nonnegative")
    state = vertex_vector(graph, initial)
    p = transition_matrix(graph)
    states = np.empty((steps + 1, state.size))
    states[0] = state
    for k in range(steps):
        states[k + 1] = p @ states[k]
    return HeatTrajectory(graph, states)


def detect_periodic(graph: SignedGraph, initial, tol: float) -> PeriodicSolution | None:
    """Test whether ``initial`` generates a damped 2-periodic solution.

    Accepts when P^2 u = rate^2 u within ``tol`` (m-norm, relative to u)
    for rate = |Pu|_m / |u|_m, provided Pu is not parallel to u and the
    rate is not zero (either would make u a plain eigenvector of P).
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    u = vertex_vector(graph, initial)
    norm_u = m_norm(graph, u)
    if norm_u == 0.0:
        raise ValueError("initial vector must be nonzero")
    p = transition_matrix(graph)
    pu = p @ u
    ppu = p @ pu
    norm_pu = m_norm(graph, pu)
    rate = norm_pu / norm_u
    if rate <= tol:
        return None
    if m_norm(graph, ppu - rate * rate * u) > tol * norm_u:
        return None
    if abs(m_inner(graph, u, pu)) > PARALLEL_COS * norm_u * norm_pu:
        return None
    return PeriodicSolution(u=u, v=pu / rate, rate=float(rate))


def _eigenvalue_of(graph: SignedGraph, lap: np.ndarray, vec: np.ndarray) -> float:
    norm = m_norm(graph, vec)
    if norm == 0.0:
        raise ValueError("eigenvector must be nonzero")
    image = lap @ vec
    value = m_inner(graph, image, vec) / m_inner(graph, vec, vec)
    if m_norm(graph, image - value * vec) > INVARIANT_TOL * norm:
        raise ValueError("vector is not an eigenvector of the Laplacian")
    return value


def periodic_from_eigenpair(low_mode, high_mode, graph: SignedGraph) -> PeriodicSolution:
    """Build the solution u = low_mode + high_mode from a reflected eigenpair.

    ``low_mode`` must be a Laplacian eigenvector with eigenvalue 1 - rate
    and ``high_mode`` one with eigenvalue 1 + rate, rate nonzero; both are
    verified numerically. Arbitrary nonzero scalings of either input give
    a valid solution with the same rate. The second phase is
    low_mode - high_mode.
    """
    f = vertex_vector(graph, low_mode)
    g = vertex_vector(graph, high_mode)
    lap = laplacian(graph)
    value_low = _eigenvalue_of(graph, lap, f)
    value_high = _eigenvalue_of(graph, lap, g)
    rate = 1.0 - value_low
    if rate <= INVARIANT_TOL:
        raise ValueError(
            "low eigenvalue must lie strictly below 1 (zero decay rate is excluded)"
        )
    if abs(value_low + value_high - 2.0) > INVARIANT_TOL:
        raise ValueError("eigenvalues are not reflections of each other about 1")
    return PeriodicSolution(u=f + g, v=f - g, rate=float(rate))


def decompose_periodic(
    graph: SignedGraph, solution: PeriodicSolution
) -> tuple[np.ndarray, np.ndarray]:
    """Split a solution into its Laplacian eigenvectors (u+v)/2 and (u-v)/2.

    The first returned vector has eigenvalue 1 - rate, the second
    1 + rate. The solution's defining identities are re-validated first
    and a violation raises ``ValueError``.
    """
    u = vertex_vector(graph, solution.u)
    v = vertex_vector(graph, solution.v)
    rate = solution.rate
    if not 0.0 < rate <= 1.0 + INVARIANT_TOL:
        raise ValueError(f"decay rate must lie in (0, 1], got {rate!r}")
    norm_u = m_norm(graph, u)
    norm_v = m_norm(graph, v)
    if norm_u == 0.0 or norm_v == 0.0:
        raise ValueError("phases must be nonzero")
    p = transition_matrix(graph)
    if m_norm(graph, p @ u - rate * v) > INVARIANT_TOL * norm_u:
        raise ValueError("P u = rate * v violated")
    if m_norm(graph, p @ v - rate * u) > INVARIANT_TOL * norm_v:
        raise ValueError("P v = rate * u violated")
    if abs(m_inner(graph, u, v)) > PARALLEL_COS * norm_u * norm_v:
        raise ValueError("phases are parallel")
    return 0.5 * (u + v), 0.5 * (u - v)


def symmetric_eigenvalue_pairs(eigenvalues, tol: float = 1e-8) -> list[float]:
    """Decay rates available from eigenvalue pairs reflected about 1.

    Returns the sorted distinct values |1 - lambda| over eigenvalues
    lambda != 1 whose reflection 2 - lambda is also present (within
    ``tol``). Each rate corresponds to damped 2-periodic solutions built
    from the two eigenspaces; rates closer than ``tol`` are merged.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    values = np.sort(np.asarray(eigenvalues, dtype=float))
    rates: list[float] = []
    for lam in values:
        if abs(lam - 1.0) <= tol:
            continue
        if np.min(np.abs(values - (2.0 - lam))) <= tol:
            rates.append(abs(1.0 - lam))
    rates.sort()
    merged: list[float] = []
    for rate in rates:
        if not merged or rate - merged[-1] > tol:
            merged.append(float(rate))
    return merged
