"""Certificates that force the spectrum to be symmetric about 1.

Two mechanisms are implemented. A bipartition yields a switching that
turns the graph into its own negation exactly. More generally, a
switching followed by a vertex relabeling that lands on the negation
(found by backtracking search over all switchings and isomorphisms)
certifies symmetry of the spectrum; the converse is not claimed, so a
failed search only means no certificate exists, never that the spectrum
is asymmetric.
"""

from dataclasses import dataclass
from typing import Mapping

from .graph import (
    GraphError,
    SignedGraph,
    SwitchingFunction,
    apply_switching,
    check_isomorphism,
    connected_components,
    is_bipartite,
    negate,
)


@dataclass(frozen=True)
class SearchBudget:
    """Hard ceiling for the certificate search.

    The switching space has size 2^(N-1); beyond ``max_vertices`` the
    search refuses to run rather than silently sampling it.
    """

    max_vertices: int = 12


class BudgetExceeded(RuntimeError):
    """The certificate search refused to start: graph too large for the budget."""


@dataclass(frozen=True)
class SymmetryCertificate:
    """Witness that a switched copy of the graph is isomorphic to its negation.

    ``vertex_map`` relabels the switched graph onto the negated one,
    preserving adjacency, weights and signs exactly.
    """

    switching: SwitchingFunction
    vertex_map: Mapping[str, str]

    def __post_init__(self):
        object.__setattr__(self, "vertex_map", dict(self.vertex_map))


def find_bipartite_switching(graph: SignedGraph) -> SwitchingFunction | None:
    """Switching with switched graph equal to the negation, iff bipartite.

    The switching is the +-1 indicator of the bipartition (+1 on the side
    holding the lowest vertex). Every edge crosses the bipartition, so
    every sign flips and the identity map already matches the negation.
    """
    parts = is_bipartite(graph)
    if parts is None:
        return None
    return SwitchingFunction.from_negative_vertices(graph.vertices, parts[1])


def _switchings(vertices: tuple[str, ...]):
    """All switchings with the lowest vertex pinned to +1, lexicographically.

    Pinning halves the space: a global flip of the labels produces the
    same switched graph.
    """
    ordered = sorted(vertices)
    head, rest = ordered[0], ordered[1:]
    k = len(rest)
    for counter in range(1 << k):
        labels = {head: 1}
        for i, x in enumerate(rest):
            labels[x] = -1 if (counter >> (k - 1 - i)) & 1 else 1
        yield SwitchingFunction(labels)


def _vertex_profile(graph: SignedGraph, x: str) -> tuple:
    incident = [graph.edge_between(x, y) for y in graph.neighbors(x)]
    weights = tuple(sorted(e.weight for e in incident))
    signed = tuple(sorted(e.sign * e.weight for e in incident))
    return (graph.degree(x), weights, signed)


def _find_isomorphism(graph1: SignedGraph, graph2: SignedGraph) -> dict[str, str] | None:
    """Lexicographically smallest signed-graph isomorphism, or None.

    Backtracking over vertices in id order; candidate images must match
    the weighted degree and the multisets of incident weights and signed
    weights, all isomorphism invariants.
    """
    if len(graph1.edges) != len(graph2.edges):
        return None
    order = sorted(graph1.vertices)
    pools: dict[tuple, list[str]] = {}
    for y in sorted(graph2.vertices):
        pools.setdefault(_vertex_profile(graph2, y), []).append(y)
    candidates = []
    for x in order:
        pool = pools.get(_vertex_profile(graph1, x))
        if not pool:
            return None
        candidates.append(pool)

    mapping: dict[str, str] = {}
    used: set[str] = set()

    def compatible(x: str, y: str) -> bool:
        for w, z in mapping.items():
            e1 = graph1.edge_between(x, w)
            e2 = graph2.edge_between(y, z)
            if (e1 is None) != (e2 is None):
                return False
            if e1 is not None and (e1.weight != e2.weight or e1.sign != e2.sign):
                return False
        return True

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        x = order[i]
        for y in candidates[i]:
            if y in used or not compatible(x, y):
                continue
            mapping[x] = y
            used.add(y)
            if extend(i + 1):
                return True
            del mapping[x]
            used.discard(y)
        return False

    return dict(mapping) if extend(0) else None


def find_symmetry_certificate(
    graph: SignedGraph, budget: SearchBudget | None = None
) -> SymmetryCertificate | None:
    """Search for a switching plus relabeling onto the negated graph.

    Enumerates switchings in lexicographic order (lowest vertex pinned to
    +1) and runs a pruned isomorphism search against the negation for
    each; the first hit is returned, so the result is the
    lexicographically smallest certificate. Enumeration is exhaustive
    within the budget: ``None`` means no certificate exists.
    """
    if budget is None:
        budget = SearchBudget()
    n = len(graph.vertices)
    if n > budget.max_vertices:
        raise BudgetExceeded(
            f"{n} vertices exceed the search budget of {budget.max_vertices}; "
            "refusing to sample the switching space partially"
        )
    if len(connected_components(graph)) != 1:
        raise GraphError("certificate search requires a connected graph")
    reversed_graph = negate(graph)
    for switching in _switchings(graph.vertices):
        mapping = _find_isomorphism(apply_switching(graph, switching), reversed_graph)
        if mapping is not None:
            return SymmetryCertificate(switching, mapping)
    return None


def verify_certificate(graph: SignedGraph, certificate: SymmetryCertificate) -> bool:
    """True iff the certificate's map is an exact isomorphism onto the negation."""
    if set(certificate.switching.labels) != set(graph.vertices):
        raise GraphError("certificate switching domain does not match the vertex set")
    vertex_map = certificate.vertex_map
    if set(vertex_map) != set(graph.vertices):
        raise GraphError("certificate map domain does not match the vertex set")
    images = set(vertex_map.values())
    if len(images) != len(vertex_map) or images != set(graph.vertices):
        raise GraphError("certificate map is not a permutation of the vertex set")
    switched = apply_switching(graph, certificate.switching)
    return check_isomorphism(switched, negate(graph), vertex_map)
