"""Signed weighted graphs and the combinatorial operations on them.

A signed graph is a finite undirected graph without isolated vertices in
which every edge carries a strictly positive weight and a sign from
{+1, -1}. Vertex identifiers are opaque strings; their lexicographic
order is used for every deterministic tie-break (traversal roots,
witness normalization, output ordering).

All types are immutable after construction and all operations are pure
functions, so values can be shared freely across concurrent tasks.
"""

import math
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Sequence

VALID_SIGNS = (1, -1)


class GraphError(ValueError):
    """Input data violates a structural invariant of signed graphs."""


@dataclass(frozen=True, order=True)
class Edge:
    """Undirected edge stored with canonical endpoint order ``u < v``."""

    u: str
    v: str
    weight: float
    sign: int


def make_edge(u: str, v: str, weight: float, sign: int) -> Edge:
    """Validate edge data and return the canonical (u < v) ``Edge``."""
    if u == v:
        raise GraphError(f"self-loop at vertex {u!r}")
    w = float(weight)
    if not math.isfinite(w) or w <= 0.0:
        raise GraphError(f"edge ({u!r}, {v!r}) needs a finite positive weight, got {weight!r}")
    if sign not in VALID_SIGNS:
        raise GraphError(f"edge ({u!r}, {v!r}) needs sign +1 or -1, got {sign!r}")
    if v < u:
        u, v = v, u
    return Edge(u, v, w, int(sign))


@dataclass(frozen=True)
class SignedGraph:
    """Immutable signed weighted graph.

    ``vertices`` fixes the row/column order of every matrix built from the
    graph. ``edges`` must be canonical (``u < v``), sorted, and free of
    duplicates; ``build_graph`` takes care of that for raw edge lists.
    """

    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]

    def __post_init__(self):
        if not self.vertices:
            raise GraphError("graph needs at least one vertex")
        if len(set(self.vertices)) != len(self.vertices):
            raise GraphError("duplicate vertex identifiers")
        known = set(self.vertices)
        seen_pairs = set()
        touched = set()
        previous = None
        for edge in self.edges:
            if edge.u == edge.v:
                raise GraphError(f"self-loop at vertex {edge.u!r}")
            if edge.v < edge.u:
                raise GraphError(f"edge ({edge.u!r}, {edge.v!r}) not in canonical order")
            if edge.u not in known or edge.v not in known:
                raise GraphError(f"edge ({edge.u!r}, {edge.v!r}) references an unknown vertex")
            if not math.isfinite(edge.weight) or edge.weight <= 0.0:
                raise GraphError(f"edge ({edge.u!r}, {edge.v!r}) has nonpositive weight")
            if edge.sign not in VALID_SIGNS:
                raise GraphError(f"edge ({edge.u!r}, {edge.v!r}) has sign {edge.sign!r}")
            pair = (edge.u, edge.v)
            if pair in seen_pairs:
                raise GraphError(f"duplicate edge ({edge.u!r}, {edge.v!r})")
            if previous is not None and edge < previous:
                raise GraphError("edges must be sorted")
            seen_pairs.add(pair)
            touched.add(edge.u)
            touched.add(edge.v)
            previous = edge
        isolated = known - touched
        if isolated:
            raise GraphError(f"isolated vertices are not allowed: {sorted(isolated)}")

    @cached_property
    def vertex_index(self) -> dict[str, int]:
        return {x: i for i, x in enumerate(self.vertices)}

    @cached_property
    def _neighbor_map(self) -> dict[str, dict[str, Edge]]:
        nbrs: dict[str, dict[str, Edge]] = {x: {} for x in self.vertices}
        for edge in self.edges:
            nbrs[edge.u][edge.v] = edge
            nbrs[edge.v][edge.u] = edge
        return nbrs

    @cached_property
    def degrees(self) -> dict[str, float]:
        """Weighted degree m(x): the sum of incident edge weights."""
        m = {x: 0.0 for x in self.vertices}
        for edge in self.edges:
            m[edge.u] += edge.weight
            m[edge.v] += edge.weight
        return m

    def degree(self, x: str) -> float:
        return self.degrees[x]

    def neighbors(self, x: str) -> tuple[str, ...]:
        return tuple(sorted(self._neighbor_map[x]))

    def edge_between(self, x: str, y: str) -> Edge | None:
        return self._neighbor_map[x].get(y)

    def signed_weight(self, x: str, y: str) -> float:
        """Signed weight of the edge between x and y, 0.0 when absent."""
        edge = self._neighbor_map[x].get(y)
        return 0.0 if edge is None else edge.sign * edge.weight


@dataclass(frozen=True)
class SwitchingFunction:
    """A +-1 label per vertex.

    Applying it to a graph flips the sign of exactly those edges whose
    endpoints carry different labels; cycle signs and the spectrum are
    invariant under this operation.
    """

    labels: Mapping[str, int]

    def __post_init__(self):
        clean = {}
        for x, value in dict(self.labels).items():
            if value not in VALID_SIGNS:
                raise GraphError(f"switching label for {x!r} must be +1 or -1, got {value!r}")
            clean[x] = int(value)
        object.__setattr__(self, "labels", clean)

    def __getitem__(self, x: str) -> int:
        return self.labels[x]

    @classmethod
    def constant(cls, vertices: Iterable[str], value: int = 1) -> "SwitchingFunction":
        return cls({x: value for x in vertices})

    @classmethod
    def from_negative_vertices(cls, vertices: Iterable[str], negatives: Iterable[str]) -> "SwitchingFunction":
        neg = set(negatives)
        return cls({x: (-1 if x in neg else 1) for x in vertices})


def build_graph(edge_spec: Iterable[tuple[str, str, float, int]]) -> SignedGraph:
    """Build a validated graph from ``(u, v, weight, sign)`` tuples.

    The vertex set is the union of the endpoints, ordered
    lexicographically. Duplicate unordered pairs, self-loops and
    nonpositive weights are rejected.
    """
    edges: list[Edge] = []
    seen: set[tuple[str, str]] = set()
    for u, v, weight, sign in edge_spec:
        edge = make_edge(str(u), str(v), weight, sign)
        pair = (edge.u, edge.v)
        if pair in seen:
            raise GraphError(f"duplicate edge ({edge.u!r}, {edge.v!r})")
        seen.add(pair)
        edges.append(edge)
    if not edges:
        raise GraphError("graph needs at least one edge")
    names = sorted({x for e in edges for x in (e.u, e.v)})
    return SignedGraph(tuple(names), tuple(sorted(edges)))


def negate(graph: SignedGraph) -> SignedGraph:
    """Same vertices, edges and weights with every sign flipped."""
    flipped = tuple(Edge(e.u, e.v, e.weight, -e.sign) for e in graph.edges)
    return SignedGraph(graph.vertices, flipped)


def apply_switching(graph: SignedGraph, switching: SwitchingFunction) -> SignedGraph:
    """Return the switched graph: edge (x, y) gets sign label(x)*sign*label(y)."""
    labels = switching.labels
    missing = [x for x in graph.vertices if x not in labels]
    if missing:
        raise GraphError(f"switching function is missing vertices {missing}")
    extra = sorted(set(labels) - set(graph.vertices))
    if extra:
        raise GraphError(f"switching function labels unknown vertices {extra}")
    switched = tuple(
        Edge(e.u, e.v, e.weight, labels[e.u] * e.sign * labels[e.v]) for e in graph.edges
    )
    return SignedGraph(graph.vertices, switched)


def connected_components(graph: SignedGraph) -> list[tuple[str, ...]]:
    """Connected components as sorted vertex tuples, ordered by their minimum."""
    unvisited = set(graph.vertices)
    components = []
    for root in sorted(graph.vertices):
        if root not in unvisited:
            continue
        queue = deque([root])
        unvisited.discard(root)
        component = [root]
        while queue:
            x = queue.popleft()
            for y in graph.neighbors(x):
                if y in unvisited:
                    unvisited.discard(y)
                    component.append(y)
                    queue.append(y)
        components.append(tuple(sorted(component)))
    return components


def is_bipartite(graph: SignedGraph) -> tuple[tuple[str, ...], tuple[str, ...]] | None:
    """Two-color the underlying graph, ignoring signs.

    Returns ``(V1, V2)`` with every edge crossing, or ``None`` if some
    component contains an odd cycle. Deterministic: the lowest vertex of
    each component lands in V1; disconnected graphs are handled per
    component and the parts are stitched together.
    """
    side: dict[str, int] = {}
    for component in connected_components(graph):
        root = component[0]
        side[root] = 0
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y in graph.neighbors(x):
                if y not in side:
                    side[y] = 1 - side[x]
                    queue.append(y)
                elif side[y] == side[x]:
                    return None
    part1 = tuple(sorted(x for x, s in side.items() if s == 0))
    part2 = tuple(sorted(x for x, s in side.items() if s == 1))
    return part1, part2


@dataclass(frozen=True)
class BalanceClassification:
    """Outcome of the balance test with switching witnesses.

    A graph can be balanced and antibalanced at the same time (any
    balanced bipartite graph, trees in particular), so both witnesses are
    reported; ``kind`` collapses them to a single label with balance
    taking precedence.
    """

    balanced: SwitchingFunction | None
    antibalanced: SwitchingFunction | None

    @property
    def kind(self) -> str:
        if self.balanced is not None:
            return "balanced"
        if self.antibalanced is not None:
            return "antibalanced"
        return "neither"


def _uniform_sign_switching(graph: SignedGraph, target: int) -> SwitchingFunction | None:
    """Switching making every edge sign equal to ``target``, else None.

    Sign-propagating breadth-first traversal from the lowest vertex of
    each component (labeled +1), then a full verification pass.
    """
    labels: dict[str, int] = {}
    for component in connected_components(graph):
        root = component[0]
        labels[root] = 1
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y in graph.neighbors(x):
                if y not in labels:
                    edge = graph.edge_between(x, y)
                    labels[y] = target * edge.sign * labels[x]
                    queue.append(y)
    for edge in graph.edges:
        if labels[edge.u] * edge.sign * labels[edge.v] != target:
            return None
    return SwitchingFunction(labels)


def classify_balance(graph: SignedGraph) -> BalanceClassification:
    """Detect balance (all cycles positive) and antibalance (negation balanced).

    Balanced means some switching turns every sign positive; antibalanced
    means some switching turns every sign negative. Witnesses are
    normalized so the lowest vertex of each component carries +1.
    """
    return BalanceClassification(
        balanced=_uniform_sign_switching(graph, 1),
        antibalanced=_uniform_sign_switching(graph, -1),
    )


def cycle_sign(graph: SignedGraph, cycle: Sequence[str]) -> int:
    """Product of edge signs along a closed walk.

    The walk may be given either with or without the repeated final
    vertex; consecutive vertices must be adjacent.
    """
    walk = list(cycle)
    if len(walk) >= 2 and walk[0] == walk[-1]:
        walk.pop()
    if len(walk) < 2:
        raise GraphError("a closed walk needs at least one edge")
    sign = 1
    for a, b in zip(walk, walk[1:] + walk[:1]):
        edge = graph.edge_between(a, b)
        if edge is None:
            raise GraphError(f"no edge between {a!r} and {b!r}")
        sign *= edge.sign
    return sign


def check_isomorphism(
    graph1: SignedGraph, graph2: SignedGraph, mapping: Mapping[str, str]
) -> bool:
    """True iff ``mapping`` preserves adjacency, weights and signs exactly.

    Weights are compared as stored values (they are input data, not
    computed). The mapping must be a bijection from the first graph's
    vertices onto the second's; anything else raises ``GraphError``.
    """
    if len(graph1.vertices) != len(graph2.vertices):
        raise GraphError("graphs have different vertex counts")
    if set(mapping) != set(graph1.vertices):
        raise GraphError("mapping domain must be the first graph's vertex set")
    images = set(mapping.values())
    if len(images) != len(mapping) or images != set(graph2.vertices):
        raise GraphError("mapping must be a bijection onto the second graph's vertex set")
    if len(graph1.edges) != len(graph2.edges):
        return False
    for edge in graph1.edges:
        image = graph2.edge_between(mapping[edge.u], mapping[edge.v])
        if image is None or image.weight != edge.weight or image.sign != edge.sign:
            return False
    return True
