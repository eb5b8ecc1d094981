"""JSON input/output for signed graphs.

Document shape:

    {"vertices": ["a", "b", ...],
     "edges": [{"u": "a", "v": "b", "weight": 1.0, "sign": -1}, ...]}

Signs must be exactly 1 or -1, weights finite positive numbers, and the
vertex list fixes the matrix order used everywhere downstream.
"""

import json
import math

from .graph import Edge, GraphError, SignedGraph, make_edge


def _require_number(value, what: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise GraphError(f"{what} must be a number, got {value!r}")
    return float(value)


def graph_from_dict(data) -> SignedGraph:
    """Build a graph from a parsed JSON document, preserving vertex order."""
    if not isinstance(data, dict):
        raise GraphError("graph document must be a JSON object")
    vertices = data.get("vertices")
    if not isinstance(vertices, list) or not all(isinstance(x, str) for x in vertices):
        raise GraphError('"vertices" must be a list of strings')
    raw_edges = data.get("edges")
    if not isinstance(raw_edges, list):
        raise GraphError('"edges" must be a list')
    edges: list[Edge] = []
    seen: set[tuple[str, str]] = set()
    for item in raw_edges:
        if not isinstance(item, dict):
            raise GraphError("each edge must be a JSON object")
        u, v = item.get("u"), item.get("v")
        if not isinstance(u, str) or not isinstance(v, str):
            raise GraphError(f'edge endpoints "u" and "v" must be strings, got {item!r}')
        weight = _require_number(item.get("weight"), f"weight of edge ({u!r}, {v!r})")
        if not math.isfinite(weight):
            raise GraphError(f"weight of edge ({u!r}, {v!r}) must be finite")
        sign_raw = item.get("sign")
        sign_num = _require_number(sign_raw, f"sign of edge ({u!r}, {v!r})")
        if sign_num not in (1.0, -1.0):
            raise GraphError(f"sign of edge ({u!r}, {v!r}) must be exactly 1 or -1")
        edge = make_edge(u, v, weight, int(sign_num))
        pair = (edge.u, edge.v)
        if pair in seen:
            raise GraphError(f"duplicate edge ({edge.u!r}, {edge.v!r})")
        seen.add(pair)
        edges.append(edge)
    return SignedGraph(tuple(vertices), tuple(sorted(edges)))


def graph_to_dict(graph: SignedGraph) -> dict:
    return {
        "vertices": list(graph.vertices),
        "edges": [
            {"u": e.u, "v": e.v, "weight": e.weight, "sign": e.sign}
            for e in graph.edges
        ],
    }


def load_graph(path) -> SignedGraph:
    """Read and validate a graph JSON file."""
    with open(path, "r", encoding="utf-8") as handle:
        try:
            data = json.load(handle)
        except json.JSONDecodeError as exc:
            raise GraphError(f"invalid JSON in {path}: {exc}") from exc
    return graph_from_dict(data)


def dump_graph(graph: SignedGraph, path) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(graph_to_dict(graph), handle, sort_keys=True)
        handle.write("\n")
