"""Simple undirected graphs on vertices 0..n-1 and the orbital construction.

Adjacency is kept twice: sorted neighbour tuples for enumeration and one
bitmask per vertex for O(1) membership and fast set intersection (used
heavily by the clique and dimension code).
"""

from __future__ import annotations

import json
from typing import Iterable, Optional

from .dynamics import QuadraticFamily
from .errors import UsageError

EXPORT_FORMATS = ("dot", "edgelist", "json")


class Graph:
    """Immutable simple graph; loops and parallel edges are rejected."""

    __slots__ = ("n", "neighbors", "masks", "family")

    def __init__(
        self,
        n: int,
        edges: Iterable[tuple[int, int]],
        family: Optional[QuadraticFamily] = None,
    ) -> None:
        if n < 0:
            raise UsageError("vertex count must be nonnegative")
        masks = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise UsageError(f"edge ({u},{v}) outside vertex range")
            if u == v:
                raise UsageError(f"loop at {u} not allowed in a simple graph")
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        self.n = n
        self.masks = tuple(masks)
        self.neighbors = tuple(tuple(_bits(m)) for m in masks)
        self.family = family

    @property
    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.masks) // 2

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.masks[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.masks[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (min, max) pairs in lexicographic order."""
        out = []
        for u in range(self.n):
            for v in self.neighbors[u]:
                if v > u:
                    out.append((u, v))
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.n == other.n
            and self.masks == other.masks
            and self.family == other.family
        )

    def __hash__(self) -> int:
        return hash((self.n, self.masks))

    def __repr__(self) -> str:
        tag = f" {self.family.label()}" if self.family else ""
        return f"Graph(n={self.n}, edges={self.edge_count}{tag})"


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def build_orbital_graph(family: QuadraticFamily) -> Graph:
    """Undirected simple graph with an edge {x, T_i(x)} for every generator.

    Fixed points of a generator give loops and are dropped; edges produced by
    several generators or by a 2-cycle merge into one.
    """
    n = family.n
    edges = set()
    for x in range(n):
        x2 = x * x % n
        for a in family.coeffs:
            y = (x2 + a) % n
            if y != x:
                edges.add((x, y) if x < y else (y, x))
    return Graph(n, edges, family=family)


class InducedSubgraph:
    """A vertex subset of a parent graph with the inherited adjacency.

    Vertices keep their labels in the parent; ``mask`` is the subset as a
    bitmask over the parent's vertex range.
    """

    __slots__ = ("parent", "vertices", "mask")

    def __init__(self, parent: Graph, vertices: Iterable[int]) -> None:
        vs = sorted(set(vertices))
        for v in vs:
            if not 0 <= v < parent.n:
                raise UsageError(f"vertex {v} not in parent graph")
        self.parent = parent
        self.vertices = tuple(vs)
        self.mask = 0
        for v in vs:
            self.mask |= 1 << v

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    def degree(self, v: int) -> int:
        return (self.parent.masks[v] & self.mask).bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.mask >> u & 1) and bool(self.mask >> v & 1) and self.parent.has_edge(u, v)

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in self.vertices:
            m = self.parent.masks[u] & self.mask
            for v in _bits(m):
                if v > u:
                    out.append((u, v))
        return out

    def __repr__(self) -> str:
        return f"InducedSubgraph({self.vertex_count} of {self.parent.n} vertices)"


def unit_sphere(graph: Graph, v: int) -> InducedSubgraph:
    """Induced subgraph on the neighbours of v (v itself excluded)."""
    if not 0 <= v < graph.n:
        raise UsageError(f"vertex {v} outside [0, {graph.n - 1}]")
    return InducedSubgraph(graph, graph.neighbors[v])


def export_graph(graph: Graph, fmt: str) -> str:
    """Serialize a graph deterministically.

    Vertices are emitted in ascending order and edges as (min, max) pairs in
    lexicographic order, so equal graphs export byte-identically.
    """
    if fmt == "dot":
        lines = ["graph g {"]
        lines += [f"  {v};" for v in range(graph.n)]
        lines += [f"  {u} -- {v};" for u, v in graph.edges()]
        lines.append("}")
        return "\n".join(lines) + "\n"
    if fmt == "edgelist":
        coeffs = ""
        if graph.family is not None:
            coeffs = " coeffs=" + ";".join(map(str, graph.family.coeffs))
        lines = [f"# n={graph.n}{coeffs}"]
        lines += [f"{u} {v}" for u, v in graph.edges()]
        return "\n".join(lines) + "\n"
    if fmt == "json":
        payload = {
            "n": graph.n,
            "coeffs": list(graph.family.coeffs) if graph.family else None,
            "edges": [list(e) for e in graph.edges()],
        }
        return json.dumps(payload, separators=(",", ":")) + "\n"
    raise UsageError(f"unknown export format {fmt!r}; expected one of {EXPORT_FORMATS}")


def graph_from_json(text: str) -> Graph:
    """Inverse of ``export_graph(..., "json")``."""
    try:
        payload = json.loads(text)
        n = payload["n"]
        coeffs = payload["coeffs"]
        edges = [tuple(e) for e in payload["edges"]]
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise UsageError(f"not a graph JSON document: {exc}") from exc
    family = QuadraticFamily.of(n, coeffs) if coeffs is not None else None
    return Graph(n, edges, family=family)
