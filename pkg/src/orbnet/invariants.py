"""Undirected graph invariants: cliques, Euler characteristic, components,
diameter, degree statistics and the exact-rational inductive dimension."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Union

from .dynamics import QuadraticFamily
from .graphs import Graph

INFINITE = math.inf

Diameter = Union[int, float]


@dataclass(frozen=True)
class CliqueVector:
    """counts[k] is the number of complete subgraphs K_{k+1}; counts[0] = n."""

    counts: tuple[int, ...]

    def __getitem__(self, k: int) -> int:
        return self.counts[k] if 0 <= k < len(self.counts) else 0

    def __len__(self) -> int:
        return len(self.counts)

    @property
    def k_max(self) -> int:
        return len(self.counts) - 1

    @property
    def chi(self) -> int:
        return sum(c if k % 2 == 0 else -c for k, c in enumerate(self.counts))

    @property
    def triangles(self) -> int:
        return self[2]

    @property
    def tetrahedra(self) -> int:
        return self[3]


def clique_counts(graph: Graph) -> CliqueVector:
    """Exact counts of complete subgraphs of every size.

    Ordered extension: a clique is grown only through common neighbours with
    a larger vertex number, so each K_{k+1} is generated exactly once.  The
    orbital graphs have max degree <= 3d, keeping candidate sets tiny.
    """
    n = graph.n
    masks = graph.masks
    counts = [n]

    def extend(cand: int, size: int) -> None:
        m = cand
        while m:
            low = m & -m
            u = low.bit_length() - 1
            m ^= low
            if len(counts) <= size:
                counts.append(0)
            counts[size] += 1
            nxt = cand & masks[u] & -(low << 1)
            if nxt:
                extend(nxt, size + 1)

    for v in range(n):
        cand = masks[v] >> (v + 1) << (v + 1)
        if cand:
            extend(cand, 1)
    # trim trailing zeros (only possible when n == 0)
    while len(counts) > 1 and counts[-1] == 0:
        counts.pop()
    return CliqueVector(tuple(counts))


def euler_characteristic(graph: Graph) -> int:
    """Alternating sum of the clique counts."""
    return clique_counts(graph).chi


def connected_components(graph: Graph) -> list[list[int]]:
    """Partition of the vertices into maximal connected sets.

    Each part is sorted ascending and parts are ordered by smallest member.
    """
    n = graph.n
    seen = bytearray(n)
    neighbors = graph.neighbors
    parts = []
    for s in range(n):
        if seen[s]:
            continue
        seen[s] = 1
        comp = [s]
        stack = [s]
        while stack:
            v = stack.pop()
            for u in neighbors[v]:
                if not seen[u]:
                    seen[u] = 1
                    comp.append(u)
                    stack.append(u)
        comp.sort()
        parts.append(comp)
    return parts


def cycle_rank(graph: Graph) -> int:
    """First Betti number of the 1-skeleton: |E| - |V| + b0."""
    return graph.edge_count - graph.n + len(connected_components(graph))


def diameter(graph: Graph) -> Diameter:
    """Largest shortest-path distance; INFINITE when disconnected."""
    n = graph.n
    if n == 0:
        return INFINITE
    neighbors = graph.neighbors
    best = 0
    for s in range(n):
        dist = [-1] * n
        dist[s] = 0
        reached = 1
        q = deque([s])
        while q:
            v = q.popleft()
            dv = dist[v]
            for u in neighbors[v]:
                if dist[u] < 0:
                    dist[u] = dv + 1
                    reached += 1
                    q.append(u)
        if reached < n:
            return INFINITE
        ecc = max(dist)
        if ecc > best:
            best = ecc
    return best


def degree_histogram(graph: Graph) -> dict[int, int]:
    """Map degree -> number of vertices, keys ascending."""
    hist: dict[int, int] = {}
    for v in range(graph.n):
        d = graph.degree(v)
        hist[d] = hist.get(d, 0) + 1
    return dict(sorted(hist.items()))


def inductive_dimension(graph: Graph) -> Fraction:
    """Recursive mean sphere dimension, as an exact rational.

    dim(empty) = -1 and dim(G) = 1 + mean over vertices of dim of their unit
    spheres.  Spheres are induced subgraphs of the ambient graph, so the memo
    is keyed by vertex-subset bitmask; spheres of spheres recur heavily.
    """
    masks = graph.masks
    memo: dict[int, Fraction] = {}

    def dim(sub: int) -> Fraction:
        if sub == 0:
            return _MINUS_ONE
        cached = memo.get(sub)
        if cached is not None:
            return cached
        total = Fraction(0)
        count = 0
        m = sub
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            total += dim(masks[v] & sub)
            count += 1
        value = 1 + total / count
        memo[sub] = value
        return value

    return dim(graph.full_mask)


_MINUS_ONE = Fraction(-1)


@dataclass
class InvariantReport:
    """Computed invariants of one family's orbital graph.

    Fields not requested by the caller stay None.  ``diameter`` uses the
    INFINITE sentinel for disconnected graphs.
    """

    family: Optional[QuadraticFamily]
    n: int
    d: int
    vertices: int
    edges: int
    clique_vector: Optional[CliqueVector] = None
    chi: Optional[int] = None
    components: Optional[int] = None
    cycle_rank: Optional[int] = None
    diameter: Optional[Diameter] = None
    dimension: Optional[Fraction] = None
    degree_histogram: Optional[dict[int, int]] = None
    planar: Optional[bool] = None
    kuratowski_kind: Optional[str] = None
    branch_cover: Optional[int] = None
    positively_connected: Optional[bool] = None
    garden_of_eden_size: Optional[int] = None

    def to_json_dict(self) -> dict:
        """JSON-friendly dict with a fixed key order; inf encoded as "inf"."""
        dim = self.dimension
        return {
            "n": self.n,
            "d": self.d,
            "coeffs": list(self.family.coeffs) if self.family else None,
            "prime": self.family.modulus.prime if self.family else None,
            "vertices": self.vertices,
            "edges": self.edges,
            "clique_counts": list(self.clique_vector.counts)
            if self.clique_vector
            else None,
            "chi": self.chi,
            "components": self.components,
            "cycle_rank": self.cycle_rank,
            "diameter": _encode_diameter(self.diameter),
            "dimension": None
            if dim is None
            else {
                "num": dim.numerator,
                "den": dim.denominator,
                "str": f"{dim.numerator}/{dim.denominator}",
                "decimal": float(dim),
            },
            "degree_histogram": None
            if self.degree_histogram is None
            else {str(k): v for k, v in self.degree_histogram.items()},
            "planar": self.planar,
            "kuratowski_kind": self.kuratowski_kind,
            "branch_cover": self.branch_cover,
            "positively_connected": self.positively_connected,
            "garden_of_eden_size": self.garden_of_eden_size,
        }


def _encode_diameter(value: Optional[Diameter]):
    if value is None:
        return None
    if value == INFINITE:
        return "inf"
    return int(value)
