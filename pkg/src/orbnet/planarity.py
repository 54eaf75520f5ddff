"""Planarity testing via the left-right (LR) partition algorithm.

Implementation follows U. Brandes, "The Left-Right Planarity Test" (2009
technical report): one DFS orients the graph and computes lowpoints and
nesting order, a second DFS maintains a stack of conflict pairs of back-edge
intervals, and on success a third pass resolves edge sides into a rotation
system.  Non-planar graphs can additionally be certified by shrinking the
edge set to an edge-minimal non-planar subgraph, which by Kuratowski's
theorem is a subdivision of K5 or K3,3.

Everything here is per connected component; the sparsity bound e <= 3v - 6
rejects dense components before any DFS runs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graphs import Graph
from .invariants import connected_components

Edge = tuple[int, int]


@dataclass
class PlanarityVerdict:
    """Outcome of a planarity test.

    For planar graphs ``embedding`` maps each vertex to its neighbours in
    rotation order.  For non-planar graphs with a witness requested,
    ``kuratowski_vertices``/``kuratowski_edges`` give an edge-minimal
    non-planar subgraph and ``kuratowski_kind`` is "K5" or "K33".
    """

    planar: bool
    embedding: Optional[dict[int, tuple[int, ...]]] = None
    kuratowski_vertices: Optional[frozenset[int]] = None
    kuratowski_edges: Optional[tuple[Edge, ...]] = None
    kuratowski_kind: Optional[str] = None


class _Interval:
    __slots__ = ("low", "high")

    def __init__(self, low: Optional[Edge] = None, high: Optional[Edge] = None):
        self.low = low
        self.high = high

    def empty(self) -> bool:
        return self.low is None and self.high is None

    def copy(self) -> "_Interval":
        return _Interval(self.low, self.high)


class _ConflictPair:
    __slots__ = ("left", "right")

    def __init__(self, left=None, right=None):
        self.left = left if left is not None else _Interval()
        self.right = right if right is not None else _Interval()

    def swap(self) -> None:
        self.left, self.right = self.right, self.left


class _LRTest:
    """LR test on one set of vertices with symmetric adjacency lists."""

    def __init__(self, vertices: list[int], adj: dict[int, list[int]]):
        self.vertices = vertices
        self.adj = adj
        self.height = {v: -1 for v in vertices}
        self.parent_vertex = {v: None for v in vertices}
        self.parent_edge: dict[int, Optional[Edge]] = {v: None for v in vertices}
        self.lowpt: dict[Edge, int] = {}
        self.lowpt2: dict[Edge, int] = {}
        self.nesting_depth: dict[Edge, int] = {}
        self.oriented: list[Edge] = []
        self.ordered_adj: dict[int, list[int]] = {}
        self.ref: dict[Edge, Optional[Edge]] = {}
        self.side: dict[Edge, int] = {}
        self.S: list[_ConflictPair] = []
        self.stack_bottom: dict[Edge, int] = {}
        self.lowpt_edge: dict[Edge, Edge] = {}
        self.roots: list[int] = []

    # -- phase 1: orientation ------------------------------------------------

    def orient(self) -> None:
        for r in self.vertices:
            if self.height[r] < 0:
                self.height[r] = 0
                self.roots.append(r)
                self._orient_from(r)

    def _orient_from(self, root: int) -> None:
        stack = [(root, 0)]
        while stack:
            v, i = stack.pop()
            adj_v = self.adj[v]
            child = None
            while i < len(adj_v):
                w = adj_v[i]
                i += 1
                if w == self.parent_vertex[v]:
                    continue
                if self.height[w] < 0:  # tree edge, explore below
                    e = (v, w)
                    self.lowpt[e] = self.height[v]
                    self.lowpt2[e] = self.height[v]
                    self.parent_vertex[w] = v
                    self.parent_edge[w] = e
                    self.height[w] = self.height[v] + 1
                    self.oriented.append(e)
                    child = (w, 0)
                    break
                if self.height[w] < self.height[v]:  # back edge
                    e = (v, w)
                    self.lowpt[e] = self.height[w]
                    self.lowpt2[e] = self.height[v]
                    self.oriented.append(e)
                    self._finish_edge(e)
                # height[w] > height[v]: oriented from the other side
            if child is not None:
                stack.append((v, i))
                stack.append(child)
            else:
                pe = self.parent_edge[v]
                if pe is not None:
                    self._finish_edge(pe)

    def _finish_edge(self, e: Edge) -> None:
        """Set nesting depth of e and fold its lowpoints into its parent."""
        v = e[0]
        self.nesting_depth[e] = 2 * self.lowpt[e]
        if self.lowpt2[e] < self.height[v]:  # chordal, nest inside
            self.nesting_depth[e] += 1
        pe = self.parent_edge[v]
        if pe is not None:
            if self.lowpt[e] < self.lowpt[pe]:
                self.lowpt2[pe] = min(self.lowpt[pe], self.lowpt2[e])
                self.lowpt[pe] = self.lowpt[e]
            elif self.lowpt[e] > self.lowpt[pe]:
                self.lowpt2[pe] = min(self.lowpt2[pe], self.lowpt[e])
            else:
                self.lowpt2[pe] = min(self.lowpt2[pe], self.lowpt2[e])

    # -- phase 2: testing ----------------------------------------------------

    def test(self) -> bool:
        for v in self.vertices:
            out = [w for w in self.adj[v] if (v, w) in self.lowpt]
            out.sort(key=lambda w: self.nesting_depth[(v, w)])
            self.ordered_adj[v] = out
        for e in self.oriented:
            self.side[e] = 1
            self.ref[e] = None
        for r in self.roots:
            if not self._test_from(r):
                return False
        return True

    def _test_from(self, root: int) -> bool:
        # Iterative DFS that re-enters a frame after each tree-edge child:
        # on resume the loop continues at the tree edge itself, skipping the
        # stack_bottom/descend step, so its return edges get integrated in
        # the parent's context exactly as in the recursive formulation.
        ind = {v: 0 for v in self.vertices}
        skip_init: set[Edge] = set()
        dfs_stack = [root]
        while dfs_stack:
            v = dfs_stack.pop()
            e = self.parent_edge[v]
            adj_v = self.ordered_adj[v]
            skip_final = False
            while ind[v] < len(adj_v):
                w = adj_v[ind[v]]
                ei = (v, w)
                if ei not in skip_init:
                    self.stack_bottom[ei] = len(self.S)
                    if ei == self.parent_edge[w]:  # tree edge: descend first
                        dfs_stack.append(v)
                        dfs_stack.append(w)
                        skip_init.add(ei)
                        skip_final = True
                        break
                    self.lowpt_edge[ei] = ei
                    self.S.append(_ConflictPair(right=_Interval(ei, ei)))
                if self.lowpt[ei] < self.height[v]:  # ei has a return edge
                    if ind[v] == 0:
                        if e is not None:
                            self.lowpt_edge[e] = self.lowpt_edge[ei]
                    elif not self._add_constraints(ei, e):
                        return False
                ind[v] += 1
            if not skip_final and e is not None:
                self._remove_back_edges(e)
        return True

    def _add_constraints(self, ei: Edge, e: Optional[Edge]) -> bool:
        P = _ConflictPair()
        # merge return edges of ei into P.right
        while True:
            Q = self.S.pop()
            if not Q.left.empty():
                Q.swap()
            if not Q.left.empty():
                return False
            if self.lowpt[Q.right.low] > self.lowpt[e]:
                if P.right.empty():
                    P.right.high = Q.right.high
                else:
                    self.ref[P.right.low] = Q.right.high
                P.right.low = Q.right.low
            else:  # align below lowpt(e)
                self.ref[Q.right.low] = self.lowpt_edge[e]
            if len(self.S) == self.stack_bottom[ei]:
                break
        # merge conflicting return edges of earlier siblings into P.left
        while self._conflicting(self._top().left, ei) or self._conflicting(
            self._top().right, ei
        ):
            Q = self.S.pop()
            if self._conflicting(Q.right, ei):
                Q.swap()
            if self._conflicting(Q.right, ei):
                return False
            if P.right.low is not None:
                self.ref[P.right.low] = Q.right.high
            if Q.right.low is not None:
                P.right.low = Q.right.low
            if P.left.empty():
                P.left.high = Q.left.high
            else:
                self.ref[P.left.low] = Q.left.high
            P.left.low = Q.left.low
        if not (P.left.empty() and P.right.empty()):
            self.S.append(P)
        return True

    def _top(self) -> Optional[_ConflictPair]:
        return self.S[-1] if self.S else None

    def _conflicting(self, interval: Optional[_Interval], b: Edge) -> bool:
        if interval is None:
            return False
        return not interval.empty() and self.lowpt[interval.high] > self.lowpt[b]

    def _lowest(self, P: _ConflictPair) -> int:
        if P.left.empty():
            return self.lowpt[P.right.low]
        if P.right.empty():
            return self.lowpt[P.left.low]
        return min(self.lowpt[P.left.low], self.lowpt[P.right.low])

    def _remove_back_edges(self, e: Edge) -> None:
        u = e[0]
        # drop entire conflict pairs that return no higher than u
        while self.S and self._lowest(self.S[-1]) == self.height[u]:
            P = self.S.pop()
            if P.left.low is not None:
                self.side[P.left.low] = -1
        if self.S:  # trim the topmost pair
            P = self.S.pop()
            while P.left.high is not None and P.left.high[1] == u:
                P.left.high = self.ref[P.left.high]
            if P.left.high is None and P.left.low is not None:
                self.ref[P.left.low] = P.right.low
                self.side[P.left.low] = -1
                P.left.low = None
            while P.right.high is not None and P.right.high[1] == u:
                P.right.high = self.ref[P.right.high]
            if P.right.high is None and P.right.low is not None:
                self.ref[P.right.low] = P.left.low
                self.side[P.right.low] = -1
                P.right.low = None
            self.S.append(P)
        if self.lowpt[e] < self.height[u]:  # e has its own return edge
            top = self.S[-1]
            hl = top.left.high
            hr = top.right.high
            if hl is not None and (hr is None or self.lowpt[hl] > self.lowpt[hr]):
                self.ref[e] = hl
            else:
                self.ref[e] = hr

    # -- phase 3: embedding --------------------------------------------------

    def embed(self) -> dict[int, tuple[int, ...]]:
        for e in self.oriented:
            self.nesting_depth[e] *= self._sign(e)
        rotation: dict[int, list[int]] = {v: [] for v in self.vertices}
        for v in self.vertices:
            out = [w for w in self.adj[v] if (v, w) in self.lowpt]
            out.sort(key=lambda w: self.nesting_depth[(v, w)])
            self.ordered_adj[v] = out
            rotation[v] = list(out)
        left_ref: dict[int, int] = {}
        right_ref: dict[int, int] = {}
        for r in self.roots:
            stack = [(r, 0)]
            while stack:
                v, i = stack.pop()
                adj_v = self.ordered_adj[v]
                child = None
                while i < len(adj_v):
                    w = adj_v[i]
                    i += 1
                    ei = (v, w)
                    if ei == self.parent_edge[w]:  # tree edge
                        rotation[w].insert(0, v)
                        left_ref[v] = w
                        right_ref[v] = w
                        child = (w, 0)
                        break
                    # back edge: place the half-edge (w, v) at the target
                    if self.side[ei] == 1:
                        rot = rotation[w]
                        rot.insert(rot.index(right_ref[w]) + 1, v)
                    else:
                        rot = rotation[w]
                        rot.insert(rot.index(left_ref[w]), v)
                        left_ref[w] = v
                if child is not None:
                    stack.append((v, i))
                    stack.append(child)
        return {v: tuple(rotation[v]) for v in self.vertices}

    def _sign(self, e: Edge) -> int:
        """Resolve the side of e by following its reference chain."""
        chain = []
        while self.ref[e] is not None:
            chain.append(e)
            e = self.ref[e]
        sign = self.side[e]
        for back in reversed(chain):
            self.side[back] = sign = self.side[back] * sign
            self.ref[back] = None
        return sign


def _component_planar(
    vertices: list[int], adj: dict[int, list[int]]
) -> Optional[dict[int, tuple[int, ...]]]:
    """Rotation system of one connected vertex set, or None if non-planar."""
    n = len(vertices)
    m = sum(len(adj[v]) for v in vertices) // 2
    if n >= 3 and m > 3 * n - 6:
        return None
    test = _LRTest(vertices, adj)
    test.orient()
    if not test.test():
        return None
    return test.embed()


def is_planar(graph: Graph, witness: bool = False) -> PlanarityVerdict:
    """Decide planarity; a graph is planar iff all its components are.

    For planar graphs the rotation system is always attached.  Extracting a
    Kuratowski subdivision is quadratic in the edge count, so it only happens
    on request via ``witness=True``.
    """
    embedding: dict[int, tuple[int, ...]] = {}
    for comp in connected_components(graph):
        adj = {v: list(graph.neighbors[v]) for v in comp}
        rot = _component_planar(comp, adj)
        if rot is None:
            verdict = PlanarityVerdict(planar=False)
            if witness:
                vs, es, kind = kuratowski_witness(graph)
                verdict.kuratowski_vertices = vs
                verdict.kuratowski_edges = es
                verdict.kuratowski_kind = kind
            return verdict
        embedding.update(rot)
    return PlanarityVerdict(planar=True, embedding=embedding)


def _edges_planar(n: int, edges: list[Edge]) -> bool:
    """Planarity of an arbitrary edge set on [0, n), used by the minimizer."""
    adj: dict[int, list[int]] = {}
    for u, v in edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    seen: set[int] = set()
    for s in adj:
        if s in seen:
            continue
        comp = [s]
        seen.add(s)
        stack = [s]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    comp.append(y)
                    stack.append(y)
        if _component_planar(comp, {v: adj[v] for v in comp}) is None:
            return False
    return True


def kuratowski_witness(graph: Graph) -> tuple[frozenset[int], tuple[Edge, ...], str]:
    """Edge-minimal non-planar subgraph of a non-planar graph.

    Deleting edges while the graph stays non-planar terminates in a subgraph
    whose every edge matters, which is exactly a subdivision of K5 or K3,3.
    """
    current = graph.edges()
    if _edges_planar(graph.n, current):
        raise ValueError("graph is planar; no Kuratowski subgraph exists")
    for e in list(current):
        trial = [x for x in current if x != e]
        if not _edges_planar(graph.n, trial):
            current = trial
    vertices = frozenset(v for e in current for v in e)
    kind = verify_kuratowski(current)
    assert kind is not None, "edge-minimal non-planar subgraph must be Kuratowski"
    return vertices, tuple(sorted(current)), kind


def verify_kuratowski(edges: list[Edge]) -> Optional[str]:
    """Classify an edge set as a K5 or K3,3 subdivision, else None.

    Suppresses degree-2 vertices and checks the resulting simple graph.
    """
    adj: dict[int, list[int]] = {}
    for u, v in edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    if any(len(set(nbrs)) != len(nbrs) for nbrs in adj.values()):
        return None
    # suppress chains through degree-2 vertices
    changed = True
    while changed:
        changed = False
        for v, nbrs in list(adj.items()):
            if len(nbrs) == 2:
                a, b = nbrs
                if a == b or a == v or b == v:
                    return None  # would create a loop or multi-edge
                if b in adj[a]:
                    return None  # suppression would double an existing edge
                adj[a].remove(v)
                adj[b].remove(v)
                adj[a].append(b)
                adj[b].append(a)
                del adj[v]
                changed = True
                break
    degs = sorted(len(nbrs) for nbrs in adj.values())
    nodes = list(adj)
    if degs == [4, 4, 4, 4, 4] and all(
        set(adj[v]) == set(nodes) - {v} for v in nodes
    ):
        return "K5"
    if degs == [3, 3, 3, 3, 3, 3]:
        # 3-regular on 6 vertices and bipartite is exactly K3,3
        color = {nodes[0]: 0}
        stack = [nodes[0]]
        while stack:
            v = stack.pop()
            for u in adj[v]:
                if u not in color:
                    color[u] = 1 - color[v]
                    stack.append(u)
                elif color[u] == color[v]:
                    return None
        return "K33"
    return None


def verify_embedding(graph: Graph, embedding: dict[int, tuple[int, ...]]) -> bool:
    """Check a rotation system genuinely embeds the graph in the plane.

    Each vertex's rotation must be a permutation of its neighbours, and per
    connected component the face count traced from the rotation system must
    satisfy Euler's formula v - e + f = 2.
    """
    for v in range(graph.n):
        if sorted(embedding.get(v, ())) != list(graph.neighbors[v]):
            return False
    pos = {
        (v, u): i for v in range(graph.n) for i, u in enumerate(embedding.get(v, ()))
    }
    for comp in connected_components(graph):
        ne = sum(graph.degree(v) for v in comp) // 2
        if ne == 0:
            continue  # isolated vertex: single face, v - e + f = 1 - 0 + 1
        darts = {(v, u) for v in comp for u in embedding[v]}
        faces = 0
        while darts:
            start = dart = next(iter(darts))
            faces += 1
            while True:
                darts.discard(dart)
                v, u = dart
                rot = embedding[u]
                dart = (u, rot[(pos[(u, v)] - 1) % len(rot)])
                if dart == start:
                    break
        if len(comp) - ne + faces != 2:
            return False
    return True
