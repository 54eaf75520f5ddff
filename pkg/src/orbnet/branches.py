"""Branch structure of a functional digraph.

The branch of x is its forward orbit under the generator monoid.  Two
vertices join in the branch graph when their branches intersect; the system
is positively connected when that happens for every pair.  The minimal
number of branches covering all of Z_n equals the number of source
components in the condensation of the digraph: a source component is
reachable from nowhere else, so some branch must start inside it, and one
branch per source component already reaches everything downstream.
"""

from __future__ import annotations

from .dynamics import FunctionalDigraph
from .graphs import Graph


def strongly_connected_components(digraph: FunctionalDigraph) -> list[list[int]]:
    """Tarjan's algorithm, iterative; components in reverse topological order."""
    n = digraph.n
    out = digraph.out
    UNSEEN = -1
    index = [UNSEEN] * n
    low = [0] * n
    on_stack = bytearray(n)
    stack: list[int] = []
    components: list[list[int]] = []
    counter = 0
    for root in range(n):
        if index[root] != UNSEEN:
            continue
        work = [(root, 0)]
        while work:
            v, i = work.pop()
            if i == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = 1
            descended = False
            while i < len(out[v]):
                w = out[v][i]
                i += 1
                if index[w] == UNSEEN:
                    work.append((v, i))
                    work.append((w, 0))
                    descended = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if descended:
                continue
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = 0
                    comp.append(w)
                    if w == v:
                        break
                comp.sort()
                components.append(comp)
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
    return components


def branch_masks(digraph: FunctionalDigraph) -> list[int]:
    """Forward closure of every vertex as a bitmask.

    Computed over the condensation: components come out of Tarjan sinks
    first, so each component's reach is its own vertices plus the already
    final reach of its successors.
    """
    n = digraph.n
    out = digraph.out
    comps = strongly_connected_components(digraph)
    comp_id = [0] * n
    for ci, comp in enumerate(comps):
        for v in comp:
            comp_id[v] = ci
    reach = [0] * len(comps)
    for ci, comp in enumerate(comps):
        mask = 0
        for v in comp:
            mask |= 1 << v
            for w in out[v]:
                if comp_id[w] != ci:
                    mask |= reach[comp_id[w]]
        reach[ci] = mask
    return [reach[comp_id[v]] for v in range(n)]


def branch_graph(digraph: FunctionalDigraph) -> Graph:
    """Graph on Z_n joining x,y whenever their branches intersect."""
    n = digraph.n
    bm = branch_masks(digraph)
    edges = []
    for x in range(n):
        bx = bm[x]
        for y in range(x + 1, n):
            if bx & bm[y]:
                edges.append((x, y))
    return Graph(n, edges, family=digraph.family)


def positively_connected(digraph: FunctionalDigraph) -> bool:
    """True iff every pair of branches intersects (branch graph complete)."""
    bm = branch_masks(digraph)
    n = digraph.n
    for x in range(n):
        bx = bm[x]
        for y in range(x + 1, n):
            if not bx & bm[y]:
                return False
    return True


def branch_cover_number(digraph: FunctionalDigraph) -> int:
    """Minimal number of branches whose union is all of Z_n."""
    n = digraph.n
    out = digraph.out
    comps = strongly_connected_components(digraph)
    comp_id = [0] * n
    for ci, comp in enumerate(comps):
        for v in comp:
            comp_id[v] = ci
    has_external_in = bytearray(len(comps))
    for v in range(n):
        for w in out[v]:
            if comp_id[v] != comp_id[w]:
                has_external_in[comp_id[w]] = 1
    return sum(1 for flag in has_external_in if not flag)
