"""Brute-force reference implementations used only by the tests.

Each oracle deliberately takes a different route from the library code it
checks: cliques by subset enumeration, dimension by set recursion, branch
cover by exact set cover, planarity by Kuratowski-subdivision search,
diameter by Floyd-Warshall, components by union-find.
"""

from collections import defaultdict
from fractions import Fraction
from itertools import combinations, permutations, product


def brute_clique_counts(graph):
    """Count complete subgraphs of every size by trying all vertex subsets."""
    n = graph.n
    counts = [n]
    for k in range(2, n + 1):
        total = 0
        for subset in combinations(range(n), k):
            if all(graph.has_edge(u, v) for u, v in combinations(subset, 2)):
                total += 1
        if total == 0:
            break
        counts.append(total)
    if len(counts) == 1 and n > 0:
        return counts
    return counts


def brute_chi_incremental(graph):
    """Euler characteristic summed clique by clique, sign by size."""
    n = graph.n
    chi = n
    for k in range(2, n + 1):
        found = False
        for subset in combinations(range(n), k):
            if all(graph.has_edge(u, v) for u, v in combinations(subset, 2)):
                chi += (-1) ** (k - 1)
                found = True
        if not found:
            break
    return chi


def brute_components(graph):
    """Union-find over the edge list."""
    parent = list(range(graph.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in graph.edges():
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    groups = defaultdict(list)
    for v in range(graph.n):
        groups[find(v)].append(v)
    return sorted(sorted(g) for g in groups.values())


def brute_diameter(graph):
    """Floyd-Warshall; returns float('inf') when disconnected."""
    n = graph.n
    INF = float("inf")
    dist = [[0 if i == j else INF for j in range(n)] for i in range(n)]
    for u, v in graph.edges():
        dist[u][v] = dist[v][u] = 1
    for k in range(n):
        dk = dist[k]
        for i in range(n):
            dik = dist[i][k]
            if dik == INF:
                continue
            di = dist[i]
            for j in range(n):
                alt = dik + dk[j]
                if alt < di[j]:
                    di[j] = alt
    return max(dist[i][j] for i in range(n) for j in range(n)) if n else INF


def brute_dimension(graph):
    """Inductive dimension by direct recursion on frozen vertex sets."""
    memo = {}

    def dim(vs):
        if not vs:
            return Fraction(-1)
        if vs in memo:
            return memo[vs]
        total = Fraction(0)
        for v in vs:
            sphere = frozenset(u for u in vs if u != v and graph.has_edge(u, v))
            total += dim(sphere)
        value = 1 + total / len(vs)
        memo[vs] = value
        return value

    return dim(frozenset(range(graph.n)))


def brute_branch(digraph, x):
    """Forward closure by fixed-point iteration over whole sets."""
    current = {x}
    while True:
        bigger = set(current)
        for v in current:
            bigger.update(digraph.out[v])
        if bigger == current:
            return current
        current = bigger


def brute_min_branch_cover(digraph):
    """Exact minimal number of branches covering Z_n (set cover search).

    Dominated branch sets can never be needed, which keeps the search space
    small without referring to the condensation structure.
    """
    n = digraph.n
    branches = []
    for x in range(n):
        mask = 0
        for v in brute_branch(digraph, x):
            mask |= 1 << v
        branches.append(mask)
    full = (1 << n) - 1
    unique = sorted(set(branches), key=lambda m: -bin(m).count("1"))
    useful = [
        b for b in unique if not any(b != o and b | o == o for o in unique)
    ]
    for k in range(1, len(useful) + 1):
        for pick in combinations(useful, k):
            union = 0
            for b in pick:
                union |= b
            if union == full:
                return k
    return len(useful)


# -- planarity oracle (Kuratowski subdivisions, for graphs with <= 8 vertices)


def _path_through(adj, u, v, internals):
    if not internals:
        return v in adj[u]
    for perm in permutations(internals):
        seq = (u, *perm, v)
        if all(seq[i + 1] in adj[seq[i]] for i in range(len(seq) - 1)):
            return True
    return False


def _has_subdivision(adj, n, branch_sets):
    """branch_sets yields (branch_vertices, list-of-pairs-to-connect)."""
    for branches, pairs in branch_sets:
        spares = [v for v in range(n) if v not in branches]
        # each spare is internal to at most one path (or unused)
        for assign in product(range(len(pairs) + 1), repeat=len(spares)):
            groups = defaultdict(list)
            for spare, slot in zip(spares, assign):
                if slot < len(pairs):
                    groups[slot].append(spare)
            if all(
                _path_through(adj, a, b, groups.get(i, []))
                for i, (a, b) in enumerate(pairs)
            ):
                return True
    return False


def brute_planar(graph):
    """Planar iff no K5 and no K3,3 subdivision (Kuratowski's theorem)."""
    n = graph.n
    if n > 8:
        raise ValueError("subdivision search oracle limited to 8 vertices")
    adj = {v: set(graph.neighbors[v]) for v in range(n)}

    def k5_candidates():
        eligible = [v for v in range(n) if len(adj[v]) >= 4]
        for branches in combinations(eligible, 5):
            yield set(branches), list(combinations(branches, 2))

    def k33_candidates():
        eligible = [v for v in range(n) if len(adj[v]) >= 3]
        for six in combinations(eligible, 6):
            for left in combinations(six, 3):
                right = [v for v in six if v not in left]
                yield set(six), [(a, b) for a in left for b in right]

    if _has_subdivision(adj, n, k5_candidates()):
        return False
    if _has_subdivision(adj, n, k33_candidates()):
        return False
    return True
