import json
from itertools import combinations, permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from orbnet import (
    Graph,
    QuadraticFamily,
    UsageError,
    build_orbital_graph,
    connected_components,
    export_graph,
    graph_from_json,
    primes_between,
    unit_sphere,
)


def orbital(n, coeffs):
    return build_orbital_graph(QuadraticFamily.of(n, coeffs))


def complete_graph(k):
    return Graph(k, combinations(range(k), 2))


# -- construction -----------------------------------------------------------


def test_build_examples():
    g = orbital(5, (0,))
    assert g.edges() == [(1, 4), (2, 4), (3, 4)]
    assert g.degree(0) == 0

    g2 = orbital(2, (0,))
    assert g2.n == 2 and g2.edge_count == 0

    g311 = orbital(311, (57, 58, 213))
    assert len(connected_components(g311)) == 2


def test_graph_rejects_bad_edges():
    with pytest.raises(UsageError):
        Graph(3, [(0, 0)])
    with pytest.raises(UsageError):
        Graph(3, [(0, 3)])


def test_adjacency_symmetric_irreflexive():
    for n, coeffs in ((5, (0,)), (13, (1, 5)), (12, (0, 3, 7))):
        g = orbital(n, coeffs)
        for u in range(n):
            assert not g.has_edge(u, u)
            for v in range(n):
                assert g.has_edge(u, v) == g.has_edge(v, u)


def test_edge_and_degree_bounds():
    for p in primes_between(2, 19):
        for d in (1, 2, 3):
            if d > p:
                continue
            for coeffs in combinations(range(p), d):
                g = orbital(p, coeffs)
                assert g.edge_count <= d * p
                assert max(g.degree(v) for v in range(p)) <= 3 * d


def test_build_is_deterministic():
    a = orbital(23, (4, 20))
    b = orbital(23, (4, 20))
    assert a == b
    assert export_graph(a, "json") == export_graph(b, "json")


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_graph_depends_only_on_coefficient_set(data):
    p = data.draw(st.sampled_from([7, 11, 13]))
    coeffs = tuple(data.draw(st.sets(st.integers(0, p - 1), min_size=2, max_size=3)))
    perm = data.draw(st.sampled_from(list(permutations(coeffs))))
    assert orbital(p, perm) == orbital(p, coeffs)


# -- unit spheres -------------------------------------------------------------


def test_unit_sphere_of_complete_graph():
    sphere = unit_sphere(complete_graph(4), 2)
    assert sphere.vertices == (0, 1, 3)
    assert sorted(sphere.edges()) == [(0, 1), (0, 3), (1, 3)]


def test_unit_sphere_examples():
    g = orbital(5, (0,))
    sphere = unit_sphere(g, 4)
    assert sphere.vertices == (1, 2, 3)
    assert sphere.edges() == []
    assert unit_sphere(g, 0).vertices == ()


# -- exports -------------------------------------------------------------------


def test_export_edgelist_golden():
    assert export_graph(orbital(5, (0,)), "edgelist") == (
        "# n=5 coeffs=0\n1 4\n2 4\n3 4\n"
    )
    assert export_graph(orbital(2, (0,)), "edgelist") == "# n=2 coeffs=0\n"


def test_export_dot_matches_edgelist():
    g = orbital(5, (0,))
    dot = export_graph(g, "dot")
    assert dot.startswith("graph g {\n")
    dot_edges = [
        tuple(map(int, line.strip().rstrip(";").split(" -- ")))
        for line in dot.splitlines()
        if "--" in line
    ]
    assert dot_edges == g.edges()
    for v in range(g.n):
        assert f"  {v};" in dot


def test_export_json_round_trip():
    for n, coeffs in ((5, (0,)), (23, (4, 20)), (12, (1, 6, 11))):
        g = orbital(n, coeffs)
        again = graph_from_json(export_graph(g, "json"))
        assert again == g
        assert again.family == g.family


def test_export_json_shape():
    payload = json.loads(export_graph(orbital(5, (0,)), "json"))
    assert payload == {"n": 5, "coeffs": [0], "edges": [[1, 4], [2, 4], [3, 4]]}


def test_export_unknown_format():
    with pytest.raises(UsageError):
        export_graph(orbital(5, (0,)), "graphml")


def test_json_import_rejects_garbage():
    with pytest.raises(UsageError):
        graph_from_json("{not json")
    with pytest.raises(UsageError):
        graph_from_json('{"nodes": 3}')
