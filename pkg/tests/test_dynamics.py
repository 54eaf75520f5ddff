import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from orbnet import (
    FunctionalDigraph,
    Modulus,
    QuadraticFamily,
    UnsupportedArityError,
    UsageError,
    apply_map,
    attractor_cycles,
    branch,
    garden_of_eden,
    is_fermat_prime,
    is_prime,
    is_primitive_root,
    iterate_word,
    multiplicative_order,
    primes_between,
)

from oracles import brute_branch


def digraph(n, coeffs):
    return FunctionalDigraph(QuadraticFamily.of(n, coeffs))


# -- construction and number theory helpers ---------------------------------


def test_modulus_validation():
    assert Modulus(7).prime
    assert not Modulus(9).prime
    assert Modulus(2).prime
    with pytest.raises(UsageError):
        Modulus(1)
    with pytest.raises(UsageError):
        Modulus(0)


def test_family_sorts_and_validates():
    fam = QuadraticFamily.of(11, (7, 2, 5))
    assert fam.coeffs == (2, 5, 7)
    assert fam.d == 3 and fam.n == 11
    with pytest.raises(UsageError):
        QuadraticFamily.of(5, (1, 1))
    with pytest.raises(UsageError):
        QuadraticFamily.of(5, (5,))
    with pytest.raises(UsageError):
        QuadraticFamily.of(5, ())


def test_primes_between():
    assert primes_between(2, 31) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31]
    assert primes_between(10, 12) == [11]
    assert primes_between(24, 28) == []


def test_prime_helpers():
    assert [p for p in range(2, 300) if is_fermat_prime(p)] == [3, 5, 17, 257]
    assert is_primitive_root(3, 7)
    assert not is_primitive_root(2, 7)  # 2^3 = 1 mod 7
    assert multiplicative_order(2, 7) == 3
    assert multiplicative_order(2, 263) == 131
    assert not is_primitive_root(2, 263)
    assert not is_prime(1) and is_prime(2) and not is_prime(221)  # 13*17


# -- apply_map / iterate_word ------------------------------------------------


def test_apply_map_examples():
    assert apply_map(Modulus(5), 0, 3) == 4
    assert apply_map(Modulus(2), 0, 1) == 1
    assert apply_map(Modulus(23), 4, 14) == 16
    with pytest.raises(UsageError):
        apply_map(Modulus(5), 5, 0)


def test_iterate_word_examples():
    assert iterate_word(digraph(5, (0,)), 2, [0, 0]) == 1  # 2 -> 4 -> 1
    assert iterate_word(digraph(7, (1,)), 0, [0, 0, 0]) == 5  # 0 -> 1 -> 2 -> 5
    dg = digraph(13, (3, 7))
    for x in range(13):
        assert iterate_word(dg, x, []) == x
    with pytest.raises(UsageError):
        iterate_word(dg, 0, [2])


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_iterate_word_is_a_monoid_action(data):
    p = data.draw(st.sampled_from([5, 7, 11, 13]))
    d = data.draw(st.integers(1, 3))
    coeffs = tuple(data.draw(st.sets(st.integers(0, p - 1), min_size=d, max_size=d)))
    dg = digraph(p, coeffs)
    x = data.draw(st.integers(0, p - 1))
    u = data.draw(st.lists(st.integers(0, d - 1), max_size=6))
    v = data.draw(st.lists(st.integers(0, d - 1), max_size=6))
    assert iterate_word(dg, x, u + v) == iterate_word(dg, iterate_word(dg, x, u), v)


# -- branches ------------------------------------------------------------------


def test_branch_examples():
    assert branch(digraph(5, (0,)), 2) == {2, 4, 1}
    assert branch(digraph(5, (0,)), 0) == {0}
    assert branch(digraph(2, (1,)), 0) == {0, 1}


def test_branch_closure_properties():
    for p in (7, 11, 13):
        for coeffs in ((0,), (1, 3), (0, 2, 5)):
            dg = digraph(p, coeffs)
            for x in range(p):
                b = branch(dg, x)
                assert x in b
                assert len(b) <= p
                for v in b:
                    assert set(dg.out[v]) <= b  # closed under every generator
                assert b == brute_branch(dg, x)


# -- garden of eden ------------------------------------------------------------


def test_garden_of_eden_examples():
    assert garden_of_eden(digraph(7, (0,))) == {3, 5, 6}
    assert garden_of_eden(digraph(5, (0,))) == {2, 3}
    assert garden_of_eden(digraph(2, (0,))) == set()


def test_garden_of_eden_squaring_size():
    for p in primes_between(2, 61):
        assert len(garden_of_eden(digraph(p, (0,)))) == (p - 1) // 2


# -- degree structure -----------------------------------------------------------


def test_out_degree_is_d_and_prime_in_degree_bounded():
    for p in primes_between(2, 31):
        for coeffs in ((0,), (1, 4) if p > 4 else (0, 1)):
            dg = digraph(p, coeffs)
            d = dg.d
            indeg = [0] * p
            for x in range(p):
                assert len(dg.out[x]) == d
                for y in dg.out[x]:
                    indeg[y] += 1
            assert max(indeg) <= 2 * d  # a quadratic has at most 2 roots mod p


# -- attractor cycles ------------------------------------------------------------


def test_attractor_cycles_examples():
    assert attractor_cycles(digraph(5, (0,))) == [(0,), (1,)]
    assert attractor_cycles(digraph(7, (1,))) == [(3,), (5,)]
    assert attractor_cycles(digraph(2, (1,))) == [(0, 1)]


def test_attractor_cycles_requires_single_generator():
    with pytest.raises(UnsupportedArityError):
        attractor_cycles(digraph(5, (0, 1)))


def test_attractor_cycles_partition_forward_orbits():
    for p in primes_between(2, 61):
        for a in range(p):
            dg = digraph(p, (a,))
            cycles = attractor_cycles(dg)
            members = [v for cyc in cycles for v in cyc]
            assert len(members) == len(set(members))  # cycles are disjoint
            on_cycle = {v: i for i, cyc in enumerate(cycles) for v in cyc}
            nxt = [images[0] for images in dg.out]
            for cyc in cycles:  # each really is a cycle of the map
                for i, v in enumerate(cyc):
                    assert nxt[v] == cyc[(i + 1) % len(cyc)]
            for x in range(p):  # every orbit lands on exactly one cycle
                seen = set()
                v = x
                while v not in on_cycle:
                    assert v not in seen
                    seen.add(v)
                    v = nxt[v]
