"""Quadratic map families on Z_n viewed as dynamical systems.

A family is a set of generators T_i(x) = x^2 + a_i acting on the residue
ring Z_n.  This module holds the purely directed/dynamical notions: forward
orbits (branches), vertices without preimage (garden of eden) and, for a
single generator, the attractor cycles every orbit falls into.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import UnsupportedArityError, UsageError


def is_prime(n: int) -> bool:
    """Deterministic trial division; intended for desk-scale moduli."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def primes_between(lo: int, hi: int) -> list[int]:
    """All primes p with lo <= p <= hi, ascending."""
    if hi < 2:
        return []
    lo = max(lo, 2)
    sieve = bytearray([1]) * (hi + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, int(hi**0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = b"\x00" * len(sieve[i * i :: i])
    return [p for p in range(lo, hi + 1) if sieve[p]]


def is_fermat_prime(p: int) -> bool:
    """True iff p is prime and p - 1 is a power of two."""
    return p > 2 and (p - 1) & (p - 2) == 0 and is_prime(p)


def multiplicative_order(g: int, n: int) -> int:
    """Order of g in the unit group of Z_n; g must be a unit."""
    g %= n
    if _gcd(g, n) != 1:
        raise UsageError(f"{g} is not a unit modulo {n}")
    order, value = 1, g
    while value != 1:
        value = value * g % n
        order += 1
    return order


def is_primitive_root(g: int, p: int) -> bool:
    """True iff g generates the multiplicative group of the prime field Z_p."""
    if not is_prime(p):
        raise UsageError(f"primitive roots are tested modulo primes, got {p}")
    if g % p == 0:
        return False
    # g is a generator iff g^((p-1)/q) != 1 for every prime q dividing p-1
    m = p - 1
    for q in _prime_factors(m):
        if pow(g, m // q, p) == 1:
            return False
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


@dataclass(frozen=True)
class Modulus:
    """A ring size n >= 2 with its primality decided once at construction."""

    n: int
    prime: bool = field(init=False, compare=False)

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 2:
            raise UsageError(f"modulus must be an integer >= 2, got {self.n!r}")
        object.__setattr__(self, "prime", is_prime(self.n))


@dataclass(frozen=True)
class QuadraticFamily:
    """Generators x -> x^2 + a_i on Z_n, held as a strictly increasing tuple.

    Coefficients may be passed in any order; they are sorted on construction,
    so the family depends only on the coefficient set.
    """

    modulus: Modulus
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        coeffs = tuple(sorted(self.coeffs))
        if not coeffs:
            raise UsageError("a family needs at least one coefficient")
        n = self.modulus.n
        for a in coeffs:
            if not isinstance(a, int) or not 0 <= a < n:
                raise UsageError(f"coefficient {a!r} outside [0, {n - 1}]")
        if any(coeffs[i] == coeffs[i + 1] for i in range(len(coeffs) - 1)):
            raise UsageError(f"duplicate coefficients in {coeffs}")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def of(cls, n: int, coeffs: Iterable[int]) -> "QuadraticFamily":
        return cls(Modulus(n), tuple(coeffs))

    @property
    def n(self) -> int:
        return self.modulus.n

    @property
    def d(self) -> int:
        return len(self.coeffs)

    def key(self) -> tuple[int, tuple[int, ...]]:
        """Sort/identity key: (n, coefficients)."""
        return (self.n, self.coeffs)

    def label(self) -> str:
        return f"Z_{self.n} x^2+{{{','.join(map(str, self.coeffs))}}}"


def apply_map(modulus: Modulus, a: int, x: int) -> int:
    """One generator step: (x^2 + a) mod n."""
    n = modulus.n
    if not 0 <= a < n or not 0 <= x < n:
        raise UsageError(f"residues must lie in [0, {n - 1}]")
    return (x * x + a) % n


class FunctionalDigraph:
    """The directed multigraph with the d generator images out of each vertex.

    Self-loops are kept here; they only disappear in the undirected orbital
    graph.  ``out[x]`` lists the images (x^2 + a_i) mod n in generator order.
    """

    __slots__ = ("family", "out")

    def __init__(self, family: QuadraticFamily) -> None:
        self.family = family
        n = family.n
        coeffs = family.coeffs
        self.out: tuple[tuple[int, ...], ...] = tuple(
            tuple((x * x + a) % n for a in coeffs) for x in range(n)
        )

    @property
    def n(self) -> int:
        return self.family.n

    @property
    def d(self) -> int:
        return self.family.d

    def __repr__(self) -> str:
        return f"FunctionalDigraph({self.family.label()})"


def iterate_word(digraph: FunctionalDigraph, x: int, word: Sequence[int]) -> int:
    """Apply the generator composition given by ``word`` (leftmost first).

    The empty word is the monoid identity and returns x unchanged.
    """
    n, d = digraph.n, digraph.d
    if not 0 <= x < n:
        raise UsageError(f"vertex {x} outside [0, {n - 1}]")
    out = digraph.out
    for i in word:
        if not 0 <= i < d:
            raise UsageError(f"generator index {i} out of range for d={d}")
        x = out[x][i]
    return x


def branch(digraph: FunctionalDigraph, x: int) -> set[int]:
    """Forward closure of x under all generators; contains x (empty word)."""
    if not 0 <= x < digraph.n:
        raise UsageError(f"vertex {x} outside [0, {digraph.n - 1}]")
    out = digraph.out
    seen = {x}
    stack = [x]
    while stack:
        v = stack.pop()
        for w in out[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen


def garden_of_eden(digraph: FunctionalDigraph) -> set[int]:
    """Vertices with no preimage under any generator (self-loops count)."""
    has_in = bytearray(digraph.n)
    for images in digraph.out:
        for w in images:
            has_in[w] = 1
    return {v for v in range(digraph.n) if not has_in[v]}


def attractor_cycles(digraph: FunctionalDigraph) -> list[tuple[int, ...]]:
    """All periodic cycles of a single map, one tuple per cycle.

    Each cycle is rotated to start at its smallest vertex and the list is
    sorted by that starting vertex.  Every forward orbit of the map lands on
    exactly one of the returned cycles.
    """
    if digraph.d != 1:
        raise UnsupportedArityError(
            f"attractor cycles are defined for a single generator, d={digraph.d}"
        )
    nxt = [images[0] for images in digraph.out]
    n = digraph.n
    state = bytearray(n)  # 0 unvisited, 1 on current walk, 2 finished
    cycles: list[tuple[int, ...]] = []
    for start in range(n):
        if state[start]:
            continue
        path = []
        x = start
        while state[x] == 0:
            state[x] = 1
            path.append(x)
            x = nxt[x]
        if state[x] == 1:  # closed a new cycle inside the current walk
            cyc = path[path.index(x) :]
            k = cyc.index(min(cyc))
            cycles.append(tuple(cyc[k:] + cyc[:k]))
        for v in path:
            state[v] = 2
    cycles.sort()
    return cycles
