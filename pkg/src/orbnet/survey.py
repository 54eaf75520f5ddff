"""Exhaustive sweeps over coefficient spaces and the lemma/exception engine.

The coefficient space for modulus p and degree d is every strictly
increasing d-tuple over [0, p); a scan computes selected invariants for each
family.  Work is parallelised per family, but tasks are generated and
results consumed in lexicographic order, so output bytes never depend on
the worker count.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb, inf
from typing import Callable, Iterator, Optional, Sequence, TextIO

from .branches import branch_cover_number, branch_graph, positively_connected
from .dynamics import (
    FunctionalDigraph,
    QuadraticFamily,
    garden_of_eden,
    is_fermat_prime,
    is_prime,
    multiplicative_order,
    primes_between,
)
from .errors import CheckpointError, UsageError
from .graphs import Graph, build_orbital_graph
from .invariants import (
    INFINITE,
    InvariantReport,
    clique_counts,
    connected_components,
    cycle_rank,
    degree_histogram,
    diameter,
    inductive_dimension,
)
from .planarity import is_planar

ALL_INVARIANTS = (
    "cliques",
    "chi",
    "components",
    "diameter",
    "dimension",
    "planar",
    "branch",
)

CSV_HEADER = (
    "p,d,coeffs,vertices,edges,triangles,tetrahedra,chi,components,"
    "diameter,dimension_num,dimension_den,planar,branch_cover,"
    "positively_connected"
)


def enumerate_space(n: int, d: int) -> Iterator[QuadraticFamily]:
    """All families over Z_n with d coefficients, in lexicographic order."""
    if d < 1:
        raise UsageError(f"degree must be >= 1, got {d}")
    if n < 2:
        raise UsageError(f"modulus must be >= 2, got {n}")
    for coeffs in combinations(range(n), d):
        yield QuadraticFamily.of(n, coeffs)


def space_size(n: int, d: int) -> int:
    return comb(n, d)


@dataclass
class ScanRecord:
    """One scanned family; unselected invariants stay None."""

    n: int
    d: int
    coeffs: tuple[int, ...]
    vertices: int
    edges: int
    triangles: Optional[int] = None
    tetrahedra: Optional[int] = None
    chi: Optional[int] = None
    components: Optional[int] = None
    diameter: Optional[float] = None
    dimension: Optional[Fraction] = None
    planar: Optional[bool] = None
    branch_cover: Optional[int] = None
    positively_connected: Optional[bool] = None

    def csv_row(self) -> str:
        dim = self.dimension
        fields = [
            str(self.n),
            str(self.d),
            ";".join(map(str, self.coeffs)),
            str(self.vertices),
            str(self.edges),
            _opt(self.triangles),
            _opt(self.tetrahedra),
            _opt(self.chi),
            _opt(self.components),
            "" if self.diameter is None else str(_diam_csv(self.diameter)),
            "" if dim is None else str(dim.numerator),
            "" if dim is None else str(dim.denominator),
            _opt_bool(self.planar),
            _opt(self.branch_cover),
            _opt_bool(self.positively_connected),
        ]
        return ",".join(fields)

    def json_dict(self) -> dict:
        dim = self.dimension
        return {
            "p": self.n,
            "d": self.d,
            "coeffs": list(self.coeffs),
            "vertices": self.vertices,
            "edges": self.edges,
            "triangles": self.triangles,
            "tetrahedra": self.tetrahedra,
            "chi": self.chi,
            "components": self.components,
            "diameter": None
            if self.diameter is None
            else ("inf" if self.diameter == INFINITE else int(self.diameter)),
            "dimension_num": None if dim is None else dim.numerator,
            "dimension_den": None if dim is None else dim.denominator,
            "planar": self.planar,
            "branch_cover": self.branch_cover,
            "positively_connected": self.positively_connected,
        }


def _opt(v) -> str:
    return "" if v is None else str(v)


def _opt_bool(v) -> str:
    return "" if v is None else ("true" if v else "false")


def _diam_csv(value) -> int:
    return -1 if value == INFINITE else int(value)


def compute_record(
    family: QuadraticFamily, selection: Sequence[str] = ALL_INVARIANTS
) -> ScanRecord:
    """Build the orbital graph of one family and fill the selected fields."""
    sel = set(selection)
    unknown = sel.difference(ALL_INVARIANTS)
    if unknown:
        raise UsageError(f"unknown invariants {sorted(unknown)}; valid: {ALL_INVARIANTS}")
    graph = build_orbital_graph(family)
    rec = ScanRecord(
        n=family.n,
        d=family.d,
        coeffs=family.coeffs,
        vertices=graph.n,
        edges=graph.edge_count,
    )
    if sel & {"cliques", "chi"}:
        cv = clique_counts(graph)
        rec.triangles = cv.triangles
        rec.tetrahedra = cv.tetrahedra
        rec.chi = cv.chi
    if "components" in sel:
        rec.components = len(connected_components(graph))
    if "diameter" in sel:
        rec.diameter = diameter(graph)
    if "dimension" in sel:
        rec.dimension = inductive_dimension(graph)
    if "planar" in sel:
        rec.planar = is_planar(graph).planar
    if "branch" in sel:
        dg = FunctionalDigraph(family)
        rec.branch_cover = branch_cover_number(dg)
        rec.positively_connected = positively_connected(dg)
    return rec


def _record_worker(task: tuple[int, int, tuple[int, ...], tuple[str, ...]]) -> ScanRecord:
    n, d, coeffs, selection = task
    return compute_record(QuadraticFamily.of(n, coeffs), selection)


def _map_tasks(tasks: list, worker: Callable, jobs: int) -> list:
    """Order-preserving map, optionally across processes."""
    if jobs <= 1 or len(tasks) < 2:
        return [worker(t) for t in tasks]
    from multiprocessing import Pool

    chunk = max(1, len(tasks) // (jobs * 8))
    with Pool(processes=jobs) as pool:
        return pool.map(worker, tasks, chunksize=chunk)


def scan_space(
    moduli: Sequence[int],
    d: int,
    selection: Sequence[str] = ALL_INVARIANTS,
    jobs: int = 1,
) -> list[ScanRecord]:
    """Scan every family for each modulus; records in (p, coeffs) order."""
    sel = tuple(selection)
    tasks = [
        (n, d, coeffs, sel) for n in moduli for coeffs in combinations(range(n), d)
    ]
    return _map_tasks(tasks, _record_worker, jobs)


def write_csv(records: Sequence[ScanRecord], stream: TextIO) -> None:
    stream.write(CSV_HEADER + "\n")
    for rec in records:
        stream.write(rec.csv_row() + "\n")


def records_json(records: Sequence[ScanRecord]) -> str:
    return json.dumps([r.json_dict() for r in records], indent=1) + "\n"


def summarize(records: Sequence[ScanRecord]) -> list[dict]:
    """Per-modulus minima/maxima with the families attaining them.

    Diameter extremes consider connected families only; the disconnected
    count is reported separately.
    """
    by_n: dict[int, list[ScanRecord]] = {}
    for rec in records:
        by_n.setdefault(rec.n, []).append(rec)
    out = []
    for n in sorted(by_n):
        group = by_n[n]
        entry: dict = {"p": n, "d": group[0].d, "families": len(group)}
        entry["edges"] = _min_max(group, lambda r: r.edges)
        for name, get in (
            ("triangles", lambda r: r.triangles),
            ("tetrahedra", lambda r: r.tetrahedra),
            ("chi", lambda r: r.chi),
            ("components", lambda r: r.components),
            ("branch_cover", lambda r: r.branch_cover),
        ):
            mm = _min_max(group, get)
            if mm is not None:
                entry[name] = mm
        dims = [r for r in group if r.dimension is not None]
        if dims:
            lo = min(dims, key=lambda r: (r.dimension, r.coeffs))
            hi = max(dims, key=lambda r: (r.dimension, tuple(-c for c in r.coeffs)))
            entry["dimension"] = {
                "min": str(lo.dimension),
                "argmin": list(lo.coeffs),
                "max": str(hi.dimension),
                "argmax": list(hi.coeffs),
            }
        diams = [r for r in group if r.diameter is not None]
        if diams:
            finite = [r for r in diams if r.diameter != INFINITE]
            entry["disconnected"] = len(diams) - len(finite)
            if finite:
                lo = min(finite, key=lambda r: (r.diameter, r.coeffs))
                hi = max(finite, key=lambda r: (r.diameter, tuple(-c for c in r.coeffs)))
                entry["diameter"] = {
                    "min": int(lo.diameter),
                    "argmin": list(lo.coeffs),
                    "max": int(hi.diameter),
                    "argmax": list(hi.coeffs),
                }
        planars = [r for r in group if r.planar is not None]
        if planars:
            entry["planar_count"] = sum(1 for r in planars if r.planar)
        pcs = [r for r in group if r.positively_connected is not None]
        if pcs:
            entry["positively_connected_count"] = sum(
                1 for r in pcs if r.positively_connected
            )
        out.append(entry)
    return out


def _min_max(group: list[ScanRecord], get) -> Optional[dict]:
    vals = [(get(r), r.coeffs) for r in group if get(r) is not None]
    if not vals:
        return None
    lo = min(vals)
    hi = max(v for v, _ in vals)
    hi_arg = min(c for v, c in vals if v == hi)
    return {"min": lo[0], "argmin": list(lo[1]), "max": hi, "argmax": list(hi_arg)}


def analyze_family(
    family: QuadraticFamily, selection: Sequence[str] = ALL_INVARIANTS
) -> InvariantReport:
    """Full invariant report for one family (CLI `analyze` backend)."""
    sel = set(selection)
    unknown = sel.difference(ALL_INVARIANTS)
    if unknown:
        raise UsageError(f"unknown invariants {sorted(unknown)}; valid: {ALL_INVARIANTS}")
    graph = build_orbital_graph(family)
    dg = FunctionalDigraph(family)
    report = InvariantReport(
        family=family,
        n=family.n,
        d=family.d,
        vertices=graph.n,
        edges=graph.edge_count,
    )
    comps = connected_components(graph)
    if sel & {"cliques", "chi"}:
        cv = clique_counts(graph)
        report.clique_vector = cv
        report.chi = cv.chi
    if "components" in sel:
        report.components = len(comps)
        report.cycle_rank = graph.edge_count - graph.n + len(comps)
    if "diameter" in sel:
        report.diameter = diameter(graph)
    if "dimension" in sel:
        report.dimension = inductive_dimension(graph)
    if "planar" in sel:
        verdict = is_planar(graph)
        report.planar = verdict.planar
        if not verdict.planar:
            witness = is_planar(graph, witness=True)
            report.kuratowski_kind = witness.kuratowski_kind
    if "branch" in sel:
        report.branch_cover = branch_cover_number(dg)
        report.positively_connected = positively_connected(dg)
    report.degree_histogram = degree_histogram(graph)
    report.garden_of_eden_size = len(garden_of_eden(dg))
    return report


# ---------------------------------------------------------------------------
# Lemma verification
# ---------------------------------------------------------------------------


@dataclass
class LemmaReport:
    lemma_id: str
    proven: bool
    lo: int
    hi: int
    status: str  # "verified" | "counterexample"
    counterexample: Optional[tuple[int, tuple[int, ...]]] = None
    detail: str = ""

    def json_dict(self) -> dict:
        return {
            "lemma": self.lemma_id,
            "proven": self.proven,
            "primes": [self.lo, self.hi],
            "status": self.status,
            "counterexample": None
            if self.counterexample is None
            else {"p": self.counterexample[0], "coeffs": list(self.counterexample[1])},
            "detail": self.detail,
        }


@dataclass(frozen=True)
class _Lemma:
    lemma_id: str
    proven: bool
    description: str
    check_prime: Callable[[int], Optional[tuple[int, tuple[int, ...]]]]


def _check_d1_suite(kind: str):
    def check(p: int):
        for a in range(p):
            cv = clique_counts(build_orbital_graph(QuadraticFamily.of(p, (a,))))
            if kind == "chi" and cv.chi < 0:
                return (p, (a,))
            if kind == "triangles" and cv.triangles > 2:
                return (p, (a,))
            if kind == "k4" and cv.tetrahedra != 0:
                return (p, (a,))
        return None

    return check


def _check_k6(p: int):
    for d in (2, 3):
        if p < d:
            continue
        for coeffs in combinations(range(p), d):
            cv = clique_counts(build_orbital_graph(QuadraticFamily.of(p, coeffs)))
            if cv[5] > 0:
                return (p, coeffs)
    return None


def _check_diameter_log6(p: int):
    # diam >= log_6(p) for connected graphs, checked as 6^diam >= p
    for coeffs in combinations(range(p), 2):
        g = build_orbital_graph(QuadraticFamily.of(p, coeffs))
        diam = diameter(g)
        if diam != INFINITE and 6 ** int(diam) < p:
            return (p, coeffs)
    return None


def _check_clique_growth(p: int):
    # c_m <= d^(m+1) * 2^(m+1) for m >= 2 (sizes forced by polynomial systems)
    for d in (1, 2, 3):
        if p < d:
            continue
        for coeffs in combinations(range(p), d):
            cv = clique_counts(build_orbital_graph(QuadraticFamily.of(p, coeffs)))
            for m in range(2, len(cv)):
                if cv[m] > (2 * d) ** (m + 1):
                    return (p, coeffs)
    return None


def _check_x2_structure(p: int):
    family = QuadraticFamily.of(p, (0,))
    graph = build_orbital_graph(family)
    comps = connected_components(graph)
    nontrivial = sum(1 for c in comps if len(c) > 1)
    # 0 has no preimage but itself, so it is always isolated over a prime field
    if graph.degree(0) != 0:
        return (p, (0,))
    if p == 2:
        return None if nontrivial == 0 else (p, (0,))
    if (nontrivial == 1) != is_fermat_prime(p):
        return (p, (0,))
    # exactly one ring next to the {1,-1} blob iff the odd part q of p-1 is an
    # odd prime with 2 a primitive root modulo q
    q = p - 1
    while q % 2 == 0:
        q //= 2
    ring = q > 2 and is_prime(q) and multiplicative_order(2, q) == q - 1
    if (nontrivial == 2) != ring:
        return (p, (0,))
    return None


def _check_goe_half(p: int):
    dg = FunctionalDigraph(QuadraticFamily.of(p, (0,)))
    if len(garden_of_eden(dg)) != (p - 1) // 2:
        return (p, (0,))
    return None


def _check_d2_negative_chi(p: int):
    if p <= 13:
        return None
    for coeffs in combinations(range(p), 2):
        cv = clique_counts(build_orbital_graph(QuadraticFamily.of(p, coeffs)))
        if cv.chi >= 0:
            return (p, coeffs)
    return None


def _check_triangle_free_deg4(p: int):
    # no triangles + uniform degree 4 forces chi == -p
    for coeffs in combinations(range(p), 2):
        g = build_orbital_graph(QuadraticFamily.of(p, coeffs))
        if all(g.degree(v) == 4 for v in range(p)):
            cv = clique_counts(g)
            if cv.triangles == 0 and cv.chi != -p:
                return (p, coeffs)
    return None


LEMMAS: dict[str, _Lemma] = {
    lemma.lemma_id: lemma
    for lemma in (
        _Lemma(
            "d1-nonnegative-euler",
            True,
            "single generator: Euler characteristic >= 0",
            _check_d1_suite("chi"),
        ),
        _Lemma(
            "d1-triangle-bound",
            True,
            "single generator: at most 2 triangles",
            _check_d1_suite("triangles"),
        ),
        _Lemma(
            "d1-no-k4",
            True,
            "single generator: no K4",
            _check_d1_suite("k4"),
        ),
        _Lemma("k6-absence", True, "no K6 for d in {2,3}", _check_k6),
        _Lemma(
            "diameter-log6",
            True,
            "connected two-generator graphs: diameter >= log_6(p)",
            _check_diameter_log6,
        ),
        _Lemma(
            "clique-growth-bound",
            True,
            "c_m <= (2d)^(m+1) for clique sizes m >= 2",
            _check_clique_growth,
        ),
        _Lemma(
            "x2-structure",
            True,
            "squaring map: 0 isolated; one nontrivial component iff Fermat "
            "prime; blob+ring shape iff odd part q of p-1 is prime with 2 a "
            "primitive root mod q",
            _check_x2_structure,
        ),
        _Lemma(
            "garden-of-eden-half",
            True,
            "squaring map: garden of eden has (p-1)/2 vertices",
            _check_goe_half,
        ),
        _Lemma(
            "d2-negative-euler",
            False,
            "observed: two generators and p > 13 give negative Euler "
            "characteristic",
            _check_d2_negative_chi,
        ),
        _Lemma(
            "triangle-free-degree-4",
            True,
            "triangle-free uniform degree 4 forces chi == -p",
            _check_triangle_free_deg4,
        ),
    )
}

LEMMA_SETS: dict[str, tuple[str, ...]] = {
    "d1": ("d1-nonnegative-euler", "d1-triangle-bound", "d1-no-k4"),
    "x2": ("x2-structure", "garden-of-eden-half"),
    "k6": ("k6-absence",),
    "diameter": ("diameter-log6",),
    "cliques": ("clique-growth-bound",),
    "d2chi": ("d2-negative-euler",),
    "deg4": ("triangle-free-degree-4",),
    "all": tuple(),  # filled below
}
LEMMA_SETS["all"] = tuple(LEMMAS)


def resolve_lemma_ids(names: Sequence[str]) -> list[str]:
    """Expand set names / lemma ids into an ordered, deduplicated id list."""
    out: list[str] = []
    for name in names:
        if name in LEMMA_SETS:
            ids = LEMMA_SETS[name]
        elif name in LEMMAS:
            ids = (name,)
        else:
            raise UsageError(
                f"unknown lemma or lemma set {name!r}; "
                f"sets: {sorted(LEMMA_SETS)}, lemmas: {sorted(LEMMAS)}"
            )
        for i in ids:
            if i not in out:
                out.append(i)
    return out


def verify_lemmas(lo: int, hi: int, names: Sequence[str] = ("all",)) -> list[LemmaReport]:
    """Evaluate each selected lemma over every prime in [lo, hi].

    Proven lemmas reporting a counterexample indicate an implementation bug;
    observed-pattern entries (proven=False) merely report what was found.
    """
    ids = resolve_lemma_ids(names)
    primes = primes_between(lo, hi)
    reports = []
    for lemma_id in ids:
        lemma = LEMMAS[lemma_id]
        counterexample = None
        for p in primes:
            counterexample = lemma.check_prime(p)
            if counterexample is not None:
                break
        reports.append(
            LemmaReport(
                lemma_id=lemma_id,
                proven=lemma.proven,
                lo=lo,
                hi=hi,
                status="verified" if counterexample is None else "counterexample",
                counterexample=counterexample,
                detail=lemma.description,
            )
        )
    return reports


# ---------------------------------------------------------------------------
# Exception hunting with resumable checkpoints
# ---------------------------------------------------------------------------

PREDICATES = ("disconnected", "planar", "k5", "k4max")


def _match_predicate(graph: Graph, predicate: str) -> bool:
    if predicate == "disconnected":
        return len(connected_components(graph)) > 1
    if predicate == "planar":
        return is_planar(graph).planar
    if predicate == "k5":
        return clique_counts(graph)[4] > 0
    if predicate == "k4max":
        return clique_counts(graph)[3] > 2  # beats the largest count seen
    raise UsageError(f"unknown predicate {predicate!r}; valid: {PREDICATES}")


def _exception_worker(task: tuple[int, int, tuple[int, ...], str]) -> bool:
    n, _, coeffs, predicate = task
    return _match_predicate(build_orbital_graph(QuadraticFamily.of(n, coeffs)), predicate)


def _matches_digest(matches: list[list[int]]) -> str:
    blob = json.dumps(matches, separators=(",", ":")).encode()
    return hashlib.sha256(blob).hexdigest()[:16]


class _Checkpoint:
    """One JSON line per finished modulus, plus a header with the request."""

    def __init__(self, path, header: dict):
        self.path = path
        self.header = header
        self.done: dict[int, list[list[int]]] = {}

    def load(self) -> None:
        try:
            text = self.path.read_text()
        except FileNotFoundError:
            self.path.write_text(json.dumps(self.header, sort_keys=True) + "\n")
            return
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise CheckpointError(f"{self.path}: empty checkpoint file")
        try:
            header = json.loads(lines[0])
        except json.JSONDecodeError as exc:
            raise CheckpointError(f"{self.path}: unparseable header: {exc}") from exc
        if header != self.header:
            raise CheckpointError(
                f"{self.path}: checkpoint was written for a different search "
                f"({header!r} != {self.header!r})"
            )
        for ln in lines[1:]:
            try:
                row = json.loads(ln)
                p = row["p"]
                matches = row["matches"]
                digest = row["digest"]
            except (json.JSONDecodeError, KeyError, TypeError) as exc:
                raise CheckpointError(f"{self.path}: corrupt line {ln!r}") from exc
            if _matches_digest(matches) != digest:
                raise CheckpointError(f"{self.path}: digest mismatch for p={p}")
            self.done[p] = matches

    def record(self, p: int, matches: list[list[int]]) -> None:
        self.done[p] = matches
        with self.path.open("a") as fh:
            fh.write(
                json.dumps(
                    {"p": p, "matches": matches, "digest": _matches_digest(matches)},
                    sort_keys=True,
                )
                + "\n"
            )


def find_exceptions(
    predicate: str,
    d: int,
    lo: int,
    hi: int,
    checkpoint=None,
    jobs: int = 1,
    max_partitions: Optional[int] = None,
) -> list[QuadraticFamily]:
    """Families in the prime range satisfying the predicate.

    With a checkpoint path the per-prime results persist across runs: an
    interrupted hunt resumes where it stopped and a finished one just replays
    the file.  ``max_partitions`` bounds how many new primes one call
    processes (budgeted long hunts); the return value covers only completed
    primes, so resume until it stops growing.
    """
    if predicate not in PREDICATES:
        raise UsageError(f"unknown predicate {predicate!r}; valid: {PREDICATES}")
    primes = primes_between(lo, hi)
    ckpt = None
    if checkpoint is not None:
        from pathlib import Path

        header = {
            "kind": "exceptions",
            "version": 1,
            "predicate": predicate,
            "d": d,
            "lo": lo,
            "hi": hi,
        }
        ckpt = _Checkpoint(Path(checkpoint), header)
        ckpt.load()
    results: list[QuadraticFamily] = []
    fresh = 0
    for p in primes:
        if ckpt is not None and p in ckpt.done:
            for coeffs in ckpt.done[p]:
                results.append(QuadraticFamily.of(p, coeffs))
            continue
        if max_partitions is not None and fresh >= max_partitions:
            break
        tasks = [(p, d, coeffs, predicate) for coeffs in combinations(range(p), d)]
        flags = _map_tasks(tasks, _exception_worker, jobs)
        matches = [list(t[2]) for t, flag in zip(tasks, flags) if flag]
        if ckpt is not None:
            ckpt.record(p, matches)
        for coeffs in matches:
            results.append(QuadraticFamily.of(p, coeffs))
        fresh += 1
    return results
