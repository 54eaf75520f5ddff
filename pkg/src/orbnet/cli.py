"""Command-line interface.

Subcommands: build (emit a graph file), analyze (invariant report as JSON),
scan (per-family CSV/JSON plus a min/max summary), verify (lemma checks),
exceptions (checkpointed predicate hunts).

Exit codes: 0 success, 1 I/O or checkpoint failure, 2 usage error, 3 a
proven lemma failed (which signals an implementation bug, not new math).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Optional, Sequence

from .dynamics import QuadraticFamily
from .errors import CheckpointError, UsageError
from .graphs import EXPORT_FORMATS, build_orbital_graph, export_graph
from .survey import (
    ALL_INVARIANTS,
    PREDICATES,
    analyze_family,
    find_exceptions,
    records_json,
    resolve_lemma_ids,
    scan_space,
    summarize,
    verify_lemmas,
    write_csv,
)
from .dynamics import primes_between

EXIT_OK = 0
EXIT_IO = 1
EXIT_USAGE = 2
EXIT_LEMMA = 3


def _parse_coeffs(text: str, n: int) -> tuple[int, ...]:
    """Comma-separated coefficients; negatives are reduced modulo n."""
    try:
        raw = [int(tok) for tok in text.split(",") if tok.strip() != ""]
    except ValueError as exc:
        raise UsageError(f"cannot parse coefficients {text!r}: {exc}") from exc
    if not raw:
        raise UsageError("at least one coefficient is required")
    reduced = tuple(a % n for a in raw)
    if len(set(reduced)) != len(reduced):
        raise UsageError(f"coefficients {text!r} collide modulo {n}")
    return reduced


def _family_from_args(args) -> QuadraticFamily:
    return QuadraticFamily.of(args.modulus, _parse_coeffs(args.coeffs, args.modulus))


def _invariant_list(text: Optional[str]) -> tuple[str, ...]:
    if text is None:
        return ALL_INVARIANTS
    items = tuple(tok.strip() for tok in text.split(",") if tok.strip())
    if not items:
        raise UsageError("empty invariant selection")
    return items


def _write_output(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _default_jobs() -> int:
    env = os.environ.get("ORBNET_JOBS")
    if env is None:
        return 1
    try:
        return max(1, int(env))
    except ValueError:
        raise UsageError(f"ORBNET_JOBS must be an integer, got {env!r}")


def _prime_range(args) -> tuple[int, int]:
    lo = args.primes_from if args.primes_from is not None else 2
    hi = args.primes_up_to
    if hi is None:
        raise UsageError("--primes-up-to is required")
    if hi < lo:
        raise UsageError(f"empty prime range [{lo}, {hi}]")
    return lo, hi


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orbnet",
        description="Quadratic orbital networks on Z_n: build, analyze, scan.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_build = sub.add_parser("build", help="emit one orbital graph as a file")
    p_build.add_argument("--modulus", type=int, required=True)
    p_build.add_argument("--coeffs", required=True, help="comma-separated, e.g. 1,17")
    p_build.add_argument("--format", default="edgelist", choices=EXPORT_FORMATS)
    p_build.add_argument("--out", default=None)

    p_an = sub.add_parser("analyze", help="invariant report for one family (JSON)")
    p_an.add_argument("--modulus", type=int, required=True)
    p_an.add_argument("--coeffs", required=True)
    p_an.add_argument("--invariants", default=None, help=",".join(ALL_INVARIANTS))
    p_an.add_argument("--out", default=None)

    p_scan = sub.add_parser("scan", help="sweep coefficient spaces over primes")
    p_scan.add_argument("--primes-from", type=int, default=None)
    p_scan.add_argument("--primes-up-to", type=int, required=True)
    p_scan.add_argument("--degree", type=int, required=True)
    p_scan.add_argument("--invariants", default=None)
    p_scan.add_argument("--format", default="csv", choices=("csv", "json"))
    p_scan.add_argument("--out", required=True)
    p_scan.add_argument("--jobs", type=int, default=None)

    p_ver = sub.add_parser("verify", help="check lemmas over a prime range")
    p_ver.add_argument("--primes-from", type=int, default=None)
    p_ver.add_argument("--primes-up-to", type=int, required=True)
    p_ver.add_argument("--lemmas", default="all", help="sets or ids, comma-separated")
    p_ver.add_argument("--out", default=None)

    p_exc = sub.add_parser("exceptions", help="hunt families matching a predicate")
    p_exc.add_argument("--predicate", required=True, choices=PREDICATES)
    p_exc.add_argument("--degree", type=int, required=True)
    p_exc.add_argument("--primes-from", type=int, default=None)
    p_exc.add_argument("--primes-up-to", type=int, required=True)
    p_exc.add_argument("--checkpoint", default=None)
    p_exc.add_argument("--max-partitions", type=int, default=None)
    p_exc.add_argument("--jobs", type=int, default=None)
    p_exc.add_argument("--out", default=None)

    return parser


def _cmd_build(args) -> int:
    graph = build_orbital_graph(_family_from_args(args))
    _write_output(export_graph(graph, args.format), args.out)
    return EXIT_OK


def _cmd_analyze(args) -> int:
    report = analyze_family(_family_from_args(args), _invariant_list(args.invariants))
    _write_output(json.dumps(report.to_json_dict(), indent=1) + "\n", args.out)
    return EXIT_OK


def _cmd_scan(args) -> int:
    lo, hi = _prime_range(args)
    jobs = args.jobs if args.jobs is not None else _default_jobs()
    records = scan_space(
        primes_between(lo, hi), args.degree, _invariant_list(args.invariants), jobs
    )
    out = Path(args.out)
    if args.format == "csv":
        with out.open("w") as fh:
            write_csv(records, fh)
    else:
        out.write_text(records_json(records))
    summary_path = out.with_name(out.name + ".summary.json")
    summary_path.write_text(json.dumps(summarize(records), indent=1) + "\n")
    sys.stdout.write(f"{len(records)} families -> {out} (+ {summary_path.name})\n")
    return EXIT_OK


def _cmd_verify(args) -> int:
    lo, hi = _prime_range(args)
    names = [tok.strip() for tok in args.lemmas.split(",") if tok.strip()]
    resolve_lemma_ids(names)  # validate before the long run
    reports = verify_lemmas(lo, hi, names)
    _write_output(
        json.dumps([r.json_dict() for r in reports], indent=1) + "\n", args.out
    )
    failed_proven = [r for r in reports if r.proven and r.status != "verified"]
    return EXIT_LEMMA if failed_proven else EXIT_OK


def _cmd_exceptions(args) -> int:
    lo, hi = _prime_range(args)
    jobs = args.jobs if args.jobs is not None else _default_jobs()
    families = find_exceptions(
        args.predicate,
        args.degree,
        lo,
        hi,
        checkpoint=args.checkpoint,
        jobs=jobs,
        max_partitions=args.max_partitions,
    )
    payload = [{"p": f.n, "coeffs": list(f.coeffs)} for f in families]
    _write_output(json.dumps(payload, indent=1) + "\n", args.out)
    return EXIT_OK


_COMMANDS = {
    "build": _cmd_build,
    "analyze": _cmd_analyze,
    "scan": _cmd_scan,
    "verify": _cmd_verify,
    "exceptions": _cmd_exceptions,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"orbnet: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CheckpointError as exc:
        print(f"orbnet: {exc}", file=sys.stderr)
        return EXIT_IO
    except OSError as exc:
        print(f"orbnet: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    raise SystemExit(main())
