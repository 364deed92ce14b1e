"""Command-line interface: table, entry, verify, cache.

One verb with a ``--theory`` selector covers the five coefficient families
(k-equivariant, k-ordinary, xi-equivariant, xi-ordinary, cohomology).
``--n``/``--m`` take a single index or an inclusive range ``A..B``; ``--kmax``
bounds every emitted target index.  Formats: plain (nonzero cells only),
latex (full grid), csv and json (full grid, canonical text, big integers as
decimal strings).  Output is deterministic: identical requests produce
byte-identical output, cache-warm or cold.

Exit statuses: 0 success, 1 verification failure, 2 bad request, 3 internal
inconsistency.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .cache import (
    CACHE_ENV_VAR,
    THEORIES,
    default_cache_path,
    load_cache,
    store_cache,
)
from .cohomology import CohomologyTable, T_COH
from .errors import (
    BadRequest,
    CorruptCache,
    NonInteger,
    NotDivisible,
    SchubertError,
)
from .graded import GradedPoly
from .ktheory import KTheoryTable, T_K_EQ, T_K_ORD, T_XI_EQ, T_XI_ORD
from .laurent import LaurentPoly
from .render import value_latex, value_pretty, value_text
from .verify import run_verify

FORMATS = ("plain", "latex", "csv", "json")


def parse_index_range(spec: str, name: str) -> list[int]:
    """A single nonnegative index or an inclusive range 'A..B'."""
    spec = spec.strip()
    try:
        if ".." in spec:
            lo_text, hi_text = spec.split("..", 1)
            lo, hi = int(lo_text), int(hi_text)
        else:
            lo = hi = int(spec)
    except ValueError:
        raise BadRequest(f"--{name}: cannot parse {spec!r} as an index or A..B range")
    if lo < 0 or hi < 0:
        raise BadRequest(f"--{name}: indices must be nonnegative, got {spec!r}")
    if lo > hi:
        raise BadRequest(f"--{name}: empty range {spec!r}")
    return list(range(lo, hi + 1))


def compute_value(theory: str, kt: KTheoryTable, ct: CohomologyTable, n, m, k):
    if theory == T_K_EQ:
        return kt.d(n, m, k)
    if theory == T_XI_EQ:
        return kt.b(n, m, k)
    if theory == T_K_ORD:
        return kt.d_ordinary(n, m, k)
    if theory == T_XI_ORD:
        return kt.b_ordinary(n, m, k)
    if theory == T_COH:
        return ct.c(n, m, k)
    raise BadRequest(f"unknown theory {theory!r}; choose from {', '.join(THEORIES)}")


def _json_value(value) -> dict:
    if isinstance(value, LaurentPoly):
        return {
            "type": "laurent",
            "terms": [
                {"a0": w.a0, "a1": w.a1, "coeff": str(c)}
                for w, c in sorted(value.items())
            ],
        }
    if isinstance(value, GradedPoly):
        return {
            "type": "graded",
            "terms": [
                {
                    "i": i,
                    "j": j,
                    "numerator": str(c.numerator),
                    "denominator": str(c.denominator),
                }
                for (i, j), c in sorted(value.items())
            ],
        }
    return {"type": "integer", "value": str(value)}


def json_to_value(obj: dict):
    """Rebuild a table value from its JSON encoding."""
    if obj["type"] == "laurent":
        return LaurentPoly(
            {(t["a0"], t["a1"]): int(t["coeff"]) for t in obj["terms"]}
        )
    if obj["type"] == "graded":
        from fractions import Fraction

        return GradedPoly(
            {
                (t["i"], t["j"]): Fraction(int(t["numerator"]), int(t["denominator"]))
                for t in obj["terms"]
            }
        )
    return int(obj["value"])


def emit_table(theory, rows, kmax, fmt, out) -> None:
    """rows: list of (n, m, [(k, value) for k in 0..kmax])."""
    if fmt == "plain":
        for n, m, cells in rows:
            shown = [
                f"k={k}: {value_pretty(v)}"
                for k, v in cells
                if not _is_zero(v)
            ]
            print(f"n={n} m={m} | " + "; ".join(shown), file=out)
    elif fmt == "latex":
        cols = "r" * (kmax + 1)
        print(rf"\begin{{tabular}}{{ll{cols}}}", file=out)
        header = " & ".join(f"$k={k}$" for k in range(kmax + 1))
        print(rf"$n$ & $m$ & {header} \\", file=out)
        for n, m, cells in rows:
            body = " & ".join(f"${value_latex(v)}$" for _, v in cells)
            print(rf"{n} & {m} & {body} \\", file=out)
        print(r"\end{tabular}", file=out)
    elif fmt == "csv":
        print("theory,n,m,k,value", file=out)
        for n, m, cells in rows:
            for k, v in cells:
                print(f'{theory},{n},{m},{k},"{value_text(v)}"', file=out)
    elif fmt == "json":
        payload = {
            "theory": theory,
            "kmax": kmax,
            "rows": [
                {
                    "n": n,
                    "m": m,
                    "entries": [{"k": k, "value": _json_value(v)} for k, v in cells],
                }
                for n, m, cells in rows
            ],
        }
        print(json.dumps(payload, indent=2), file=out)
    else:
        raise BadRequest(f"unknown format {fmt!r}")


def _is_zero(value) -> bool:
    if isinstance(value, (LaurentPoly, GradedPoly)):
        return not value
    return value == 0


def _open_tables(cache_path: str | None) -> tuple[KTheoryTable, CohomologyTable]:
    kt, ct = KTheoryTable(), CohomologyTable()
    if cache_path and Path(cache_path).exists():
        load_cache(cache_path, kt, ct)
    return kt, ct


def cmd_table(args, out) -> int:
    n_values = parse_index_range(args.n, "n")
    m_values = parse_index_range(args.m, "m")
    if args.kmax < 0:
        raise BadRequest(f"--kmax must be nonnegative, got {args.kmax}")
    kt, ct = _open_tables(args.cache)
    rows = []
    for n in n_values:
        for m in m_values:
            cells = [
                (k, compute_value(args.theory, kt, ct, n, m, k))
                for k in range(args.kmax + 1)
            ]
            rows.append((n, m, cells))
    emit_table(args.theory, rows, args.kmax, args.format, out)
    if args.cache:
        store_cache(args.cache, kt, ct)
    return 0


def cmd_entry(args, out) -> int:
    kt, ct = _open_tables(args.cache)
    value = compute_value(args.theory, kt, ct, args.n, args.m, args.k)
    if args.format == "plain":
        print(value_pretty(value), file=out)
    elif args.format == "latex":
        print(value_latex(value), file=out)
    elif args.format == "csv":
        print("theory,n,m,k,value", file=out)
        print(f'{args.theory},{args.n},{args.m},{args.k},"{value_text(value)}"', file=out)
    elif args.format == "json":
        payload = {
            "theory": args.theory,
            "n": args.n,
            "m": args.m,
            "k": args.k,
            "value": _json_value(value),
        }
        print(json.dumps(payload, indent=2), file=out)
    if args.cache:
        store_cache(args.cache, kt, ct)
    return 0


def cmd_verify(args, out) -> int:
    kt, ct = _open_tables(args.cache)
    status = run_verify(args.level, kt, ct, stream=out)
    if args.cache:
        store_cache(args.cache, kt, ct)
    return status


def cmd_cache(args, out) -> int:
    if not args.cache:
        raise BadRequest(
            f"cache action needs --cache or the {CACHE_ENV_VAR} environment variable"
        )
    path = Path(args.cache)
    if args.action == "clear":
        kt, ct = KTheoryTable(), CohomologyTable()
        store_cache(path, kt, ct)
        print(f"cleared {path}", file=out)
        return 0
    # inspect
    kt, ct = KTheoryTable(), CohomologyTable()
    count = load_cache(path, kt, ct) if path.exists() else 0
    print(f"cache {path}: {count} entries", file=out)
    for theory, n in sorted((kt.entry_counts() | {"cohomology": ct.entry_counts()["c"]}).items()):
        print(f"  {theory}: {n}", file=out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="schubert-sl2",
        description="Structure constants of the affine Grassmannian of SL2: "
        "equivariant/ordinary K-theory and equivariant cohomology.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, with_format=True):
        p.add_argument("--theory", required=True, choices=THEORIES)
        if with_format:
            p.add_argument("--format", default="plain", choices=FORMATS)
        p.add_argument(
            "--cache",
            default=default_cache_path(),
            help=f"memo cache file (default: ${CACHE_ENV_VAR})",
        )

    p_table = sub.add_parser("table", help="emit a coefficient table")
    add_common(p_table)
    p_table.add_argument("--n", required=True, help="index or inclusive range A..B")
    p_table.add_argument("--m", required=True, help="index or inclusive range A..B")
    p_table.add_argument("--kmax", type=int, required=True)
    p_table.set_defaults(fn=cmd_table)

    p_entry = sub.add_parser("entry", help="emit a single coefficient")
    add_common(p_entry)
    p_entry.add_argument("--n", type=int, required=True)
    p_entry.add_argument("--m", type=int, required=True)
    p_entry.add_argument("--k", type=int, required=True)
    p_entry.set_defaults(fn=cmd_entry)

    p_verify = sub.add_parser("verify", help="run the cross-check suite")
    p_verify.add_argument("--level", default="quick", choices=("quick", "full"))
    p_verify.add_argument("--cache", default=default_cache_path())
    p_verify.set_defaults(fn=cmd_verify)

    p_cache = sub.add_parser("cache", help="inspect or clear a cache file")
    p_cache.add_argument("action", choices=("inspect", "clear"))
    p_cache.add_argument("--cache", default=default_cache_path())
    p_cache.set_defaults(fn=cmd_cache)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.fn(args, sys.stdout)
    except (NotDivisible, NonInteger, RuntimeError) as e:
        print(f"internal inconsistency: {e}", file=sys.stderr)
        return 3
    except (BadRequest, CorruptCache, SchubertError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
