"""Command line interface.

Subcommands:
  box        emit the points of the m*m box in row-major order
  distances  distinct-distance counts for boxes, with the represented-
             integer cap and the normalized ratio
  sieve      represented integers of the distance form x^2 + k*y^2
  ratio      density table count * sqrt(ln x) / x at sample points
  verify     exhaustive 4-subset scan of a box or box prefix
  census     shape counts: equilateral triples, squares, two-distance quads
  scaling    normalized distinct-count curve over a range of box sides

Exit codes: 0 success (and verification pass), 1 verification fail,
2 usage or validation error, 3 budget refusal.

Output is CSV by default with fixed headers and "\\n" line endings so runs
are byte-comparable; --format json mirrors the same fields.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import BudgetError
from .forms import (
    DEFAULT_SIEVE_BYTES,
    QuadraticForm,
    density_ratio_table,
    count_represented,
    sieve_represented,
)
from .lattice import (
    LatticeModel,
    build_box,
    distinct_count_via_value_grid,
    take_prefix_subset,
)
from .quads import (
    DEFAULT_QUAD_BUDGET,
    census_record,
    report_record,
    scan_shapes,
    verify_local_constraint,
)


@dataclass(frozen=True)
class ScanConfig:
    """Options shared by the scanning subcommands."""

    k: int
    fmt: str
    workers: int = 1
    max_quad_visits: int = DEFAULT_QUAD_BUDGET
    max_sieve_bytes: int = DEFAULT_SIEVE_BYTES
    early_exit: bool = True


def _csv_cell(v: object) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return f"{v:.6g}"
    return str(v)


def _json_cell(v: object) -> object:
    if isinstance(v, float):
        return float(f"{v:.6g}")
    return v


def emit_rows(rows: list[dict], fields: Sequence[str], fmt: str) -> str:
    """Render a row table: CSV with a header line, or a JSON array."""
    if fmt == "json":
        out = [{f: _json_cell(r[f]) for f in fields} for r in rows]
        return json.dumps(out, indent=2) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(fields)
    for r in rows:
        w.writerow([_csv_cell(r[f]) for f in fields])
    return buf.getvalue()


def emit_record(record: dict, fields: Sequence[str], fmt: str) -> str:
    """Render a single record: one-row CSV or a JSON object."""
    if fmt == "json":
        out = {f: _json_cell(record[f]) for f in fields}
        return json.dumps(out, indent=2) + "\n"
    return emit_rows([record], fields, "csv")


def _parse_span(text: str) -> tuple[int, int]:
    try:
        lo_s, hi_s = text.split(":", 1)
        lo, hi = int(lo_s), int(hi_s)
    except ValueError:
        raise ValueError(f"expected A:B, got {text!r}") from None
    if lo > hi:
        raise ValueError(f"empty span {text!r}")
    return lo, hi


def _parse_int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",")]
    except ValueError:
        raise ValueError(f"expected comma-separated ints, got {text!r}") from None


def _scan_config(args: argparse.Namespace) -> ScanConfig:
    return ScanConfig(
        k=args.k,
        fmt=args.fmt,
        workers=getattr(args, "workers", 1),
        max_quad_visits=getattr(args, "max_quad_visits", DEFAULT_QUAD_BUDGET),
        max_sieve_bytes=getattr(args, "max_sieve_bytes", DEFAULT_SIEVE_BYTES),
        early_exit=not getattr(args, "no_early_exit", False),
    )


def _resolve_point_set(args: argparse.Namespace, parser: argparse.ArgumentParser):
    model = LatticeModel(k=args.k)
    if args.m is not None:
        if args.m < 2:
            parser.error("--m must be >= 2 for subset scans")
        return build_box(model, args.m)
    if args.n < 4:
        parser.error("--n must be >= 4")
    side = math.isqrt(args.n - 1) + 1
    return take_prefix_subset(build_box(model, side), args.n)


def _normalized(distinct: int, m: int) -> float:
    # distinct * sqrt(ln m^2) / m^2, the quantity that should stay bounded
    # as boxes grow.
    return distinct * math.sqrt(math.log(m * m)) / (m * m)


def cmd_box(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    pset = build_box(LatticeModel(k=args.k), args.m)
    rows = [{"i": i, "x": p.x, "y": p.y} for i, p in enumerate(pset.points)]
    sys.stdout.write(emit_rows(rows, ("i", "x", "y"), args.fmt))
    return 0


def cmd_distances(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    cfg = _scan_config(args)
    if args.m is not None:
        ms = [args.m]
    else:
        lo, hi = _parse_span(args.m_range)
        ms = list(range(lo, hi + 1))
    if min(ms) < 2:
        parser.error("box sides must be >= 2 for distance tables")
    model = LatticeModel(k=cfg.k)
    form = QuadraticForm(1, 0, cfg.k)
    x_max = (cfg.k + 1) * max(ms) ** 2
    rset = None
    try:
        rset = sieve_represented(form, x_max, max_table_bytes=cfg.max_sieve_bytes)
    except BudgetError:
        pass  # cap column is optional; leave it empty rather than refuse
    rows = []
    for m in ms:
        distinct = distinct_count_via_value_grid(model, m)
        cap = None
        if rset is not None:
            cap = count_represented(rset, (cfg.k + 1) * m * m)
        rows.append(
            {
                "m": m,
                "n": m * m,
                "distinct": distinct,
                "bq": cap,
                "normalized": _normalized(distinct, m),
            }
        )
    sys.stdout.write(emit_rows(rows, ("m", "n", "distinct", "bq", "normalized"), cfg.fmt))
    return 0


def cmd_sieve(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    cfg = _scan_config(args)
    rset = sieve_represented(
        QuadraticForm(1, 0, cfg.k), args.x, max_table_bytes=cfg.max_sieve_bytes
    )
    rows = [{"n": v} for v in rset.values()]
    sys.stdout.write(emit_rows(rows, ("n",), cfg.fmt))
    return 0


def cmd_ratio(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    cfg = _scan_config(args)
    if args.x is not None:
        xs = _parse_int_list(args.x)
    else:
        lo, hi = _parse_span(args.decades)
        if lo < 1:
            parser.error("decades must start at 10^1 or later")
        xs = [10**d for d in range(lo, hi + 1)]
    samples = density_ratio_table(
        QuadraticForm(1, 0, cfg.k), xs, max_table_bytes=cfg.max_sieve_bytes
    )
    rows = [{"x": s.x, "count": s.count, "ratio": s.ratio} for s in samples]
    sys.stdout.write(emit_rows(rows, ("x", "count", "ratio"), cfg.fmt))
    return 0


_REPORT_FIELDS = ("verdict", "scanned", "witness_points", "witness_distances", "witness_class")
_CENSUS_FIELDS = (
    "n",
    "triples_scanned",
    "quads_scanned",
    "equilateral_triples",
    "squares",
    "two_distance_quads",
    "complete",
)


def cmd_verify(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    cfg = _scan_config(args)
    pset = _resolve_point_set(args, parser)
    report = verify_local_constraint(
        pset,
        early_exit=cfg.early_exit,
        workers=cfg.workers,
        max_quad_visits=cfg.max_quad_visits,
    )
    sys.stdout.write(emit_record(report_record(report), _REPORT_FIELDS, cfg.fmt))
    return 0 if report.verdict == "pass" else 1


def cmd_census(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    cfg = _scan_config(args)
    pset = _resolve_point_set(args, parser)
    census = scan_shapes(pset, workers=cfg.workers, max_quad_visits=cfg.max_quad_visits)
    sys.stdout.write(emit_record(census_record(census), _CENSUS_FIELDS, cfg.fmt))
    return 0


def cmd_scaling(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    cfg = _scan_config(args)
    lo, hi = _parse_span(args.m_range)
    if lo < 2:
        parser.error("scaling needs box sides >= 2")
    model = LatticeModel(k=cfg.k)
    rows = []
    for m in range(lo, hi + 1):
        distinct = distinct_count_via_value_grid(model, m)
        rows.append(
            {"m": m, "n": m * m, "distinct": distinct, "normalized": _normalized(distinct, m)}
        )
    sys.stdout.write(emit_rows(rows, ("m", "n", "distinct", "normalized"), cfg.fmt))
    return 0


def _add_common(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--k", type=int, default=2, help="anisotropy: squared distances are dx^2 + k*dy^2 (default 2)")
    sp.add_argument("--format", dest="fmt", choices=("csv", "json"), default="csv", help="output format (default csv)")


def _add_quad_flags(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--workers", type=int, default=1, help="kernel worker count (results never depend on it)")
    sp.add_argument("--max-quad-visits", type=int, default=DEFAULT_QUAD_BUDGET, help=f"4-subset scan budget (default {DEFAULT_QUAD_BUDGET})")


def _add_sieve_flags(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--max-sieve-bytes", type=int, default=DEFAULT_SIEVE_BYTES, help=f"sieve table budget in bytes (default {DEFAULT_SIEVE_BYTES})")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="few-distances",
        description="Exact distance-set and 4-point-shape checks for anisotropic lattice boxes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("box", help="emit the m*m box points")
    sp.add_argument("--m", type=int, required=True, help="box side")
    _add_common(sp)
    sp.set_defaults(handler=cmd_box)

    sp = sub.add_parser("distances", help="distinct-distance table for boxes")
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--m", type=int, help="single box side")
    g.add_argument("--m-range", help="inclusive span of box sides, A:B")
    _add_common(sp)
    _add_sieve_flags(sp)
    sp.set_defaults(handler=cmd_distances)

    sp = sub.add_parser("sieve", help="represented integers of x^2 + k*y^2 up to a limit")
    sp.add_argument("--x", type=int, required=True, help="sieve limit (inclusive)")
    _add_common(sp)
    _add_sieve_flags(sp)
    sp.set_defaults(handler=cmd_sieve)

    sp = sub.add_parser("ratio", help="density samples count * sqrt(ln x) / x")
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--x", help="comma-separated sample points")
    g.add_argument("--decades", help="powers of ten, A:B inclusive")
    _add_common(sp)
    _add_sieve_flags(sp)
    sp.set_defaults(handler=cmd_ratio)

    sp = sub.add_parser("verify", help="scan all 4-subsets for a 2-distance violation")
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--m", type=int, help="verify the full m*m box")
    g.add_argument("--n", type=int, help="verify the first n points of the smallest covering box")
    _add_common(sp)
    _add_quad_flags(sp)
    sp.add_argument("--no-early-exit", action="store_true", help="scan everything even after a witness is found (report is identical)")
    sp.set_defaults(handler=cmd_verify)

    sp = sub.add_parser("census", help="count equilateral triples, squares, two-distance quads")
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--m", type=int, help="census of the full m*m box")
    g.add_argument("--n", type=int, help="census of the first n points of the smallest covering box")
    _add_common(sp)
    _add_quad_flags(sp)
    sp.set_defaults(handler=cmd_census)

    sp = sub.add_parser("scaling", help="normalized distinct-count curve over box sides")
    sp.add_argument("--m-range", required=True, help="inclusive span of box sides, A:B")
    _add_common(sp)
    sp.set_defaults(handler=cmd_scaling)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args, parser)
    except BudgetError as exc:
        print(f"budget error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main(sys.argv[1:]))
