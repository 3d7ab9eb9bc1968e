"""Exhaustive verification of the 4-point distance constraint.

A point set satisfies the local constraint when every 4 of its points
determine at least 3 distinct squared distances. The scan enumerates
4-subsets in lexicographic index order (row-major point order for boxes),
short-circuits a subset the moment 3 distinct values appear, and reports
the first violating subset as a witness together with its shape class.

Planar two-distance 4-point sets fall into finitely many similarity
types; of those, only the square and the golden-ratio trapezoid contain
no equilateral triangle, so three exact detectors (square, golden ratio,
equilateral subtriangle) cover every case and must fire exactly once.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Optional, Sequence

import numpy as np

from .errors import BudgetError, ClassificationIntegrityError
from .lattice import LatticeModel, Point, PointSet, dot_product, squared_distance

# Refuse 4-subset scans larger than this unless the caller raises the cap.
DEFAULT_QUAD_BUDGET = 5_000_000_000

# Scans at most this many subsets stay in plain Python; larger ones are
# dispatched to the jitted kernels.
KERNEL_QUAD_THRESHOLD = 50_000

# Parallel witness encoding packs (j, k, l) into one int64.
_PARALLEL_MAX_POINTS = 2**20

# Kernel distance values must leave headroom for the doubled-diagonal
# square identity.
_KERNEL_VALUE_LIMIT = 2**61

TAG_SQUARE = "square"
TAG_PENTAGON = "pentagon-trapezoid"
TAG_EQUILATERAL = "equilateral-bearing"
TAG_NOT_TWO_DISTANCE = "not-two-distance"


@dataclass(frozen=True)
class Quad:
    """Four distinct points plus their sorted squared-distance multiset.

    The multiset is recomputed from the points on construction, so a Quad
    carrying forged distances cannot exist.
    """

    model: LatticeModel
    points: tuple[Point, Point, Point, Point]
    dists: tuple[int, int, int, int, int, int] = ()

    def __post_init__(self) -> None:
        if len(self.points) != 4:
            raise ValueError(f"a quad needs exactly 4 points, got {len(self.points)}")
        pts = []
        for p in self.points:
            if not isinstance(p[0], int) or not isinstance(p[1], int):
                raise ValueError(f"non-integer coordinate in {p!r}")
            pts.append(Point(p[0], p[1]))
        if len(set(pts)) != 4:
            raise ValueError("quad points must be pairwise distinct")
        object.__setattr__(self, "points", tuple(pts))
        expected = tuple(
            sorted(squared_distance(self.model, p, q) for p, q in combinations(pts, 2))
        )
        if self.dists == ():
            object.__setattr__(self, "dists", expected)
        elif tuple(self.dists) != expected:
            raise ValueError(
                f"distance multiset {self.dists} does not match the points "
                f"(expected {expected})"
            )


@dataclass(frozen=True)
class TwoDistanceClass:
    """Shape classification of a quad: tag plus, for genuine two-distance
    quads, the (short_count, long_count) split of the 6 pair distances."""

    tag: str
    edge_split: Optional[tuple[int, int]]


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of a local-constraint scan.

    scanned is the 1-based lexicographic rank of the witness on fail and
    the full subset count C(n, 4) on pass; both are properties of the
    input alone, never of worker count or early-exit mode, which is what
    makes reports byte-reproducible.
    """

    verdict: str
    scanned: int
    witness: Optional[Quad]
    witness_class: Optional[TwoDistanceClass]


@dataclass(frozen=True)
class ShapeCensus:
    """Exhaustive shape counts over a point set.

    When the subset budget truncates the scan, counts cover the largest
    first-index prefix that fits, the *_scanned fields say exactly how many
    subsets that is, and complete is False.
    """

    n: int
    triples_scanned: int
    quads_scanned: int
    equilateral_triples: int
    squares: int
    two_distance_quads: int
    complete: bool


def quad_distances(model: LatticeModel, points: Sequence[Point]) -> Quad:
    """Build the Quad for 4 distinct points."""
    return Quad(model=model, points=tuple(points))


def distinct_count(quad: Quad) -> int:
    """Number of distinct values among the 6 pair distances."""
    return len(set(quad.dists))


def _cycle_is_square(model: LatticeModel, a: Point, b: Point, c: Point, d: Point) -> bool:
    # Cycle a, b, c, d with diagonals (a, c), (b, d): equal sides, equal
    # diagonals of twice the side value, one right angle.
    s_ab = squared_distance(model, a, b)
    if squared_distance(model, b, c) != s_ab:
        return False
    if squared_distance(model, c, d) != s_ab:
        return False
    if squared_distance(model, d, a) != s_ab:
        return False
    s_ac = squared_distance(model, a, c)
    if s_ac != squared_distance(model, b, d) or s_ac != 2 * s_ab:
        return False
    ab = Point(b.x - a.x, b.y - a.y)
    bc = Point(c.x - b.x, c.y - b.y)
    return dot_product(model, ab, bc) == 0


def is_square_quad(quad: Quad) -> bool:
    """Exact square test via distance and orthogonality identities, trying
    each of the three diagonal pairings of the 4 points."""
    p0, p1, p2, p3 = quad.points
    m = quad.model
    return (
        _cycle_is_square(m, p0, p2, p1, p3)
        or _cycle_is_square(m, p0, p1, p2, p3)
        or _cycle_is_square(m, p0, p1, p3, p2)
    )


def contains_equilateral_triangle(quad: Quad) -> bool:
    """True when some 3 of the 4 points are pairwise equidistant and not
    collinear (the embedded cross product is a sqrt(k) multiple of the
    integer cross product, so the integer test is exact)."""
    m = quad.model
    for a, b, c in combinations(quad.points, 3):
        s = squared_distance(m, a, b)
        if squared_distance(m, a, c) != s or squared_distance(m, b, c) != s:
            continue
        if (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x) != 0:
            return True
    return False


def squared_ratio_is_golden(d_short: int, d_long: int) -> bool:
    """Exact test for d_long / d_short == (3 + sqrt(5)) / 2, the squared
    diagonal-to-side ratio of a regular pentagon.

    The equality rearranges to 2*d_long - 3*d_short = sqrt(5) * d_short,
    so it holds iff t := 2*d_long - 3*d_short is non-negative and
    t^2 == 5 * d_short^2. For positive integers that forces 5 to be a
    perfect rational square, so the test is always False on integer input;
    the point is deciding it exactly, without floats.
    """
    for name, v in (("d_short", d_short), ("d_long", d_long)):
        if not isinstance(v, int) or isinstance(v, bool) or v < 1:
            raise ValueError(f"{name} must be a positive int, got {v!r}")
    if d_short >= d_long:
        raise ValueError(f"need d_short < d_long, got {d_short} >= {d_long}")
    t = 2 * d_long - 3 * d_short
    return t >= 0 and t * t == 5 * d_short * d_short


def pentagon_ratio_test(quad: Quad) -> bool:
    """Whether a two-distance quad has the regular-pentagon ratio between
    its long and short values."""
    values = sorted(set(quad.dists))
    if len(values) != 2:
        raise ValueError(f"quad has {len(values)} distinct values, need exactly 2")
    return squared_ratio_is_golden(values[0], values[1])


def classify_two_distance(quad: Quad) -> TwoDistanceClass:
    """Classify a quad by its two-distance shape.

    Quads with any other number of distinct values get the
    not-two-distance tag. For genuine two-distance quads the three
    detectors partition the planar possibilities, so exactly one must
    fire; anything else raises ClassificationIntegrityError.
    """
    values = sorted(set(quad.dists))
    if len(values) != 2:
        return TwoDistanceClass(tag=TAG_NOT_TWO_DISTANCE, edge_split=None)
    short, long_ = values
    split = (quad.dists.count(short), quad.dists.count(long_))
    fired = []
    if is_square_quad(quad):
        fired.append(TAG_SQUARE)
    if squared_ratio_is_golden(short, long_):
        fired.append(TAG_PENTAGON)
    if contains_equilateral_triangle(quad):
        fired.append(TAG_EQUILATERAL)
    if len(fired) != 1:
        raise ClassificationIntegrityError(
            f"two-distance quad {quad.points} fired detectors {fired or 'none'}"
        )
    return TwoDistanceClass(tag=fired[0], edge_split=split)


def _rank_of_quad(n: int, i: int, j: int, k: int, l: int) -> int:
    """1-based rank of (i, j, k, l) among lexicographic 4-subsets of
    range(n), in closed form via hockey-stick sums."""
    before = (
        comb(n, 4)
        - comb(n - i, 4)
        + comb(n - i - 1, 3)
        - comb(n - j, 3)
        + comb(n - j - 1, 2)
        - comb(n - k, 2)
        + (l - k - 1)
    )
    return before + 1


def _quad_has_at_most_two(model: LatticeModel, pts: Sequence[Point], idx: tuple) -> bool:
    k = model.k
    u0 = -1
    u1 = -1
    for a in range(4):
        pa = pts[idx[a]]
        for b in range(a + 1, 4):
            pb = pts[idx[b]]
            du = pa[0] - pb[0]
            dv = pa[1] - pb[1]
            d = du * du + k * dv * dv
            if d != u0 and d != u1:
                if u0 == -1:
                    u0 = d
                elif u1 == -1:
                    u1 = d
                else:
                    return False
    return True


def _scan_python(
    pset: PointSet, early_exit: bool
) -> Optional[tuple[int, int, int, int]]:
    pts = pset.points
    first: Optional[tuple[int, int, int, int]] = None
    for idx in combinations(range(len(pts)), 4):
        if first is not None:
            if early_exit:
                break
            continue
        if _quad_has_at_most_two(pset.model, pts, idx):
            first = idx
            if early_exit:
                break
    return first


def _point_arrays(pset: PointSet) -> tuple[np.ndarray, np.ndarray]:
    n = len(pset.points)
    xs = np.fromiter((p[0] for p in pset.points), dtype=np.int64, count=n)
    ys = np.fromiter((p[1] for p in pset.points), dtype=np.int64, count=n)
    xs -= xs.min()
    ys -= ys.min()
    return xs, ys


def _fits_kernel(pset: PointSet) -> bool:
    xs = [p[0] for p in pset.points]
    ys = [p[1] for p in pset.points]
    du = max(xs) - min(xs)
    dv = max(ys) - min(ys)
    return du * du + pset.model.k * dv * dv < _KERNEL_VALUE_LIMIT


def _find_first_violation(
    pset: PointSet, early_exit: bool, workers: int, total: int
) -> Optional[tuple[int, int, int, int]]:
    n = len(pset.points)
    if total <= KERNEL_QUAD_THRESHOLD or not _fits_kernel(pset):
        return _scan_python(pset, early_exit)
    from . import _kernels
    from .runtime import configure_workers

    configure_workers(workers)
    xs, ys = _point_arrays(pset)
    if workers > 1 and n < _PARALLEL_MAX_POINTS:
        out = np.full(max(n - 3, 1), -1, dtype=np.int64)
        _kernels.scan_quads_parallel(xs, ys, pset.model.k, early_exit, out)
        hits = np.nonzero(out >= 0)[0]
        if hits.size == 0:
            return None
        i = int(hits[0])
        enc = int(out[i])
        l = enc % n
        enc //= n
        k = enc % n
        j = enc // n
        return (i, j, k, l)
    wi, wj, wk, wl = _kernels.scan_quads_lex(xs, ys, pset.model.k, early_exit)
    if wi < 0:
        return None
    return (int(wi), int(wj), int(wk), int(wl))


def verify_local_constraint(
    pset: PointSet,
    *,
    early_exit: bool = True,
    workers: int = 1,
    max_quad_visits: Optional[int] = None,
) -> VerificationReport:
    """Scan all 4-subsets for a violation (at most 2 distinct values).

    Refuses with BudgetError when C(n, 4) exceeds max_quad_visits, since a
    truncated scan could not honestly report a pass. The report is
    identical for any worker count and either early-exit mode.
    """
    n = len(pset.points)
    if n < 4:
        raise ValueError(f"need at least 4 points, got {n}")
    budget = DEFAULT_QUAD_BUDGET if max_quad_visits is None else max_quad_visits
    total = comb(n, 4)
    if total > budget:
        raise BudgetError(
            f"scan of C({n},4) = {total} subsets exceeds the budget of {budget}"
        )
    witness_idx = _find_first_violation(pset, early_exit, workers, total)
    if witness_idx is None:
        return VerificationReport(
            verdict="pass", scanned=total, witness=None, witness_class=None
        )
    i, j, k, l = witness_idx
    quad = Quad(model=pset.model, points=tuple(pset.points[t] for t in witness_idx))
    return VerificationReport(
        verdict="fail",
        scanned=_rank_of_quad(n, i, j, k, l),
        witness=quad,
        witness_class=classify_two_distance(quad),
    )


def _prefix_limit(n: int, r: int, budget: int) -> int:
    """Largest t (first-index prefix) with C(n, r) - C(n - t, r) <= budget."""
    lo, hi = 0, n - r + 1
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if comb(n, r) - comb(n - mid, r) <= budget:
            lo = mid
        else:
            hi = mid - 1
    return lo


def _census_python(
    model: LatticeModel, pts: Sequence[Point], tri_limit: int, quad_limit: int
) -> tuple[int, int, int]:
    n = len(pts)
    k = model.k
    eq = 0
    for i in range(tri_limit):
        ax, ay = pts[i]
        for j in range(i + 1, n - 1):
            bx, by = pts[j]
            dij = (bx - ax) ** 2 + k * (by - ay) ** 2
            for l in range(j + 1, n):
                cx, cy = pts[l]
                if (cx - ax) ** 2 + k * (cy - ay) ** 2 != dij:
                    continue
                if (cx - bx) ** 2 + k * (cy - by) ** 2 != dij:
                    continue
                if (bx - ax) * (cy - ay) - (by - ay) * (cx - ax) != 0:
                    eq += 1
    two = 0
    squares = 0
    for i in range(quad_limit):
        for rest in combinations(range(i + 1, n), 3):
            idx = (i,) + rest
            if _quad_has_at_most_two(model, pts, idx):
                two += 1
                quad = Quad(model=model, points=tuple(pts[t] for t in idx))
                if is_square_quad(quad):
                    squares += 1
    return eq, two, squares


def scan_shapes(
    pset: PointSet,
    *,
    workers: int = 1,
    max_quad_visits: Optional[int] = None,
) -> ShapeCensus:
    """Count equilateral triples, squares, and two-distance quads.

    Subset stages are truncated to the largest first-index prefix fitting
    the budget; a truncated census reports complete=False with the exact
    scanned tallies rather than refusing, so partial progress on large
    sets is still usable.
    """
    n = len(pset.points)
    if n < 4:
        raise ValueError(f"need at least 4 points, got {n}")
    budget = DEFAULT_QUAD_BUDGET if max_quad_visits is None else max_quad_visits
    if budget < 0:
        raise ValueError(f"budget must be non-negative, got {budget}")
    tri_limit = _prefix_limit(n, 3, budget)
    quad_limit = _prefix_limit(n, 4, budget)
    triples_scanned = comb(n, 3) - comb(n - tri_limit, 3)
    quads_scanned = comb(n, 4) - comb(n - quad_limit, 4)
    complete = tri_limit == n - 2 and quad_limit == n - 3
    if quads_scanned + triples_scanned <= KERNEL_QUAD_THRESHOLD or not _fits_kernel(pset):
        eq, two, squares = _census_python(pset.model, pset.points, tri_limit, quad_limit)
    else:
        from . import _kernels
        from .runtime import configure_workers

        configure_workers(workers)
        xs, ys = _point_arrays(pset)
        eq = int(_kernels.census_triples_segment(xs, ys, pset.model.k, 0, tri_limit))
        if workers > 1:
            two_out = np.zeros(max(n, 1), dtype=np.int64)
            sq_out = np.zeros(max(n, 1), dtype=np.int64)
            _kernels.census_quads_parallel(
                xs, ys, pset.model.k, 0, quad_limit, two_out, sq_out
            )
            two = int(two_out.sum())
            squares = int(sq_out.sum())
        else:
            two, squares = _kernels.census_quads_segment(
                xs, ys, pset.model.k, 0, quad_limit
            )
            two = int(two)
            squares = int(squares)
    return ShapeCensus(
        n=n,
        triples_scanned=triples_scanned,
        quads_scanned=quads_scanned,
        equilateral_triples=eq,
        squares=squares,
        two_distance_quads=two,
        complete=complete,
    )


def report_record(report: VerificationReport) -> dict[str, object]:
    """Flatten a report to the canonical record fields.

    witness_points joins "x,y" pairs with ";", witness_distances joins the
    6 sorted values with ";", witness_class is the tag; all three are empty
    strings on pass.
    """
    if report.witness is None:
        return {
            "verdict": report.verdict,
            "scanned": report.scanned,
            "witness_points": "",
            "witness_distances": "",
            "witness_class": "",
        }
    return {
        "verdict": report.verdict,
        "scanned": report.scanned,
        "witness_points": ";".join(f"{p.x},{p.y}" for p in report.witness.points),
        "witness_distances": ";".join(str(d) for d in report.witness.dists),
        "witness_class": report.witness_class.tag if report.witness_class else "",
    }


def census_record(census: ShapeCensus) -> dict[str, object]:
    """Flatten a census to the canonical record fields."""
    return {
        "n": census.n,
        "triples_scanned": census.triples_scanned,
        "quads_scanned": census.quads_scanned,
        "equilateral_triples": census.equilateral_triples,
        "squares": census.squares,
        "two_distance_quads": census.two_distance_quads,
        "complete": census.complete,
    }
