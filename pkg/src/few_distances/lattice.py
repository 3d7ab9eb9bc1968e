"""Exact geometry on anisotropic integer lattices.

A point (x, y) with integer coordinates stands for the planar point
(x, sqrt(k) * y), so the squared distance between two points is the exact
integer dx*dx + k*dy*dy and every comparison in this package is integer
arithmetic, never floating point.

The distinguished point sets are square boxes: the m*m grid of points
0 <= x, y <= m-1 enumerated row-major (y outer, x inner), and their
row-major prefixes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple, Optional, Sequence

import numpy as np

# Side length above which box construction is refused outright; together
# with the kernel envelope check below it keeps every squared distance a
# safe int64.
MAX_BOX_SIDE = 2**30

# Largest squared-distance bound the jitted kernels accept. Beyond it the
# pure-Python set path (exact, unbounded ints) is used instead.
_KERNEL_VALUE_LIMIT = 2**62

# Table-marking needs one byte per candidate value; fall back to the set
# path when the table would be unreasonably large.
_KERNEL_TABLE_LIMIT = 2**31

# Point counts up to this size use the plain Python pair loop; larger sets
# dispatch to the jitted marking kernel.
PYTHON_PAIR_POINTS = 512


class Point(NamedTuple):
    x: int
    y: int


@dataclass(frozen=True)
class LatticeModel:
    """The anisotropy parameter k of the lattice Z x sqrt(k)Z."""

    k: int

    def __post_init__(self) -> None:
        if not isinstance(self.k, int) or isinstance(self.k, bool):
            raise ValueError(f"k must be an int, got {self.k!r}")
        if self.k < 1:
            raise ValueError(f"k must be >= 1, got {self.k}")


@dataclass(frozen=True)
class PointSet:
    """An ordered set of distinct lattice points under one model.

    box_side is set only when the points are exactly the full m*m box in
    row-major order; the grid fast path trusts this flag rather than
    re-inspecting the points, so constructors must only set it truthfully.
    """

    model: LatticeModel
    points: tuple[Point, ...]
    box_side: Optional[int] = None

    def __post_init__(self) -> None:
        if len(set(self.points)) != len(self.points):
            raise ValueError("points must be pairwise distinct")
        for p in self.points:
            if not isinstance(p[0], int) or not isinstance(p[1], int):
                raise ValueError(f"non-integer coordinate in {p!r}")

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[Point]:
        return iter(self.points)


def build_box(model: LatticeModel, m: int) -> PointSet:
    """The m*m box point set, row-major: index i = y*m + x."""
    if not isinstance(m, int) or isinstance(m, bool) or m < 1:
        raise ValueError(f"box side must be a positive int, got {m!r}")
    if m > MAX_BOX_SIDE:
        raise ValueError(f"box side {m} exceeds the supported bound {MAX_BOX_SIDE}")
    if (model.k + 1) * (m - 1) ** 2 >= _KERNEL_VALUE_LIMIT:
        raise ValueError("box distances would overflow the 64-bit kernel envelope")
    pts = tuple(Point(x, y) for y in range(m) for x in range(m))
    return PointSet(model=model, points=pts, box_side=m)


def squared_distance(model: LatticeModel, p: Point, q: Point) -> int:
    """Exact integer squared distance between the embedded points."""
    du = p[0] - q[0]
    dv = p[1] - q[1]
    return du * du + model.k * dv * dv


def dot_product(model: LatticeModel, u: Point, v: Point) -> int:
    """Inner product of embedded difference vectors: u1*v1 + k*u2*v2.

    Zero exactly when the embedded vectors are perpendicular, which is the
    orthogonality test the square detector builds on.
    """
    return u[0] * v[0] + model.k * u[1] * v[1]


def max_squared_distance_bound(m: int, k: int) -> int:
    """Upper bound (k+1)*(m-1)^2 on squared distances within the m*m box."""
    if not isinstance(m, int) or m < 1:
        raise ValueError(f"m must be a positive int, got {m!r}")
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"k must be a positive int, got {k!r}")
    return (k + 1) * (m - 1) ** 2


def take_prefix_subset(pset: PointSet, n: int) -> PointSet:
    """The first n points of pset in its stored (row-major) order.

    The box flag survives only when n == |pset|, since any proper prefix is
    no longer a full box and must not take the grid fast path.
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValueError(f"prefix size must be a positive int, got {n!r}")
    if n > len(pset.points):
        raise ValueError(f"prefix size {n} exceeds |P| = {len(pset.points)}")
    if n == len(pset.points):
        return pset
    return PointSet(model=pset.model, points=pset.points[:n], box_side=None)


def _grid_value_table(k: int, m: int) -> np.ndarray:
    """Boolean table over [0, (k+1)(m-1)^2] marking u^2 + k*v^2 for
    0 <= u, v <= m-1, with 0 unmarked.

    This is the O(m^2) route: a full box realizes every coordinate
    difference pair (u, v) in that range and nothing else.
    """
    sq = np.arange(m, dtype=np.int64) ** 2
    vals = sq[:, None] + k * sq[None, :]
    table = np.zeros((k + 1) * (m - 1) ** 2 + 1, dtype=bool)
    table[vals.ravel()] = True
    table[0] = False
    return table


def distinct_count_via_value_grid(model: LatticeModel, m: int) -> int:
    """Number of distinct squared distances of the m*m box, via the value
    grid (no pair enumeration)."""
    if not isinstance(m, int) or isinstance(m, bool) or m < 2:
        raise ValueError(f"grid count needs box side >= 2, got {m!r}")
    if m > MAX_BOX_SIDE:
        raise ValueError(f"box side {m} exceeds the supported bound {MAX_BOX_SIDE}")
    return int(np.count_nonzero(_grid_value_table(model.k, m)))


def _pair_values_python(model: LatticeModel, points: Sequence[Point]) -> set[int]:
    k = model.k
    seen: set[int] = set()
    n = len(points)
    for i in range(n):
        xi, yi = points[i]
        for j in range(i):
            du = xi - points[j][0]
            dv = yi - points[j][1]
            seen.add(du * du + k * dv * dv)
    return seen


def _kernel_bound(model: LatticeModel, points: Sequence[Point]) -> Optional[int]:
    """Largest possible squared distance after recentering, or None when the
    jitted table path cannot be used safely."""
    xs = [p[0] for p in points]
    ys = [p[1] for p in points]
    du = max(xs) - min(xs)
    dv = max(ys) - min(ys)
    bound = du * du + model.k * dv * dv
    if bound >= _KERNEL_VALUE_LIMIT or bound + 1 > _KERNEL_TABLE_LIMIT:
        return None
    return bound


def distinct_squared_distances(pset: PointSet) -> list[int]:
    """Sorted list of distinct squared distances over all point pairs.

    Full boxes (box_side set) use the O(m^2) value grid; other sets
    enumerate pairs, in Python for small sets and through the jitted
    marking kernel for large ones.
    """
    n = len(pset.points)
    if n < 2:
        raise ValueError(f"need at least 2 points, got {n}")
    if pset.box_side is not None and pset.box_side >= 2:
        table = _grid_value_table(pset.model.k, pset.box_side)
        return [int(v) for v in np.nonzero(table)[0]]
    if n <= PYTHON_PAIR_POINTS:
        return sorted(_pair_values_python(pset.model, pset.points))
    bound = _kernel_bound(pset.model, pset.points)
    if bound is None:
        return sorted(_pair_values_python(pset.model, pset.points))
    from . import _kernels

    xs = np.fromiter((p[0] for p in pset.points), dtype=np.int64, count=n)
    ys = np.fromiter((p[1] for p in pset.points), dtype=np.int64, count=n)
    xs -= xs.min()
    ys -= ys.min()
    table = np.zeros(bound + 1, dtype=np.uint8)
    _kernels.mark_pair_values(xs, ys, pset.model.k, table)
    return [int(v) for v in np.nonzero(table)[0]]
