"""Integers represented by binary quadratic forms.

A form (a, b, c) stands for f(X, Y) = a*X^2 + b*X*Y + c*Y^2 over integer
(X, Y). The sieve enumerates the bounded region of (X, Y) pairs that can
reach values up to a limit and marks every value hit, so membership
queries afterwards are table lookups. A second, independent route decides
a single integer by bounded enumeration with an exact perfect-square (or
discriminant) test; the two routes cross-validate each other in the test
suite.

The relevance to distance sets: squared distances in the k-anisotropic
lattice are exactly the values of (1, 0, k), so the count of represented
integers up to the distance bound caps the distinct-distance count of any
point set in a box.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .errors import BudgetError

# Default cap on the sieve table allocation, in bytes (one byte per value).
DEFAULT_SIEVE_BYTES = 2**31


class QuadraticForm(tuple):
    """Coefficient triple (a, b, c) of a*X^2 + b*X*Y + c*Y^2."""

    def __new__(cls, a: int, b: int, c: int) -> "QuadraticForm":
        for name, v in (("a", a), ("b", b), ("c", c)):
            if not isinstance(v, int) or isinstance(v, bool):
                raise ValueError(f"coefficient {name} must be an int, got {v!r}")
        return super().__new__(cls, (a, b, c))

    @property
    def a(self) -> int:
        return self[0]

    @property
    def b(self) -> int:
        return self[1]

    @property
    def c(self) -> int:
        return self[2]


@dataclass(frozen=True)
class FormValidity:
    """Outcome of validate_form: ok plus the tuple of violated conditions."""

    ok: bool
    violations: tuple[str, ...]


@dataclass(frozen=True)
class RepresentedSet:
    """Sieve result: table[n] is True iff 1 <= n <= limit is represented."""

    form: QuadraticForm
    limit: int
    table: np.ndarray

    def values(self) -> list[int]:
        return [int(n) for n in np.nonzero(self.table)[0]]


@dataclass(frozen=True)
class RatioSample:
    """One row of the density table: count of represented n <= x and the
    normalized ratio count * sqrt(ln x) / x."""

    x: int
    count: int
    ratio: float


def discriminant(form: QuadraticForm) -> int:
    """b^2 - 4ac."""
    a, b, c = form
    return b * b - 4 * a * c


def _is_perfect_square(n: int) -> bool:
    if n < 0:
        return False
    r = math.isqrt(n)
    return r * r == n


def validate_form(form: QuadraticForm) -> FormValidity:
    """Check the three admissibility conditions used throughout: primitive
    (gcd(a, b, c) = 1), positive definite (a > 0 and negative discriminant),
    and non-square discriminant. All violations are reported, not just the
    first."""
    a, b, c = form
    violations: list[str] = []
    if math.gcd(math.gcd(a, b), c) != 1:
        violations.append("not-primitive")
    disc = discriminant(form)
    if not (a > 0 and disc < 0):
        violations.append("not-positive-definite")
    if _is_perfect_square(disc):
        violations.append("square-discriminant")
    return FormValidity(ok=not violations, violations=tuple(violations))


def _require_valid(form: QuadraticForm) -> None:
    validity = validate_form(form)
    if not validity.ok:
        raise ValueError(f"form {tuple(form)} rejected: {', '.join(validity.violations)}")


def sieve_represented(
    form: QuadraticForm,
    limit: int,
    *,
    max_table_bytes: Optional[int] = None,
) -> RepresentedSet:
    """Mark every represented integer in [1, limit].

    For diagonal forms (b = 0) only the X, Y >= 0 quadrant is scanned since
    f is even in each variable. For b != 0 the scan covers X >= 0 with the
    full Y range per X and relies on f(-X, -Y) = f(X, Y) for the other half;
    Y ranges come from the real roots of f(X, Y) <= limit in Y, padded by
    one and filtered by an exact f <= limit test so rounding can never
    change the result. The table costs one byte per integer; allocations
    beyond max_table_bytes raise BudgetError.
    """
    _require_valid(form)
    if not isinstance(limit, int) or isinstance(limit, bool) or limit < 1:
        raise ValueError(f"limit must be a positive int, got {limit!r}")
    cap = DEFAULT_SIEVE_BYTES if max_table_bytes is None else max_table_bytes
    if limit + 1 > cap:
        raise BudgetError(
            f"sieve to {limit} needs {limit + 1} bytes, over the budget of {cap}"
        )
    a, b, c = form
    table = np.zeros(limit + 1, dtype=bool)
    if b == 0:
        for x in range(math.isqrt(limit // a) + 1):
            base = a * x * x
            ymax = math.isqrt((limit - base) // c)
            ys = np.arange(ymax + 1, dtype=np.int64)
            table[base + c * ys * ys] = True
    else:
        abs_disc = -discriminant(form)
        xmax = math.isqrt(4 * c * limit // abs_disc) + 1
        for x in range(xmax + 1):
            # Solve c*y^2 + b*x*y + (a*x^2 - limit) <= 0 for y.
            disc_y = 4 * c * limit - abs_disc * x * x
            if disc_y < 0:
                continue
            s = math.isqrt(disc_y)
            y_lo = (-b * x - s) // (2 * c) - 1
            y_hi = (-b * x + s) // (2 * c) + 1
            ys = np.arange(y_lo, y_hi + 1, dtype=np.int64)
            vals = a * x * x + b * x * ys + c * ys * ys
            vals = vals[(vals >= 0) & (vals <= limit)]
            table[vals] = True
    table[0] = False
    return RepresentedSet(form=form, limit=limit, table=table)


def count_represented(rset: RepresentedSet, x: int) -> int:
    """Number of represented integers in [1, x]; x must lie inside the
    sieved range."""
    if not isinstance(x, int) or isinstance(x, bool) or x < 1:
        raise ValueError(f"x must be a positive int, got {x!r}")
    if x > rset.limit:
        raise ValueError(f"x = {x} exceeds the sieved limit {rset.limit}")
    return int(np.count_nonzero(rset.table[1 : x + 1]))


def is_represented(form: QuadraticForm, n: int) -> bool:
    """Decide one integer by bounded enumeration, independent of the sieve.

    Diagonal forms: scan X with a*X^2 <= n and test (n - a*X^2) / c for
    being a perfect square. General forms: scan X >= 0 (the X < 0 half is
    covered by f(-X, -Y) = f(X, Y)) and test whether the quadratic in Y has
    an integer root via an exact discriminant and divisibility check. No
    factorization-based criterion is used anywhere, deliberately: this
    routine is the ground-truth oracle for the sieve.
    """
    _require_valid(form)
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValueError(f"n must be a positive int, got {n!r}")
    a, b, c = form
    if b == 0:
        for x in range(math.isqrt(n // a) + 1):
            rem = n - a * x * x
            q, r = divmod(rem, c)
            if r == 0 and _is_perfect_square(q):
                return True
        return False
    abs_disc = -discriminant(form)
    x = 0
    while abs_disc * x * x <= 4 * c * n:
        disc_y = 4 * c * n - abs_disc * x * x
        s = math.isqrt(disc_y)
        if s * s == disc_y:
            if (-b * x + s) % (2 * c) == 0 or (-b * x - s) % (2 * c) == 0:
                return True
        x += 1
    return False


def density_ratio_table(
    form: QuadraticForm,
    xs: Sequence[int],
    *,
    max_table_bytes: Optional[int] = None,
) -> list[RatioSample]:
    """Density samples count(x) * sqrt(ln x) / x at each requested x.

    The represented integers thin out like x / sqrt(ln x), so this ratio
    should approach a positive constant; the table exposes that decay
    empirically. xs must be strictly increasing and every x >= 2 (ln 1 = 0
    would make the ratio degenerate).
    """
    xs = list(xs)
    if not xs:
        raise ValueError("xs must be non-empty")
    for x in xs:
        if not isinstance(x, int) or isinstance(x, bool) or x < 2:
            raise ValueError(f"every sample point must be an int >= 2, got {x!r}")
    if any(b <= a for a, b in zip(xs, xs[1:])):
        raise ValueError(f"sample points must be strictly increasing, got {xs}")
    rset = sieve_represented(form, xs[-1], max_table_bytes=max_table_bytes)
    out = []
    for x in xs:
        cnt = count_represented(rset, x)
        out.append(RatioSample(x=x, count=cnt, ratio=cnt * math.sqrt(math.log(x)) / x))
    return out
