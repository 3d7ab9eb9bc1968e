"""Shared exception types."""


class BudgetError(RuntimeError):
    """A requested computation exceeds its declared resource budget.

    Raised instead of silently attempting work that would exhaust memory
    (sieve tables) or time (exhaustive 4-subset scans). Callers can retry
    with a larger explicit budget.
    """


class ClassificationIntegrityError(RuntimeError):
    """A two-distance 4-point set matched none or several shape detectors.

    The three detectors (square, pentagon-trapezoid, equilateral-bearing)
    partition the planar two-distance configurations, so this is unreachable
    for genuine point input and indicates a predicate bug if it ever fires.
    """
