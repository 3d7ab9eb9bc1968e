"""Exact toolkit for lattice point sets with few distinct distances.

Three layers:

  lattice   integer-exact geometry of the Z x sqrt(k)Z lattice and its
            square boxes (distinct squared-distance sets, value-grid
            counting)
  forms     integers represented by binary quadratic forms (sieve plus an
            independent per-integer oracle, density ratio tables)
  quads     exhaustive 4-subset scans: the at-least-3-distances local
            constraint, witness reporting, and exact shape censuses

plus a CLI (cli.main / the few-distances script) gluing them together.
"""

from .errors import BudgetError, ClassificationIntegrityError
from .forms import (
    DEFAULT_SIEVE_BYTES,
    FormValidity,
    QuadraticForm,
    RatioSample,
    RepresentedSet,
    density_ratio_table,
    count_represented,
    discriminant,
    is_represented,
    sieve_represented,
    validate_form,
)
from .lattice import (
    MAX_BOX_SIDE,
    LatticeModel,
    Point,
    PointSet,
    build_box,
    distinct_count_via_value_grid,
    distinct_squared_distances,
    dot_product,
    max_squared_distance_bound,
    squared_distance,
    take_prefix_subset,
)
from .quads import (
    DEFAULT_QUAD_BUDGET,
    TAG_EQUILATERAL,
    TAG_NOT_TWO_DISTANCE,
    TAG_PENTAGON,
    TAG_SQUARE,
    Quad,
    ShapeCensus,
    TwoDistanceClass,
    VerificationReport,
    census_record,
    classify_two_distance,
    contains_equilateral_triangle,
    distinct_count,
    is_square_quad,
    pentagon_ratio_test,
    quad_distances,
    report_record,
    scan_shapes,
    squared_ratio_is_golden,
    verify_local_constraint,
)
from .runtime import configure_workers

__version__ = "0.1.0"

__all__ = [
    "BudgetError",
    "ClassificationIntegrityError",
    "DEFAULT_QUAD_BUDGET",
    "DEFAULT_SIEVE_BYTES",
    "FormValidity",
    "LatticeModel",
    "MAX_BOX_SIDE",
    "Point",
    "PointSet",
    "Quad",
    "QuadraticForm",
    "RatioSample",
    "RepresentedSet",
    "ShapeCensus",
    "TAG_EQUILATERAL",
    "TAG_NOT_TWO_DISTANCE",
    "TAG_PENTAGON",
    "TAG_SQUARE",
    "TwoDistanceClass",
    "VerificationReport",
    "density_ratio_table",
    "build_box",
    "census_record",
    "classify_two_distance",
    "configure_workers",
    "contains_equilateral_triangle",
    "count_represented",
    "discriminant",
    "distinct_count",
    "distinct_count_via_value_grid",
    "distinct_squared_distances",
    "dot_product",
    "is_represented",
    "is_square_quad",
    "max_squared_distance_bound",
    "pentagon_ratio_test",
    "quad_distances",
    "report_record",
    "scan_shapes",
    "squared_distance",
    "squared_ratio_is_golden",
    "take_prefix_subset",
    "validate_form",
    "verify_local_constraint",
    "__version__",
]
