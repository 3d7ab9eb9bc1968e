"""Quadratic forms: validation, sieving, the per-integer oracle, ratios."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from few_distances import (
    BudgetError,
    QuadraticForm,
    density_ratio_table,
    count_represented,
    discriminant,
    is_represented,
    sieve_represented,
    validate_form,
)

Q = QuadraticForm(1, 0, 2)
SUM_OF_SQUARES = QuadraticForm(1, 0, 1)
HEX = QuadraticForm(1, 1, 1)

small_coeffs = st.integers(min_value=-6, max_value=6)


def valid_forms():
    return (
        st.tuples(small_coeffs, small_coeffs, small_coeffs)
        .map(lambda t: (abs(t[0]) + 1, t[1], abs(t[2]) + 1))
        .map(lambda t: QuadraticForm(*t))
        .filter(lambda f: validate_form(f).ok)
    )


def test_discriminant_examples():
    assert discriminant(Q) == -8
    assert discriminant(SUM_OF_SQUARES) == -4
    assert discriminant(HEX) == -3


def test_validate_accepts_the_distance_form():
    assert validate_form(Q) == validate_form(QuadraticForm(1, 0, 2))
    assert validate_form(Q).ok
    assert validate_form(Q).violations == ()


def test_validate_rejects_imprimitive():
    v = validate_form(QuadraticForm(2, 0, 4))
    assert not v.ok
    assert "not-primitive" in v.violations


def test_validate_rejects_indefinite():
    v = validate_form(QuadraticForm(1, 0, -2))
    assert not v.ok
    assert "not-positive-definite" in v.violations


def test_validate_rejects_square_discriminant():
    # (1, 3, 2) has discriminant 1: both a square and non-negative.
    v = validate_form(QuadraticForm(1, 3, 2))
    assert not v.ok
    assert "square-discriminant" in v.violations
    assert "not-positive-definite" in v.violations


def test_operations_refuse_invalid_forms():
    bad = QuadraticForm(2, 0, 4)
    with pytest.raises(ValueError):
        sieve_represented(bad, 10)
    with pytest.raises(ValueError):
        is_represented(bad, 5)


def test_sieve_frozen_values():
    assert sieve_represented(Q, 10).values() == [1, 2, 3, 4, 6, 8, 9]
    assert sieve_represented(Q, 1).values() == [1]
    assert sieve_represented(SUM_OF_SQUARES, 10).values() == [1, 2, 4, 5, 8, 9, 10]


def test_sieve_rejects_bad_limit():
    with pytest.raises(ValueError):
        sieve_represented(Q, 0)


def test_sieve_budget_refusal():
    with pytest.raises(BudgetError):
        sieve_represented(Q, 10_000, max_table_bytes=100)


def test_count_represented_frozen_values():
    rset = sieve_represented(Q, 12)
    assert count_represented(rset, 12) == 9
    assert count_represented(rset, 10) == 7
    assert count_represented(rset, 1) == 1


def test_count_represented_rejects_out_of_range():
    rset = sieve_represented(Q, 10)
    with pytest.raises(ValueError):
        count_represented(rset, 11)
    with pytest.raises(ValueError):
        count_represented(rset, 0)


def test_is_represented_frozen_values():
    assert is_represented(Q, 3) is True
    assert is_represented(Q, 5) is False
    assert is_represented(Q, 10) is False
    assert is_represented(Q, 11) is True


def test_sieve_matches_search_oracle_diagonal():
    rset = sieve_represented(Q, 500)
    expected = {n for n in range(1, 501) if oracles.diagonal_represented_by_search(1, 2, n)}
    assert set(rset.values()) == expected


def test_sieve_matches_region_oracle_general_b():
    # Non-diagonal form: values of x^2 + xy + y^2 (the triangular lattice
    # norm form); exercises the b != 0 scan and its rounding guards.
    rset = sieve_represented(HEX, 200)
    assert set(rset.values()) == oracles.represented_by_region_scan(1, 1, 1, 200)
    assert rset.values()[:8] == [1, 3, 4, 7, 9, 12, 13, 16]


@given(form=valid_forms(), limit=st.integers(min_value=1, max_value=120))
@settings(max_examples=60, deadline=None)
def test_sieve_matches_is_represented(form, limit):
    rset = sieve_represented(form, limit)
    for n in range(1, limit + 1):
        assert bool(rset.table[n]) == is_represented(form, n), (form, n)


@given(form=valid_forms(), x=st.integers(min_value=-30, max_value=30),
       y=st.integers(min_value=-30, max_value=30))
@settings(max_examples=80, deadline=None)
def test_every_form_value_is_represented(form, x, y):
    a, b, c = form
    v = a * x * x + b * x * y + c * y * y
    if v >= 1:
        assert is_represented(form, v)


@given(x1=st.integers(-40, 40), y1=st.integers(-40, 40),
       x2=st.integers(-40, 40), y2=st.integers(-40, 40))
@settings(max_examples=80, deadline=None)
def test_distance_form_values_multiply(x1, y1, x2, y2):
    # (x1^2 + 2 y1^2)(x2^2 + 2 y2^2) = (x1 x2 - 2 y1 y2)^2 + 2 (x1 y2 + x2 y1)^2,
    # so represented values are closed under products.
    m = x1 * x1 + 2 * y1 * y1
    n = x2 * x2 + 2 * y2 * y2
    if m >= 1 and n >= 1:
        assert is_represented(Q, m * n)


def test_product_closure_exhaustive_small():
    rset = sieve_represented(Q, 3000)
    values = rset.values()
    members = set(values)
    for m in values:
        if m * m > 3000:
            break
        for n in values:
            if m * n > 3000:
                break
            assert m * n in members, (m, n)


def test_count_monotone_in_x():
    rset = sieve_represented(Q, 200)
    counts = [count_represented(rset, x) for x in range(1, 201)]
    assert all(b >= a for a, b in zip(counts, counts[1:]))
    assert counts[-1] == len(rset.values())


def test_ratio_table_frozen_point():
    (sample,) = density_ratio_table(Q, [10])
    assert sample.count == 7
    assert sample.ratio == pytest.approx(1.0621989905696025)


def test_ratio_table_rejects_degenerate_points():
    with pytest.raises(ValueError):
        density_ratio_table(Q, [])
    with pytest.raises(ValueError):
        density_ratio_table(Q, [1, 10])
    with pytest.raises(ValueError):
        density_ratio_table(Q, [100, 10])
    with pytest.raises(ValueError):
        density_ratio_table(Q, [10, 10])


def test_ratio_table_matches_direct_computation():
    samples = density_ratio_table(Q, [10, 100, 1000])
    rset = sieve_represented(Q, 1000)
    for s in samples:
        cnt = count_represented(rset, s.x)
        assert s.count == cnt
        assert s.ratio == pytest.approx(cnt * math.sqrt(math.log(s.x)) / s.x)


def test_jitted_oracle_agrees_with_python_oracle(warm_kernels):
    flags = oracles.diagonal_represented_flags(1, 2, 400)
    for n in range(1, 401):
        assert bool(flags[n]) == oracles.diagonal_represented_by_search(1, 2, n)
