import math
from fractions import Fraction
from math import comb

import pytest

from polyint.constants import (
    BERNOULLI_MAX,
    BernoulliTable,
    bernoulli_number,
    bernoulli_polynomial,
    bernoulli_table,
    constants,
)
from polyint.special import dirichlet_eta


@pytest.mark.parametrize("j, expected", [
    (0, Fraction(1)),
    (1, Fraction(-1, 2)),
    (2, Fraction(1, 6)),
    (4, Fraction(-1, 30)),
    (7, Fraction(0)),
    (12, Fraction(-691, 2730)),
])
def test_bernoulli_number_values(j, expected):
    assert bernoulli_number(j) == expected


def test_table_bounds():
    table = bernoulli_table()
    assert table.max == BERNOULLI_MAX >= 64
    assert len(table) == BERNOULLI_MAX + 1
    with pytest.raises(IndexError):
        bernoulli_number(BERNOULLI_MAX + 1)
    with pytest.raises(IndexError):
        bernoulli_number(-1)


def test_odd_entries_vanish():
    assert all(bernoulli_number(2 * n + 1) == 0 for n in range(1, BERNOULLI_MAX // 2))


@pytest.mark.parametrize("m", range(1, 33))
def test_defining_recurrence_exact(m):
    assert sum(comb(m + 1, j) * bernoulli_number(j) for j in range(m + 1)) == 0


def test_small_table_matches_cached():
    small = BernoulliTable(20)
    assert all(small[j] == bernoulli_number(j) for j in range(21))


@pytest.mark.parametrize("m, x, expected", [
    (3, 0, 0),
    (0, 7.5, 1),
    (2, Fraction(1, 2), Fraction(-1, 12)),
    (2, 0.5, -1 / 12),
    (1, Fraction(1, 3), Fraction(-1, 6)),
])
def test_bernoulli_polynomial_examples(m, x, expected):
    assert bernoulli_polynomial(m, x) == pytest.approx(expected, abs=1e-16)


@pytest.mark.parametrize("m", range(0, 33))
def test_polynomial_at_zero_is_number(m):
    assert bernoulli_polynomial(m, 0.0) == float(bernoulli_number(m))
    assert bernoulli_polynomial(m, 0) == bernoulli_number(m)


@pytest.mark.parametrize("m", range(1, 33))
def test_polynomial_difference_at_one(m):
    diff = bernoulli_polynomial(m, 1) - bernoulli_polynomial(m, 0)
    assert diff == (1 if m == 1 else 0)


def test_polynomial_out_of_range():
    with pytest.raises(IndexError):
        bernoulli_polynomial(BERNOULLI_MAX + 1, 0.3)


def test_constants():
    c = constants()
    assert c.pi == math.pi
    assert c.euler_gamma == pytest.approx(0.5772156649015329, rel=1e-16)
    assert c.log2 == math.log(2.0)
    assert c.log2 == pytest.approx(dirichlet_eta(1), rel=1e-16)
    # truncation error of the alternating series is below its first omitted term
    tail = math.fsum((-1) ** n / (2 * n + 1) ** 2 for n in range(200000))
    assert c.catalan == pytest.approx(tail, abs=1e-11)
    assert c.catalan == pytest.approx(0.915965594177219, rel=1e-15)
