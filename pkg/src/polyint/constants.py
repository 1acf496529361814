"""Fundamental constants and exact Bernoulli numbers/polynomials."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb
from numbers import Rational
from typing import NamedTuple

__all__ = [
    "BERNOULLI_MAX",
    "BernoulliTable",
    "Constants",
    "bernoulli_number",
    "bernoulli_polynomial",
    "bernoulli_table",
    "constants",
]

BERNOULLI_MAX = 64


class Constants(NamedTuple):
    pi: float
    euler_gamma: float
    catalan: float
    log2: float


_CONSTANTS = Constants(
    pi=3.14159265358979323846264338327950288,
    euler_gamma=0.57721566490153286060651209008240243,
    catalan=0.91596559417721901505460351493238411,
    log2=0.69314718055994530941723212145817657,
)


def constants() -> Constants:
    return _CONSTANTS


class BernoulliTable:
    """Exact B_0..B_max (B_1 = -1/2), built once from the recurrence

        sum_{j=0}^{m} C(m+1, j) B_j = 0,   m >= 1.
    """

    def __init__(self, max_index: int = BERNOULLI_MAX):
        if max_index < 1:
            raise ValueError("max_index must be >= 1")
        values = [Fraction(1)]
        for m in range(1, max_index + 1):
            acc = sum(comb(m + 1, j) * values[j] for j in range(m))
            values.append(-acc / (m + 1))
        self.max = max_index
        self.values: tuple[Fraction, ...] = tuple(values)

    def __getitem__(self, j: int) -> Fraction:
        if not 0 <= j <= self.max:
            raise IndexError(f"Bernoulli index {j} outside 0..{self.max}")
        return self.values[j]

    def __len__(self) -> int:
        return len(self.values)


@lru_cache(maxsize=None)
def bernoulli_table() -> BernoulliTable:
    return BernoulliTable(BERNOULLI_MAX)


def bernoulli_number(j: int) -> Fraction:
    return bernoulli_table()[j]


def bernoulli_polynomial(m: int, x):
    """B_m(x) = sum_j C(m, j) B_j x^(m-j).

    Exact (a Fraction) when x is an int or Fraction, a float otherwise.
    """
    table = bernoulli_table()
    if not 0 <= m <= table.max:
        raise IndexError(f"Bernoulli index {m} outside 0..{table.max}")
    if isinstance(x, Rational):
        x = Fraction(x)
        return sum((comb(m, j) * table[j] * x ** (m - j) for j in range(m + 1)), Fraction(0))
    x = float(x)
    # Horner in x, highest power first
    acc = 0.0
    for j in range(m + 1):
        acc = acc * x + float(comb(m, j) * table[j])
    return acc
