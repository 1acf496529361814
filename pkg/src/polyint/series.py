"""Summation of series whose terms are built from extended harmonic numbers.

A series

    sum_{n>=1} s_n n^-power (const + sum_i w_i H^(k_i)_{alpha_i n + beta_i}),
    s_n = 1 or (-1)^(n+1),

is summed directly up to n = N - 1 and the remainder is added in closed
asymptotic form: Euler-Maclaurin for plain series, Boole summation for
alternating ones. Both need odd derivatives of the smooth extension f(x)
at x = N; these come exactly from the Taylor expansion of H^(k)_y in y,

    d^j/dy^j H^(k)_y = (-1)^(j-1) k (k+1) ... (k+j-1) zeta(k+j, y+1).

Because every singularity of f lies at distance >= N from x = N the
asymptotic tails are good to rounding level already for N around 40.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field
from math import comb
from typing import Sequence

from .constants import bernoulli_number
from .errors import DivergenceError, DomainError
from .quadrature import exp_sinh
from .special import harmonic_extended, hurwitz_zeta

__all__ = ["HarmonicTerm", "SeriesResult", "harmonic_series", "max_terms"]

_EPS = 2.220446049250313e-16
DEFAULT_MAX_TERMS = 10 ** 7
HEAD_TERMS = 48
TAIL_ORDER = 12  # corrections up to f^(2K-1)

# Euler-Maclaurin and Boole coefficients applied to the Taylor coefficient c_{2k-1}
_EM = tuple(float(bernoulli_number(2 * k) / (2 * k)) for k in range(1, TAIL_ORDER + 1))
_BOOLE = tuple(float((2 ** (2 * k) - 1) * bernoulli_number(2 * k) / (2 * k))
               for k in range(1, TAIL_ORDER + 1))


@dataclass(frozen=True)
class SeriesResult:
    value: float
    abs_error_estimate: float
    terms_used: int
    converged: bool
    partial_sums: tuple[float, ...] = field(default=(), repr=False)


@dataclass(frozen=True)
class HarmonicTerm:
    """weight * H^(order)_{slope * n + offset}"""
    weight: float
    order: int
    slope: float
    offset: float = 0.0

    def at(self, x: float) -> float:
        return self.weight * harmonic_extended(self.slope * x + self.offset, self.order)

    def taylor(self, x: float, count: int) -> list[float]:
        """Taylor coefficients g_j, j = 1..count-1, of the term about x
        (index 0 is left at zero; the value comes from ``at``)."""
        y1 = self.slope * x + self.offset + 1.0
        k = self.order
        out = [0.0] * count
        scale = self.weight
        for j in range(1, count):
            scale *= self.slope
            out[j] = (-1) ** (j - 1) * comb(k + j - 1, j) * scale * hurwitz_zeta(k + j, y1)
        return out


def max_terms() -> int:
    """Term cap for series, overridable through POLYINT_MAX_TERMS."""
    raw = os.environ.get("POLYINT_MAX_TERMS")
    if raw is None:
        return DEFAULT_MAX_TERMS
    try:
        cap = int(float(raw))
    except ValueError:
        raise DomainError(f"POLYINT_MAX_TERMS is not a number: {raw!r}") from None
    if cap < 1:
        raise DomainError("POLYINT_MAX_TERMS must be positive")
    return cap


def _decay_order(terms: Sequence[HarmonicTerm], constant: float) -> float:
    """Power of 1/n with which the bracket decays (0 if it tends to a
    nonzero limit or grows like log n)."""
    if constant != 0.0:
        return 0.0
    by_order: dict[int, float] = {}
    for term in terms:
        # leading behaviour of H^(k)_{a n + b}: zeta(k) - (a n)^(1-k)/(k-1), log(a n) for k = 1
        by_order[term.order] = by_order.get(term.order, 0.0) + term.weight
    if any(abs(w) > 1e-14 for w in by_order.values()):
        return 0.0
    # a balanced combination decays at least like n^-(min order)
    return float(min(by_order))


def harmonic_series(terms: Sequence[HarmonicTerm], power: int, *, alternating: bool = False,
                    constant: float = 0.0, tol: float = 1e-13) -> SeriesResult:
    """Sum s_n n^-power (constant + sum_i terms_i(n)) over n >= 1.

    ``tol`` is absolute; ``converged`` reports whether the error estimate
    met it.
    """
    if power < 0:
        raise DomainError("power must be >= 0")
    for term in terms:
        if term.slope <= 0:
            raise DomainError("harmonic index slope must be positive")
        if term.slope + term.offset <= -1.0:
            raise DomainError("harmonic index hits a pole at n = 1")
    if not alternating and power + _decay_order(terms, constant) <= 1.0:
        raise DivergenceError("series terms do not decay fast enough to converge")

    def f(x: float) -> float:
        return x ** -power * (constant + math.fsum(term.at(x) for term in terms))

    n_head = min(HEAD_TERMS, max_terms())
    head = []
    partial = []
    running = 0.0
    for n in range(1, n_head):
        v = f(n)
        if alternating and n % 2 == 0:
            v = -v
        head.append(v)
        running += v
        partial.append(running)
    head_sum = math.fsum(head)

    # Taylor coefficients of f at N
    big_n = float(n_head)
    count = 2 * TAIL_ORDER
    g = [0.0] * count
    g[0] = constant + math.fsum(term.at(big_n) for term in terms)
    for term in terms:
        for j, v in enumerate(term.taylor(big_n, count)):
            g[j] += v
    u = [(-1) ** k * comb(power + k - 1, k) * big_n ** (-power - k) if power > 0 else
         (1.0 if k == 0 else 0.0) for k in range(count)]
    c = [math.fsum(u[i] * g[k - i] for i in range(k + 1)) for k in range(count)]

    coeffs = _BOOLE if alternating else _EM
    tail = 0.5 * c[0]
    trunc = abs(c[0])
    for k in range(1, TAIL_ORDER + 1):
        term = coeffs[k - 1] * c[2 * k - 1]
        if abs(term) > trunc:
            break  # asymptotic series has started to grow
        tail -= term
        trunc = abs(term)
        if trunc <= 0.1 * _EPS * (abs(head_sum) + abs(tail)):
            break
    quad_err = 0.0
    if alternating:
        if n_head % 2 == 0:  # s_N = -1
            tail = -tail
    else:
        integral = exp_sinh(f, big_n, tol=1e-15, max_level=10)
        tail += integral.value.real
        quad_err = integral.abs_error_estimate
    value = head_sum + tail
    rounding = 8.0 * _EPS * (math.fsum(abs(v) for v in head) + abs(tail))
    err = trunc + quad_err + rounding
    return SeriesResult(value, err, n_head, err <= tol, tuple(partial))
