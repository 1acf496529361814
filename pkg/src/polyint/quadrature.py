"""Double-exponential quadrature and the integrals it is used to check.

Two rules share one driver: exp-sinh on [a, inf) and tanh-sinh on [0, 1].
Each level halves the step and reuses every node of the previous level.
Complex integrands are accumulated as two real sums over the same nodes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Union

from .errors import DomainError
from .special import polylog_exp

__all__ = [
    "KIntegral",
    "LogMoment",
    "QuadratureResult",
    "exp_sinh",
    "fermi_dirac_polylog",
    "integrate_line",
    "integrate_unit",
    "mellin_eta",
    "tanh_sinh",
]

_EPS = 2.220446049250313e-16
_HALF_PI = 0.5 * math.pi
_H0 = 0.5
MAX_LEVEL = 12


@dataclass(frozen=True)
class QuadratureResult:
    value: complex
    abs_error_estimate: float
    evaluations: int
    levels_used: int
    converged: bool
    history: tuple[float, ...] = ()

    @property
    def real(self) -> float:
        return self.value.real

    @property
    def imag(self) -> float:
        return self.value.imag


def _drive(node, span: float, tol: float, max_level: int, min_level: int,
           extra_levels: int, evals_per_node: int = 1) -> QuadratureResult:
    """Run the nested trapezoid sums of a DE rule.

    ``node(u)`` returns the weighted integrand w(u) f(x(u)) (complex or real).
    The error estimate at level L is max(|I_L - I_{L-1}|, floor) where the
    rounding floor is fixed from the level-0 L1 sum.
    """
    if tol <= 0:
        raise DomainError("tol must be positive")
    re_terms: list[float] = []
    im_terms: list[float] = []
    abs_terms: list[float] = []
    n0 = int(math.ceil(span / _H0))
    for k in range(-n0, n0 + 1):
        v = complex(node(k * _H0))
        re_terms.append(v.real)
        im_terms.append(v.imag)
        abs_terms.append(abs(v))
    s_re = math.fsum(re_terms)
    s_im = math.fsum(im_terms)
    evaluations = len(re_terms)
    h = _H0
    value = complex(h * s_re, h * s_im)
    floor = 64.0 * _EPS * h * math.fsum(abs_terms)
    history: list[float] = []
    est = math.inf
    converged = False
    level = 0
    stop_at = max_level
    while level < stop_at:
        level += 1
        h *= 0.5
        n = int(math.ceil(span / h))
        new_re = []
        new_im = []
        for k in range(-n + (1 - n % 2), n + 1, 2):
            v = complex(node(k * h))
            new_re.append(v.real)
            new_im.append(v.imag)
        evaluations += len(new_re)
        s_re = math.fsum([s_re] + new_re)
        s_im = math.fsum([s_im] + new_im)
        new_value = complex(h * s_re, h * s_im)
        est = max(abs(new_value - value), floor)
        value = new_value
        history.append(est)
        if not converged and level >= min_level and est <= tol * max(1.0, abs(value)):
            converged = True
            stop_at = min(max_level + extra_levels, level + extra_levels)
    return QuadratureResult(value, est, evaluations * evals_per_node, level, converged,
                            tuple(history))


def exp_sinh(f: Callable[[float], Union[float, complex]], a: float = 0.0, *,
             tol: float = 1e-12, max_level: int = MAX_LEVEL, min_level: int = 2,
             extra_levels: int = 0, span: float = 4.5) -> QuadratureResult:
    """Integrate f over [a, inf) with x = a + exp(pi/2 sinh u).

    f must decay at least algebraically; an integrable singularity at a is
    fine because nodes never land on a itself.
    """
    def node(u: float):
        v = _HALF_PI * math.sinh(u)
        e = math.exp(v)
        w = _HALF_PI * math.cosh(u) * e
        return w * f(a + e) if w > 0 else 0.0
    return _drive(node, span, tol, max_level, min_level, extra_levels)


def tanh_sinh(f: Callable[[float, float], Union[float, complex]], *, tol: float = 1e-12,
              max_level: int = MAX_LEVEL, min_level: int = 2, extra_levels: int = 0,
              span: float = 4.0) -> QuadratureResult:
    """Integrate over [0, 1]. f receives (x, 1 - x) with the complement
    computed without cancellation, for integrands singular at x = 1."""
    def node(u: float):
        v = math.pi * math.sinh(u)
        if v >= 0:
            e = math.exp(-v)
            x = 1.0 / (1.0 + e)
            xc = e / (1.0 + e)
        else:
            e = math.exp(v)
            x = e / (1.0 + e)
            xc = 1.0 / (1.0 + e)
        w = math.pi * math.cosh(u) * x * xc
        if w == 0.0 or x == 0.0 or xc == 0.0:
            return 0.0
        return w * f(x, xc)
    return _drive(node, span, tol, max_level, min_level, extra_levels)


def _logistic_neg(z: float) -> float:
    """1/(1 + e^z) without overflow."""
    if z > 0:
        if z > 745.0:
            return 0.0
        e = math.exp(-z)
        return e / (1.0 + e)
    return 1.0 / (1.0 + math.exp(z))


def _line_integrand(sign: int, a: float, b: float, p: int, t: int):
    def g(x: float) -> complex:
        den = _logistic_neg(b * x)
        if den == 0.0:
            return 0j
        li = polylog_exp(t, a * x, sign)
        if li == 0:
            return 0j
        return x ** p * li * den
    return g


def integrate_line(params, tol: float = 1e-12, *, max_level: int = MAX_LEVEL,
                   extra_levels: int = 0) -> QuadratureResult:
    """Directly integrate x^p Li_t(+-e^{ax}) / (1 + e^{bx}) over the real line.

    The line is split at 0 and both halves share the exp-sinh nodes. For the
    plus sign and a x > 0 the polylogarithm is taken below its cut.
    """
    sign = 1 if params.sign == "plus" else -1
    g = _line_integrand(sign, params.a, params.b, params.p, params.t)
    res = exp_sinh(lambda x: g(x) + g(-x), 0.0, tol=tol, max_level=max_level,
                   extra_levels=extra_levels)
    return QuadratureResult(res.value, res.abs_error_estimate, 2 * res.evaluations,
                            res.levels_used, res.converged, res.history)


@dataclass(frozen=True)
class KIntegral:
    """int_0^1 x^c log^p(x) Li_t(+-x^q) / (1 + x) dx"""
    sign: str
    c: float
    p: int
    q: float
    t: int


@dataclass(frozen=True)
class LogMoment:
    """int_0^1 log^m(y) / (1 + y) dy"""
    m: int


def integrate_unit(kind: Union[KIntegral, LogMoment], tol: float = 1e-12) -> QuadratureResult:
    if isinstance(kind, LogMoment):
        if kind.m < 0:
            raise DomainError("log moment order must be >= 0")
        m = kind.m

        def f(x: float, xc: float) -> float:
            lx = math.log(x) if x < 0.5 else math.log1p(-xc)
            return lx ** m / (1.0 + x)
        return tanh_sinh(f, tol=tol)

    if kind.c < -1:
        raise DomainError(f"K integral is only supported for c >= -1, got {kind.c}")
    if kind.q <= 0:
        raise DomainError("K integral needs q > 0")
    sign = 1 if kind.sign == "plus" else -1
    c, p, q, t = kind.c, kind.p, kind.q, kind.t

    def f(x: float, xc: float) -> float:
        lx = math.log(x) if x < 0.5 else math.log1p(-xc)
        li = polylog_exp(t, q * lx, sign).real
        return x ** c * lx ** p * li / (1.0 + x)
    return tanh_sinh(f, tol=tol)


def fermi_dirac_polylog(t: int, y: float, tol: float = 1e-12) -> float:
    """-(1/(t-1)!) int_0^inf x^(t-1) / (e^x / y + 1) dx, which is Li_t(-y)."""
    if t < 1:
        raise DomainError("fermi_dirac_polylog needs t >= 1")
    if y <= 0:
        raise DomainError("fermi_dirac_polylog needs y > 0")
    logy = math.log(y)
    res = exp_sinh(lambda x: x ** (t - 1) * _logistic_neg(x - logy), 0.0, tol=tol)
    return -res.value.real / math.factorial(t - 1)


def mellin_eta(s: float, tol: float = 1e-12) -> float:
    """(1/Gamma(s)) int_0^inf x^(s-1) / (1 + e^x) dx."""
    if s <= 0:
        raise DomainError("mellin_eta needs s > 0")
    res = exp_sinh(lambda x: x ** (s - 1.0) * _logistic_neg(x), 0.0, tol=tol)
    return res.value.real / math.gamma(s)
