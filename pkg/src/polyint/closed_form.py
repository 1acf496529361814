"""Closed-form evaluation of

    I+-(a, b, p, t) = int_{-inf}^{inf} x^p Li_t(+-e^{ax}) / (1 + e^{bx}) dx

as p! sign(b) / b^(p+1) * (A + B + C i), with q = a/b.

For the plus sign the polylogarithm is taken on its lower branch
(Li_t(x - i0) for x > 1), which gives C+ = -q^(t-1) C(p+t-1, p) eta(p+t) pi.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from math import comb, factorial

from .errors import DomainError
from .euler_sums import ALTERNATING, PLAIN, EulerSumSpec, euler_sum
from .series import HarmonicTerm, SeriesResult, harmonic_series
from .special import dirichlet_eta, riemann_zeta

__all__ = [
    "EvalBreakdown",
    "IntegralParams",
    "b_euler_form",
    "corollary_p0",
    "corollary_pt",
    "double_series_B",
    "evaluate",
    "first_integral",
    "k_integral",
    "k_minus_zero_euler_form",
    "log_moment",
    "story_so_far",
]

_EPS = 2.220446049250313e-16
SERIES_TOL = 1e-13


def _sign_flag(sign: str) -> int:
    if sign == "plus":
        return 1
    if sign == "minus":
        return -1
    raise DomainError(f"sign must be 'plus' or 'minus', got {sign!r}")


@dataclass(frozen=True)
class IntegralParams:
    sign: str
    a: float
    b: float
    p: int
    t: int

    def __post_init__(self):
        _sign_flag(self.sign)
        if not (math.isfinite(self.a) and math.isfinite(self.b)):
            raise DomainError("a and b must be finite")
        if not self.a * self.b > 0:
            raise DomainError(f"need a*b > 0, got a={self.a}, b={self.b}")
        if int(self.p) != self.p or self.p < 0:
            raise DomainError(f"p must be a nonnegative integer, got {self.p}")
        if int(self.t) != self.t or self.t < 1:
            raise DomainError(f"t must be a positive integer, got {self.t}")

    @property
    def q(self) -> float:
        return self.a / self.b

    @property
    def b_scale(self) -> float:
        return factorial(self.p) * math.copysign(1.0, self.b) / self.b ** (self.p + 1)


@dataclass(frozen=True)
class EvalBreakdown:
    A: float
    B: float
    C: float
    total: complex
    parity: str
    b_scale: float
    converged: bool = True
    abs_error_estimate: float = 0.0


def _xi(flag: int, s: int) -> float:
    return riemann_zeta(s) if flag > 0 else dirichlet_eta(s)


def _zero_series() -> SeriesResult:
    return SeriesResult(0.0, 0.0, 0, True)


def k_integral(sign: str, c: float, p: int, q: float, t: int,
               tol: float = SERIES_TOL) -> SeriesResult:
    """Series value of int_0^1 x^c log^p(x) Li_t(+-x^q) / (1 + x) dx."""
    flag = _sign_flag(sign)
    if c < -1:
        raise DomainError(f"only c >= -1 is supported, got {c}")
    if q <= 0:
        raise DomainError("q must be positive")
    if p < 0 or t < 0:
        raise DomainError("p and t must be nonnegative")
    terms = [HarmonicTerm(1.0, p + 1, q / 2, c / 2),
             HarmonicTerm(-1.0, p + 1, q / 2, (c - 1) / 2)]
    # (-1)^n = -(-1)^(n+1)
    res = harmonic_series(terms, t, alternating=flag < 0, tol=tol * 2 ** (p + 1) / factorial(p))
    scale = (-1) ** p * factorial(p) / 2 ** (p + 1) * (1 if flag > 0 else -1)
    err = abs(scale) * res.abs_error_estimate
    return SeriesResult(scale * res.value, err, res.terms_used, err <= tol,
                        tuple(scale * s for s in res.partial_sums))


def log_moment(m: int) -> float:
    """int_0^1 log^m(y) / (1 + y) dy = (-1)^m m! eta(m+1)."""
    if m < 0:
        raise DomainError("m must be >= 0")
    return (-1) ** m * factorial(m) * dirichlet_eta(m + 1)


def double_series_B(sign: str, p: int, t: int, q: float, tol: float = SERIES_TOL) -> SeriesResult:
    """[(-1)^p + (-1)^t] sum_n (+-1)^n n^-t sum_k (-1)^k (qn + k)^-(p+1).

    The inner sum is closed: sum_k (-1)^k (x+k)^-s = -2^-s [H^(s)_{x/2} - H^(s)_{(x-1)/2}].
    """
    flag = _sign_flag(sign)
    if q <= 0:
        raise DomainError("q must be positive")
    if (p + t) % 2:
        return _zero_series()
    s = p + 1
    terms = [HarmonicTerm(1.0, s, q / 2), HarmonicTerm(-1.0, s, q / 2, -0.5)]
    res = harmonic_series(terms, t, alternating=flag < 0, tol=tol * 2 ** s / 2)
    scale = 2 * (-1) ** p * -(2.0 ** -s) * (1 if flag > 0 else -1)
    err = abs(scale) * res.abs_error_estimate
    return SeriesResult(scale * res.value, err, res.terms_used, err <= tol,
                        tuple(scale * v for v in res.partial_sums))


def b_euler_form(sign: str, p: int, t: int, q: float, tol: float = SERIES_TOL) -> SeriesResult:
    """B through Euler sums; not available for (t, sign) = (1, plus)."""
    flag = _sign_flag(sign)
    if (p + t) % 2:
        return _zero_series()
    if flag > 0 and t == 1:
        raise DomainError("the Euler-sum form of B does not exist for t = 1, plus sign")
    kind = PLAIN if flag > 0 else ALTERNATING
    full = euler_sum(EulerSumSpec(kind, p + 1, t, q), tol)
    half = euler_sum(EulerSumSpec(kind, p + 1, t, q / 2), tol)
    bracket = full.value - 2.0 ** -p * half.value - dirichlet_eta(p + 1) * _xi(flag, t)
    scale = flag * 2 * (-1) ** p
    err = 2 * (full.abs_error_estimate + half.abs_error_estimate) + 4 * _EPS * abs(bracket)
    return SeriesResult(scale * bracket, err, full.terms_used + half.terms_used, err <= 10 * tol)


def _a_term(flag: int, p: int, t: int, q: float) -> float:
    head = flag * (-1) ** p * q ** -(p + 1) * _xi(flag, p + t + 1)
    parts = [q ** (t - 2 * j) * comb(p + t - 2 * j, p) * dirichlet_eta(p + t + 1 - 2 * j)
             * _xi(flag, 2 * j) for j in range(t // 2 + 1)]
    return math.fsum([head, 2 * flag * math.fsum(parts)])


def _c_term(flag: int, p: int, t: int, q: float) -> float:
    if flag < 0:
        return 0.0
    return -q ** (t - 1) * comb(p + t - 1, p) * dirichlet_eta(p + t) * math.pi


def evaluate(params: IntegralParams, tol: float = SERIES_TOL) -> EvalBreakdown:
    flag = _sign_flag(params.sign)
    p, t, q = params.p, params.t, params.q
    A = _a_term(flag, p, t, q)
    if flag > 0 and t == 1:
        b_res = double_series_B(params.sign, p, t, q, tol)
    else:
        b_res = b_euler_form(params.sign, p, t, q, tol)
    B = b_res.value
    C = _c_term(flag, p, t, q)
    scale = params.b_scale
    total = complex(scale * (A + B), scale * C)
    err = abs(scale) * (b_res.abs_error_estimate + 8 * _EPS * (abs(A) + abs(B)))
    return EvalBreakdown(A, B, C, total, "odd" if (p + t) % 2 else "even", scale,
                         b_res.converged, err)


def _breakdown(params: IntegralParams, A: float, B: float, C: float,
               extra: SeriesResult | None = None) -> EvalBreakdown:
    scale = params.b_scale
    converged = True if extra is None else extra.converged
    err = 8 * _EPS * (abs(A) + abs(B)) + (0.0 if extra is None else extra.abs_error_estimate)
    return EvalBreakdown(A, B, C, complex(scale * (A + B), scale * C),
                         "odd" if (params.p + params.t) % 2 else "even", scale,
                         converged, abs(scale) * err)


def _alt(p: int, t: int, r: float) -> SeriesResult:
    return euler_sum(EulerSumSpec(ALTERNATING, p, t, r))


def _plain(p: int, t: int, r: float) -> SeriesResult:
    return euler_sum(EulerSumSpec(PLAIN, p, t, r))


def corollary_p0(params: IntegralParams) -> EvalBreakdown:
    """The p = 0 specialisations, written out independently of evaluate."""
    if params.p != 0:
        raise DomainError("corollary_p0 needs p = 0")
    q, t = params.q, params.t
    eta, zeta = dirichlet_eta, riemann_zeta
    if params.sign == "minus":
        A = -eta(t + 1) / q - 2 * math.fsum(q ** (t - 2 * j) * eta(2 * j) * eta(t + 1 - 2 * j)
                                            for j in range(t // 2 + 1))
        if t % 2:
            return _breakdown(params, A, 0.0, 0.0)
        full, half = _alt(1, t, q), _alt(1, t, q / 2)
        B = 2 * eta(t) * math.log(2.0) - 2 * full.value + 2 * half.value
        return _breakdown(params, A, B, 0.0, _merge(full, half))
    A = zeta(t + 1) / q + 2 * math.fsum(q ** (t - 2 * j) * eta(t + 1 - 2 * j) * zeta(2 * j)
                                        for j in range(t // 2 + 1))
    C = -q ** (t - 1) * eta(t) * math.pi
    if t % 2:
        return _breakdown(params, A, 0.0, C)
    full, half = _plain(1, t, q), _plain(1, t, q / 2)
    B = 2 * (full.value - half.value - zeta(t) * math.log(2.0))
    return _breakdown(params, A, B, C, _merge(full, half))


def corollary_pt(params: IntegralParams) -> EvalBreakdown:
    """The p = t specialisations: q = 1 for the minus sign, t even for plus."""
    if params.p != params.t:
        raise DomainError("corollary_pt needs p = t")
    t, q = params.t, params.q
    eta, zeta = dirichlet_eta, riemann_zeta
    if params.sign == "minus":
        if abs(q - 1.0) > 1e-15:
            raise DomainError("the minus-sign p = t formula needs q = 1")
        full, half = _alt(t + 1, t, 1.0), _alt(t + 1, t, 0.5)
        # the bracket below is (-1)^(t+1) times the normalised integral
        zeta_part = eta(2 * t + 1) + 2 * (-1) ** t * math.fsum(
            comb(2 * t - 2 * j, t) * eta(2 * t + 1 - 2 * j) * eta(2 * j) for j in range(t // 2 + 1))
        sum_part = 2 * full.value - 2.0 ** (1 - t) * half.value - 2 * eta(t + 1) * eta(t)
        sgn = (-1) ** (t + 1)
        return _breakdown(params, sgn * zeta_part, sgn * sum_part, 0.0, _merge(full, half))
    if t % 2:
        raise DomainError("the plus-sign p = t formula needs t even")
    A = (zeta(2 * t + 1) / q ** (t + 1)
         + 2 * math.fsum(q ** (t - 2 * j) * comb(2 * t - 2 * j, t) * eta(2 * t + 1 - 2 * j)
                         * zeta(2 * j) for j in range(t // 2 + 1)))
    full, half = _plain(t + 1, t, q), _plain(t + 1, t, q / 2)
    B = 2 * (full.value - 2.0 ** -t * half.value - eta(t + 1) * zeta(t))
    C = -q ** (t - 1) * comb(2 * t - 1, t) * eta(2 * t) * math.pi
    return _breakdown(params, A, B, C, _merge(full, half))


def _merge(*parts: SeriesResult) -> SeriesResult:
    err = 2 * sum(r.abs_error_estimate for r in parts)
    return SeriesResult(math.fsum(r.value for r in parts), err,
                        sum(r.terms_used for r in parts), all(r.converged for r in parts))


# proof-chain pieces for the minus sign

def first_integral(p: int, q: float, t: int) -> float:
    """int_0^1 log^p(x) Li_t(-x^q) / x dx = K-(0) + K-(-1)."""
    if q <= 0:
        raise DomainError("q must be positive")
    return (-1) ** (p + 1) * factorial(p) * q ** -(p + 1) * dirichlet_eta(p + t + 1)


def k_minus_zero_euler_form(p: int, q: float, t: int, tol: float = SERIES_TOL) -> float:
    """K-(0, p, q, t) rewritten through alternating Euler sums (t >= 1)."""
    if t < 1:
        raise DomainError("t must be >= 1")
    full = euler_sum(EulerSumSpec(ALTERNATING, p + 1, t, q), tol).value
    half = euler_sum(EulerSumSpec(ALTERNATING, p + 1, t, q / 2), tol).value
    return (-1) ** p * factorial(p) * (full - 2.0 ** -p * half
                                       - dirichlet_eta(p + 1) * dirichlet_eta(t))


def story_so_far(p: int, q: float, t: int, tol: float = SERIES_TOL) -> float:
    """sign(b) b^(p+1) I-(a, b, p, t) assembled from the unit-interval pieces,
    with K-(0) taken from its harmonic series."""
    k0 = k_integral("minus", 0.0, p, q, t, tol).value
    tail = math.fsum(q ** (t - 2 * j) / factorial(t - 2 * j) * dirichlet_eta(2 * j)
                     * log_moment(p + t - 2 * j) for j in range(t // 2 + 1))
    return math.fsum([first_integral(p, q, t), -(1 + (-1) ** (p + t)) * k0,
                      -2 * (-1) ** (p + t) * tail])
