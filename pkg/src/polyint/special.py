"""Real-axis special functions: zeta/eta, Hurwitz zeta, psi and its
derivatives, extended harmonic numbers and the polylogarithm.

Everything is evaluated in binary64 from the exact Bernoulli table; no
external numerical library is involved.
"""

from __future__ import annotations

import math
from functools import lru_cache

from .constants import bernoulli_number, bernoulli_table, constants
from .errors import DivergenceError, DomainError, PoleError

__all__ = [
    "digamma",
    "dirichlet_eta",
    "eta_int",
    "harmonic_extended",
    "hurwitz_zeta",
    "polygamma",
    "polylog_continued",
    "polylog_exp",
    "polylog_unit",
    "riemann_zeta",
    "zeta_int",
]

_EPS = 2.220446049250313e-16
_PI = constants().pi
_LOG2 = constants().log2
_GAMMA = constants().euler_gamma

# B_{2k} / (2k)! as floats, k = 0..32
_B2K_FACT = tuple(float(bernoulli_number(2 * k) / math.factorial(2 * k)) for k in range(33))

# B_{2k} / (2k), k = 0..32
_B2K_OVER_2K = (0.0,) + tuple(float(bernoulli_number(2 * k) / (2 * k)) for k in range(1, 33))

# exact partial sums are used for integer harmonic indices up to this bound
_EXACT_HARMONIC_MAX = 64


def _is_pole(x: float) -> bool:
    return x <= 0 and x == math.floor(x)


def _cvz_alternating(term, n: int = 32) -> float:
    """sum_{k>=0} (-1)^k term(k) by Cohen, Rodriguez Villegas and Zagier
    (their Algorithm 1). Error ~ (3 + sqrt 8)^-n for totally monotone terms."""
    d = (3.0 + math.sqrt(8.0)) ** n
    d = (d + 1.0 / d) / 2.0
    b = -1.0
    c = -d
    s = 0.0
    for k in range(n):
        c = b - c
        s += c * term(k)
        b = (k + n) * (k - n) * b / ((k + 0.5) * (k + 1.0))
    return s / d


@lru_cache(maxsize=512)
def dirichlet_eta(s: float) -> float:
    s = float(s)
    if s < 0:
        raise DomainError(f"dirichlet_eta needs s >= 0, got {s}")
    if s == 0.0:
        return 0.5
    if s == 1.0:
        return _LOG2
    return _cvz_alternating(lambda k: (k + 1.0) ** -s)


@lru_cache(maxsize=512)
def riemann_zeta(s: float) -> float:
    """zeta(s) for s > 1 (via eta) and the single point s = 0."""
    s = float(s)
    if s == 0.0:
        return -0.5
    if s <= 1.0:
        raise DomainError(f"riemann_zeta is only provided for s > 1 or s = 0, got {s}")
    if s > 60.0:
        # 1 + 2^-s + 3^-s below one ulp of the leading terms
        return 1.0 + 2.0 ** -s + 3.0 ** -s
    return dirichlet_eta(s) / -math.expm1((1.0 - s) * math.log(2.0))


@lru_cache(maxsize=None)
def zeta_int(n: int) -> float:
    """zeta at any integer n != 1, negative ones from Bernoulli numbers."""
    if n == 1:
        raise DivergenceError("zeta has a pole at 1")
    if n >= 0:
        return riemann_zeta(n)
    k = -n
    return float((-1) ** k * bernoulli_number(k + 1) / (k + 1))


@lru_cache(maxsize=None)
def eta_int(n: int) -> float:
    """eta at any integer n; eta(-k) = (1 - 2^(k+1)) zeta(-k)."""
    if n >= 0:
        return dirichlet_eta(n)
    k = -n
    return float((1 - 2 ** (k + 1)) * (-1) ** k * bernoulli_number(k + 1) / (k + 1))


def _hurwitz_tail(s: float, y: float) -> float:
    # Euler-Maclaurin asymptotic series for zeta(s, y), y large
    acc = y ** (1.0 - s) / (s - 1.0) + 0.5 * y ** -s
    ypow = y ** (-s - 1.0)
    inv_y2 = 1.0 / (y * y)
    rising = s  # s (s+1) ... (s+2k-2)
    prev = math.inf
    for k in range(1, 33):
        term = _B2K_FACT[k] * rising * ypow
        if abs(term) >= prev:
            break
        acc += term
        if abs(term) <= 1e-3 * _EPS * abs(acc):
            break
        prev = abs(term)
        rising *= (s + 2 * k - 1) * (s + 2 * k)
        ypow *= inv_y2
    return acc


def hurwitz_zeta(s: float, a: float) -> float:
    """zeta(s, a) = sum_{j>=0} (a + j)^-s for s > 1.

    a may be negative (not a nonpositive integer) when s is an integer."""
    s = float(s)
    a = float(a)
    if s <= 1.0:
        raise DomainError(f"hurwitz_zeta needs s > 1, got {s}")
    if _is_pole(a):
        raise PoleError(f"hurwitz_zeta pole at a = {a}")
    if a < 0 and s != math.floor(s):
        raise DomainError("negative a needs an integer s")
    target = 10.0 + s
    head = []
    y = a
    if y < target:
        m = math.ceil(target - y)
        head = [(a + j) ** -s for j in range(m)]
        y = a + m
    return math.fsum(head) + _hurwitz_tail(s, y)


def digamma(x: float) -> float:
    x = float(x)
    if _is_pole(x):
        raise PoleError(f"digamma pole at {x}")
    shift = 0.0
    y = x
    if y < 10.0:
        m = math.ceil(10.0 - y)
        shift = math.fsum(1.0 / (x + j) for j in range(m))
        y = x + m
    inv_y2 = 1.0 / (y * y)
    acc = math.log(y) - 0.5 / y
    ypow = inv_y2
    for k in range(1, 20):
        term = _B2K_OVER_2K[k] * ypow
        acc -= term
        if abs(term) <= 1e-3 * _EPS * abs(acc):
            break
        ypow *= inv_y2
    return acc - shift


def polygamma(k: int, x: float) -> float:
    """psi^(k)(x) = (-1)^(k+1) k! zeta(k+1, x)."""
    if k < 0 or k != int(k):
        raise DomainError(f"polygamma order must be a nonnegative integer, got {k}")
    k = int(k)
    if k == 0:
        return digamma(x)
    if _is_pole(float(x)):
        raise PoleError(f"polygamma pole at {x}")
    return (-1) ** (k + 1) * math.factorial(k) * hurwitz_zeta(k + 1, x)


def harmonic_extended(lam: float, p: int) -> float:
    """H^(p)_lambda: gamma + psi(lambda+1) for p = 1, otherwise
    zeta(p) - zeta(p, lambda+1). Exact partial sums for small integer lambda."""
    if p < 1 or p != int(p):
        raise DomainError(f"harmonic order must be a positive integer, got {p}")
    p = int(p)
    lam = float(lam)
    if lam <= -1.0:
        raise PoleError(f"extended harmonic number needs lambda > -1, got {lam}")
    if lam == math.floor(lam) and 0 <= lam <= _EXACT_HARMONIC_MAX:
        n = int(lam)
        return math.fsum(j ** -p if p > 1 else 1.0 / j for j in range(1, n + 1))
    if p == 1:
        return _GAMMA + digamma(lam + 1.0)
    return riemann_zeta(p) - hurwitz_zeta(p, lam + 1.0)


# --- polylogarithm -----------------------------------------------------------

def _li_direct(m: int, z: float) -> float:
    # sum z^k / k^m for |z| <= 1/e
    acc = 0.0
    zk = 1.0
    for k in range(1, 200):
        zk *= z
        term = zk / k ** m
        acc += term
        if abs(term) <= 0.25 * _EPS * abs(acc):
            break
    return acc


def _li_near_one(m: int, mu: float) -> complex:
    # Li_m(e^mu) = sum_{k != m-1} zeta(m-k) mu^k/k!
    #              + mu^(m-1)/(m-1)! (H_{m-1} - log(-mu)),  |mu| < 2 pi
    # log(-mu) for mu > 0 taken as log(mu) + i pi, i.e. argument e^mu - i0
    acc = 0.0
    fact = 1.0
    mupow = 1.0
    kmax = m + bernoulli_table().max - 2
    for k in range(kmax + 1):
        if k > 0:
            mupow *= mu
            fact *= k
        if k == m - 1:
            continue
        n = m - k
        if n < 0 and n % 2 == 0:
            continue
        term = zeta_int(n) * mupow / fact
        acc += term
        if k > m and abs(term) <= 0.1 * _EPS * abs(acc):
            break
    log_part = 0.0 + 0.0j
    if mu != 0.0:
        h = math.fsum(1.0 / j for j in range(1, m))
        lead = mu ** (m - 1) / math.factorial(m - 1)
        if mu < 0:
            log_part = complex(lead * (h - math.log(-mu)), 0.0)
        else:
            log_part = complex(lead * (h - math.log(mu)), -_PI * lead)
    return acc + log_part


def _li_neg_near_one(m: int, mu: float) -> float:
    # Li_m(-e^mu) = -sum_k eta(m-k) mu^k/k!, entire for |mu| < pi
    acc = 0.0
    fact = 1.0
    mupow = 1.0
    for k in range(m + bernoulli_table().max - 2):
        if k > 0:
            mupow *= mu
            fact *= k
        n = m - k
        if n < 0 and n % 2 == 0:
            continue
        term = eta_int(n) * mupow / fact
        acc += term
        if k > m and abs(term) <= 0.1 * _EPS * abs(acc):
            break
    return -acc


def _log1m_exp(x: float) -> float:
    # log(1 - e^x) for x < 0
    if x < -0.6931471805599453:
        return math.log1p(-math.exp(x))
    return math.log(-math.expm1(x))


def polylog_exp(m: int, mu: float, sign: int = 1) -> complex:
    """Li_m(sign * e^mu) for integer m >= 0 and real mu.

    Taking the logarithm of the argument keeps huge arguments finite. For
    sign = +1 and mu > 0 the cut is approached from below (argument x - i0),
    so Im Li_m(x) = -pi log^(m-1)(x)/(m-1)! on (1, inf).
    """
    if m < 0 or m != int(m):
        raise DomainError(f"polylog order must be a nonnegative integer, got {m}")
    m = int(m)
    mu = float(mu)
    if sign > 0:
        if mu == 0.0 and m <= 1:
            raise DivergenceError(f"Li_{m}(1) diverges")
        if m == 0:
            # z/(1-z); real on both sides of 1
            return complex(1.0 / math.expm1(-mu), 0.0)
        if m == 1:
            if mu < 0:
                return complex(-_log1m_exp(mu), 0.0)
            return complex(-(mu + _log1m_exp(-mu)), -_PI)
        if mu < -1.0:
            return complex(_li_direct(m, math.exp(mu)), 0.0)
        if mu <= 1.0:
            return _li_near_one(m, mu)
        inv = _li_direct(m, math.exp(-mu))
        poly = 0.0
        for j in range(m // 2 + 1):
            poly += mu ** (m - 2 * j) / math.factorial(m - 2 * j) * zeta_int(2 * j)
        real = (-1) ** (m + 1) * inv + 2.0 * poly
        imag = -_PI * mu ** (m - 1) / math.factorial(m - 1)
        return complex(real, imag)
    if m == 0:
        # -e^mu/(1+e^mu)
        if mu > 0:
            return complex(-1.0 / (1.0 + math.exp(-mu)), 0.0)
        e = math.exp(mu)
        return complex(-e / (1.0 + e), 0.0)
    if m == 1:
        if mu > 0:
            return complex(-(mu + math.log1p(math.exp(-mu))), 0.0)
        return complex(-math.log1p(math.exp(mu)), 0.0)
    if mu < -1.0:
        return complex(_li_direct(m, -math.exp(mu)), 0.0)
    if mu <= 1.0:
        return complex(_li_neg_near_one(m, mu), 0.0)
    inv = _li_direct(m, -math.exp(-mu))
    poly = 0.0
    for j in range(m // 2 + 1):
        poly += mu ** (m - 2 * j) / math.factorial(m - 2 * j) * eta_int(2 * j)
    return complex(-((-1) ** m) * inv - 2.0 * poly, 0.0)


def polylog_unit(m: int, x: float) -> float:
    """Li_m(x) = sum x^k/k^m on -1 <= x <= 1."""
    x = float(x)
    if abs(x) > 1.0:
        raise DomainError(f"polylog_unit needs |x| <= 1, got {x}")
    if m < 1:
        raise DomainError(f"polylog order must be >= 1, got {m}")
    if x == 0.0:
        return 0.0
    if x == 1.0 and m == 1:
        raise DivergenceError("Li_1(1) diverges")
    return polylog_exp(m, math.log(abs(x)), 1 if x > 0 else -1).real


def polylog_continued(m: int, x: float) -> complex:
    """Li_m on the whole real line; on (1, inf) the value is the limit from
    below the cut, matching Jonquiere's relation in the form

        Li_m(x) + (-1)^m Li_m(1/x)
            = 2 sum_j log^(m-2j)(x)/(m-2j)! zeta(2j) + i pi log^(m-1)(x)/(m-1)!

    for 0 < x < 1.
    """
    x = float(x)
    if m < 1:
        raise DomainError(f"polylog order must be >= 1, got {m}")
    if x == 0.0:
        return 0j
    if x == 1.0 and m == 1:
        raise DivergenceError("Li_1(1) diverges")
    return polylog_exp(m, math.log(abs(x)), 1 if x > 0 else -1)
