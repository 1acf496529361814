"""Linear harmonic Euler sums with a real index scale.

    S_{p,t}(r)    = sum_{n>=1}            H^(p)_{rn} / n^t
    S+-_{p,t}(r)  = sum_{n>=1} (-1)^(n+1) H^(p)_{rn} / n^t
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .errors import DivergenceError, DomainError
from .series import HarmonicTerm, SeriesResult, harmonic_series
from .special import dirichlet_eta, riemann_zeta

__all__ = [
    "ClosedFormEntry",
    "EulerSumSpec",
    "Identity",
    "euler_sum",
    "half_scaled_identity",
    "known_closed_forms",
    "scaled_decomposition",
    "shuffle_identity",
    "sitaramachandrarao",
]

PLAIN = "plain"
ALTERNATING = "alternating"


@dataclass(frozen=True)
class EulerSumSpec:
    kind: str
    p: int
    t: int
    r: float = 1.0

    def __post_init__(self):
        if self.kind not in (PLAIN, ALTERNATING):
            raise DomainError(f"kind must be 'plain' or 'alternating', got {self.kind!r}")
        if self.p < 1 or self.t < 1:
            raise DomainError("p and t must be positive integers")
        if not self.r > 0:
            raise DomainError(f"scale r must be positive, got {self.r}")
        if self.kind == PLAIN and self.t == 1:
            raise DivergenceError("S_{p,1} diverges")

    @property
    def weight(self) -> int:
        return self.p + self.t

    def label(self) -> str:
        head = "S" if self.kind == PLAIN else "S+-"
        return f"{head}_{{{self.p},{self.t}}}({self.r:g})"


def euler_sum(spec: EulerSumSpec, tol: float = 1e-13) -> SeriesResult:
    return harmonic_series([HarmonicTerm(1.0, spec.p, spec.r)], spec.t,
                           alternating=spec.kind == ALTERNATING, tol=tol)


class Identity(NamedTuple):
    lhs: float
    rhs: float


def scaled_decomposition(p: int, t: int, tol: float = 1e-13) -> Identity:
    """S_{p,t}(2) next to 2^(t-1) (S_{p,t} - S+-_{p,t})."""
    if t < 2:
        raise DivergenceError("decomposition needs t >= 2")
    lhs = euler_sum(EulerSumSpec(PLAIN, p, t, 2.0), tol).value
    plain = euler_sum(EulerSumSpec(PLAIN, p, t), tol).value
    alt = euler_sum(EulerSumSpec(ALTERNATING, p, t), tol).value
    return Identity(lhs, 2.0 ** (t - 1) * (plain - alt))


def shuffle_identity(p: int, t: int, tol: float = 1e-13) -> Identity:
    """S_{p,t} + S_{t,p} next to zeta(p) zeta(t) + zeta(p+t)."""
    if p < 2 or t < 2:
        raise DivergenceError("shuffle relation needs p, t >= 2")
    lhs = (euler_sum(EulerSumSpec(PLAIN, p, t), tol).value
           + euler_sum(EulerSumSpec(PLAIN, t, p), tol).value)
    return Identity(lhs, riemann_zeta(p) * riemann_zeta(t) + riemann_zeta(p + t))


def _check_even(t: int) -> None:
    if t < 2 or t % 2:
        raise DomainError(f"t must be an even integer >= 2, got {t}")


def sitaramachandrarao(t: int) -> float:
    """Closed form of S+-_{1,t} for even t."""
    _check_even(t)
    tail = math.fsum(dirichlet_eta(2 * j) * riemann_zeta(t + 1 - 2 * j) for j in range(1, t // 2))
    return 0.5 * ((t + 1) * dirichlet_eta(t + 1) - riemann_zeta(t + 1) - 2.0 * tail)


def half_scaled_identity(t: int) -> float:
    """Closed form of S+-_{1,t}(1/2) for even t."""
    _check_even(t)
    tail = math.fsum(4.0 ** j * dirichlet_eta(2 * j) * riemann_zeta(t + 1 - 2 * j)
                     for j in range(1, t // 2))
    return 0.5 * ((t + 3) * dirichlet_eta(t + 1) - (t + 1) * riemann_zeta(t + 1)
                  - 2.0 ** (1 - t) * tail)


class ClosedFormEntry(NamedTuple):
    spec: EulerSumSpec
    expression: str
    value: float


def known_closed_forms() -> list[ClosedFormEntry]:
    z = riemann_zeta
    log2 = math.log(2.0)
    rows = [
        ClosedFormEntry(EulerSumSpec(PLAIN, 3, 4), "18 zeta(7) - 10 zeta(2) zeta(5)",
                        18 * z(7) - 10 * z(2) * z(5)),
        ClosedFormEntry(EulerSumSpec(ALTERNATING, 3, 4), "363/128 zeta(7) - 9/8 zeta(5) zeta(2)",
                        363 / 128 * z(7) - 9 / 8 * z(5) * z(2)),
        ClosedFormEntry(EulerSumSpec(PLAIN, 3, 4, 2.0), "1941/16 zeta(7) - 71 zeta(5) zeta(2)",
                        1941 / 16 * z(7) - 71 * z(5) * z(2)),
        ClosedFormEntry(EulerSumSpec(PLAIN, 1, 2), "2 zeta(3)", 2 * z(3)),
        ClosedFormEntry(EulerSumSpec(PLAIN, 2, 2), "(zeta(2)^2 + zeta(4)) / 2",
                        0.5 * (z(2) ** 2 + z(4))),
        ClosedFormEntry(EulerSumSpec(ALTERNATING, 1, 1), "zeta(2)/2 - log(2)^2/2",
                        0.5 * z(2) - 0.5 * log2 ** 2),
    ]
    for t in (2, 4, 6):
        rows.append(ClosedFormEntry(EulerSumSpec(ALTERNATING, 1, t),
                                    f"Sitaramachandrarao, t={t}", sitaramachandrarao(t)))
    for t in (2, 4, 6):
        rows.append(ClosedFormEntry(EulerSumSpec(ALTERNATING, 1, t, 0.5),
                                    f"half-scale identity, t={t}", half_scaled_identity(t)))
    return rows


def lookup_closed_form(spec: EulerSumSpec):
    for entry in known_closed_forms():
        if entry.spec == spec:
            return entry
    return None
