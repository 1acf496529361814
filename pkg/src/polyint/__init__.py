"""Closed forms and numerical checks for integrals of the type

    int_{-inf}^{inf} x^p Li_t(+-e^{ax}) / (1 + e^{bx}) dx

together with the special functions, Euler sums and quadrature they rest on.
"""

from .closed_form import (
    EvalBreakdown,
    IntegralParams,
    corollary_p0,
    corollary_pt,
    double_series_B,
    evaluate,
    k_integral,
    log_moment,
)
from .constants import bernoulli_number, bernoulli_polynomial, bernoulli_table, constants
from .errors import DivergenceError, DomainError, NonConvergenceError, PoleError, PolyintError
from .euler_sums import (
    EulerSumSpec,
    euler_sum,
    half_scaled_identity,
    known_closed_forms,
    scaled_decomposition,
    sitaramachandrarao,
)
from .quadrature import (
    KIntegral,
    LogMoment,
    QuadratureResult,
    fermi_dirac_polylog,
    integrate_line,
    integrate_unit,
)
from .series import SeriesResult
from .special import (
    digamma,
    dirichlet_eta,
    harmonic_extended,
    hurwitz_zeta,
    polygamma,
    polylog_continued,
    polylog_unit,
    riemann_zeta,
)

__version__ = "0.1.0"
