import math

import pytest

from polyint.closed_form import IntegralParams, k_integral
from polyint.cli import default_grid
from polyint.errors import DomainError
from polyint.quadrature import (
    KIntegral,
    LogMoment,
    exp_sinh,
    fermi_dirac_polylog,
    integrate_line,
    integrate_unit,
    mellin_eta,
    tanh_sinh,
)
from polyint.special import dirichlet_eta, polylog_continued, riemann_zeta

LOG2 = math.log(2.0)
PI = math.pi


def test_exp_sinh_basic():
    res = exp_sinh(lambda x: math.exp(-x))
    assert res.converged
    assert abs(res.value - 1.0) <= 1e-14
    assert res.abs_error_estimate >= 0 and res.evaluations > 0
    shifted = exp_sinh(lambda x: 1.0 / (x * x), 1.0)
    assert abs(shifted.value - 1.0) <= 1e-13


def test_tanh_sinh_endpoint_singularities():
    res = tanh_sinh(lambda x, xc: math.log(x))
    assert abs(res.value + 1.0) <= 1e-14
    res = tanh_sinh(lambda x, xc: 1.0 / math.sqrt(xc))
    assert abs(res.value - 2.0) <= 1e-12


def test_level_cap_reports_not_converged():
    res = exp_sinh(lambda x: math.sin(x) * math.exp(-x / 50), tol=1e-14, max_level=2)
    assert not res.converged
    assert res.levels_used == 2


def test_bad_tolerance():
    with pytest.raises(DomainError):
        exp_sinh(lambda x: math.exp(-x), tol=0.0)


@pytest.mark.parametrize("params, expected", [
    (("minus", 1, 1, 0, 2), -2 * riemann_zeta(3)),
    (("minus", 1, 1, 0, 1), -riemann_zeta(2)),
    (("plus", 2, 1, 1, 1),
     -(3 * riemann_zeta(3) + 6 * PI ** 2 * LOG2 + PI ** 3 * 1j) / 12),
])
def test_integrate_line_examples(params, expected):
    res = integrate_line(IntegralParams(*params))
    assert res.converged
    assert abs(res.value - expected) <= 1e-12 * max(1.0, abs(expected))


def test_integrate_line_substitution():
    lhs = integrate_line(IntegralParams("minus", 1, 2, 0, 1)).value
    rhs = integrate_line(IntegralParams("minus", 0.5, 1, 0, 1)).value
    assert abs(lhs - rhs / 2) <= 1e-13


def test_minus_sign_integral_is_real():
    assert integrate_line(IntegralParams("minus", 2.5, 1.5, 3, 2)).value.imag == 0.0


def test_log_moment_zero():
    assert abs(integrate_unit(LogMoment(0)).value - LOG2) <= 1e-14


@pytest.mark.parametrize("m", [1, 2, 3, 5])
def test_log_moments(m):
    expected = (-1) ** m * math.factorial(m) * dirichlet_eta(m + 1)
    assert abs(integrate_unit(LogMoment(m)).value - expected) <= 1e-12 * max(1, abs(expected))


def test_k_integral_trivial_case():
    res = integrate_unit(KIntegral("minus", 0.0, 0, 1.0, 1))
    assert abs(res.value + LOG2 ** 2 / 2) <= 1e-14


@pytest.mark.parametrize("sign, c, p, q, t", [
    ("minus", -1.0, 1, 2.0, 3),
    ("minus", 0.0, 2, 0.5, 2),
    ("minus", 0.5, 0, 3.0, 1),
    ("plus", 0.0, 1, 2.0, 1),
    ("plus", -1.0, 2, 1.0, 2),
    ("plus", 1.5, 3, 0.7, 4),
])
def test_k_series_against_quadrature(sign, c, p, q, t):
    quad = integrate_unit(KIntegral(sign, c, p, q, t)).value.real
    series = k_integral(sign, c, p, q, t).value
    assert abs(quad - series) <= 1e-10


def test_unit_domain_errors():
    with pytest.raises(DomainError):
        integrate_unit(KIntegral("minus", -1.5, 0, 1.0, 1))
    with pytest.raises(DomainError):
        integrate_unit(LogMoment(-1))


@pytest.mark.parametrize("t, y, expected", [
    (1, 1.0, -LOG2),
    (2, 1.0, -PI ** 2 / 12),
    (3, 4.0, polylog_continued(3, -4.0).real),
])
def test_fermi_dirac_examples(t, y, expected):
    assert abs(fermi_dirac_polylog(t, y) - expected) <= 1e-12


@pytest.mark.parametrize("t", range(1, 5))
@pytest.mark.parametrize("y", [0.5, 1.0, 3.0, 10.0])
def test_fermi_dirac_against_polylog(t, y):
    ref = polylog_continued(t, -y).real
    assert abs(fermi_dirac_polylog(t, y) - ref) <= 1e-9 * abs(ref)


def test_fermi_dirac_domain():
    with pytest.raises(DomainError):
        fermi_dirac_polylog(0, 1.0)
    with pytest.raises(DomainError):
        fermi_dirac_polylog(2, 0.0)


@pytest.mark.parametrize("s", [2, 3, 4, 5])
def test_mellin_eta(s):
    assert abs(mellin_eta(s) - dirichlet_eta(s)) <= 1e-10 * dirichlet_eta(s)


def test_one_more_level_never_increases_estimate():
    for params in default_grid():
        res = integrate_line(params, extra_levels=1)
        assert res.converged, params
        assert res.history[-1] <= res.history[-2], params
