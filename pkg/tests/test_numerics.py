import math

import pytest

from combthermo.exception import (
    InvalidParameterException,
    NoSignChangeException,
    PanelsExhaustedException,
)
from combthermo.numerics import (
    ExpTail,
    QuadratureSpec,
    RootSpec,
    SqrtEdge,
    find_root_bracketed,
    integrate_adaptive,
    sinc_and_derivative,
)


def test_exp_tail_recovers_bose_integral():
    spec = QuadratureSpec(rel_tol=1e-12, abs_tol=1e-13, transform=ExpTail(scale=1.0))
    result = integrate_adaptive(lambda x: math.log(-math.expm1(-x)), (0.0, math.inf), spec)
    assert result.value == pytest.approx(-math.pi**2 / 6, rel=1e-10)
    assert result.truncation_bound < 1e-13


def test_sqrt_edge_removes_inverse_square_root():
    spec = QuadratureSpec(transform=SqrtEdge(0.0, "lower"))
    result = integrate_adaptive(lambda x: 1.0 / math.sqrt(x), (0.0, 1.0), spec)
    assert result.value == pytest.approx(2.0, abs=1e-12)

    spec = QuadratureSpec(transform=SqrtEdge(1.0, "upper"))
    result = integrate_adaptive(lambda x: 1.0 / math.sqrt(1.0 - x), (0.0, 1.0), spec)
    assert result.value == pytest.approx(2.0, abs=1e-12)


def test_sqrt_edge_must_sit_on_a_limit():
    with pytest.raises(InvalidParameterException):
        integrate_adaptive(lambda x: x, (0.0, 1.0), QuadratureSpec(transform=SqrtEdge(0.5)))


def test_infinite_interval_needs_tail():
    with pytest.raises(InvalidParameterException):
        integrate_adaptive(lambda x: math.exp(-x), (0.0, math.inf))


def test_constant_and_empty_intervals():
    assert integrate_adaptive(lambda x: 3.0, (0.0, math.pi)).value == pytest.approx(3.0 * math.pi, rel=1e-14)
    empty = integrate_adaptive(lambda x: 1.0, (2.0, 2.0))
    assert empty.value == 0.0 and empty.panels == 0


def test_divergent_integral_exhausts_panels():
    with pytest.raises(PanelsExhaustedException):
        integrate_adaptive(lambda x: 1.0 / x, (0.0, 1.0))


def test_quadrature_spec_validation():
    with pytest.raises(InvalidParameterException):
        QuadratureSpec(rel_tol=0.0)
    with pytest.raises(InvalidParameterException):
        QuadratureSpec(max_panels=2)


def test_find_root_bracketed():
    root = find_root_bracketed(math.cos, RootSpec(bracket=(1.0, 2.0)))
    assert root == pytest.approx(math.pi / 2, abs=1e-12)
    assert find_root_bracketed(lambda x: x, RootSpec(bracket=(0.0, 1.0))) == 0.0


def test_find_root_requires_sign_change():
    with pytest.raises(NoSignChangeException):
        find_root_bracketed(math.cos, RootSpec(bracket=(0.0, 1.0)))
    with pytest.raises(InvalidParameterException):
        RootSpec(bracket=(1.0, 1.0))


def test_sinc_is_entire():
    assert sinc_and_derivative(0.0, 2.0) == (2.0, 0.0)
    for k in (1e-5, 0.5, 3.0 + 1.0j):
        s, ds = sinc_and_derivative(k, 2.0)
        step = 1e-6
        fd = (sinc_and_derivative(k + step, 2.0)[0] - sinc_and_derivative(k - step, 2.0)[0]) / (2 * step)
        assert abs(ds - fd) < 1e-8
    s, _ = sinc_and_derivative(1e-4, 2.0)
    assert s == pytest.approx(math.sin(2e-4) / 1e-4, rel=1e-14)
