import cmath
import math

import numpy as np
import pytest

from combthermo.exception import (
    InvalidParameterException,
    ModelNotSupportedException,
    PoleEvaluationException,
)
from combthermo.scattering import (
    DeltaPrimeDefect,
    PoschlTellerDefect,
    amplitudes_delta_prime,
    amplitudes_poschl_teller,
    bound_states,
    build_model,
    describe,
    phase_shift,
    phase_shift_derivative,
)
from tests.transfer_matrix import poschl_teller_amplitudes

MOMENTA = (0.05, 0.7, 1.0, 2.3, 11.0)


def test_delta_amplitudes_reference_values():
    amplitudes = amplitudes_delta_prime(DeltaPrimeDefect(w0=2.0, w1=0.0), 1.0)
    assert amplitudes.t == pytest.approx((1 - 1j) / 2, abs=1e-15)
    assert amplitudes.r_right == pytest.approx((-1 - 1j) / 2, abs=1e-15)
    assert amplitudes.r_left == pytest.approx((-1 - 1j) / 2, abs=1e-15)


@pytest.mark.parametrize("k", MOMENTA)
def test_delta_prime_unitarity(k):
    amplitudes = DeltaPrimeDefect(w0=3.0, w1=2.0).amplitudes(k)
    assert abs(amplitudes.t) ** 2 + abs(amplitudes.r_right) ** 2 == pytest.approx(1.0, abs=1e-12)
    assert abs(amplitudes.t) ** 2 + abs(amplitudes.r_left) ** 2 == pytest.approx(1.0, abs=1e-12)
    assert abs(amplitudes.determinant) == pytest.approx(1.0, abs=1e-12)


@pytest.mark.parametrize("k", (0.3 + 0.2j, 1.5 + 2.0j))
def test_reflection_symmetry_of_amplitudes(k):
    for model in (DeltaPrimeDefect(w0=3.0, w1=2.0), PoschlTellerDefect(epsilon=0.5)):
        mirrored = model.amplitudes(-k.conjugate())
        assert mirrored.t == pytest.approx(model.amplitudes(k).t.conjugate(), abs=1e-12)


def test_delta_prime_pole_is_reported():
    with pytest.raises(PoleEvaluationException):
        DeltaPrimeDefect(w0=2.0, w1=0.0).amplitudes(-1j)


def test_delta_prime_reparametrization():
    defect = DeltaPrimeDefect.from_omega_gamma(0.6, 0.6)
    assert defect.w0 == pytest.approx(3.0)
    assert defect.w1 == pytest.approx(2.0)
    assert defect.gamma == pytest.approx(0.6)
    assert defect.omega == pytest.approx(0.6)
    with pytest.raises(InvalidParameterException):
        DeltaPrimeDefect.from_omega_gamma(1.0, 0.6)
    with pytest.raises(InvalidParameterException):
        DeltaPrimeDefect(w0=-1.0, w1=0.0)


def test_phase_shift():
    defect = DeltaPrimeDefect(w0=2.0, w1=0.0)
    assert phase_shift(defect, 1.0) == pytest.approx(-math.pi / 4, abs=1e-15)
    assert phase_shift(defect, 1e8) == pytest.approx(0.0, abs=1e-7)
    assert phase_shift_derivative(defect, 0.0) == pytest.approx(1.0)
    ks = np.array([0.0, 1.0, 2.0])
    np.testing.assert_allclose(defect.phase_shift_derivative(ks), 4.0 / (4.0 + 4.0 * ks**2))


def test_phase_shift_depends_on_gamma_only():
    a, b = DeltaPrimeDefect(w0=2.0, w1=0.0), DeltaPrimeDefect(w0=4.0, w1=1.0)
    for k in MOMENTA:
        assert a.phase_shift(k) == pytest.approx(b.phase_shift(k), abs=1e-14)
        assert a.phase_shift_derivative(k) == pytest.approx(b.phase_shift_derivative(k), rel=1e-14)


def test_phase_shift_derivative_of_free_line():
    assert phase_shift_derivative(DeltaPrimeDefect(w0=0.0, w1=3.0), 1.0) == 0.0


@pytest.mark.parametrize("k", MOMENTA)
def test_poschl_teller_unitarity(k):
    amplitudes = amplitudes_poschl_teller(PoschlTellerDefect(epsilon=0.5), k)
    assert abs(amplitudes.t) ** 2 + abs(amplitudes.r_left) ** 2 == pytest.approx(1.0, abs=1e-12)


@pytest.mark.parametrize("epsilon", (0.5, 2.0))
@pytest.mark.parametrize("k", (0.3, 1.0, 2.7))
def test_poschl_teller_matches_transfer_matrix(epsilon, k):
    t, r = poschl_teller_amplitudes(epsilon, k)
    amplitudes = PoschlTellerDefect(epsilon).amplitudes(k)
    assert abs(amplitudes.t - t) < 1e-9
    assert abs(amplitudes.r_left - r) < 1e-9


def test_thin_poschl_teller_is_transparent():
    amplitudes = PoschlTellerDefect(epsilon=1e-6).amplitudes(1.0)
    assert abs(amplitudes.t - 1.0) < 1e-5


@pytest.mark.parametrize("k", (0.4, 1.3, 3.0 + 0.5j, 2.5j))
def test_closed_form_lattice_functions_agree_with_amplitudes(k):
    for model in (DeltaPrimeDefect(w0=3.0, w1=2.0), PoschlTellerDefect(epsilon=0.5)):
        closed = model.lattice_function(k, 1.0)
        generic = model.generic_lattice_function(k, 1.0)
        assert abs(closed - generic) <= 1e-9 * max(1.0, abs(closed))


def test_closed_form_derivative_matches_difference_quotient():
    model = PoschlTellerDefect(epsilon=0.5)
    for k in (0.4, 1.3, 2.0j):
        step = 1e-5
        fd = (model.lattice_function(k + step, 1.0) - model.lattice_function(k - step, 1.0)) / (2 * step)
        assert abs(model.lattice_derivative(k, 1.0) - fd) < 1e-7 * max(1.0, abs(fd))


def test_delta_prime_log_excess_matches_direct_evaluation():
    model = DeltaPrimeDefect(w0=3.0, w1=2.0)
    xi = np.array([0.0, 0.5, 3.0, 20.0])
    direct = [math.log(abs(model.lattice_function(1j * x, 1.0))) - x for x in xi]
    np.testing.assert_allclose(model.lattice_log_excess_imag(xi, 1.0), direct, rtol=1e-12, atol=1e-12)


def test_bound_states():
    assert bound_states(DeltaPrimeDefect(w0=3.0, w1=2.0)) == []
    model = PoschlTellerDefect(epsilon=0.5)
    states = bound_states(model)
    assert len(states) >= 1
    for state in states:
        assert 0 < state.kappa < 1 + model.tau
        assert abs(model.jost_denominator(1j * state.kappa)) < 1e-10


def test_build_model():
    model = build_model("poschl_teller", {"epsilon": 0.5})
    assert isinstance(model, PoschlTellerDefect)
    assert describe(model) == {"kind": "poschl_teller", "epsilon": 0.5}
    assert describe(build_model("delta_prime", {"w0": 3, "w1": 2})) == {"kind": "delta_prime", "w0": 3.0, "w1": 2.0}
    with pytest.raises(ModelNotSupportedException):
        build_model("square_well", {})
    with pytest.raises(InvalidParameterException):
        build_model("delta_prime", {"w0": 1.0})


def test_asymptotic_data():
    model = DeltaPrimeDefect(w0=3.0, w1=2.0)
    assert model.asymptotic_transmission == pytest.approx(-0.6)
    t = model.amplitudes(1e6 + 1e6j).t
    assert t == pytest.approx(-0.6, abs=1e-6)
    assert PoschlTellerDefect(0.5).amplitudes(200.0 + 50j).t == pytest.approx(1.0, abs=0.05)
    assert cmath.isfinite(PoschlTellerDefect(0.5).amplitudes(200.0 + 50j).t)


@pytest.mark.parametrize("model", (DeltaPrimeDefect(w0=3.0, w1=2.0), PoschlTellerDefect(epsilon=0.5)))
def test_unitarity_on_a_momentum_grid(model):
    for k in np.logspace(-3, math.log10(50.0), 100):
        amplitudes = model.amplitudes(float(k))
        assert abs(amplitudes.t) ** 2 + abs(amplitudes.r_right) ** 2 == pytest.approx(1.0, abs=1e-12)
        assert abs(amplitudes.t) ** 2 + abs(amplitudes.r_left) ** 2 == pytest.approx(1.0, abs=1e-12)


@pytest.mark.parametrize("model", (DeltaPrimeDefect(w0=3.0, w1=2.0), PoschlTellerDefect(epsilon=0.5)))
def test_reflection_symmetry_in_the_upper_half_plane(model):
    rng = np.random.default_rng(7)
    for k in rng.uniform(0.1, 5.0, 20) + 1j * rng.uniform(0.0, 2.0, 20):
        amplitudes, mirrored = model.amplitudes(k), model.amplitudes(-k.conjugate())
        for value, image in (
            (amplitudes.t, mirrored.t),
            (amplitudes.r_left, mirrored.r_left),
            (amplitudes.r_right, mirrored.r_right),
        ):
            assert abs(image - value.conjugate()) <= 1e-12 * max(1.0, abs(value))


@pytest.mark.parametrize("k", (0.05, 0.1, 0.2, 0.5, 1.0, 2.0, 7.0))
def test_phase_shift_double_angle(k):
    gamma = DeltaPrimeDefect(w0=3.0, w1=2.0).gamma
    expected = (4.0 * k / gamma) / (1.0 - 4.0 * k**2 / gamma**2)
    assert math.tan(2.0 * phase_shift(DeltaPrimeDefect(w0=3.0, w1=2.0), k)) == pytest.approx(expected, rel=1e-10)


@pytest.mark.parametrize("k", (1j, 1j * (1.0 + 1e-9), 0.01 + 0.99j, -1j * (1.0 - 1e-7)))
def test_poschl_teller_lattice_function_where_the_wronskian_vanishes(k):
    model = PoschlTellerDefect(epsilon=0.5)
    radius, points = 0.3, 64
    phases = [cmath.exp(2j * math.pi * j / points) for j in range(points)]
    values = [model.lattice_function(k + radius * phase, 1.0) for phase in phases]
    h = sum(values) / points
    dh = sum(value / phase for value, phase in zip(values, phases)) / (points * radius)
    assert abs(model.lattice_function(k, 1.0) - h) < 1e-11 * max(1.0, abs(h))
    assert abs(model.lattice_derivative(k, 1.0) - dh) < 1e-9 * max(1.0, abs(dh))
