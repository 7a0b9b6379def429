import math

import pytest

from combthermo.bands import CombSpec
from combthermo.exception import (
    AlphaTooCloseException,
    BranchPointException,
    InvalidParameterException,
    UnstableSpectrumException,
)
from combthermo.scattering import DeltaPrimeDefect
from combthermo.thermo import (
    Method,
    ThermoRequest,
    Tolerances,
    boltzmann,
    boltzmann_temperature_derivative,
    bound_state_term,
    delta_f,
    delta_f_massive,
    delta_f_massive_single_defect,
    delta_f_real_axis,
    delta_f_rotated,
    delta_f_single_defect,
    entropy,
    entropy_single_defect,
    phase_shift_integral,
    rotated_integrand,
    rotated_integrand_two_ray,
)


def test_boltzmann():
    assert boltzmann(1.0, 1.0) == pytest.approx(math.log(1.0 - math.exp(-1.0)), rel=1e-14)
    assert boltzmann(2.0, 2.0) == pytest.approx(-0.458675 * 2.0, rel=1e-5)
    assert boltzmann(1.3 + 0.0j, 0.7) == pytest.approx(boltzmann(1.3, 0.7), rel=1e-14)
    assert boltzmann(1e-7 + 1e-7j, 1.0) == pytest.approx(
        math.log(abs(1e-7 + 1e-7j)) + 1j * math.pi / 4, rel=1e-6
    )
    with pytest.raises(BranchPointException):
        boltzmann(0.0, 1.0)
    with pytest.raises(InvalidParameterException):
        boltzmann(1.0, 0.0)


@pytest.mark.parametrize("omega", (0.1, 1.0, 2.0 + 1.0j))
def test_boltzmann_temperature_derivative(omega):
    step = 1e-5
    fd = (boltzmann(omega, 1.0 + step) - boltzmann(omega, 1.0 - step)) / (2 * step)
    assert abs(boltzmann_temperature_derivative(omega, 1.0) - fd) < 1e-8


@pytest.mark.parametrize("method", (Method.REAL_AXIS, Method.ROTATED, Method.MATSUBARA))
@pytest.mark.parametrize("temperature", (0.5, 2.0))
def test_free_comb_is_a_black_body(free_comb, method, temperature):
    result = delta_f(ThermoRequest(free_comb, temperature, method=method))
    assert result.value == pytest.approx(-math.pi * temperature**2 / 6.0, rel=1e-7)


@pytest.mark.parametrize("temperature", (0.3, 1.0, 3.0, 5.0))
def test_rotated_ray_reproduces_real_axis(delta_prime_comb, temperature):
    tolerances = Tolerances(rel_tol=1e-10, abs_tol=1e-12)
    real = delta_f_real_axis(ThermoRequest(delta_prime_comb, temperature, method=Method.REAL_AXIS, tolerances=tolerances))
    rotated = delta_f_rotated(ThermoRequest(delta_prime_comb, temperature, tolerances=tolerances))
    assert rotated.value == pytest.approx(real.value, rel=1e-6)
    assert real.value < 0
    assert real.diagnostics["bands"] >= 1


def test_rotated_ray_reproduces_real_axis_for_kink_comb(poschl_teller_comb):
    real = delta_f_real_axis(ThermoRequest(poschl_teller_comb, 1.0, method=Method.REAL_AXIS))
    rotated = delta_f_rotated(ThermoRequest(poschl_teller_comb, 1.0, alpha=math.pi / 6))
    assert rotated.value == pytest.approx(real.value, rel=1e-6)


def test_rotation_angle_does_not_matter(delta_prime_comb):
    tolerances = Tolerances(rel_tol=1e-10, abs_tol=1e-13)
    values = [
        delta_f_rotated(ThermoRequest(delta_prime_comb, 1.0, alpha=alpha, tolerances=tolerances)).value
        for alpha in (math.pi / 6, math.pi / 4, math.pi / 3)
    ]
    assert values[0] == pytest.approx(values[1], rel=1e-8)
    assert values[2] == pytest.approx(values[1], rel=1e-8)


def test_rotation_angle_limits(delta_prime_comb):
    with pytest.raises(AlphaTooCloseException):
        delta_f_rotated(ThermoRequest(delta_prime_comb, 1.0, alpha=0.01))
    with pytest.raises(InvalidParameterException):
        ThermoRequest(delta_prime_comb, 1.0, alpha=2.0)


@pytest.mark.parametrize("xi", (0.2, 1.7, 6.0))
def test_folded_and_two_ray_integrands_agree(delta_prime_comb, xi):
    folded = rotated_integrand(delta_prime_comb, xi, math.pi / 4, 1.0)
    two_ray = rotated_integrand_two_ray(delta_prime_comb, xi, math.pi / 4, 1.0)
    assert folded == pytest.approx(two_ray, rel=1e-12, abs=1e-15)


def test_free_energy_decreases_with_temperature(weak_delta_prime_comb):
    cold = delta_f(ThermoRequest(weak_delta_prime_comb, 1.0))
    hot = delta_f(ThermoRequest(weak_delta_prime_comb, 5.0))
    assert hot.value < cold.value < 0


def test_request_validation(delta_prime_comb):
    with pytest.raises(InvalidParameterException):
        ThermoRequest(delta_prime_comb, 0.0)
    with pytest.raises(InvalidParameterException):
        ThermoRequest(delta_prime_comb, 1.0, mass=-1.0)
    with pytest.raises(InvalidParameterException):
        Tolerances(rel_tol=1e-14)


def test_single_defect_paths_agree(tight):
    defect = DeltaPrimeDefect(w0=2.0, w1=0.0)
    by_gamma = delta_f_single_defect(defect, 1.0, tight)
    by_phase = phase_shift_integral(lambda k: float(defect.phase_shift_derivative(k)), 1.0, tight)
    assert by_gamma.value == pytest.approx(by_phase.value, rel=1e-10)
    assert by_gamma.value < 0


def test_single_defect_depends_on_gamma_only():
    a = delta_f_single_defect(DeltaPrimeDefect(w0=2.0, w1=0.0), 1.0)
    b = delta_f_single_defect(DeltaPrimeDefect(w0=4.0, w1=1.0), 1.0)
    assert a.value == b.value


def test_single_defect_limits():
    cold = delta_f_single_defect(DeltaPrimeDefect(w0=2.0, w1=0.0), 1e-3)
    assert abs(cold.value) < 1e-5
    with pytest.raises(InvalidParameterException):
        delta_f_single_defect(DeltaPrimeDefect(w0=0.0, w1=1.0), 1.0)


def test_single_defect_entropy(tight):
    defect = DeltaPrimeDefect(w0=2.0, w1=0.0)
    step = 1e-3
    upper = delta_f_single_defect(defect, 1.0 + step, tight).value
    lower = delta_f_single_defect(defect, 1.0 - step, tight).value
    value = entropy_single_defect(defect, 1.0, tight).value
    assert value > 0
    assert value == pytest.approx(-(upper - lower) / (2 * step), rel=1e-6)


@pytest.mark.parametrize("method", (Method.REAL_AXIS, Method.ROTATED))
@pytest.mark.parametrize("temperature", (0.5, 2.0))
def test_entropy_is_positive_and_consistent(weak_delta_prime_comb, method, temperature):
    tolerances = Tolerances(rel_tol=1e-10, abs_tol=1e-12)
    result = entropy(ThermoRequest(weak_delta_prime_comb, temperature, method=method, tolerances=tolerances), cross_check=True)
    assert result.value > 0
    assert result.diagnostics["fd_agrees"]


@pytest.mark.parametrize("w0, w1", ((0.01, 2.0), (3.0, 2.0), (2.0, 0.0)))
def test_single_defect_entropy_is_positive(w0, w1):
    defect = DeltaPrimeDefect(w0=w0, w1=w1)
    for temperature in (0.1, 0.5, 1.0, 2.5, 5.0):
        assert entropy_single_defect(defect, temperature).value > 0


@pytest.mark.parametrize("w0, w1", ((0.1, 5.0), (8.0, 0.0), (3.0, 2.0)))
def test_comb_entropy_is_positive(w0, w1):
    comb = CombSpec(DeltaPrimeDefect(w0=w0, w1=w1), a=1.0)
    for temperature in (0.2, 1.0, 5.0):
        assert entropy(ThermoRequest(comb, temperature)).value > 0


def test_entropy_of_kink_comb_is_positive(poschl_teller_comb):
    assert entropy(ThermoRequest(poschl_teller_comb, 0.5, method=Method.REAL_AXIS)).value > 0


def test_bound_state_term():
    value = bound_state_term(0.5, 1.0, 1.0)
    assert value == pytest.approx(math.log(1.0 - math.exp(-math.sqrt(0.75))), rel=1e-14)
    assert value == pytest.approx(-0.5458, abs=1e-3)
    with pytest.raises(UnstableSpectrumException):
        bound_state_term(1.0, 1.0, 1.0)


def test_small_mass_reduces_to_massless(delta_prime_comb):
    massless = delta_f(ThermoRequest(delta_prime_comb, 1.0))
    massive = delta_f(ThermoRequest(delta_prime_comb, 1.0, mass=1e-6))
    assert massive.value == pytest.approx(massless.value, rel=1e-6)
    assert massive.diagnostics["bound"] == 0.0


def test_mass_suppresses_free_energy(delta_prime_comb):
    massless = delta_f(ThermoRequest(delta_prime_comb, 1.0))
    massive = delta_f_massive(ThermoRequest(delta_prime_comb, 1.0, mass=1.0))
    assert massive.value < 0
    assert abs(massive.value) < abs(massless.value)


@pytest.mark.parametrize("method", (Method.REAL_AXIS, Method.MATSUBARA))
def test_massive_requests_need_the_rotated_ray(delta_prime_comb, method):
    with pytest.raises(InvalidParameterException, match="rotated when m > 0"):
        delta_f(ThermoRequest(delta_prime_comb, 1.0, mass=1.0, method=method))


def test_massive_results_are_labelled(delta_prime_comb):
    request = ThermoRequest(delta_prime_comb, 1.0, mass=1.0)
    assert delta_f(request).method == "massive"
    result = entropy(request)
    assert result.method == "massive_fd"
    assert math.isfinite(result.value)


def test_kink_comb_levels(poschl_teller_comb):
    with pytest.raises(UnstableSpectrumException):
        delta_f_massive(ThermoRequest(poschl_teller_comb, 1.0, mass=0.1))
    result = delta_f_massive(ThermoRequest(poschl_teller_comb, 1.0, mass=6.0))
    assert result.diagnostics["imaginary_bands"] == 1
    assert result.diagnostics["bound"] < 0
    assert math.isfinite(result.value)


def test_massive_single_defect():
    defect = DeltaPrimeDefect(w0=2.0, w1=0.0)
    massless = delta_f_single_defect(defect, 1.0)
    massive = delta_f_massive_single_defect(defect, 1e-8, 1.0)
    assert massive.value == pytest.approx(massless.value, rel=1e-6)
    assert abs(delta_f_massive_single_defect(defect, 2.0, 1.0).value) < abs(massless.value)
