import math
from typing import Callable, Optional

from combthermo.exception import InvalidParameterException
from combthermo.numerics import ExpTail, integrate_adaptive, tail_cutoff
from combthermo.scattering import DeltaPrimeDefect
from combthermo.thermo.boltzmann import boltzmann, boltzmann_temperature_derivative
from combthermo.thermo.models import Tolerances, ThermoResult

PhaseDerivative = Callable[[float], float]


def point_defect(gamma: float) -> DeltaPrimeDefect:
    """The pure delta with the same gamma (and so the same single-defect thermodynamics)."""
    return DeltaPrimeDefect(w0=gamma, w1=0.0)


def phase_shift_integral(
    phase_derivative: PhaseDerivative,
    temperature: float,
    tolerances: Optional[Tolerances] = None,
    weight: Callable[[float, float], float] = boltzmann,
    mass: float = 0.0,
    width: Optional[float] = None,
) -> ThermoResult:
    """
    (1/pi) integral_0^oo d delta/dk w(omega(k), T) dk with omega = sqrt(k^2 + m^2).

    `width` is the scale of the phase-shift derivative near k = 0; the interval is split there.
    """
    if not temperature > 0:
        raise InvalidParameterException("T", temperature, "T > 0")
    spec = (tolerances or Tolerances()).quadrature()
    cut = tail_cutoff(0.0, temperature, spec.abs_tol)

    def integrand(k: float) -> float:
        omega = math.hypot(k, mass) if mass else k
        return phase_derivative(k) * weight(omega, temperature) / math.pi

    split = min(cut, 5.0 * width) if width else cut
    head = integrate_adaptive(integrand, (0.0, split), spec)
    tail = integrate_adaptive(integrand, (split, math.inf), spec.with_transform(ExpTail(temperature)))
    return ThermoResult(
        value=head.value + tail.value,
        err_estimate=head.err_estimate + tail.err_estimate,
        method="phase_shift",
        diagnostics={"panels": head.panels + tail.panels, "truncation_bound": tail.truncation_bound},
    )


def _gamma_kernel(defect: DeltaPrimeDefect) -> PhaseDerivative:
    if not defect.w0 > 0:
        raise InvalidParameterException("w0", defect.w0, "w0 > 0")
    gamma = defect.gamma
    return lambda k: 2.0 * gamma / (gamma * gamma + 4.0 * k * k)


def delta_f_single_defect(
    defect: DeltaPrimeDefect, temperature: float, tolerances: Optional[Tolerances] = None
) -> ThermoResult:
    """Thermal free energy of one delta-delta' defect; depends on (w0, w1) only through gamma."""
    return phase_shift_integral(_gamma_kernel(defect), temperature, tolerances, width=defect.gamma)


def entropy_single_defect(
    defect: DeltaPrimeDefect, temperature: float, tolerances: Optional[Tolerances] = None
) -> ThermoResult:
    result = phase_shift_integral(
        _gamma_kernel(defect),
        temperature,
        tolerances,
        weight=boltzmann_temperature_derivative,
        width=defect.gamma,
    )
    return ThermoResult(-result.value, result.err_estimate, result.method, result.diagnostics)
