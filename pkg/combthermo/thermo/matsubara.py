import logging
import math
from typing import Final, Optional

import numpy as np

from combthermo.bands import AsymptoticLattice, Lattice
from combthermo.const import IMAGINARY_AXIS_TOLERANCE, MATSUBARA_INITIAL_TERMS, MATSUBARA_MAX_TERMS
from combthermo.exception import (
    ImaginaryAxisSpectrumException,
    InvalidParameterException,
    SumNotConvergedException,
)
from combthermo.numerics import QuadratureSpec, integrate_adaptive
from combthermo.thermo.models import Method, Tolerances, ThermoRequest, ThermoResult
from combthermo.thermo.rotated import delta_f_rotated
from combthermo.thermo.single import delta_f_single_defect, point_defect

logger: Final[logging.Logger] = logging.getLogger(__name__)


def matsubara_frequencies(temperature: float, terms: int) -> np.ndarray:
    """xi_l = 2 pi T l, l = 0 .. terms - 1."""
    return 2.0 * math.pi * temperature * np.arange(terms, dtype=float)


def regulator(comb: Lattice) -> float:
    return 2.0 / comb.a + 2.0 * abs(comb.asymptotic_strength)


def _point_pair_excess(comb: Lattice, xi: np.ndarray) -> np.ndarray:
    """log(|h| / |h^asym|) - log(1 + gamma_eff / (2 xi + c)), without cancelling the common 1/(2 xi)."""
    strength, shift = comb.asymptotic_strength, regulator(comb)
    ratio = comb.ratio_imag(xi)
    pair = strength / (2.0 * xi + shift)
    far = 2.0 * xi * comb.a >= 1.0
    safe = np.where(far, xi, 1.0)
    # r - p = (gamma c + rho (2 xi + c)) / (2 xi (2 xi + c)) with rho = 2 xi r - gamma
    difference = np.where(
        far,
        (strength * shift + comb.ratio_remainder_imag(xi) * (2.0 * safe + shift)) / (2.0 * safe * (2.0 * safe + shift)),
        ratio - pair,
    )
    return np.log1p(difference / (1.0 + pair))


def _arccosh_difference(log_h: np.ndarray, log_background: np.ndarray, log_ratio: np.ndarray) -> np.ndarray:
    """
    Difference of arccosh(e^L) - L = log(1 + s), s = sqrt(1 - e^{-2L}), between the comb and its background.

    s1 - s2 is formed as (e^{-2 L2} - e^{-2 L1}) / (s1 + s2).
    """
    s_comb = np.sqrt(-np.expm1(-2.0 * log_h))
    s_background = np.sqrt(-np.expm1(-2.0 * log_background))
    clamped = (log_h == 0.0) | (log_background == 0.0)
    step = np.where(clamped, log_h - log_background, log_ratio)
    total = s_comb + s_background
    with np.errstate(divide="ignore", invalid="ignore"):
        gap = np.where(
            total > 0,
            -np.exp(-2.0 * log_background) * np.expm1(-2.0 * step) / np.where(total > 0, total, 1.0),
            0.0,
        )
    return np.log1p(gap / (1.0 + s_background))


def subtracted_log(comb: Lattice, xi: np.ndarray) -> np.ndarray:
    """
    Phi(xi): theta-averaged log f_theta(i xi) / f^asym_theta(i xi) minus the point-pair term.

    The theta average of log|cos(theta) - h| is arccosh|h| - log 2; both lattices share the
    xi*a growth, which is cancelled before it is formed. Every difference of nearly equal terms
    is rewritten in closed form, so Phi keeps its relative accuracy as it decays like 1/xi^2.

    Raises:
        ImaginaryAxisSpectrumException: |h_V(i xi)| <= 1 somewhere (spectrum on the imaginary axis).
    """
    xi = np.atleast_1d(np.asarray(xi, dtype=float))
    log_h = xi * comb.a + comb.log_abs_h_imag_excess(xi)
    inside = ~(log_h >= -IMAGINARY_AXIS_TOLERANCE)
    if np.any(inside):
        bad = int(np.argmax(inside))
        raise ImaginaryAxisSpectrumException(float(xi[bad]), float(np.exp(log_h[bad])))
    log_background = np.maximum(xi * comb.a + comb.asymptotic().log_abs_h_imag_excess(xi), 0.0)
    log_ratio = np.log1p(comb.ratio_imag(xi))
    return _point_pair_excess(comb, xi) + _arccosh_difference(np.maximum(log_h, 0.0), log_background, log_ratio)


def _phi(comb: Lattice, xi: float) -> float:
    return float(subtracted_log(comb, np.array([xi]))[0])


def _half_line(comb: Lattice, start: float, spec: QuadratureSpec):
    """integral_start^oo Phi, mapped to (0, 1] by xi = start / u."""
    if start <= 0:
        raise InvalidParameterException("start", start, "start > 0")
    return integrate_adaptive(lambda u: _phi(comb, start / u) * start / (u * u), (0.0, 1.0), spec)


def free_energy_matsubara(req: ThermoRequest) -> ThermoResult:
    """
    F_sub = T sum'_l Phi(xi_l), the l = 0 term halved.

    The sum is extended by doubling until two consecutive estimates agree within
    rel_tol*|F| + abs_tol; the remainder is closed by the midpoint integral
    (1/2 pi) integral from xi_L + pi T to infinity.

    Raises:
        SumNotConvergedException: more than 10^6 terms needed.
        ImaginaryAxisSpectrumException: |h_V(i xi)| <= 1 on the imaginary axis.
    """
    comb, temperature = req.lattice, req.temperature
    spec = req.tolerances.quadrature()
    terms = MATSUBARA_INITIAL_TERMS
    previous: Optional[float] = None
    while True:
        xi = matsubara_frequencies(temperature, terms)
        values = subtracted_log(comb, xi)
        partial = temperature * (float(np.sum(values)) - 0.5 * float(values[0]))
        tail = _half_line(comb, float(xi[-1]) + math.pi * temperature, spec)
        value = partial + tail.value / (2.0 * math.pi)
        if previous is not None:
            change = abs(value - previous)
            if change <= req.tolerances.rel_tol * abs(value) + req.tolerances.abs_tol:
                break
            if terms >= MATSUBARA_MAX_TERMS:
                raise SumNotConvergedException(terms, change)
        previous = value
        terms *= 2

    logger.debug(f"F_sub={value:.12g} with {terms} terms", extra={"method": "matsubara", "T": temperature})
    return ThermoResult(
        value=value,
        err_estimate=change + tail.err_estimate / (2.0 * math.pi),
        method=Method.MATSUBARA.value,
        diagnostics={"terms": terms, "panels": tail.panels, "subtracted": True},
    )


def vacuum_energy(comb: Lattice, tolerances: Optional[Tolerances] = None) -> ThermoResult:
    """E0_sub = (1/2 pi) integral_0^oo Phi(xi) d xi, the T -> 0 limit of F_sub."""
    spec = (tolerances or Tolerances()).quadrature()
    split = regulator(comb)
    head = integrate_adaptive(lambda xi: _phi(comb, xi), (0.0, split), spec)
    tail = _half_line(comb, split, spec)
    return ThermoResult(
        value=(head.value + tail.value) / (2.0 * math.pi),
        err_estimate=(head.err_estimate + tail.err_estimate) / (2.0 * math.pi),
        method="vacuum",
        diagnostics={"panels": head.panels + tail.panels, "subtracted": True},
    )


def _background_free_energy(req: ThermoRequest, background: AsymptoticLattice) -> ThermoResult:
    if abs(abs(background.t_inf) - 1.0) == 0:
        # |t_inf| = 1: the free comb, one-dimensional black body per cell
        return ThermoResult(-math.pi * background.a * req.temperature**2 / 6.0, 0.0, "black_body")
    return delta_f_rotated(req.on_lattice(background).with_method(Method.ROTATED))


def delta_f_matsubara(req: ThermoRequest, vacuum: Optional[ThermoResult] = None) -> ThermoResult:
    """
    Thermal free energy assembled from the subtracted Matsubara sum:
    F_sub - E0_sub + dF[asymptotic lattice] + dF_point(gamma_eff + c) - dF_point(c).
    """
    comb = req.lattice
    subtracted = free_energy_matsubara(req)
    vacuum = vacuum or vacuum_energy(comb, req.tolerances)
    background = _background_free_energy(req, comb.asymptotic())

    strength, shift = comb.asymptotic_strength, regulator(comb)
    points = 0.0, 0.0
    if strength != 0:
        upper = delta_f_single_defect(point_defect(strength + shift), req.temperature, req.tolerances)
        lower = delta_f_single_defect(point_defect(shift), req.temperature, req.tolerances)
        points = upper.value - lower.value, upper.err_estimate + lower.err_estimate

    value = subtracted.value - vacuum.value + background.value + points[0]
    err_estimate = subtracted.err_estimate + vacuum.err_estimate + background.err_estimate + points[1]
    return ThermoResult(
        value=value,
        err_estimate=err_estimate,
        method=Method.MATSUBARA.value,
        diagnostics={
            "f_sub": subtracted.value,
            "e0_sub": vacuum.value,
            "background": background.value,
            "point_pair": points[0],
            "terms": subtracted.diagnostics["terms"],
        },
    )
