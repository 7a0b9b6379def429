import logging
import math
from typing import Callable, Final, Tuple

from combthermo.bands import band_edges
from combthermo.const import EDGE_LINEARIZATION
from combthermo.exception import TruncationUnreachableException
from combthermo.numerics import QuadratureSpec, SqrtEdge, integrate_adaptive, tail_cutoff
from combthermo.thermo.boltzmann import boltzmann, boltzmann_temperature_derivative
from combthermo.thermo.models import Method, ThermoRequest, ThermoResult

logger: Final[logging.Logger] = logging.getLogger(__name__)

RealFunction = Callable[[float], float]


def state_density(h: RealFunction, dh: RealFunction, x: float, lo: float, hi: float) -> float:
    """|dh/dx| / (pi sqrt(1 - h^2)) inside [lo, hi], linearised where 1 - |h| is lost to round-off."""
    value, slope = h(x), abs(dh(x))
    gap = (1.0 - value) * (1.0 + value)
    if gap > EDGE_LINEARIZATION:
        return slope / (math.pi * math.sqrt(gap))
    edge = lo if x - lo <= hi - x else hi
    delta = abs(x - edge)
    if delta <= 0:
        return 0.0
    # 1 - h^2 ~ 2 |h'| delta next to a simple edge, |h'| delta where h' vanishes at the edge
    factor = 1.0 if abs(dh(edge)) < 0.5 * slope else 2.0
    return math.sqrt(slope / (factor * delta)) / math.pi


def band_integral(
    h: RealFunction,
    dh: RealFunction,
    band: Tuple[float, float],
    weight: RealFunction,
    spec: QuadratureSpec,
) -> Tuple[float, float, int]:
    """Integral of state_density * weight over one band, with s^2 substitutions at both edges."""
    lo, hi = band
    mid = 0.5 * (lo + hi)

    def integrand(x: float) -> float:
        return state_density(h, dh, x, lo, hi) * weight(x)

    lower = integrate_adaptive(integrand, (lo, mid), spec.with_transform(SqrtEdge(lo, "lower")))
    upper = integrate_adaptive(integrand, (mid, hi), spec.with_transform(SqrtEdge(hi, "upper")))
    return lower.value + upper.value, lower.err_estimate + upper.err_estimate, lower.panels + upper.panels


def real_axis_integral(req: ThermoRequest, weight: Callable[[float, float], float], sign: float = 1.0) -> ThermoResult:
    comb, temperature = req.lattice, req.temperature
    spec = req.tolerances.quadrature()
    omega_cut = tail_cutoff(0.0, temperature, spec.abs_tol)

    def tail_bound(cut: float) -> float:
        # free-comb density a/pi against the Boltzmann tail
        return comb.a / math.pi * temperature * (temperature + cut) * math.exp(-cut / temperature)

    if req.omega_cut is not None and req.omega_cut < omega_cut:
        bound = tail_bound(req.omega_cut)
        if bound > spec.abs_tol:
            raise TruncationUnreachableException(req.omega_cut, bound, spec.abs_tol)
        omega_cut = req.omega_cut

    bands = band_edges(comb, omega_cut)
    value, err_estimate, panels = 0.0, 0.0, 0
    for band in bands:
        band_value, band_err, band_panels = band_integral(
            comb.h_real,
            comb.dh_real,
            (band.omega_min, band.omega_max),
            lambda omega: weight(omega, temperature),
            spec,
        )
        value += band_value
        err_estimate += band_err
        panels += band_panels

    logger.debug(f"{len(bands)} bands, {value:.12g} ({panels} panels)", extra={"method": "real_axis", "T": temperature})
    return ThermoResult(
        value=sign * value,
        err_estimate=err_estimate,
        method=Method.REAL_AXIS.value,
        diagnostics={
            "panels": panels,
            "bands": len(bands),
            "omega_cut": omega_cut,
            "truncation_bound": tail_bound(omega_cut),
        },
    )


def delta_f_real_axis(req: ThermoRequest) -> ThermoResult:
    """Sum over bands of the integral of DOS(omega) B(omega, T), per unit cell."""
    return real_axis_integral(req, boltzmann)


def entropy_real_axis(req: ThermoRequest) -> ThermoResult:
    return real_axis_integral(req, boltzmann_temperature_derivative, sign=-1.0)
