import logging
import math
from typing import Final, Optional

from combthermo.bands import imaginary_bands
from combthermo.const import IMAGINARY_SCAN_MARGIN
from combthermo.exception import InvalidParameterException, UnstableSpectrumException
from combthermo.scattering import DeltaPrimeDefect
from combthermo.thermo.boltzmann import boltzmann
from combthermo.thermo.models import Tolerances, ThermoRequest, ThermoResult
from combthermo.thermo.real_axis import band_integral
from combthermo.thermo.rotated import ray_integral
from combthermo.thermo.single import phase_shift_integral

logger: Final[logging.Logger] = logging.getLogger(__name__)

MASSIVE_METHOD: Final[str] = "massive"


def bound_state_term(kappa: float, mass: float, temperature: float) -> float:
    """T log(1 - exp(-sqrt(m^2 - kappa^2)/T)) for a level at k = i kappa."""
    if not kappa < mass:
        raise UnstableSpectrumException(kappa, mass)
    return boltzmann(math.sqrt((mass - kappa) * (mass + kappa)), temperature)


def delta_f_massive(req: ThermoRequest) -> ThermoResult:
    """
    Thermal free energy of a field of mass m: imaginary-axis bands (levels with k^2 < 0)
    weighted by B(sqrt(m^2 - kappa^2)) plus the rotated ray with B(sqrt(k^2 + m^2)).

    Raises:
        UnstableSpectrumException: an imaginary-axis band reaches kappa >= m.
    """
    mass, comb, temperature = req.mass, req.lattice, req.temperature
    if not mass > 0:
        raise InvalidParameterException("mass", mass, "m > 0")
    spec = req.tolerances.quadrature()

    def h(kappa: float) -> float:
        return comb.h(1j * kappa).real

    def dh(kappa: float) -> float:
        return (1j * comb.dh(1j * kappa)).real

    bound, bound_err = 0.0, 0.0
    bands = imaginary_bands(comb, mass + IMAGINARY_SCAN_MARGIN / comb.a)
    for band in bands:
        if band.kappa_max >= mass or not band.closed:
            raise UnstableSpectrumException(band.kappa_max, mass)
        value, err, _ = band_integral(
            h,
            dh,
            (band.kappa_min, band.kappa_max),
            lambda kappa: boltzmann(math.sqrt((mass - kappa) * (mass + kappa)), temperature),
            spec,
        )
        bound += value
        bound_err += err

    continuum = ray_integral(req)
    logger.debug(f"massive m={mass:g} T={temperature:g}: bound={bound:.12g} continuum={continuum.value:.12g}")
    return ThermoResult(
        value=bound + continuum.value,
        err_estimate=bound_err + continuum.err_estimate,
        method=MASSIVE_METHOD,
        diagnostics={**continuum.diagnostics, "bound": bound, "imaginary_bands": len(bands), "mass": mass},
    )


def delta_f_massive_single_defect(
    defect: DeltaPrimeDefect, mass: float, temperature: float, tolerances: Optional[Tolerances] = None
) -> ThermoResult:
    """(1/pi) integral d delta/dk B(sqrt(k^2 + m^2)) dk; a delta-delta' defect with w0 >= 0 has no levels."""
    if not mass > 0:
        raise InvalidParameterException("mass", mass, "m > 0")
    return phase_shift_integral(
        lambda k: float(defect.phase_shift_derivative(k)),
        temperature,
        tolerances,
        mass=mass,
        width=defect.gamma or None,
    )
