import cmath
import logging
import math
from typing import Callable, Final, Optional

from combthermo.bands import Lattice
from combthermo.const import ALPHA_MARGIN, BRANCH_CUT_TOLERANCE, TAIL_SAFETY
from combthermo.exception import (
    AlphaTooCloseException,
    BranchCutException,
    TruncationUnreachableException,
)
from combthermo.numerics import integrate_adaptive, tail_cutoff
from combthermo.thermo.boltzmann import boltzmann, boltzmann_temperature_derivative
from combthermo.thermo.models import Method, ThermoRequest, ThermoResult

logger: Final[logging.Logger] = logging.getLogger(__name__)

Weight = Callable[[complex, float], complex]

# doublings tried when the branch side has to be read off further along the ray
_MAX_DOUBLINGS = 60
_SIDE_RESOLUTION = 1e-8


def check_alpha(alpha: float) -> None:
    if not ALPHA_MARGIN <= alpha <= math.pi / 2 - ALPHA_MARGIN:
        raise AlphaTooCloseException(alpha, ALPHA_MARGIN)


def _further_along_ray(
    comb: Lattice, xi: float, direction: complex, accept: Callable[[complex], bool]
) -> Optional[float]:
    """First xi * 2^j (j >= 1) on the ray where `accept(h)` holds."""
    xi_far = xi
    for _ in range(_MAX_DOUBLINGS):
        xi_far *= 2.0
        if xi_far * comb.a > math.pi:
            return None
        if accept(comb.h(xi_far * direction)):
            return xi_far
    return None


def lattice_kernel(comb: Lattice, xi: float, alpha: float) -> complex:
    """
    D_V(k) = -d_xi h_V / sqrt(h_V^2 - 1) at k = xi e^{i alpha}.

    The root is sqrt(h - 1) sqrt(h + 1) (principal factors, cut exactly on h in [-1, 1]); where
    h sits on that segment to machine precision the side is taken from larger xi on the same ray.

    Raises:
        BranchCutException: the side of the cut cannot be resolved.
    """
    direction = cmath.exp(1j * alpha)
    k = xi * direction
    h = comb.h(k)
    dh_xi = direction * comb.dh(k)

    if (h - 1.0) * (h + 1.0) == 0:
        # h = +-1 exactly: D_V is regular here, continue it from the nearest resolved point
        xi_far = _further_along_ray(
            comb, xi, direction, lambda value: abs((value - 1.0) * (value + 1.0)) > _SIDE_RESOLUTION
        )
        if xi_far is None:
            raise BranchCutException(k, h)
        return lattice_kernel(comb, xi_far, alpha)

    if abs(h.real) < 1.0 and abs(h.imag) <= BRANCH_CUT_TOLERANCE * max(1.0, abs(h)):
        xi_far = _further_along_ray(
            comb, xi, direction, lambda value: abs(value.imag) > _SIDE_RESOLUTION * max(1.0, abs(value))
        )
        if xi_far is None:
            raise BranchCutException(k, h)
        side = math.copysign(1.0, comb.h(xi_far * direction).imag)
        root = 1j * side * math.sqrt((1.0 - h.real) * (1.0 + h.real))
    else:
        root = cmath.sqrt(h - 1.0) * cmath.sqrt(h + 1.0)
    return -dh_xi / root


def _dispersion(k: complex, mass: float) -> complex:
    return k if mass == 0 else cmath.sqrt(k * k + mass * mass)


def rotated_integrand(
    comb: Lattice,
    xi: float,
    alpha: float,
    temperature: float,
    mass: float = 0.0,
    weight: Weight = boltzmann,
) -> float:
    """(1/pi) Im[B(z, T) D_V(xi e^{i alpha})], z = sqrt(k^2 + m^2); the two rays folded by reflection."""
    k = xi * cmath.exp(1j * alpha)
    return (weight(_dispersion(k, mass), temperature) * lattice_kernel(comb, xi, alpha)).imag / math.pi


def rotated_integrand_two_ray(
    comb: Lattice,
    xi: float,
    alpha: float,
    temperature: float,
    mass: float = 0.0,
    weight: Weight = boltzmann,
) -> float:
    """(1/2 pi i)[B(k+) D_V(k+) - B(k-) D_V(k-)], k+- = xi e^{+-i alpha}, without the reflection shortcut."""
    upper = weight(_dispersion(xi * cmath.exp(1j * alpha), mass), temperature) * lattice_kernel(comb, xi, alpha)
    lower = weight(_dispersion(xi * cmath.exp(-1j * alpha), mass), temperature) * lattice_kernel(comb, xi, -alpha)
    return ((upper - lower) / (2j * math.pi)).real


def ray_integral(req: ThermoRequest, weight: Weight = boltzmann, sign: float = 1.0) -> ThermoResult:
    """sign * integral of the rotated integrand over (0, xi_cut], split into chunks of width pi/a."""
    check_alpha(req.alpha)
    temperature, alpha, comb = req.temperature, req.alpha, req.lattice
    spec = req.tolerances.quadrature()
    scale = temperature / math.cos(alpha)
    xi_cut = tail_cutoff(0.0, scale, spec.abs_tol)

    def tail_bound(cut: float) -> float:
        kernel = abs(lattice_kernel(comb, cut, alpha))
        return kernel * temperature * scale * math.exp(-cut / scale) / math.pi

    if req.xi_cut is not None and req.xi_cut < xi_cut:
        bound = tail_bound(req.xi_cut)
        if bound > spec.abs_tol:
            raise TruncationUnreachableException(req.xi_cut, bound, spec.abs_tol)
        xi_cut = req.xi_cut
    truncation_bound = tail_bound(xi_cut) if xi_cut == req.xi_cut else scale * spec.abs_tol * math.exp(-TAIL_SAFETY)

    def integrand(xi: float) -> float:
        return rotated_integrand(comb, xi, alpha, temperature, req.mass, weight)

    chunk = math.pi / comb.a
    chunks = max(1, math.ceil(xi_cut / chunk))
    value, err_estimate, panels = 0.0, 0.0, 0
    for i in range(chunks):
        result = integrate_adaptive(integrand, (i * chunk, min((i + 1) * chunk, xi_cut)), spec)
        value += result.value
        err_estimate += result.err_estimate
        panels += result.panels

    logger.debug(f"alpha={alpha:.4f}: {value:.12g} ({panels} panels)", extra={"method": "rotated", "T": temperature})
    return ThermoResult(
        value=sign * value,
        err_estimate=err_estimate,
        method=Method.ROTATED.value,
        diagnostics={"panels": panels, "truncation_bound": truncation_bound, "xi_cut": xi_cut, "alpha": alpha},
    )


def delta_f_rotated(req: ThermoRequest) -> ThermoResult:
    """
    Thermal free energy per cell from the rotated ray k = xi e^{i alpha}.

    Raises:
        AlphaTooCloseException: alpha within 0.02 of 0 or pi/2.
    """
    return ray_integral(req)


def entropy_rotated(req: ThermoRequest) -> ThermoResult:
    """S = -dF/dT with dB/dT inside the ray integral."""
    return ray_integral(req, weight=boltzmann_temperature_derivative, sign=-1.0)
