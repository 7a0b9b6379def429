import logging
from typing import Final

from combthermo.thermo.free_energy import delta_f
from combthermo.thermo.massive import MASSIVE_METHOD
from combthermo.thermo.models import Method, ThermoRequest, ThermoResult
from combthermo.thermo.real_axis import entropy_real_axis
from combthermo.thermo.rotated import entropy_rotated

logger: Final[logging.Logger] = logging.getLogger(__name__)

# agreement required between the analytic entropy and the central difference
_FD_REL_TOL = 1e-5
_FD_ABS_TOL = 1e-8


def finite_difference_step(temperature: float) -> float:
    return max(1e-3 * temperature, 1e-6)


def entropy_finite_difference(req: ThermoRequest) -> ThermoResult:
    """-(F(T + h) - F(T - h)) / 2h."""
    step = finite_difference_step(req.temperature)
    upper = delta_f(req.at_temperature(req.temperature + step))
    lower = delta_f(req.at_temperature(req.temperature - step))
    return ThermoResult(
        value=-(upper.value - lower.value) / (2.0 * step),
        err_estimate=(upper.err_estimate + lower.err_estimate) / (2.0 * step),
        method=f"{MASSIVE_METHOD if req.mass > 0 else req.method.value}_fd",
        diagnostics={"step": step},
    )


def entropy(req: ThermoRequest, cross_check: bool = False) -> ThermoResult:
    """
    S = -dF/dT per unit cell.

    Massless real-axis and rotated requests put dB/dT inside the integral; Matsubara and massive
    requests fall back to the central difference. With `cross_check` the central difference is
    evaluated as well and reported in the diagnostics.
    """
    if req.mass == 0 and req.method == Method.REAL_AXIS:
        result = entropy_real_axis(req)
    elif req.mass == 0 and req.method == Method.ROTATED:
        result = entropy_rotated(req)
    else:
        return entropy_finite_difference(req)

    if not cross_check:
        return result
    check = entropy_finite_difference(req)
    difference = abs(result.value - check.value)
    agrees = difference <= max(_FD_REL_TOL * abs(result.value), _FD_ABS_TOL)
    if not agrees:
        logger.warning(
            f"entropy: analytic {result.value:.10g} vs difference {check.value:.10g}",
            extra={"method": req.method.value, "T": req.temperature},
        )
    return ThermoResult(
        result.value,
        result.err_estimate,
        result.method,
        {**result.diagnostics, "fd_value": check.value, "fd_difference": difference, "fd_agrees": agrees},
    )
