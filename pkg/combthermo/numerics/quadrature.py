import logging
import math
from dataclasses import dataclass, field
from typing import Callable, Final, Literal, Optional, Tuple, Union

import numpy as np
from scipy.integrate import quad

from combthermo.const import DEFAULT_ABS_TOL, DEFAULT_REL_TOL, TAIL_SAFETY
from combthermo.exception import InvalidParameterException, PanelsExhaustedException

logger: Final[logging.Logger] = logging.getLogger(__name__)

# QUADPACK refuses relative tolerances below ~50 machine epsilons
_MIN_QUADPACK_REL_TOL: Final[float] = 50.0 * np.finfo(float).eps


@dataclass(frozen=True)
class SqrtEdge:
    """x = edge + s**2 (side="lower") or x = edge - s**2 (side="upper")."""

    edge: float
    side: Literal["lower", "upper"] = "lower"


@dataclass(frozen=True)
class ExpTail:
    """Integrand decays like exp(-(x - lo) / scale); the ray is cut where that drops below abs_tol."""

    scale: float


Transform = Union[None, SqrtEdge, ExpTail]


@dataclass(frozen=True)
class QuadratureSpec:
    rel_tol: float = DEFAULT_REL_TOL
    abs_tol: float = DEFAULT_ABS_TOL
    max_panels: int = 200
    transform: Transform = None

    def __post_init__(self):
        if not (self.rel_tol > 0 and self.abs_tol > 0):
            raise InvalidParameterException("tolerances", (self.rel_tol, self.abs_tol), "rel_tol > 0 and abs_tol > 0")
        if self.max_panels < 8:
            raise InvalidParameterException("max_panels", self.max_panels, "max_panels >= 8")

    def with_transform(self, transform: Transform) -> "QuadratureSpec":
        return QuadratureSpec(self.rel_tol, self.abs_tol, self.max_panels, transform)


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    err_estimate: float
    panels: int
    truncation_bound: float = 0.0
    interval: Tuple[float, float] = field(default=(0.0, 0.0))


def tail_cutoff(lo: float, scale: float, abs_tol: float) -> float:
    """Point beyond which an exp(-(x - lo)/scale) tail stays below abs_tol."""
    return lo + scale * (math.log(1.0 / abs_tol) + TAIL_SAFETY)


def _substitute(
    func: Callable[[float], float], lo: float, hi: float, spec: QuadratureSpec
) -> Tuple[Callable[[float], float], float, float, float]:
    transform = spec.transform
    if transform is None:
        return func, lo, hi, 0.0

    if isinstance(transform, SqrtEdge):
        if transform.side == "lower":
            if lo != transform.edge:
                raise InvalidParameterException("SqrtEdge.edge", transform.edge, f"edge == lower limit {lo}")
            return (lambda s: 2.0 * s * func(transform.edge + s * s)), 0.0, math.sqrt(hi - lo), 0.0
        if hi != transform.edge:
            raise InvalidParameterException("SqrtEdge.edge", transform.edge, f"edge == upper limit {hi}")
        return (lambda s: 2.0 * s * func(transform.edge - s * s)), 0.0, math.sqrt(hi - lo), 0.0

    if isinstance(transform, ExpTail):
        cut = tail_cutoff(lo, transform.scale, spec.abs_tol)
        truncation_bound = transform.scale * spec.abs_tol * math.exp(-TAIL_SAFETY)
        return func, lo, min(hi, cut), truncation_bound

    raise InvalidParameterException("transform", transform, "None, SqrtEdge or ExpTail")


def integrate_adaptive(
    func: Callable[[float], float],
    interval: Tuple[float, float],
    spec: Optional[QuadratureSpec] = None,
) -> QuadratureResult:
    """Adaptive Gauss-Kronrod quadrature of a real integrand with an optional variable substitution.

    Args:
        func: real integrand.
        interval: (lo, hi); hi may be ``inf`` only together with ``ExpTail``.
        spec: tolerances, panel budget and transform.

    Returns:
        QuadratureResult with the value, the quadrature error estimate and the number of panels used.

    Raises:
        PanelsExhaustedException: the panel budget ran out (or round-off stalled refinement)
            before ``err <= rel_tol*|value| + abs_tol``; the partial value is attached.
    """
    spec = spec or QuadratureSpec()
    lo, hi = float(interval[0]), float(interval[1])
    integrand, a, b, truncation_bound = _substitute(func, lo, hi, spec)
    if math.isinf(b):
        raise InvalidParameterException("interval", interval, "finite upper limit or an ExpTail transform")
    if b <= a:
        return QuadratureResult(0.0, 0.0, 0, truncation_bound, (lo, hi))

    output = quad(
        integrand,
        a,
        b,
        epsabs=spec.abs_tol,
        epsrel=max(spec.rel_tol, _MIN_QUADPACK_REL_TOL),
        limit=spec.max_panels,
        full_output=1,
    )
    value, err_estimate, info = float(output[0]), float(output[1]), output[2]
    panels = int(info.get("last", 0))
    tolerance = spec.rel_tol * abs(value) + spec.abs_tol

    if not (math.isfinite(value) and math.isfinite(err_estimate)):
        raise PanelsExhaustedException(value, err_estimate, panels, "(non-finite integrand)")
    if len(output) > 3 and err_estimate > tolerance:
        raise PanelsExhaustedException(value, err_estimate, panels, f"({output[3].strip()})")

    logger.debug(f"quad on [{lo:.6g}, {hi:.6g}]: value={value:.12g} err={err_estimate:.2e} panels={panels}")
    return QuadratureResult(value, err_estimate, panels, truncation_bound, (lo, hi))
