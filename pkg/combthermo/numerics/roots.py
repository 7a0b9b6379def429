import math
from dataclasses import dataclass
from typing import Callable, Tuple

from scipy.optimize import brentq

from combthermo.exception import (
    InvalidParameterException,
    MaxIterationsException,
    NoSignChangeException,
)


@dataclass(frozen=True)
class RootSpec:
    bracket: Tuple[float, float]
    tol_abs: float = 1e-12
    max_iter: int = 200

    def __post_init__(self):
        lo, hi = self.bracket
        if not lo < hi:
            raise InvalidParameterException("bracket", self.bracket, "lo < hi")


def find_root_bracketed(g: Callable[[float], float], spec: RootSpec) -> float:
    """Brent's method on a sign-changing bracket."""
    lo, hi = spec.bracket
    g_lo, g_hi = g(lo), g(hi)
    if g_lo == 0.0:
        return lo
    if g_hi == 0.0:
        return hi
    if not (math.copysign(1.0, g_lo) != math.copysign(1.0, g_hi)):
        raise NoSignChangeException(lo, hi, g_lo, g_hi)

    root, result = brentq(g, lo, hi, xtol=spec.tol_abs, maxiter=spec.max_iter, full_output=True, disp=False)
    if not result.converged:
        raise MaxIterationsException(result.iterations, root)
    return float(root)
