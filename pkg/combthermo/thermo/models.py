import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Optional

from combthermo.bands import Lattice
from combthermo.const import DEFAULT_ABS_TOL, DEFAULT_ALPHA, DEFAULT_REL_TOL, MIN_REL_TOL
from combthermo.exception import InvalidParameterException
from combthermo.numerics import QuadratureSpec


class Method(str, Enum):
    REAL_AXIS = "real_axis"
    ROTATED = "rotated"
    MATSUBARA = "matsubara"


@dataclass(frozen=True)
class Tolerances:
    rel_tol: float = DEFAULT_REL_TOL
    abs_tol: float = DEFAULT_ABS_TOL

    def __post_init__(self):
        if not self.rel_tol >= MIN_REL_TOL:
            raise InvalidParameterException("rel_tol", self.rel_tol, f"rel_tol >= {MIN_REL_TOL}")
        if not self.abs_tol > 0:
            raise InvalidParameterException("abs_tol", self.abs_tol, "abs_tol > 0")

    def quadrature(self, max_panels: int = 200) -> QuadratureSpec:
        return QuadratureSpec(rel_tol=self.rel_tol, abs_tol=self.abs_tol, max_panels=max_panels)


@dataclass(frozen=True)
class ThermoRequest:
    """
    One free-energy/entropy evaluation.

    `omega_cut` (real axis) and `xi_cut` (rotated ray) are optional caps on the truncation
    points, which are otherwise derived from the temperature and abs_tol.
    """

    lattice: Lattice
    temperature: float
    mass: float = 0.0
    method: Method = Method.ROTATED
    alpha: float = DEFAULT_ALPHA
    tolerances: Tolerances = field(default_factory=Tolerances)
    omega_cut: Optional[float] = None
    xi_cut: Optional[float] = None

    def __post_init__(self):
        if not (math.isfinite(self.temperature) and self.temperature > 0):
            raise InvalidParameterException("T", self.temperature, "T > 0")
        if not (math.isfinite(self.mass) and self.mass >= 0):
            raise InvalidParameterException("mass", self.mass, "m >= 0")
        if self.method == Method.ROTATED and not 0 < self.alpha < math.pi / 2:
            raise InvalidParameterException("alpha", self.alpha, "0 < alpha < pi/2")

    def at_temperature(self, temperature: float) -> "ThermoRequest":
        return ThermoRequest(
            self.lattice,
            temperature,
            self.mass,
            self.method,
            self.alpha,
            self.tolerances,
            self.omega_cut,
            self.xi_cut,
        )

    def with_method(self, method: Method, alpha: Optional[float] = None) -> "ThermoRequest":
        return ThermoRequest(
            self.lattice,
            self.temperature,
            self.mass,
            method,
            self.alpha if alpha is None else alpha,
            self.tolerances,
            self.omega_cut,
            self.xi_cut,
        )

    def on_lattice(self, lattice: Lattice) -> "ThermoRequest":
        return ThermoRequest(
            lattice,
            self.temperature,
            self.mass,
            self.method,
            self.alpha,
            self.tolerances,
            self.omega_cut,
            self.xi_cut,
        )


@dataclass(frozen=True)
class ThermoResult:
    value: float
    err_estimate: float
    method: str
    diagnostics: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if not self.err_estimate >= 0:
            raise InvalidParameterException("err_estimate", self.err_estimate, "err_estimate >= 0")
