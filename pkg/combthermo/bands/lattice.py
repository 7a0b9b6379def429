import cmath
import math
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Any, Dict

import numpy as np

from combthermo.exception import InvalidParameterException
from combthermo.scattering import PoschlTellerDefect, ScatteringModel, describe


class Lattice(ABC):
    """A 1-D lattice known through its lattice function h(k): cos(theta) = h(k) on the spectrum."""

    a: float

    @abstractmethod
    def h(self, k: complex) -> complex:
        pass

    @abstractmethod
    def dh(self, k: complex) -> complex:
        pass

    @abstractmethod
    def log_abs_h_imag_excess(self, xi: np.ndarray) -> np.ndarray:
        """log|h(i xi)| - xi*a."""
        pass

    @abstractmethod
    def ratio_imag(self, xi: np.ndarray) -> np.ndarray:
        """|h(i xi)| / |h^asym(i xi)| - 1."""
        pass

    @abstractmethod
    def ratio_remainder_imag(self, xi: np.ndarray) -> np.ndarray:
        """2 xi * ratio_imag - asymptotic_strength, bounded as xi grows."""
        pass

    @property
    @abstractmethod
    def asymptotic_strength(self) -> float:
        pass

    def asymptotic(self) -> "AsymptoticLattice":
        """The lattice with h^asym(k) = cos(ka) / t_inf."""
        raise NotImplementedError

    def h_real(self, omega: float) -> float:
        return self.h(omega).real

    def dh_real(self, omega: float) -> float:
        return self.dh(omega).real

    def unit_gap_real(self, omega: float) -> float:
        """1 - h(omega)^2."""
        h = self.h_real(omega)
        return (1.0 - h) * (1.0 + h)

    def describe(self) -> Dict[str, Any]:
        return {"a": self.a}


@dataclass(frozen=True)
class AsymptoticLattice(Lattice):
    """h^asym(k) = cos(ka) / t_inf, the large-|k| background of a comb."""

    a: float
    t_inf: float

    def __post_init__(self):
        if not self.a > 0:
            raise InvalidParameterException("a", self.a, "a > 0")
        if self.t_inf == 0:
            raise InvalidParameterException("t_inf", self.t_inf, "t_inf != 0")

    def h(self, k: complex) -> complex:
        return cmath.cos(k * self.a) / self.t_inf

    def dh(self, k: complex) -> complex:
        return -self.a * cmath.sin(k * self.a) / self.t_inf

    def unit_gap_real(self, omega: float) -> float:
        sine = math.sin(omega * self.a)
        return (sine * sine - (1.0 - self.t_inf) * (1.0 + self.t_inf)) / (self.t_inf * self.t_inf)

    def log_abs_h_imag_excess(self, xi: np.ndarray) -> np.ndarray:
        xi = np.atleast_1d(np.asarray(xi, dtype=float))
        return -math.log(2.0) - math.log(abs(self.t_inf)) + np.log1p(np.exp(-2.0 * xi * self.a))

    def ratio_imag(self, xi: np.ndarray) -> np.ndarray:
        return np.zeros_like(np.atleast_1d(np.asarray(xi, dtype=float)))

    def ratio_remainder_imag(self, xi: np.ndarray) -> np.ndarray:
        return np.zeros_like(np.atleast_1d(np.asarray(xi, dtype=float)))

    @property
    def asymptotic_strength(self) -> float:
        return 0.0

    def asymptotic(self) -> "AsymptoticLattice":
        return self

    def describe(self) -> Dict[str, Any]:
        return {"kind": "asymptotic", "a": self.a, "t_inf": self.t_inf}


@dataclass(frozen=True)
class CombSpec(Lattice):
    """Copies of `model` centred in cells of width `a`."""

    model: ScatteringModel
    a: float

    def __post_init__(self):
        if not (math.isfinite(self.a) and self.a > 0):
            raise InvalidParameterException("a", self.a, "a > 0")
        if self.model.support_width > self.a:
            constraint = "epsilon <= a" if isinstance(self.model, PoschlTellerDefect) else "support width <= a"
            raise InvalidParameterException("a", self.a, f"{constraint} (support {self.model.support_width})")

    def h(self, k: complex) -> complex:
        return self.model.lattice_function(k, self.a)

    def dh(self, k: complex) -> complex:
        return self.model.lattice_derivative(k, self.a)

    def unit_gap_real(self, omega: float) -> float:
        return self.model.lattice_unit_gap(omega, self.a)

    def log_abs_h_imag_excess(self, xi: np.ndarray) -> np.ndarray:
        return self.model.lattice_log_excess_imag(xi, self.a)

    def ratio_imag(self, xi: np.ndarray) -> np.ndarray:
        return self.model.lattice_ratio_imag(xi, self.a)

    def ratio_remainder_imag(self, xi: np.ndarray) -> np.ndarray:
        return self.model.lattice_ratio_remainder_imag(xi, self.a)

    @property
    def asymptotic_strength(self) -> float:
        return self.model.asymptotic_strength

    def asymptotic(self) -> AsymptoticLattice:
        return AsymptoticLattice(a=self.a, t_inf=self.model.asymptotic_transmission)

    def describe(self) -> Dict[str, Any]:
        return {**describe(self.model), "a": self.a}


def h_lattice(comb: Lattice, k: complex) -> complex:
    return comb.h(k)


def secular(comb: Lattice, theta: float, k: complex) -> complex:
    """f_theta(k) = cos(theta) - h_V(k)."""
    if not 0.0 <= theta <= math.pi:
        raise InvalidParameterException("theta", theta, "0 <= theta <= pi")
    return math.cos(theta) - comb.h(k)
