import cmath
import math
from dataclasses import dataclass
from typing import Dict, List

import numpy as np

from combthermo.const import POLE_TOLERANCE
from combthermo.exception import InvalidParameterException, PoleEvaluationException
from combthermo.numerics import sinc_and_derivative
from combthermo.scattering.base import BoundState, ScatteringAmplitudes, ScatteringModel


@dataclass(frozen=True)
class DeltaPrimeDefect(ScatteringModel):
    """
    Point interaction w0*delta(x) + 2*w1*delta'(x) defined through its matching conditions.

    w0 = w1 = 0 is the empty line.
    """

    w0: float
    w1: float

    def __post_init__(self):
        if not (math.isfinite(self.w0) and self.w0 >= 0):
            raise InvalidParameterException("w0", self.w0, "w0 >= 0 (no negative energy levels)")
        if not math.isfinite(self.w1):
            raise InvalidParameterException("w1", self.w1, "finite w1")

    @classmethod
    def from_omega_gamma(cls, omega: float, gamma: float) -> "DeltaPrimeDefect":
        if not -1.0 <= omega < 1.0:
            raise InvalidParameterException("Omega", omega, "-1 <= Omega < 1")
        if not gamma > 0:
            raise InvalidParameterException("gamma", gamma, "gamma > 0")
        w1_squared = (1.0 + omega) / (1.0 - omega)
        return cls(w0=gamma * (1.0 + w1_squared), w1=math.sqrt(w1_squared))

    @staticmethod
    def model_type() -> str:
        return "delta_prime"

    @property
    def gamma(self) -> float:
        return self.w0 / (1.0 + self.w1**2)

    @property
    def omega(self) -> float:
        return (self.w1**2 - 1.0) / (self.w1**2 + 1.0)

    @property
    def support_width(self) -> float:
        return 0.0

    @property
    def asymptotic_transmission(self) -> float:
        return -self.omega

    @property
    def asymptotic_strength(self) -> float:
        return self.gamma

    def parameters(self) -> Dict[str, float]:
        return {"w0": self.w0, "w1": self.w1}

    def amplitudes(self, k: complex) -> ScatteringAmplitudes:
        w1_sq = self.w1**2
        denominator = 2.0 * k * (w1_sq + 1.0) + 1j * self.w0
        if abs(denominator) < POLE_TOLERANCE * (1.0 + self.w0):
            raise PoleEvaluationException(k, denominator)
        t = -2.0 * k * (w1_sq - 1.0) / denominator
        r_right = (-4.0 * k * self.w1 - 1j * self.w0) / denominator
        r_left = (4.0 * k * self.w1 - 1j * self.w0) / denominator
        return ScatteringAmplitudes(k=k, t=t, r_left=r_left, r_right=r_right)

    def phase_shift(self, k: float) -> float:
        """delta(k) with the branch fixed by delta(oo) = 0."""
        if not k > 0:
            raise InvalidParameterException("k", k, "k > 0")
        gamma = self.gamma
        if gamma == 0:
            raise InvalidParameterException("gamma", gamma, "gamma != 0")
        offset = -math.pi / 2 if gamma > 0 else math.pi / 2
        return offset + math.atan(2.0 * k / gamma)

    def phase_shift_derivative(self, k):
        """d delta/dk; accepts scalars or arrays."""
        if np.any(np.asarray(k) < 0):
            raise InvalidParameterException("k", k, "k >= 0")
        if self.w0 == 0:
            return np.zeros_like(np.asarray(k, dtype=float)) + 0.0
        w1_factor = 1.0 + self.w1**2
        return 2.0 * self.w0 * w1_factor / (self.w0**2 + 4.0 * np.square(k) * w1_factor**2)

    def bound_states(self) -> List[BoundState]:
        # the only amplitude pole, k = -i*gamma/2, is antibound for w0 >= 0
        return []

    def _check_coupled(self, k: complex) -> float:
        omega = self.omega
        if abs(omega) < POLE_TOLERANCE:
            raise PoleEvaluationException(k, omega)
        return omega

    def lattice_function(self, k: complex, a: float) -> complex:
        omega = self._check_coupled(k)
        sinc, _ = sinc_and_derivative(k, a)
        return -(cmath.cos(k * a) + 0.5 * self.gamma * sinc) / omega

    def lattice_derivative(self, k: complex, a: float) -> complex:
        omega = self._check_coupled(k)
        _, sinc_k = sinc_and_derivative(k, a)
        return -(-a * cmath.sin(k * a) + 0.5 * self.gamma * sinc_k) / omega

    def lattice_unit_gap(self, k: float, a: float) -> float:
        """1 - h_V^2 = [sin^2(ka) - (1 - Omega^2) - s (2 cos(ka) + s)] / Omega^2 with s = gamma sinc / 2."""
        omega = self._check_coupled(k)
        sinc, _ = sinc_and_derivative(k, a)
        s = 0.5 * self.gamma * sinc.real
        sine = math.sin(k * a)
        return (sine * sine - (1.0 - omega) * (1.0 + omega) - s * (2.0 * math.cos(k * a) + s)) / (omega * omega)

    def lattice_log_excess_imag(self, xi: np.ndarray, a: float) -> np.ndarray:
        """log|h_V(i xi)| - xi*a without forming cosh(xi a)."""
        omega = self._check_coupled(1j * 0.0)
        xi = np.atleast_1d(np.asarray(xi, dtype=float))
        decay = np.exp(-2.0 * xi * a)
        with np.errstate(divide="ignore", invalid="ignore"):
            sinh_over_xi = np.where(xi > 0, -np.expm1(-2.0 * xi * a) / (2.0 * np.where(xi > 0, xi, 1.0)), a)
        return -math.log(2.0) - math.log(abs(omega)) + np.log1p(decay + self.gamma * sinh_over_xi)

    def lattice_ratio_imag(self, xi: np.ndarray, a: float) -> np.ndarray:
        """|h_V(i xi)| / |h^asym(i xi)| - 1 = gamma tanh(xi a) / (2 xi)."""
        self._check_coupled(1j * 0.0)
        xi = np.atleast_1d(np.asarray(xi, dtype=float))
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = np.tanh(xi * a) / (2.0 * np.where(xi > 0, xi, 1.0))
        return self.gamma * np.where(xi > 0, ratio, 0.5 * a)

    def lattice_ratio_remainder_imag(self, xi: np.ndarray, a: float) -> np.ndarray:
        """gamma (tanh(xi a) - 1) = -2 gamma e^{-2 xi a} / (1 + e^{-2 xi a})."""
        self._check_coupled(1j * 0.0)
        decay = np.exp(-2.0 * np.atleast_1d(np.asarray(xi, dtype=float)) * a)
        return -2.0 * self.gamma * decay / (1.0 + decay)
