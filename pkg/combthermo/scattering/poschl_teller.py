import cmath
import math
from dataclasses import dataclass
from typing import Dict, List, Tuple

import numpy as np

from combthermo.const import POLE_TOLERANCE
from combthermo.exception import InvalidParameterException, PoleEvaluationException
from combthermo.numerics import RootSpec, find_root_bracketed, sinc_and_derivative
from combthermo.scattering.base import BoundState, ScatteringAmplitudes, ScatteringModel

# bound states of the truncated well satisfy kappa < 1 + tanh(epsilon/2)
_KAPPA_SCAN_MAX = 2.5
_KAPPA_SCAN_POINTS = 2001
# the Wronskian 1 + k^2 vanishes with u_o at k = +-i; h_V is entire there and is taken from a circle
_WRONSKIAN_FLOOR = 0.05
_CIRCLE_RADIUS = 0.1
_CIRCLE_POINTS = 32


@dataclass(frozen=True)
class PoschlTellerDefect(ScatteringModel):
    """
    -2/cosh^2(x) truncated to |x| <= epsilon/2 (one kink of the "sine-Gordon" chain).
    """

    epsilon: float

    def __post_init__(self):
        if not (math.isfinite(self.epsilon) and self.epsilon > 0):
            raise InvalidParameterException("epsilon", self.epsilon, "epsilon > 0")

    @staticmethod
    def model_type() -> str:
        return "poschl_teller"

    @property
    def tau(self) -> float:
        return math.tanh(self.epsilon / 2.0)

    @property
    def Lambda(self) -> float:
        return 1.0 - self.tau**2

    @property
    def support_width(self) -> float:
        return self.epsilon

    @property
    def asymptotic_transmission(self) -> float:
        return 1.0

    @property
    def asymptotic_strength(self) -> float:
        # integral of the potential over its support
        return -4.0 * self.tau

    def parameters(self) -> Dict[str, float]:
        return {"epsilon": self.epsilon}

    def _p(self, k: complex) -> complex:
        return self.Lambda + 2.0 * k * (k - 1j * self.tau)

    def _q(self, k: complex) -> complex:
        return self.Lambda + 2.0 * k * (k + 1j * self.tau)

    def jost_denominator(self, k: complex) -> complex:
        """Delta(k) = -e^{2 i eps k} Lambda^2 + [Lambda + 2k(k - i tanh(eps/2))]^2."""
        return self._p(k) ** 2 - self.Lambda**2 * cmath.exp(2j * self.epsilon * k)

    def amplitudes(self, k: complex) -> ScatteringAmplitudes:
        delta = self.jost_denominator(k)
        scale = abs(self._p(k)) ** 2 + self.Lambda**2 * abs(cmath.exp(2j * self.epsilon * k))
        if abs(delta) < POLE_TOLERANCE * scale:
            raise PoleEvaluationException(k, delta)
        t = 4.0 * k * k * (k * k + 1.0) / delta
        phase = cmath.exp(1j * self.epsilon * k)
        r = self.Lambda * (self._q(k) * phase - self._p(k) / phase) / delta
        return ScatteringAmplitudes(k=k, t=t, r_left=r, r_right=r)

    def _even_odd_terms(self, k: complex, a: float) -> Tuple[complex, complex]:
        """h_V and dh_V/dk from the even/odd solutions of the cell, Wronskian 1 + k^2."""
        b = 0.5 * self.epsilon
        tau, lam = self.tau, self.Lambda
        c, sn = cmath.cos(k * b), cmath.sin(k * b)
        sinc, sinc_k = sinc_and_derivative(k, b)
        c_k, sn_k = -b * sn, b * c

        # inside the well: u_o = tanh x cos kx + k sin kx, u_e = cos kx - tanh x sin(kx)/k
        uo = tau * c + k * sn
        uo_p = (lam + k * k) * c - k * tau * sn
        ue = c - tau * sinc
        ue_p = -(k * k + lam) * sinc - tau * c
        uo_k = tau * c_k + sn + k * sn_k
        uo_p_k = 2.0 * k * c + (lam + k * k) * c_k - tau * sn - k * tau * sn_k
        ue_k = c_k - tau * sinc_k
        ue_p_k = -2.0 * k * sinc - (k * k + lam) * sinc_k - tau * c_k

        # free propagation from x = eps/2 to the cell boundary x = a/2
        d = 0.5 * (a - self.epsilon)
        cd = cmath.cos(k * d)
        sd, sd_k = sinc_and_derivative(k, d)
        cd_k = -d * k * sd

        def propagate(u, u_p, u_k, u_p_k):
            y = u * cd + u_p * sd
            y_p = -k * k * sd * u + u_p * cd
            y_k = u_k * cd + u * cd_k + u_p_k * sd + u_p * sd_k
            y_p_k = -2.0 * k * sd * u - k * k * sd_k * u - k * k * sd * u_k + u_p_k * cd + u_p * cd_k
            return y, y_p, y_k, y_p_k

        ye, ye_p, ye_k, ye_p_k = propagate(ue, ue_p, ue_k, ue_p_k)
        yo, yo_p, yo_k, yo_p_k = propagate(uo, uo_p, uo_k, uo_p_k)

        wronskian = 1.0 + k * k
        numerator = ye * yo_p + ye_p * yo
        numerator_k = ye_k * yo_p + ye * yo_p_k + ye_p_k * yo + ye_p * yo_k
        h = numerator / wronskian
        return h, (numerator_k - 2.0 * k * h) / wronskian

    def _lattice_terms(self, k: complex, a: float) -> Tuple[complex, complex]:
        if abs(1.0 + k * k) >= _WRONSKIAN_FLOOR:
            return self._even_odd_terms(k, a)
        # Cauchy mean value and derivative by the trapezoid rule on |z - k| = r
        h, dh = 0.0j, 0.0j
        for j in range(_CIRCLE_POINTS):
            phase = cmath.exp(2j * math.pi * j / _CIRCLE_POINTS)
            value = self._even_odd_terms(k + _CIRCLE_RADIUS * phase, a)[0]
            h += value
            dh += value / phase
        return h / _CIRCLE_POINTS, dh / (_CIRCLE_POINTS * _CIRCLE_RADIUS)

    def lattice_function(self, k: complex, a: float) -> complex:
        return self._lattice_terms(k, a)[0]

    def lattice_derivative(self, k: complex, a: float) -> complex:
        return self._lattice_terms(k, a)[1]

    def bound_states(self) -> List[BoundState]:
        """Zeros of Delta(i kappa), kappa > 0: one per sign of P(i kappa) = +-Lambda e^{-eps kappa}."""
        lam, eps = self.Lambda, self.epsilon

        def branch(sign: float):
            return lambda kappa: self._p(1j * kappa).real - sign * lam * math.exp(-eps * kappa)

        kappas = np.linspace(1e-9, _KAPPA_SCAN_MAX, _KAPPA_SCAN_POINTS)
        states = []
        for sign in (1.0, -1.0):
            g = branch(sign)
            values = [g(kappa) for kappa in kappas]
            for lo, hi, g_lo, g_hi in zip(kappas[:-1], kappas[1:], values[:-1], values[1:]):
                if g_lo * g_hi < 0:
                    kappa = find_root_bracketed(g, RootSpec(bracket=(lo, hi), tol_abs=1e-14))
                    # t's numerator 4k^2(k^2+1) also vanishes at kappa = 1
                    if abs(kappa - 1.0) > 1e-9:
                        states.append(BoundState(kappa))
        return sorted(states, key=lambda state: state.kappa)
