"""Direct integration of -psi'' - 2 sech^2(x) psi = k^2 psi across the truncated well."""

import cmath
import math
from typing import Tuple

import numpy as np
from scipy.integrate import solve_ivp


def poschl_teller_amplitudes(epsilon: float, k: float) -> Tuple[complex, complex]:
    """(t, r) for a wave incident from the left on the well supported on [-epsilon/2, epsilon/2]."""
    half = 0.5 * epsilon

    def rhs(x, y):
        psi, dpsi = y
        return [dpsi, (-2.0 / math.cosh(x) ** 2 - k * k) * psi]

    # transmitted wave e^{ikx} on the right, integrated back to the left edge
    start = np.array([cmath.exp(1j * k * half), 1j * k * cmath.exp(1j * k * half)], dtype=complex)
    solution = solve_ivp(rhs, (half, -half), start, method="DOP853", rtol=1e-13, atol=1e-15)
    psi, dpsi = solution.y[:, -1]

    forward = 0.5 * (psi + dpsi / (1j * k)) * cmath.exp(1j * k * half)
    backward = 0.5 * (psi - dpsi / (1j * k)) * cmath.exp(-1j * k * half)
    return 1.0 / forward, backward / forward
