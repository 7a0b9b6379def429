import cmath
from typing import Tuple

# below this |k x| the Taylor branch is exact to double precision
_SERIES_THRESHOLD = 1e-3


def sinc_and_derivative(k: complex, x: float) -> Tuple[complex, complex]:
    """Return S = sin(k x)/k and dS/dk, entire in k (S(0) = x)."""
    z = k * x
    if abs(z) < _SERIES_THRESHOLD:
        z2 = z * z
        s = x * (1.0 - z2 / 6.0 + z2 * z2 / 120.0)
        ds = x * x * z * (-1.0 / 3.0 + z2 / 30.0)
        return s, ds
    s = cmath.sin(z) / k
    ds = (x * cmath.cos(z) - s) / k
    return s, ds
