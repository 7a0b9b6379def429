import cmath
import math
from typing import Union

from combthermo.const import BRANCH_POINT_TOLERANCE
from combthermo.exception import BranchPointException, InvalidParameterException

Number = Union[float, complex]

# below this |omega/T| 1 - exp(-z) is taken from its series
_SERIES_THRESHOLD = 1e-5


def _one_minus_exp(z: complex) -> complex:
    if abs(z) < _SERIES_THRESHOLD:
        return z * (1.0 - z / 2.0 + z * z / 6.0)
    return 1.0 - cmath.exp(-z)


def _check(omega: Number, temperature: float) -> None:
    if not temperature > 0:
        raise InvalidParameterException("T", temperature, "T > 0")
    if omega.real < 0:
        raise InvalidParameterException("omega", omega, "Re(omega) >= 0")


def boltzmann(omega: Number, temperature: float) -> Number:
    """
    B(omega, T) = T log(1 - exp(-omega/T)), principal logarithm.

    Real input gives a real result.

    Raises:
        BranchPointException: 1 - exp(-omega/T) vanishes (omega on the Matsubara set).
    """
    _check(omega, temperature)
    if isinstance(omega, complex):
        base = _one_minus_exp(omega / temperature)
        if abs(base) < BRANCH_POINT_TOLERANCE:
            raise BranchPointException(omega, temperature)
        return temperature * cmath.log(base)

    base = -math.expm1(-omega / temperature)
    if base < BRANCH_POINT_TOLERANCE:
        raise BranchPointException(omega, temperature)
    return temperature * math.log(base)


def boltzmann_temperature_derivative(omega: Number, temperature: float) -> Number:
    """dB/dT = log(1 - exp(-x)) - x / (exp(x) - 1), x = omega/T."""
    _check(omega, temperature)
    x = omega / temperature
    if isinstance(omega, complex):
        base = _one_minus_exp(x)
        if abs(base) < BRANCH_POINT_TOLERANCE:
            raise BranchPointException(omega, temperature)
        return cmath.log(base) - x * cmath.exp(-x) / base

    base = -math.expm1(-x)
    if base < BRANCH_POINT_TOLERANCE:
        raise BranchPointException(omega, temperature)
    return math.log(base) - x / math.expm1(x)
