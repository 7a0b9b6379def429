import logging
import math
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Type, Union

import numpy as np

from combthermo.exception import (
    InvalidParameterException,
    ModelNotSupportedException,
)


@dataclass(frozen=True)
class ScatteringAmplitudes:
    """t, r_L, r_R of one defect at (complex) momentum k."""

    k: complex
    t: complex
    r_left: complex
    r_right: complex

    @property
    def determinant(self) -> complex:
        """det S = t^2 - r_R r_L, a pure phase on the real axis."""
        return self.t * self.t - self.r_right * self.r_left


@dataclass(frozen=True)
class BoundState:
    kappa: float

    def __post_init__(self):
        if not self.kappa > 0:
            raise InvalidParameterException("kappa", self.kappa, "kappa > 0")


class ScatteringModel(ABC):
    """
    A compact-support defect known through its scattering data.

    Subclasses implement the amplitudes, the asymptotic data and dh_V/dk; `lattice_function`
    defaults to h_V assembled from the amplitudes and may be replaced by a closed form.
    """

    logger: logging.Logger = logging.getLogger(__name__)

    @staticmethod
    @abstractmethod
    def model_type() -> str:
        """
        返回势的类型 (配置文件中的 potential.kind)。

        Returns:
            str: 势的类型。
        """
        pass

    @abstractmethod
    def amplitudes(self, k: complex) -> ScatteringAmplitudes:
        pass

    @abstractmethod
    def bound_states(self) -> List[BoundState]:
        pass

    @property
    @abstractmethod
    def support_width(self) -> float:
        pass

    @property
    @abstractmethod
    def asymptotic_transmission(self) -> float:
        """t(|k| -> oo) away from the real axis."""
        pass

    @property
    @abstractmethod
    def asymptotic_strength(self) -> float:
        """gamma_eff in log(h_V(i xi) / h_V^asym(i xi)) ~ gamma_eff / (2 xi) for large xi."""
        pass

    def generic_lattice_function(self, k: complex, a: float) -> complex:
        """h_V(k) = [e^{-ika} + e^{ika}(t^2 - r_R r_L)] / (2t)."""
        amplitudes = self.amplitudes(k)
        phase = np.exp(1j * k * a)
        return (1.0 / phase + phase * amplitudes.determinant) / (2.0 * amplitudes.t)

    def lattice_function(self, k: complex, a: float) -> complex:
        return self.generic_lattice_function(k, a)

    @abstractmethod
    def lattice_derivative(self, k: complex, a: float) -> complex:
        pass

    def lattice_unit_gap(self, k: float, a: float) -> float:
        """1 - h_V(k)^2 on the real axis."""
        h = self.lattice_function(k, a).real
        return (1.0 - h) * (1.0 + h)

    def lattice_log_excess_imag(self, xi: np.ndarray, a: float) -> np.ndarray:
        """log|h_V(i xi)| - xi*a for xi >= 0 (array); bounded as xi grows."""
        xi = np.atleast_1d(np.asarray(xi, dtype=float))
        values = np.array([self.lattice_function(1j * x, a).real for x in xi])
        with np.errstate(divide="ignore", over="ignore"):
            return np.log(np.abs(values)) - xi * a

    def lattice_ratio_imag(self, xi: np.ndarray, a: float) -> np.ndarray:
        """|h_V(i xi)| / |h^asym(i xi)| - 1, with h^asym = cos(ka) / t_inf."""
        xi = np.atleast_1d(np.asarray(xi, dtype=float))
        background = -math.log(2.0) - math.log(abs(self.asymptotic_transmission)) + np.log1p(np.exp(-2.0 * xi * a))
        return np.expm1(self.lattice_log_excess_imag(xi, a) - background)

    def lattice_ratio_remainder_imag(self, xi: np.ndarray, a: float) -> np.ndarray:
        """2 xi * lattice_ratio_imag - gamma_eff, which stays bounded as xi grows."""
        xi = np.atleast_1d(np.asarray(xi, dtype=float))
        return 2.0 * xi * self.lattice_ratio_imag(xi, a) - self.asymptotic_strength

    def parameters(self) -> Dict[str, float]:
        return {}


def find_model_class(model_type: str) -> Optional[Type[ScatteringModel]]:
    """Find the corresponding model class by potential type"""
    return next(
        (model_class for model_class in ScatteringModel.__subclasses__() if model_class.model_type() == model_type),
        None,
    )


def build_model(model_type: str, params: Dict[str, Union[int, float]]) -> ScatteringModel:
    model_class = find_model_class(model_type)
    if model_class is None:
        raise ModelNotSupportedException(model_type)
    try:
        return model_class(**{key: float(value) for key, value in params.items()})
    except TypeError as e:
        raise InvalidParameterException(f"potential.params ({model_type})", params, str(e))


def describe(model: ScatteringModel) -> Dict[str, Any]:
    return {"kind": model.model_type(), **model.parameters()}
