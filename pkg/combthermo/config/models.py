import math
from typing import Dict, List, Literal, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from combthermo.bands import CombSpec
from combthermo.const import DEFAULT_ABS_TOL, DEFAULT_ALPHA, DEFAULT_REL_TOL, MIN_REL_TOL
from combthermo.scattering import ScatteringModel, build_model
from combthermo.thermo import Method, Tolerances


class _StrictModel(BaseModel):
    model_config = ConfigDict(extra="forbid")


# 势的配置 (kind 对应 ScatteringModel.model_type())
class PotentialConfig(_StrictModel):
    kind: Literal["delta_prime", "poschl_teller"]
    params: Dict[str, float] = Field(default_factory=dict)

    def build(self) -> ScatteringModel:
        return build_model(self.kind, self.params)


# 晶格配置
class LatticeConfig(_StrictModel):
    a: float = Field(gt=0)


# 温度区间, 含端点
class TemperatureRange(_StrictModel):
    start: float = Field(gt=0)
    stop: float = Field(gt=0)
    step: float = Field(gt=0)

    def values(self) -> List[float]:
        count = int(math.floor((self.stop - self.start) / self.step + 1e-9)) + 1
        return [round(self.start + i * self.step, 12) for i in range(max(count, 0))]


# 态密度采样
class DosGrid(_StrictModel):
    omega_min: float = Field(gt=0)
    omega_max: float = Field(gt=0)
    points: int = Field(default=200, ge=2)

    def values(self) -> List[float]:
        return list(np.linspace(self.omega_min, self.omega_max, self.points))


# (Omega, gamma) 扫描
class SweepConfig(_StrictModel):
    omega: List[float]
    gamma: List[float]
    temperature: float = Field(gt=0)
    quantity: Literal["free_energy", "entropy"] = "free_energy"


# 网格配置
class GridConfig(_StrictModel):
    temperatures: Optional[List[float]] = None
    t_range: Optional[TemperatureRange] = None
    omega_cut: Optional[float] = Field(default=None, gt=0)
    max_bands: int = Field(default=100_000, ge=1)
    dos: Optional[DosGrid] = None
    sweep: Optional[SweepConfig] = None

    @model_validator(mode="after")
    def check_temperatures(self) -> "GridConfig":
        if self.temperatures is not None and self.t_range is not None:
            raise ValueError("grid.temperatures and grid.t_range are mutually exclusive")
        if self.temperatures is not None and any(not t > 0 for t in self.temperatures):
            raise ValueError("grid.temperatures must be > 0")
        return self

    def temperature_values(self) -> List[float]:
        if self.temperatures is not None:
            return list(self.temperatures)
        if self.t_range is not None:
            return self.t_range.values()
        return []


# 计算方法配置
class MethodConfig(_StrictModel):
    name: Literal["real_axis", "rotated", "matsubara", "all"] = "rotated"
    alpha: float = Field(default=DEFAULT_ALPHA, gt=0, lt=math.pi / 2)
    cross_check: bool = False

    def methods(self) -> List[Method]:
        if self.name == "all":
            return [Method.REAL_AXIS, Method.ROTATED, Method.MATSUBARA]
        return [Method(self.name)]


# 数值容差
class TolerancesConfig(_StrictModel):
    rel_tol: float = Field(default=DEFAULT_REL_TOL, ge=MIN_REL_TOL)
    abs_tol: float = Field(default=DEFAULT_ABS_TOL, gt=0)

    def build(self) -> Tolerances:
        return Tolerances(rel_tol=self.rel_tol, abs_tol=self.abs_tol)


# 输出配置
class OutputConfig(_StrictModel):
    format: Literal["csv", "json"] = "csv"
    path: Optional[str] = None


# 单次运行的整体配置
class RunConfig(_StrictModel):
    potential: PotentialConfig
    lattice: LatticeConfig
    grid: GridConfig = Field(default_factory=GridConfig)
    method: MethodConfig = Field(default_factory=MethodConfig)
    tolerances: TolerancesConfig = Field(default_factory=TolerancesConfig)
    mass: float = Field(default=0.0, ge=0)
    output: OutputConfig = Field(default_factory=OutputConfig)

    def build_comb(self) -> CombSpec:
        """Raises InvalidParameterException (e.g. epsilon <= a) for inconsistent physics."""
        return CombSpec(model=self.potential.build(), a=self.lattice.a)

    def omega_cut(self) -> float:
        return self.grid.omega_cut or 10.0 * math.pi / self.lattice.a

