import logging
import math
from dataclasses import dataclass
from typing import Callable, Final, List, Optional, Sequence

import numpy as np
import pandas as pd

from combthermo.bands import CombSpec, band_edges
from combthermo.exception import CombThermoException, ImaginaryAxisSpectrumException
from combthermo.oracle import delta_f_bruteforce
from combthermo.scattering import DeltaPrimeDefect
from combthermo.thermo import (
    Method,
    Tolerances,
    ThermoRequest,
    delta_f_matsubara,
    delta_f_real_axis,
    delta_f_rotated,
    free_energy_matsubara,
    vacuum_energy,
)
from combthermo.thermo.real_axis import band_integral

logger: Final[logging.Logger] = logging.getLogger(__name__)

PASS, FAIL, SKIP = "pass", "fail", "skip"

# acceptance thresholds
TRIANGLE_REL_TOL = 1e-6
MATSUBARA_REL_TOL = 1e-5
ALPHA_REL_TOL = 1e-8
ORACLE_REL_TOL = 1e-4
DOS_NORMALIZATION_TOL = 1e-6
ANCHOR_TOL = 1e-4
UNITARITY_TOL = 1e-12

ORACLE_CELLS = 200
ORACLE_OMEGA_CUT = 40.0
ANCHOR_TEMPERATURES = (0.1, 0.05, 0.025)


@dataclass(frozen=True)
class CheckOutcome:
    check: str
    status: str
    detail: str


class _Skip(Exception):
    pass


class _Failed(Exception):
    pass


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise _Failed(message)


def _relative(x: float, y: float) -> float:
    return abs(x - y) / max(abs(x), abs(y), 1e-300)


def richardson_zero_limit(values: Sequence[float]) -> float:
    """Extrapolate F(T), F(T/2), F(T/4) to T = 0 assuming an even series in T."""
    first = [(4.0 * fine - coarse) / 3.0 for coarse, fine in zip(values[:-1], values[1:])]
    if len(first) == 1:
        return first[0]
    return (16.0 * first[1] - first[0]) / 15.0


class ValidationBattery:
    """Invariant checks on one comb; each check turns numeric failures into a "fail" row."""

    def __init__(
        self,
        comb: CombSpec,
        temperatures: Sequence[float],
        tolerances: Tolerances,
        alpha: float,
        oracle_cells: int = ORACLE_CELLS,
    ):
        self.comb = comb
        self.temperatures = list(temperatures) or [1.0]
        self.tolerances = tolerances
        self.alpha = alpha
        self.oracle_cells = oracle_cells

    def _request(self, temperature: float, method: Method, alpha: Optional[float] = None) -> ThermoRequest:
        return ThermoRequest(
            lattice=self.comb,
            temperature=temperature,
            method=method,
            alpha=self.alpha if alpha is None else alpha,
            tolerances=self.tolerances,
        )

    def check_unitarity(self) -> str:
        worst = 0.0
        for k in np.linspace(0.1, 10.0, 20):
            amplitudes = self.comb.model.amplitudes(float(k))
            flux = abs(amplitudes.t) ** 2 + abs(amplitudes.r_right) ** 2
            worst = max(worst, abs(flux - 1.0), abs(abs(amplitudes.determinant) - 1.0))
        _require(worst < UNITARITY_TOL, f"max deviation {worst:.3e}")
        return f"max deviation {worst:.3e}"

    def check_representation_triangle(self) -> str:
        details = []
        for temperature in self.temperatures:
            rotated = delta_f_rotated(self._request(temperature, Method.ROTATED)).value
            real = delta_f_real_axis(self._request(temperature, Method.REAL_AXIS)).value
            spread = _relative(real, rotated)
            _require(spread <= TRIANGLE_REL_TOL, f"T={temperature:g}: real {real:.10g} vs rotated {rotated:.10g}")
            details.append(f"T={temperature:g}: {spread:.1e}")
        return "; ".join(details)

    def check_matsubara(self) -> str:
        details = []
        for temperature in self.temperatures:
            rotated = delta_f_rotated(self._request(temperature, Method.ROTATED)).value
            try:
                matsubara = delta_f_matsubara(self._request(temperature, Method.MATSUBARA)).value
            except ImaginaryAxisSpectrumException as e:
                raise _Skip(str(e))
            spread = _relative(matsubara, rotated)
            _require(spread <= MATSUBARA_REL_TOL, f"T={temperature:g}: matsubara {matsubara:.10g} vs rotated {rotated:.10g}")
            details.append(f"T={temperature:g}: {spread:.1e}")
        return "; ".join(details)

    def check_alpha_independence(self) -> str:
        temperature = self.temperatures[0]
        values = [delta_f_rotated(self._request(temperature, Method.ROTATED, alpha)).value for alpha in (math.pi / 6, math.pi / 4, math.pi / 3)]
        spread = max(_relative(x, y) for x in values for y in values)
        _require(spread <= ALPHA_REL_TOL, f"spread {spread:.2e} over alpha in (pi/6, pi/4, pi/3)")
        return f"spread {spread:.1e}"

    def check_oracle(self) -> str:
        rotated = delta_f_rotated(self._request(1.0, Method.ROTATED)).value
        brute = delta_f_bruteforce(self.comb, 1.0, self.oracle_cells, ORACLE_OMEGA_CUT)
        spread = _relative(brute, rotated)
        _require(spread <= ORACLE_REL_TOL, f"box {brute:.10g} vs rotated {rotated:.10g}")
        return f"N={self.oracle_cells}: {spread:.1e}"

    def check_dos_normalization(self) -> str:
        spec = self.tolerances.quadrature()
        bands = band_edges(self.comb, 10.0 * math.pi / self.comb.a, max_bands=10)
        worst = 0.0
        for band in bands:
            count, _, _ = band_integral(
                self.comb.h_real, self.comb.dh_real, (band.omega_min, band.omega_max), lambda omega: 1.0, spec
            )
            worst = max(worst, abs(math.pi * count - band.theta_span))
        _require(worst < DOS_NORMALIZATION_TOL, f"max deviation {worst:.3e}")
        return f"{len(bands)} bands, max deviation {worst:.1e}"

    def check_zero_temperature_anchor(self) -> str:
        try:
            vacuum = vacuum_energy(self.comb, self.tolerances).value
            values = [free_energy_matsubara(self._request(t, Method.MATSUBARA)).value for t in ANCHOR_TEMPERATURES]
        except ImaginaryAxisSpectrumException as e:
            raise _Skip(str(e))
        extrapolated = richardson_zero_limit(values)
        _require(abs(extrapolated - vacuum) < ANCHOR_TOL, f"F_sub(T->0)={extrapolated:.10g} vs E0_sub={vacuum:.10g}")
        return f"E0_sub={vacuum:.10g}, deviation {abs(extrapolated - vacuum):.1e}"

    def check_free_comb(self) -> str:
        model = self.comb.model
        if not (isinstance(model, DeltaPrimeDefect) and model.w0 == 0 and model.w1 == 0):
            raise _Skip("not a free comb")
        value = free_energy_matsubara(self._request(self.temperatures[0], Method.MATSUBARA)).value
        _require(value == 0.0, f"F_sub={value!r}")
        return "F_sub = 0"

    def checks(self) -> List[Callable[[], str]]:
        return [
            self.check_unitarity,
            self.check_representation_triangle,
            self.check_matsubara,
            self.check_alpha_independence,
            self.check_oracle,
            self.check_dos_normalization,
            self.check_zero_temperature_anchor,
            self.check_free_comb,
        ]

    def run(self) -> List[CheckOutcome]:
        outcomes = []
        for check in self.checks():
            name = check.__name__.removeprefix("check_")
            try:
                outcomes.append(CheckOutcome(name, PASS, check()))
            except _Skip as e:
                outcomes.append(CheckOutcome(name, SKIP, str(e)))
            except _Failed as e:
                outcomes.append(CheckOutcome(name, FAIL, str(e)))
            except CombThermoException as e:
                outcomes.append(CheckOutcome(name, FAIL, f"{e.__class__.__name__}: {e}"))
            logger.info(f"validate {name}: {outcomes[-1].status}")
        return outcomes


def outcomes_frame(outcomes: Sequence[CheckOutcome]) -> pd.DataFrame:
    return pd.DataFrame([vars(outcome) for outcome in outcomes], columns=["check", "status", "detail"])
