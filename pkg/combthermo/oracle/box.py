import logging
import math
from dataclasses import dataclass
from typing import Final, List, Tuple

import numpy as np

from combthermo.bands import Lattice
from combthermo.const import BOX_MIN_CELLS, BOX_STEPS_PER_PI, EDGE_RELATIVE_TOLERANCE
from combthermo.exception import InvalidParameterException
from combthermo.numerics import RootSpec, find_root_bracketed
from combthermo.thermo.boltzmann import boltzmann

logger: Final[logging.Logger] = logging.getLogger(__name__)


@dataclass(frozen=True)
class BoxSpectrum:
    """Eigenfrequencies of N cells closed periodically, sampled at theta_i = (i - 1/2) pi / N."""

    n_cells: int
    omega_cut: float
    thetas: Tuple[float, ...]
    frequencies: Tuple[Tuple[float, ...], ...]

    @property
    def count(self) -> int:
        return sum(len(level) for level in self.frequencies)

    def flat(self) -> np.ndarray:
        return np.array([omega for level in self.frequencies for omega in level])


def _level_roots(comb: Lattice, target: float, omega_cut: float, step: float) -> List[float]:
    """All omega < omega_cut with h_V(omega) = target, h split into monotone pieces per step."""

    def g(omega: float) -> float:
        return comb.h_real(omega) - target

    def spec(lo: float, hi: float) -> RootSpec:
        return RootSpec(bracket=(lo, hi), tol_abs=EDGE_RELATIVE_TOLERANCE * max(1.0, hi))

    roots: List[float] = []
    steps = math.ceil(omega_cut / step)
    for j in range(steps):
        lo, hi = j * step, min((j + 1) * step, omega_cut)
        points = [lo, hi]
        d_lo, d_hi = comb.dh_real(lo), comb.dh_real(hi)
        if d_lo * d_hi < 0:
            points.insert(1, find_root_bracketed(comb.dh_real, spec(lo, hi)))
        for p, q in zip(points[:-1], points[1:]):
            g_p, g_q = g(p), g(q)
            # roots at a shared point are counted by the piece that ends there
            if g_p * g_q < 0 or (g_q == 0 and g_p != 0):
                roots.append(find_root_bracketed(g, spec(p, q)))
    return [omega for omega in roots if 0 < omega < omega_cut]


def box_spectrum(comb: Lattice, n_cells: int, omega_cut: float) -> BoxSpectrum:
    """
    Solve cos(theta_i) = h_V(omega) for every sampled theta_i below omega_cut.

    The scan step is pi/(256 a) with an extra split at each extremum of h_V.
    """
    if n_cells < BOX_MIN_CELLS:
        raise InvalidParameterException("N", n_cells, f"N >= {BOX_MIN_CELLS}")
    if not omega_cut > 0:
        raise InvalidParameterException("omega_cut", omega_cut, "omega_cut > 0")
    step = math.pi / (BOX_STEPS_PER_PI * comb.a)
    thetas = tuple((i - 0.5) * math.pi / n_cells for i in range(1, n_cells + 1))
    frequencies = tuple(tuple(_level_roots(comb, math.cos(theta), omega_cut, step)) for theta in thetas)
    spectrum = BoxSpectrum(n_cells, omega_cut, thetas, frequencies)
    logger.debug(f"box N={n_cells} omega_cut={omega_cut:g}: {spectrum.count} levels")
    return spectrum


def delta_f_bruteforce(comb: Lattice, temperature: float, n_cells: int, omega_cut: float) -> float:
    """(1/N) sum of B(omega, T) over the box spectrum."""
    spectrum = box_spectrum(comb, n_cells, omega_cut)
    return sum(boltzmann(omega, temperature) for omega in spectrum.flat()) / n_cells
