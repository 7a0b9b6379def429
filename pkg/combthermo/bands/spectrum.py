import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Final, List, Optional, Tuple, Union

from combthermo.const import (
    DEGENERATE_GAP_TOLERANCE,
    EDGE_EXCLUSION,
    EDGE_RELATIVE_TOLERANCE,
    HV_UNIT_TOLERANCE,
    SCAN_MAX_REFINEMENTS,
    SCAN_OVERSHOOT_PERIODS,
    SCAN_REFINEMENT,
    SCAN_STEPS_PER_PI,
)
from combthermo.bands.lattice import Lattice
from combthermo.exception import (
    EdgeSingularityException,
    InvalidParameterException,
    ScanResolutionExceededException,
)
from combthermo.numerics import RootSpec, find_root_bracketed

logger: Final[logging.Logger] = logging.getLogger(__name__)

RealFunction = Callable[[float], float]


class Forbidden(Enum):
    """Marker for a frequency inside a gap."""

    FORBIDDEN = "forbidden"


FORBIDDEN: Final[Forbidden] = Forbidden.FORBIDDEN


@dataclass(frozen=True)
class Band:
    index: int
    omega_min: float
    omega_max: float
    theta_at_min: float
    theta_at_max: float

    @property
    def width(self) -> float:
        return self.omega_max - self.omega_min

    @property
    def orientation(self) -> str:
        """"increasing" when theta grows with omega across the band."""
        return "increasing" if self.theta_at_max > self.theta_at_min else "decreasing"

    @property
    def theta_span(self) -> float:
        return abs(self.theta_at_max - self.theta_at_min)

    def contains(self, omega: float) -> bool:
        return self.omega_min <= omega <= self.omega_max


@dataclass(frozen=True)
class ImaginaryBand:
    """Allowed interval k = i*kappa on the positive imaginary axis (k^2 < 0 modes)."""

    index: int
    kappa_min: float
    kappa_max: float
    theta_at_min: float
    theta_at_max: float
    closed: bool = True


@dataclass(frozen=True)
class DispersionPoint:
    omega: float
    theta: float


def clipped_theta(h: float) -> float:
    return math.acos(max(-1.0, min(1.0, h)))


def _root_spec(lo: float, hi: float) -> RootSpec:
    return RootSpec(bracket=(lo, hi), tol_abs=EDGE_RELATIVE_TOLERANCE * max(1.0, abs(hi)))


class _BandScanner:
    """
    Sign scan of g(x) = |h(x)| - 1 on a uniform grid.

    Each grid step is split at the extremum of h (if dh changes sign) so that h is monotone on
    every piece; a monotone piece holds at most one crossing of +1 and one of -1.
    """

    def __init__(self, h: RealFunction, dh: RealFunction, step: float):
        self.h = h
        self.dh = dh
        self.step = step

    def _crossing(self, lo: float, hi: float, target: float) -> float:
        return find_root_bracketed(lambda x: self.h(x) - target, _root_spec(lo, hi))

    def _piece_events(self, p: float, q: float, hp: float, hq: float) -> List[Tuple[str, float]]:
        allowed_p, allowed_q = abs(hp) <= 1.0, abs(hq) <= 1.0
        if allowed_p and not allowed_q:
            return [("close", self._crossing(p, q, math.copysign(1.0, hq)))]
        if allowed_q and not allowed_p:
            return [("open", self._crossing(p, q, math.copysign(1.0, hp)))]
        if not allowed_p and not allowed_q and hp * hq < 0:
            # a whole band inside one step
            return [
                ("open", self._crossing(p, q, math.copysign(1.0, hp))),
                ("close", self._crossing(p, q, math.copysign(1.0, hq))),
            ]
        return []

    def interval_events(self, lo: float, hi: float) -> List[Tuple[str, float]]:
        h_lo, h_hi = self.h(lo), self.h(hi)
        d_lo, d_hi = self.dh(lo), self.dh(hi)

        if d_lo == 0 and lo > 0 and 1.0 - DEGENERATE_GAP_TOLERANCE <= abs(h_lo) <= 1.0 and abs(h_hi) <= 1.0:
            return [("close", lo), ("open", lo)] + self._piece_events(lo, hi, h_lo, h_hi)

        if d_lo * d_hi >= 0:
            if (h_hi - h_lo) * d_lo < 0 and abs(h_hi - h_lo) > DEGENERATE_GAP_TOLERANCE:
                # h moved against its slope: two unresolved extrema
                raise ScanResolutionExceededException(lo, hi, self.step)
            return self._piece_events(lo, hi, h_lo, h_hi)

        extremum = find_root_bracketed(self.dh, _root_spec(lo, hi))
        h_star = self.h(extremum)
        events = self._piece_events(lo, extremum, h_lo, h_star)
        if abs(h_lo) <= 1.0 and abs(h_hi) <= 1.0 and 1.0 - DEGENERATE_GAP_TOLERANCE <= abs(h_star) <= 1.0:
            # touching gap of zero width
            events += [("close", extremum), ("open", extremum)]
        events += self._piece_events(extremum, hi, h_star, h_hi)
        return events

    def scan(
        self, cut: float, max_bands: int, overshoot: Optional[float]
    ) -> List[Tuple[float, float, bool]]:
        """Allowed intervals (lo, hi, closed) starting below `cut`.

        With `overshoot` the scan continues past `cut` (up to cut + overshoot) until the last band
        closes; without it an open band is cut at `cut` and reported with closed=False.
        """
        intervals: List[Tuple[float, float, bool]] = []
        opened: Optional[float] = 0.0 if abs(self.h(0.0)) <= 1.0 else None
        limit = cut + (overshoot or 0.0)
        j = 0
        while len(intervals) < max_bands:
            lo, hi = j * self.step, (j + 1) * self.step
            if lo >= cut and (opened is None or overshoot is None or intervals[-1:] and intervals[-1][1] >= cut):
                # any band still open here starts at or beyond the cut
                break
            if lo > limit:
                raise ScanResolutionExceededException(opened, lo, self.step)
            for kind, edge in self.interval_events(lo, hi):
                if kind == "open":
                    if opened is not None:
                        raise ScanResolutionExceededException(opened, edge, self.step)
                    opened = edge
                else:
                    if opened is None:
                        raise ScanResolutionExceededException(lo, edge, self.step)
                    intervals.append((opened, edge, True))
                    opened = None
            j += 1

        if opened is not None and overshoot is None and len(intervals) < max_bands:
            intervals.append((opened, cut, False))
        return [interval for interval in intervals if interval[0] < cut][:max_bands]


def _scan_with_refinement(
    h: RealFunction, dh: RealFunction, cut: float, max_bands: int, step: float, overshoot: Optional[float]
) -> List[Tuple[float, float, bool]]:
    for attempt in range(SCAN_MAX_REFINEMENTS + 1):
        try:
            return _BandScanner(h, dh, step).scan(cut, max_bands, overshoot)
        except ScanResolutionExceededException as e:
            if attempt == SCAN_MAX_REFINEMENTS:
                raise
            logger.debug(f"band scan refined after {e}")
            step /= SCAN_REFINEMENT
    raise AssertionError("unreachable")


def band_edges(
    comb: Lattice, omega_cut: float, max_bands: int = 100_000, step: Optional[float] = None
) -> List[Band]:
    """
    Bands |h_V(omega)| <= 1 with omega_min < omega_cut, in increasing order.

    Args:
        comb: the lattice.
        omega_cut: only bands starting below this frequency are returned; the last one is
            followed past the cut until it closes.
        max_bands: upper bound on the number of bands.
        step: initial scan step, default pi/(64 a); refined x4 on unresolved structure.

    Raises:
        ScanResolutionExceededException: structure still unresolved after the allowed refinements.
    """
    if not omega_cut > 0:
        raise InvalidParameterException("omega_cut", omega_cut, "omega_cut > 0")
    if max_bands < 1:
        raise InvalidParameterException("max_bands", max_bands, "max_bands >= 1")
    step = step or math.pi / (SCAN_STEPS_PER_PI * comb.a)
    overshoot = SCAN_OVERSHOOT_PERIODS * math.pi / comb.a
    intervals = _scan_with_refinement(comb.h_real, comb.dh_real, omega_cut, max_bands, step, overshoot)
    return [
        Band(n, lo, hi, clipped_theta(comb.h_real(lo)), clipped_theta(comb.h_real(hi)))
        for n, (lo, hi, _) in enumerate(intervals, start=1)
    ]


def imaginary_bands(comb: Lattice, kappa_max: float, step: Optional[float] = None) -> List[ImaginaryBand]:
    """Allowed intervals of the secular equation at k = i*kappa, 0 <= kappa <= kappa_max."""
    if not kappa_max > 0:
        raise InvalidParameterException("kappa_max", kappa_max, "kappa_max > 0")

    def h(kappa: float) -> float:
        return comb.h(1j * kappa).real

    def dh(kappa: float) -> float:
        return (1j * comb.dh(1j * kappa)).real

    step = step or math.pi / (SCAN_STEPS_PER_PI * comb.a)
    intervals = _scan_with_refinement(h, dh, kappa_max, 100_000, step, None)
    return [
        ImaginaryBand(n, lo, hi, clipped_theta(h(lo)), clipped_theta(h(hi)), closed)
        for n, (lo, hi, closed) in enumerate(intervals, start=1)
    ]


def dispersion_theta(comb: Lattice, omega: float) -> Union[float, Forbidden]:
    """theta = arccos h_V(omega) in [0, pi], or FORBIDDEN inside a gap."""
    if not omega > 0:
        raise InvalidParameterException("omega", omega, "omega > 0")
    h = comb.h_real(omega)
    if abs(h) > 1.0 + HV_UNIT_TOLERANCE:
        return FORBIDDEN
    return clipped_theta(h)


def dispersion_point(comb: Lattice, omega: float) -> Optional[DispersionPoint]:
    theta = dispersion_theta(comb, omega)
    return None if theta is FORBIDDEN else DispersionPoint(omega, theta)


def density_of_states(comb: Lattice, omega: float) -> float:
    """
    |d theta/d omega| / pi per unit cell, 0 in gaps.

    Raises:
        EdgeSingularityException: omega lies within the exclusion window of a band edge.
    """
    if not omega > 0:
        raise InvalidParameterException("omega", omega, "omega > 0")
    h, dh = comb.h_real(omega), comb.dh_real(omega)
    # 1 - h^2 from the lattice keeps its relative accuracy where the bands touch
    gap = comb.unit_gap_real(omega)
    if dh == 0:
        distance = math.inf if gap != 0 else 0.0
    else:
        distance = abs(gap) / ((1.0 + abs(h)) * abs(dh))
    if distance < EDGE_EXCLUSION:
        raise EdgeSingularityException(omega, distance)
    if gap < 0:
        return 0.0
    return abs(dh) / (math.pi * math.sqrt(gap))
