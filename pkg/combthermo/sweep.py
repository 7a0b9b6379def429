import logging
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from typing import Any, Dict, Final, List, Optional, Sequence, Tuple

import pandas as pd

from combthermo.bands import CombSpec
from combthermo.const import DEFAULT_ALPHA, WORKERS_ENV
from combthermo.exception import CombThermoException, InvalidParameterException
from combthermo.scattering import DeltaPrimeDefect
from combthermo.thermo import Method, Tolerances, ThermoRequest, delta_f, entropy

logger: Final[logging.Logger] = logging.getLogger(__name__)

SWEEP_COLUMNS: Final[List[str]] = [
    "Omega",
    "gamma",
    "T",
    "value",
    "err",
    "feasible",
    "w0",
    "w1",
    "error",
]


@dataclass(frozen=True)
class SweepGrid:
    """(Omega, gamma) plane of delta-delta' combs at one temperature."""

    omegas: Tuple[float, ...]
    gammas: Tuple[float, ...]
    temperature: float
    a: float
    quantity: str = "free_energy"
    method: Method = Method.ROTATED
    alpha: float = DEFAULT_ALPHA
    tolerances: Tolerances = field(default_factory=Tolerances)

    def __post_init__(self):
        if self.quantity not in ("free_energy", "entropy"):
            raise InvalidParameterException("quantity", self.quantity, "free_energy or entropy")
        if not self.omegas or not self.gammas:
            raise InvalidParameterException("sweep", (self.omegas, self.gammas), "non-empty omega and gamma lists")

    def cells(self) -> List[Tuple[float, float]]:
        """Row-major: omega outer, gamma inner."""
        return list(product(self.omegas, self.gammas))


def is_feasible(omega: float, gamma: float) -> bool:
    """-1 <= Omega < 1, Omega != 0 (t vanishes identically) and gamma > 0."""
    return -1.0 <= omega < 1.0 and abs(omega) >= 1e-12 and gamma > 0


def _evaluate_cell(task: Tuple[SweepGrid, float, float]) -> Dict[str, Any]:
    # runs in a worker process; errors travel back as text
    grid, omega, gamma = task
    row: Dict[str, Any] = {
        "Omega": omega,
        "gamma": gamma,
        "T": grid.temperature,
        "feasible": is_feasible(omega, gamma),
        "w0": math.nan,
        "w1": math.nan,
        "value": math.nan,
        "err": math.nan,
        "error": "",
    }
    if not row["feasible"]:
        return row
    try:
        defect = DeltaPrimeDefect.from_omega_gamma(omega, gamma)
        request = ThermoRequest(
            lattice=CombSpec(defect, grid.a),
            temperature=grid.temperature,
            method=grid.method,
            alpha=grid.alpha,
            tolerances=grid.tolerances,
        )
        result = entropy(request) if grid.quantity == "entropy" else delta_f(request)
        row.update(w0=defect.w0, w1=defect.w1, value=result.value, err=result.err_estimate)
    except CombThermoException as e:
        row["error"] = f"{e.__class__.__name__}: {e}"
    return row


def default_workers() -> int:
    configured = os.getenv(WORKERS_ENV)
    if configured:
        return max(1, int(configured))
    return os.cpu_count() or 1


def run_sweep(grid: SweepGrid, workers: Optional[int] = None) -> pd.DataFrame:
    """
    Evaluate every cell of the grid; rows come back in grid order regardless of completion order.

    Infeasible cells are kept with feasible=False and NaN values.
    """
    tasks: Sequence[Tuple[SweepGrid, float, float]] = [(grid, omega, gamma) for omega, gamma in grid.cells()]
    workers = workers or default_workers()
    logger.info(f"sweep: {len(tasks)} cells on {workers} worker(s)")
    if workers == 1:
        rows = [_evaluate_cell(task) for task in tasks]
    else:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            rows = list(executor.map(_evaluate_cell, tasks))

    failed = [row for row in rows if row["error"]]
    for row in failed:
        logger.warning(f"sweep cell failed: {row['error']}", extra={"cell": f"Omega={row['Omega']:g}, gamma={row['gamma']:g}"})
    return pd.DataFrame(rows, columns=SWEEP_COLUMNS)
