import functools
import logging
import math
import sys
from typing import Any, Callable, Dict, Final, List, Optional

import click
import pandas as pd

from combthermo.bands import band_edges, density_of_states
from combthermo.cli.output import write_frame
from combthermo.cli.validate import FAIL, ValidationBattery, outcomes_frame
from combthermo.config import ConfigManager, RunConfig
from combthermo.const import BOX_MIN_CELLS, WORKERS_ENV
from combthermo.exception import (
    ConfigurationException,
    EdgeSingularityException,
    ImaginaryAxisSpectrumException,
    InvalidParameterException,
    NumericException,
)
from combthermo.scattering import DeltaPrimeDefect
from combthermo.sweep import SweepGrid, run_sweep
from combthermo.thermo import (
    Method,
    ThermoRequest,
    Tolerances,
    delta_f,
    delta_f_massive_single_defect,
    delta_f_single_defect,
    entropy,
    entropy_single_defect,
)

logger: Final[logging.Logger] = logging.getLogger(__name__)

EXIT_VALIDATION_FAILED: Final[int] = 1
EXIT_CONFIGURATION: Final[int] = 2
EXIT_NUMERIC: Final[int] = 3


def run_options(func: Callable) -> Callable:
    @click.option("--config", "config_path", required=True, type=click.Path(dir_okay=False), help="YAML run config")
    @click.option("--out", default=None, type=click.Path(dir_okay=False), help="output file (default: stdout)")
    @click.option("--format", "fmt", default=None, type=click.Choice(["csv", "json"]), help="output format")
    @click.option("--workers", default=None, type=int, envvar=WORKERS_ENV, help="worker processes for sweeps")
    @functools.wraps(func)
    def wrapper(config_path: str, out: Optional[str], fmt: Optional[str], workers: Optional[int], **kwargs):
        try:
            config = ConfigManager().load_run_config(config_path)
            frame = func(config, workers=workers, **kwargs)
        except ConfigurationException as e:
            click.echo(f"configuration error: {e}", err=True)
            sys.exit(EXIT_CONFIGURATION)
        except NumericException as e:
            click.echo(f"numeric error: {e!r}", err=True)
            sys.exit(EXIT_NUMERIC)
        write_frame(frame, out or config.output.path, fmt or config.output.format)
        if frame.attrs.get("exit_code"):
            sys.exit(frame.attrs["exit_code"])
        return frame

    return wrapper


def _requests(config: RunConfig, method: Method) -> List[ThermoRequest]:
    temperatures = config.grid.temperature_values()
    if not temperatures:
        raise InvalidParameterException("grid", None, "grid.temperatures or grid.t_range")
    comb = config.build_comb()
    tolerances = config.tolerances.build()
    return [
        ThermoRequest(
            lattice=comb,
            temperature=temperature,
            mass=config.mass,
            method=method,
            alpha=config.method.alpha,
            tolerances=tolerances,
        )
        for temperature in temperatures
    ]


@click.group()
@click.option("-v", "--verbose", count=True, help="-v for INFO, -vv for DEBUG")
def cli(verbose: int):
    """Band spectra and thermodynamics of a scalar field on a periodic comb."""
    try:
        manager = ConfigManager()
    except ConfigurationException as e:
        click.echo(f"configuration error: {e}", err=True)
        sys.exit(EXIT_CONFIGURATION)
    if verbose:
        manager.set_level(logging.DEBUG if verbose > 1 else logging.INFO)


@cli.command("bands")
@run_options
def cmd_bands(config: RunConfig, **_) -> pd.DataFrame:
    """Band edges below grid.omega_cut."""
    comb = config.build_comb()
    bands = band_edges(comb, config.omega_cut(), config.grid.max_bands)
    logger.info(f"{len(bands)} bands below omega_cut={config.omega_cut():g}")
    return pd.DataFrame(
        [
            {
                "n": band.index,
                "omega_min": band.omega_min,
                "omega_max": band.omega_max,
                "theta_at_min": band.theta_at_min,
                "theta_at_max": band.theta_at_max,
                "orientation": band.orientation,
            }
            for band in bands
        ],
        columns=["n", "omega_min", "omega_max", "theta_at_min", "theta_at_max", "orientation"],
    )


@cli.command("dos")
@run_options
def cmd_dos(config: RunConfig, **_) -> pd.DataFrame:
    """Density of states per unit cell on grid.dos; NaN inside the band-edge exclusion window."""
    if config.grid.dos is None:
        raise InvalidParameterException("grid.dos", None, "omega_min, omega_max, points")
    comb = config.build_comb()
    rows = []
    for omega in config.grid.dos.values():
        try:
            rows.append({"omega": omega, "dos": density_of_states(comb, omega)})
        except EdgeSingularityException as e:
            logger.warning(str(e))
            rows.append({"omega": omega, "dos": math.nan})
    return pd.DataFrame(rows, columns=["omega", "dos"])


def _methods(config: RunConfig) -> List[Method]:
    # the massive path runs on the rotated ray only
    if config.mass > 0 and config.method.name == "all":
        return [Method.ROTATED]
    return config.method.methods()


@cli.command("free-energy")
@run_options
def cmd_free_energy(config: RunConfig, **_) -> pd.DataFrame:
    """
    Thermal free energy per cell vs T as T,delta_f,err,method.

    With method=all delta_f carries the rotated value and every representation gets its own
    column next to it, together with the relative spread between them.
    """
    methods = _methods(config)
    primary = Method.ROTATED if Method.ROTATED in methods else methods[0]
    rows: Dict[float, Dict[str, Any]] = {}
    for method in methods:
        for request in _requests(config, method):
            row = rows.setdefault(request.temperature, {"T": request.temperature})
            try:
                result = delta_f(request)
            except ImaginaryAxisSpectrumException as e:
                if len(methods) == 1:
                    raise
                logger.warning(f"skipped: {e}", extra={"method": method.value, "T": request.temperature})
                row[method.value] = math.nan
                continue
            if method == primary:
                row.update(delta_f=result.value, err=result.err_estimate, method=result.method)
            if len(methods) > 1:
                row[method.value] = result.value
            for key in ("f_sub", "e0_sub"):
                if key in result.diagnostics:
                    row[key] = result.diagnostics[key]

    frame = pd.DataFrame(list(rows.values()))
    leading = ["T", "delta_f", "err", "method"]
    frame = frame[leading + [column for column in frame.columns if column not in leading]]
    if len(methods) > 1:
        values = frame[[method.value for method in methods]]
        frame["spread"] = (values.max(axis=1) - values.min(axis=1)) / values.abs().max(axis=1)
    return frame


@cli.command("entropy")
@click.option(
    "--check-fd/--no-check-fd",
    "check_fd",
    default=None,
    help="add the central-difference entropy (default: method.cross_check)",
)
@run_options
def cmd_entropy(config: RunConfig, check_fd: Optional[bool] = None, **_) -> pd.DataFrame:
    """Entropy per cell vs T as T,entropy,err (analytic dB/dT; optional finite-difference cross-check)."""
    method = Method.ROTATED if config.method.name == "all" else Method(config.method.name)
    cross_check = config.method.cross_check if check_fd is None else check_fd
    rows = []
    for request in _requests(config, method):
        result = entropy(request, cross_check=cross_check)
        row = {"T": request.temperature, "entropy": result.value, "err": result.err_estimate}
        if "fd_value" in result.diagnostics:
            row["entropy_fd"] = result.diagnostics["fd_value"]
            scale = abs(result.value)
            row["fd_spread"] = result.diagnostics["fd_difference"] / scale if scale > 0 else math.nan
        rows.append(row)
    return pd.DataFrame(rows)


@cli.command("sweep")
@run_options
def cmd_sweep(config: RunConfig, workers: Optional[int] = None, **_) -> pd.DataFrame:
    """Free energy or entropy over the (Omega, gamma) plane of delta-delta' combs."""
    sweep = config.grid.sweep
    if sweep is None:
        raise InvalidParameterException("grid.sweep", None, "omega, gamma, temperature")
    method = Method.ROTATED if config.method.name == "all" else Method(config.method.name)
    grid = SweepGrid(
        omegas=tuple(sweep.omega),
        gammas=tuple(sweep.gamma),
        temperature=sweep.temperature,
        a=config.lattice.a,
        quantity=sweep.quantity,
        method=method,
        alpha=config.method.alpha,
        tolerances=config.tolerances.build(),
    )
    return run_sweep(grid, workers)


@cli.command("single")
@run_options
def cmd_single(config: RunConfig, **_) -> pd.DataFrame:
    """Free energy and entropy of a single delta-delta' defect vs T."""
    defect = config.potential.build()
    if not isinstance(defect, DeltaPrimeDefect):
        raise InvalidParameterException("potential.kind", config.potential.kind, "delta_prime")
    tolerances = config.tolerances.build()
    rows = []
    for temperature in config.grid.temperature_values():
        if config.mass > 0:
            free_energy = delta_f_massive_single_defect(defect, config.mass, temperature, tolerances)
            rows.append({"T": temperature, "free_energy": free_energy.value})
            continue
        free_energy = delta_f_single_defect(defect, temperature, tolerances)
        entropy_value = entropy_single_defect(defect, temperature, tolerances)
        rows.append({"T": temperature, "free_energy": free_energy.value, "entropy": entropy_value.value})
    return pd.DataFrame(rows)


@cli.command("validate")
@click.option("--tolerance", default=None, type=float, help="override abs_tol for the whole battery")
@click.option("--oracle-cells", default=200, type=click.IntRange(min=BOX_MIN_CELLS), show_default=True)
@run_options
def cmd_validate(config: RunConfig, tolerance: Optional[float] = None, oracle_cells: int = 200, **_) -> pd.DataFrame:
    """Run the invariant battery and print a pass/fail table; exit 1 on any failure."""
    tolerances = config.tolerances.build()
    if tolerance is not None:
        tolerances = Tolerances(rel_tol=tolerances.rel_tol, abs_tol=tolerance)
    battery = ValidationBattery(
        config.build_comb(),
        config.grid.temperature_values(),
        tolerances,
        config.method.alpha,
        oracle_cells=oracle_cells,
    )
    frame = outcomes_frame(battery.run())
    if (frame["status"] == FAIL).any():
        click.echo(frame.to_string(index=False), err=True)
        frame.attrs["exit_code"] = EXIT_VALIDATION_FAILED
    return frame
