import math

import numpy as np
import pytest

from combthermo.bands import CombSpec
from combthermo.exception import InvalidParameterException
from combthermo.scattering import DeltaPrimeDefect
from combthermo.sweep import SWEEP_COLUMNS, SweepGrid, is_feasible, run_sweep
from combthermo.thermo import Method, ThermoRequest, delta_f


def test_feasibility():
    assert is_feasible(-1.0, 1.0)
    assert is_feasible(0.5, 0.1)
    assert not is_feasible(1.0, 1.0)
    assert not is_feasible(0.0, 1.0)
    assert not is_feasible(0.5, 0.0)


def test_grid_is_row_major():
    grid = SweepGrid(omegas=(0.5, -0.5), gammas=(1.0, 2.0, 3.0), temperature=1.0, a=1.0)
    assert grid.cells() == [(0.5, 1.0), (0.5, 2.0), (0.5, 3.0), (-0.5, 1.0), (-0.5, 2.0), (-0.5, 3.0)]
    with pytest.raises(InvalidParameterException):
        SweepGrid(omegas=(), gammas=(1.0,), temperature=1.0, a=1.0)
    with pytest.raises(InvalidParameterException):
        SweepGrid(omegas=(0.5,), gammas=(1.0,), temperature=1.0, a=1.0, quantity="pressure")


def test_serial_sweep():
    grid = SweepGrid(omegas=(0.6, 1.0), gammas=(0.6,), temperature=1.0, a=1.0)
    frame = run_sweep(grid, workers=1)
    assert list(frame.columns) == SWEEP_COLUMNS
    assert SWEEP_COLUMNS[:6] == ["Omega", "gamma", "T", "value", "err", "feasible"]
    assert len(frame) == 2

    feasible, infeasible = frame.iloc[0], frame.iloc[1]
    assert feasible["Omega"] == 0.6 and feasible["gamma"] == 0.6
    assert feasible["feasible"] and feasible["error"] == ""
    assert feasible["w0"] == pytest.approx(3.0)
    assert feasible["w1"] == pytest.approx(2.0)
    expected = delta_f(ThermoRequest(CombSpec(DeltaPrimeDefect(w0=3.0, w1=2.0), 1.0), 1.0, method=Method.ROTATED))
    assert feasible["value"] == pytest.approx(expected.value, rel=1e-10)
    assert 0 <= feasible["err"] < 1e-6

    assert not infeasible["feasible"]
    assert math.isnan(infeasible["value"])
    assert math.isnan(infeasible["err"])


def test_entropy_sweep():
    grid = SweepGrid(omegas=(-1.0,), gammas=(1.0,), temperature=1.0, a=1.0, quantity="entropy")
    frame = run_sweep(grid, workers=1)
    assert frame.iloc[0]["value"] > 0


def test_free_energy_is_negative_on_a_coarse_plane():
    grid = SweepGrid(omegas=(-0.9, 0.3, 0.9), gammas=(0.2, 2.0, 8.0), temperature=0.5, a=1.0)
    frame = run_sweep(grid, workers=1)
    assert frame["feasible"].all()
    assert (frame["value"] < 0).all()


@pytest.mark.slow
@pytest.mark.parametrize("temperature", (0.5, 5.0))
def test_free_energy_is_negative_on_the_plane(temperature):
    grid = SweepGrid(
        omegas=tuple(np.linspace(-0.9, 0.9, 20)),
        gammas=tuple(np.linspace(0.2, 8.0, 20)),
        temperature=temperature,
        a=1.0,
    )
    frame = run_sweep(grid)
    assert len(frame) == 400
    assert (frame["error"] == "").all()
    assert (frame["value"] < 0).all()


@pytest.mark.slow
def test_entropy_is_positive_on_the_plane():
    grid = SweepGrid(
        omegas=(-0.9, -0.45, 0.45, 0.9),
        gammas=tuple(np.linspace(0.2, 8.0, 5)),
        temperature=5.0,
        a=1.0,
        quantity="entropy",
    )
    frame = run_sweep(grid)
    assert (frame["error"] == "").all()
    assert (frame["value"] > 0).all()
