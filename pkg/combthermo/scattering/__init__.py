from combthermo.scattering.base import (
    BoundState,
    ScatteringAmplitudes,
    ScatteringModel,
    build_model,
    describe,
    find_model_class,
)
from combthermo.scattering.delta_prime import DeltaPrimeDefect
from combthermo.scattering.poschl_teller import PoschlTellerDefect


def amplitudes_delta_prime(defect: DeltaPrimeDefect, k: complex) -> ScatteringAmplitudes:
    return defect.amplitudes(k)


def amplitudes_poschl_teller(defect: PoschlTellerDefect, k: complex) -> ScatteringAmplitudes:
    return defect.amplitudes(k)


def phase_shift(defect: DeltaPrimeDefect, k: float) -> float:
    return defect.phase_shift(k)


def phase_shift_derivative(defect: DeltaPrimeDefect, k: float) -> float:
    return float(defect.phase_shift_derivative(k))


def bound_states(model: ScatteringModel):
    return model.bound_states()


__all__ = [
    "BoundState",
    "ScatteringAmplitudes",
    "ScatteringModel",
    "DeltaPrimeDefect",
    "PoschlTellerDefect",
    "build_model",
    "describe",
    "find_model_class",
    "amplitudes_delta_prime",
    "amplitudes_poschl_teller",
    "phase_shift",
    "phase_shift_derivative",
    "bound_states",
]
