from combthermo.bands import CombSpec, band_edges, density_of_states, dispersion_theta
from combthermo.scattering import DeltaPrimeDefect, PoschlTellerDefect
from combthermo.thermo import (
    Method,
    ThermoRequest,
    ThermoResult,
    Tolerances,
    delta_f,
    entropy,
)

__version__ = "0.1.0"

__all__ = [
    "CombSpec",
    "band_edges",
    "density_of_states",
    "dispersion_theta",
    "DeltaPrimeDefect",
    "PoschlTellerDefect",
    "Method",
    "ThermoRequest",
    "ThermoResult",
    "Tolerances",
    "delta_f",
    "entropy",
]
