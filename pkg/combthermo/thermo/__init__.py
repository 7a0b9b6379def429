from combthermo.thermo.boltzmann import boltzmann, boltzmann_temperature_derivative
from combthermo.thermo.entropy import entropy, entropy_finite_difference
from combthermo.thermo.free_energy import delta_f
from combthermo.thermo.massive import (
    MASSIVE_METHOD,
    bound_state_term,
    delta_f_massive,
    delta_f_massive_single_defect,
)
from combthermo.thermo.matsubara import (
    delta_f_matsubara,
    free_energy_matsubara,
    matsubara_frequencies,
    regulator,
    subtracted_log,
    vacuum_energy,
)
from combthermo.thermo.models import Method, Tolerances, ThermoRequest, ThermoResult
from combthermo.thermo.real_axis import delta_f_real_axis, entropy_real_axis
from combthermo.thermo.rotated import (
    delta_f_rotated,
    entropy_rotated,
    lattice_kernel,
    rotated_integrand,
    rotated_integrand_two_ray,
)
from combthermo.thermo.single import (
    delta_f_single_defect,
    entropy_single_defect,
    phase_shift_integral,
    point_defect,
)

__all__ = [
    "boltzmann",
    "boltzmann_temperature_derivative",
    "entropy",
    "entropy_finite_difference",
    "delta_f",
    "MASSIVE_METHOD",
    "bound_state_term",
    "delta_f_massive",
    "delta_f_massive_single_defect",
    "delta_f_matsubara",
    "free_energy_matsubara",
    "matsubara_frequencies",
    "regulator",
    "subtracted_log",
    "vacuum_energy",
    "Method",
    "Tolerances",
    "ThermoRequest",
    "ThermoResult",
    "delta_f_real_axis",
    "entropy_real_axis",
    "delta_f_rotated",
    "entropy_rotated",
    "lattice_kernel",
    "rotated_integrand",
    "rotated_integrand_two_ray",
    "delta_f_single_defect",
    "entropy_single_defect",
    "phase_shift_integral",
    "point_defect",
]
