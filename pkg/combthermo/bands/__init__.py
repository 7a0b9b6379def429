from combthermo.bands.lattice import (
    AsymptoticLattice,
    CombSpec,
    Lattice,
    h_lattice,
    secular,
)
from combthermo.bands.spectrum import (
    FORBIDDEN,
    Band,
    DispersionPoint,
    Forbidden,
    ImaginaryBand,
    band_edges,
    clipped_theta,
    density_of_states,
    dispersion_point,
    dispersion_theta,
    imaginary_bands,
)

__all__ = [
    "AsymptoticLattice",
    "CombSpec",
    "Lattice",
    "h_lattice",
    "secular",
    "FORBIDDEN",
    "Band",
    "DispersionPoint",
    "Forbidden",
    "ImaginaryBand",
    "band_edges",
    "clipped_theta",
    "density_of_states",
    "dispersion_point",
    "dispersion_theta",
    "imaginary_bands",
]
