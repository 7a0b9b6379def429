import pytest

from combthermo.bands import CombSpec
from combthermo.scattering import DeltaPrimeDefect, PoschlTellerDefect
from combthermo.thermo import Tolerances


@pytest.fixture
def free_comb() -> CombSpec:
    return CombSpec(DeltaPrimeDefect(w0=0.0, w1=0.0), a=1.0)


@pytest.fixture
def delta_prime_comb() -> CombSpec:
    """gamma = 0.6, Omega = 0.6"""
    return CombSpec(DeltaPrimeDefect(w0=3.0, w1=2.0), a=1.0)


@pytest.fixture
def kronig_penney_comb() -> CombSpec:
    return CombSpec(DeltaPrimeDefect(w0=8.0, w1=0.0), a=1.0)


@pytest.fixture
def weak_delta_prime_comb() -> CombSpec:
    return CombSpec(DeltaPrimeDefect(w0=0.1, w1=5.0), a=1.0)


@pytest.fixture
def poschl_teller_comb() -> CombSpec:
    return CombSpec(PoschlTellerDefect(epsilon=0.5), a=1.0)


@pytest.fixture
def tight() -> Tolerances:
    return Tolerances(rel_tol=1e-11, abs_tol=1e-13)
