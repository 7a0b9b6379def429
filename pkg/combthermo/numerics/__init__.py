from combthermo.numerics.quadrature import (
    ExpTail,
    QuadratureResult,
    QuadratureSpec,
    SqrtEdge,
    integrate_adaptive,
    tail_cutoff,
)
from combthermo.numerics.roots import RootSpec, find_root_bracketed
from combthermo.numerics.special import sinc_and_derivative

__all__ = [
    "ExpTail",
    "QuadratureResult",
    "QuadratureSpec",
    "SqrtEdge",
    "integrate_adaptive",
    "tail_cutoff",
    "RootSpec",
    "find_root_bracketed",
    "sinc_and_derivative",
]
