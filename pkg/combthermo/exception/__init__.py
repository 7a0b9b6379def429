from combthermo.exception.base import (
    CombThermoException,
    ConfigurationException,
    NumericException,
)
from combthermo.exception.config import (
    InvalidParameterException,
    ModelNotSupportedException,
)
from combthermo.exception.numeric import (
    AlphaTooCloseException,
    BranchCutException,
    BranchPointException,
    EdgeSingularityException,
    ImaginaryAxisSpectrumException,
    MaxIterationsException,
    NoSignChangeException,
    PanelsExhaustedException,
    PoleEvaluationException,
    ScanResolutionExceededException,
    SumNotConvergedException,
    TruncationUnreachableException,
    UnstableSpectrumException,
)

__all__ = [
    "CombThermoException",
    "ConfigurationException",
    "NumericException",
    "InvalidParameterException",
    "ModelNotSupportedException",
    "AlphaTooCloseException",
    "BranchCutException",
    "BranchPointException",
    "EdgeSingularityException",
    "ImaginaryAxisSpectrumException",
    "MaxIterationsException",
    "NoSignChangeException",
    "PanelsExhaustedException",
    "PoleEvaluationException",
    "ScanResolutionExceededException",
    "SumNotConvergedException",
    "TruncationUnreachableException",
    "UnstableSpectrumException",
]
