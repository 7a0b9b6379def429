from typing import Optional

from combthermo.exception.base import NumericException


class PoleEvaluationException(NumericException):

    def __init__(self, k: complex, denominator: complex):
        super(PoleEvaluationException, self).__init__()
        self.k = k
        self.denominator = denominator

    def __str__(self):
        return f"Amplitude pole hit at k={self.k}: |denominator|={abs(self.denominator):.3e}"


class BranchPointException(NumericException):

    def __init__(self, omega: complex, temperature: float):
        super(BranchPointException, self).__init__()
        self.omega = omega
        self.temperature = temperature

    def __str__(self):
        return f"Boltzmann factor evaluated on a branch point omega={self.omega} (T={self.temperature})"


class BranchCutException(NumericException):

    def __init__(self, k: complex, h_value: complex):
        super(BranchCutException, self).__init__()
        self.k = k
        self.h_value = h_value


    def __str__(self):
        return f"h_V(k={self.k})={self.h_value} lies on the cut [-1, 1] of sqrt(h^2 - 1)"


class ScanResolutionExceededException(NumericException):

    def __init__(self, lo: float, hi: float, step: float):
        super(ScanResolutionExceededException, self).__init__()
        self.lo = lo
        self.hi = hi
        self.step = step

    def __str__(self):
        return (
            f"Unresolved spectral structure in [{self.lo:.12g}, {self.hi:.12g}] "
            f"at scan step {self.step:.3e}"
        )


class EdgeSingularityException(NumericException):

    def __init__(self, omega: float, distance: float):
        super(EdgeSingularityException, self).__init__()
        self.omega = omega
        self.distance = distance

    def __str__(self):
        return f"Density of states requested {self.distance:.2e} from a band edge (omega={self.omega:.12g})"


class PanelsExhaustedException(NumericException):

    def __init__(self, value: float, err_estimate: float, panels: int, reason: str = ""):
        super(PanelsExhaustedException, self).__init__()
        self.value = value
        self.err_estimate = err_estimate
        self.panels = panels
        self.reason = reason

    def __str__(self):
        return (
            f"Quadrature did not reach tolerance after {self.panels} panels: "
            f"partial value={self.value:.12g}, estimate={self.err_estimate:.3e} {self.reason}".rstrip()
        )


class NoSignChangeException(NumericException):

    def __init__(self, lo: float, hi: float, g_lo: float, g_hi: float):
        super(NoSignChangeException, self).__init__()
        self.lo = lo
        self.hi = hi
        self.g_lo = g_lo
        self.g_hi = g_hi

    def __str__(self):
        return f"No sign change on [{self.lo}, {self.hi}]: g={self.g_lo:.3e}, {self.g_hi:.3e}"


class MaxIterationsException(NumericException):

    def __init__(self, iterations: int, estimate: float):
        super(MaxIterationsException, self).__init__()
        self.iterations = iterations
        self.estimate = estimate

    def __str__(self):
        return f"Root refinement stopped after {self.iterations} iterations at {self.estimate}"


class TruncationUnreachableException(NumericException):

    def __init__(self, cutoff: float, bound: float, tolerance: float):
        super(TruncationUnreachableException, self).__init__()
        self.cutoff = cutoff
        self.bound = bound
        self.tolerance = tolerance

    def __str__(self):
        return f"Tail bound {self.bound:.3e} at cutoff {self.cutoff:.6g} exceeds tolerance {self.tolerance:.3e}"


class AlphaTooCloseException(NumericException):

    def __init__(self, alpha: float, margin: float):
        super(AlphaTooCloseException, self).__init__()
        self.alpha = alpha
        self.margin = margin

    def __str__(self):
        return f"Contour angle alpha={self.alpha} is within {self.margin} of 0 or pi/2"


class SumNotConvergedException(NumericException):

    def __init__(self, terms: int, last_change: float):
        super(SumNotConvergedException, self).__init__()
        self.terms = terms
        self.last_change = last_change

    def __str__(self):
        return f"Matsubara sum not converged after {self.terms} terms (last change {self.last_change:.3e})"


class UnstableSpectrumException(NumericException):

    def __init__(self, kappa: float, mass: float):
        super(UnstableSpectrumException, self).__init__()
        self.kappa = kappa
        self.mass = mass

    def __str__(self):
        return f"Imaginary-momentum state kappa={self.kappa:.6g} is not below the mass m={self.mass:.6g}"


class ImaginaryAxisSpectrumException(NumericException):

    def __init__(self, xi: float, h_value: Optional[float] = None):
        super(ImaginaryAxisSpectrumException, self).__init__()
        self.xi = xi
        self.h_value = h_value

    def __str__(self):
        located = f"h_V(i*{self.xi:.6g})" if self.h_value is None else f"|h_V(i*{self.xi:.6g})|={abs(self.h_value):.6g}"
        return (
            f"{located} <= 1: the comb has spectrum on the "
            f"imaginary axis and the Matsubara representation does not apply"
        )
