from combthermo.exception import InvalidParameterException
from combthermo.thermo.massive import delta_f_massive
from combthermo.thermo.matsubara import delta_f_matsubara
from combthermo.thermo.models import Method, ThermoRequest, ThermoResult
from combthermo.thermo.real_axis import delta_f_real_axis
from combthermo.thermo.rotated import delta_f_rotated


def delta_f(req: ThermoRequest) -> ThermoResult:
    """
    Thermal free energy per cell by the requested representation.

    Raises:
        InvalidParameterException: m > 0 with a method other than rotated.
    """
    if req.mass > 0:
        if req.method != Method.ROTATED:
            raise InvalidParameterException("method", req.method.value, "rotated when m > 0")
        return delta_f_massive(req)
    if req.method == Method.REAL_AXIS:
        return delta_f_real_axis(req)
    if req.method == Method.MATSUBARA:
        return delta_f_matsubara(req)
    return delta_f_rotated(req)
