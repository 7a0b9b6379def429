from typing import Any

from combthermo.exception.base import ConfigurationException


class InvalidParameterException(ConfigurationException):

    def __init__(self, parameter: str, value: Any, constraint: str):
        super(InvalidParameterException, self).__init__()
        self.parameter = parameter
        self.value = value
        self.constraint = constraint

    def __str__(self):
        return f"Invalid {self.parameter}={self.value!r}: requires {self.constraint}"


class ModelNotSupportedException(ConfigurationException):

    def __init__(self, model_type: str):
        super(ModelNotSupportedException, self).__init__()
        self.model_type = model_type

    def __str__(self):
        return f"Potential {self.model_type} not supported"
