class CombThermoException(Exception):
    """Root of every error raised by combthermo."""

    def __init__(self, message: str = ""):
        super(CombThermoException, self).__init__(message)
        self.message = message

    def __str__(self):
        return self.message

    def __repr__(self):
        return f"{self.__class__.__name__}({self.__str__()!r})"


class ConfigurationException(CombThermoException):
    """Bad input: the CLI maps this family to exit code 2."""


class NumericException(CombThermoException):
    """A computation failed: the CLI maps this family to exit code 3."""
