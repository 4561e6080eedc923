"""Exceptions and exit codes of the command-line tools."""

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_CONFIG = 2
EXIT_NUMERIC = 3


class ConfigError(ValueError):
    """
    A scenario file cannot be turned into valid objects.

    ``location`` is ``line L, column C`` for syntax errors and a dotted field
    path (``gate.bias_level``) otherwise.
    """

    def __init__(self, message, location=None):
        super().__init__(message)
        self.location = location

    def __str__(self):
        message = super().__str__()
        return f"{self.location}: {message}" if self.location else message
