"""Exceptions raised by the kinetics package."""


class KineticsDomainError(ValueError):
    """A rate-law argument lies outside its admissible range."""


class ScheduleError(ValueError):
    """An enzyme schedule is malformed or undefined where it is needed."""


class NetworkError(ValueError):
    """A reaction network is structurally invalid."""


class IntegrationError(RuntimeError):
    """The ODE stepper failed or produced concentrations outside [0, 1]."""
