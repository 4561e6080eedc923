"""Exceptions raised by the gates package."""


class GateParameterError(ValueError):
    """A gate parameter set is malformed (not a rate-constraint violation)."""


class SolverFailure(RuntimeError):
    """Bisection could not bracket an equilibrium root."""


class ThresholdInfeasible(ValueError):
    """An equilibrium output landed in the invalid band [tau0, tau1]."""
