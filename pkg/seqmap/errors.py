"""Exceptions raised by the seqmap package."""


class GridMismatch(ValueError):
    """Output, reference and time samples do not share one grid, or the delay is below one step."""


class NonSettling(RuntimeError):
    """A simulated transition did not come within kappa of its target before the horizon."""
