"""Exceptions raised by the oracle package."""


class MissingVariable(KeyError):
    """An assignment does not cover a variable of the expression."""
