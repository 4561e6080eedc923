from __future__ import annotations

import enum
from dataclasses import dataclass

from gates.errors import GateParameterError


class LogicLevel(enum.Enum):
    ZERO = "0"
    ONE = "1"
    INVALID = "X"

    @classmethod
    def from_bit(cls, bit):
        return cls.ONE if bit else cls.ZERO

    def to_bit(self):
        if self is LogicLevel.INVALID:
            raise ValueError("an invalid logic level has no Boolean value")
        return 1 if self is LogicLevel.ONE else 0

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class ThresholdConfig:
    """Logic thresholds: below ``tau0`` reads 0, above ``tau1`` reads 1."""

    tau0: float = 0.2
    tau1: float = 0.8

    def __post_init__(self):
        if not (0.0 < self.tau0 < self.tau1 < 1.0):
            raise GateParameterError(
                f"thresholds must satisfy 0 < tau0 < tau1 < 1, got tau0={self.tau0}, tau1={self.tau1}"
            )


def threshold(x, cfg=ThresholdConfig()):
    """
    Map a relative concentration to a logic level.

    Parameters:
        x (float): Concentration in [0, 1].
        cfg (ThresholdConfig): Thresholds.

    Returns:
        LogicLevel: ZERO below tau0, ONE above tau1, INVALID in between.
    """
    if not (0.0 <= x <= 1.0):
        raise ValueError(f"concentration {x} outside [0, 1]")
    if x < cfg.tau0:
        return LogicLevel.ZERO
    if x > cfg.tau1:
        return LogicLevel.ONE
    return LogicLevel.INVALID
