from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from kinetics.errors import ScheduleError


@dataclass(frozen=True)
class Schedule:
    """
    Piecewise-constant, right-continuous concentration profile.

    ``levels[i]`` holds on ``[times[i], times[i + 1])``; the last level holds
    forever. Before ``times[0]`` the schedule is undefined. Insert/extract
    events of an immobilised enzyme map to switches between 0 and 1, but any
    level in [0, 1] is accepted.
    """

    times: tuple[float, ...]
    levels: tuple[float, ...]

    def __post_init__(self):
        if len(self.times) == 0:
            raise ScheduleError("a schedule needs at least one segment")
        if len(self.times) != len(self.levels):
            raise ScheduleError(
                f"schedule has {len(self.times)} switch times but {len(self.levels)} levels"
            )
        if any(not (b > a) for a, b in zip(self.times, self.times[1:])):
            raise ScheduleError(f"switch times must be strictly increasing: {self.times}")
        if any(math.isnan(t) for t in self.times):
            raise ScheduleError("switch times must not be NaN")
        for level in self.levels:
            if not (0.0 <= level <= 1.0):
                raise ScheduleError(f"schedule level {level} outside [0, 1]")

    @classmethod
    def constant(cls, level):
        """Schedule defined for all times at a fixed level."""
        return cls((-math.inf,), (float(level),))

    @classmethod
    def from_steps(cls, steps):
        """
        Build a schedule from ``[(switch_time, level), ...]``.

        Consecutive steps with the same level are merged so the switch points
        are exactly the instants where the level changes.
        """
        times, levels = [], []
        for t, level in sorted(((float(t), float(v)) for t, v in steps), key=lambda p: p[0]):
            if levels and level == levels[-1]:
                continue
            if times and t == times[-1]:
                raise ScheduleError(f"two steps at t={t}")
            times.append(t)
            levels.append(level)
        return cls(tuple(times), tuple(levels))

    @property
    def start(self):
        return self.times[0]

    def value_at(self, t):
        """Level at time ``t`` (right-continuous)."""
        if t < self.times[0]:
            raise ScheduleError(f"schedule undefined at t={t} (starts at {self.times[0]})")
        idx = int(np.searchsorted(self.times, t, side="right")) - 1
        return self.levels[idx]

    def values(self, times):
        """Vectorised :meth:`value_at` over an array of instants."""
        times = np.asarray(times, dtype=float)
        if times.size and times.min() < self.times[0]:
            raise ScheduleError(f"schedule undefined before t={self.times[0]}")
        idx = np.searchsorted(self.times, times, side="right") - 1
        return np.asarray(self.levels, dtype=float)[idx]

    def switch_points(self, t0, t_end):
        """Switch instants strictly inside ``(t0, t_end)``."""
        return [t for t in self.times[1:] if t0 < t < t_end]

    def shifted(self, delay):
        """The same profile delayed by ``delay`` time units."""
        return Schedule(tuple(t + delay for t in self.times), self.levels)
