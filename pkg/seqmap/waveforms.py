"""Input waveform generators: seeded random segments and exhaustive sweeps."""

from __future__ import annotations

import itertools

import numpy as np

from kinetics.schedule import Schedule


def random_waveforms(names, segments, min_length, max_length=None, seed=None, grid=None, t0=0.0):
    """
    Random piecewise-constant 0/1 inputs sharing their segment boundaries.

    Every segment draws a fresh assignment for all inputs, so consecutive
    input changes are at least ``min_length`` apart.

    Parameters:
        names (sequence of str): Input names.
        segments (int): Number of segments, >= 1.
        min_length (float): Shortest segment, > 0.
        max_length (float, optional): Longest segment; ``2 * min_length`` by default.
        seed (int | np.random.Generator, optional): Seed or generator.
        grid (float, optional): Round segment lengths up to multiples of this step.
        t0 (float): Start of the first segment.

    Returns:
        tuple[dict[str, Schedule], float]: Schedules and the end of the last segment.
    """
    if segments < 1:
        raise ValueError(f"need at least one segment, got {segments}")
    if not min_length > 0:
        raise ValueError(f"min_length must be > 0, got {min_length}")
    max_length = 2.0 * min_length if max_length is None else max_length
    if max_length < min_length:
        raise ValueError(f"max_length {max_length} is below min_length {min_length}")
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)

    names = tuple(names)
    lengths = rng.uniform(min_length, max_length, size=segments)
    if grid:
        lengths = np.ceil(lengths / grid - 1e-9) * grid
    starts = t0 + np.concatenate([[0.0], np.cumsum(lengths)[:-1]])
    levels = rng.integers(0, 2, size=(segments, len(names)))

    schedules = {
        name: Schedule.from_steps(zip(starts.tolist(), levels[:, i].astype(float).tolist()))
        for i, name in enumerate(names)
    }
    return schedules, float(t0 + lengths.sum())


def sweep_waveforms(names, hold, t0=0.0):
    """
    Step through every 0/1 assignment of ``names`` in binary counting order,
    holding each for ``hold``.

    Returns:
        tuple[dict[str, Schedule], float]: Schedules and the end time.
    """
    if not hold > 0:
        raise ValueError(f"hold must be > 0, got {hold}")
    names = tuple(names)
    rows = list(itertools.product((0.0, 1.0), repeat=len(names)))
    starts = [t0 + k * hold for k in range(len(rows))]
    schedules = {
        name: Schedule.from_steps((t, row[i]) for t, row in zip(starts, rows))
        for i, name in enumerate(names)
    }
    return schedules, t0 + len(rows) * hold
