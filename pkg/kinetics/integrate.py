"""
Adaptive RK45 integration of a reaction network under piecewise-constant
enzyme schedules.
"""

from __future__ import annotations

import logging

import numpy as np
from numba import njit
from scipy.integrate import solve_ivp

from kinetics.errors import IntegrationError
from kinetics.trace import Trace

logger = logging.getLogger(__name__)

RTOL = 1e-7
ATOL = 1e-9
# allowed excursion outside [0, 1], in units of the stepper tolerances
DRIFT_FACTOR = 10.0


@njit(cache=True)
def pair_derivatives(s, e_fixed, conv_pair, conv_sign, conv_kcat, conv_km, conv_enzyme,
                     coupled_enzyme, coupled_pair, coupled_product):
    """ds/dt for every pair; coupled enzymes read their source species from ``s``."""
    e = e_fixed.copy()
    for j in range(coupled_enzyme.size):
        src = s[coupled_pair[j]]
        if coupled_product[j] == 1:
            src = 1.0 - src
        e[coupled_enzyme[j]] = min(max(src, 0.0), 1.0)

    ds = np.zeros_like(s)
    for k in range(conv_pair.size):
        p = conv_pair[k]
        x = s[p] if conv_sign[k] < 0 else 1.0 - s[p]
        x = min(max(x, 0.0), 1.0)
        ds[p] += conv_sign[k] * conv_kcat[k] * e[conv_enzyme[k]] * x / (conv_km[k] + x)
    return ds


def _rhs(compiled, e_fixed):
    def rhs(t, y):
        return pair_derivatives(
            y, e_fixed,
            compiled.conv_pair, compiled.conv_sign, compiled.conv_kcat, compiled.conv_km,
            compiled.conv_enzyme, compiled.coupled_enzyme, compiled.coupled_pair,
            compiled.coupled_product,
        )
    return rhs


def sample_grid(t0, t_end, dt_out, switch_points=()):
    """
    Uniform grid ``t0 + k*dt_out`` up to ``t_end``.

    Grid points that coincide with a switch point up to roundoff are snapped
    onto it; switch points between grid points are added as extra samples,
    so every switch inside the interval appears as an exact sample.
    """
    n = int(np.floor((t_end - t0) / dt_out + 1e-9))
    times = t0 + dt_out * np.arange(n + 1, dtype=float)
    for sw in switch_points:
        idx = int(np.argmin(np.abs(times - sw)))
        if abs(times[idx] - sw) <= 1e-9 * max(1.0, abs(sw)):
            times[idx] = sw
    inside = [sw for sw in switch_points if t0 < sw < t_end]
    if inside:
        times = np.unique(np.concatenate([times, np.asarray(inside, dtype=float)]))
    return times


def drift_limit(rtol=RTOL, atol=ATOL):
    return DRIFT_FACTOR * (atol + rtol)


def _clamp(states, limit):
    if states.size == 0:
        return states
    excess = max(-float(states.min()), float(states.max()) - 1.0, 0.0)
    if excess > limit:
        raise IntegrationError(f"concentration left [0, 1] by {excess:.3e}")
    return np.clip(states, 0.0, 1.0)


def integrate(network, t0, t_end, dt_out, *, rtol=RTOL, atol=ATOL):
    """
    Integrate the network's concentration dynamics from ``t0`` to ``t_end``.

    The interval is split at every enzyme schedule switch so the explicit
    RK45 stepper never steps across a discontinuity; within a segment the
    scheduled enzyme levels are constant and coupled enzymes follow their
    source species.

    Parameters:
        network (ReactionNetwork): Network to integrate; pairs' ``s`` give the
            initial state.
        t0 (float): Start time.
        t_end (float): End time, > t0.
        dt_out (float): Output sampling step, > 0.
        rtol (float): Relative tolerance of the stepper.
        atol (float): Absolute tolerance of the stepper.

    Returns:
        Trace: Samples every ``dt_out`` with all species and enzyme levels.

    Raises:
        ValueError: If the time arguments are inconsistent.
        ScheduleError: If a schedule is undefined at ``t0``.
        IntegrationError: If the stepper fails or leaves [0, 1].
    """
    if not t_end > t0:
        raise ValueError(f"t_end ({t_end}) must exceed t0 ({t0})")
    if not dt_out > 0:
        raise ValueError(f"dt_out must be > 0, got {dt_out}")
    network.check_schedules(t0)

    switches = network.switch_points(t0, t_end)
    times = sample_grid(t0, t_end, dt_out, switches)
    edges = [t0, *switches, t_end]
    compiled = network.compiled

    y = network.initial_state()
    states = np.empty((len(times), len(y)), dtype=float)
    n_steps = 0

    for a, b in zip(edges[:-1], edges[1:]):
        last = b == t_end
        mask = (times >= a) & ((times <= b) if last else (times < b))
        seg_times = times[mask]

        if len(y) == 0:
            states[mask] = np.empty((len(seg_times), 0))
            continue

        t_eval = seg_times if len(seg_times) and seg_times[-1] == b else np.append(seg_times, b)
        sol = solve_ivp(
            _rhs(compiled, network.scheduled_levels(a)),
            (a, b),
            y,
            method="RK45",
            t_eval=t_eval,
            rtol=rtol,
            atol=atol,
        )
        if not sol.success:
            raise IntegrationError(f"RK45 failed on [{a}, {b}]: {sol.message}")
        n_steps += sol.nfev
        segment = _clamp(sol.y.T, drift_limit(rtol, atol))
        states[mask] = segment[: len(seg_times)]
        y = segment[-1]
        logger.debug("segment [%g, %g]: %d samples, %d evaluations", a, b, len(seg_times), sol.nfev)

    logger.debug("integrated %d pairs over [%g, %g] in %d segments (%d evaluations)",
                 len(y), t0, t_end, len(edges) - 1, n_steps)
    return _build_trace(network, times, states)


def _build_trace(network, times, states):
    species = {}
    for i, pair in enumerate(network.pairs):
        species[pair.substrate_name] = states[:, i]
        species[pair.product_name] = 1.0 - states[:, i]

    enzymes = {}
    for enzyme in network.enzymes:
        if enzyme.coupled:
            src = states[:, network.pair_index(enzyme.source.pair)]
            values = src if enzyme.source.slot == "substrate" else 1.0 - src
            enzymes[enzyme.name] = np.clip(values, 0.0, 1.0)
        else:
            enzymes[enzyme.name] = enzyme.schedule.values(times)
    return Trace(times=times, species=species, enzymes=enzymes)
