"""
Steady states of the biochemical gates, found by bisection on [0, 1].

Both balance functions are monotone in the unknown, so a sign change on
[0, 1] brackets the unique root.
"""

from __future__ import annotations

import logging

import numpy as np
from numba import njit
from scipy.optimize import bisect

from gates.errors import GateParameterError, SolverFailure
from gates.params import NotGateParams, TwoInputGateParams

logger = logging.getLogger(__name__)

XTOL = 1e-9


@njit(cache=True)
def not_balance(s1, v_e1, k_e1, v_p1, k_p1):
    """V3 - V4 of the NOT gate as a function of [S1]; increasing in s1."""
    return v_e1 * s1 / (k_e1 + s1) - v_p1 * (1.0 - s1) / (k_p1 + 1.0 - s1)


@njit(cache=True)
def two_input_balance(s2p, v_e2, k_e2, v_e3, k_e3, v_p2, k_p2):
    """V7 + V8 - V9 as a function of [S2']; decreasing in s2p."""
    s2 = 1.0 - s2p
    return v_e2 * s2 / (k_e2 + s2) + v_e3 * s2 / (k_e3 + s2) - v_p2 * s2p / (k_p2 + s2p)


def _check_input(name, value):
    if not (0.0 <= value <= 1.0):
        raise GateParameterError(f"input concentration {name}={value} outside [0, 1]")


def _bisect(f, args, label):
    lo, hi = f(0.0, *args), f(1.0, *args)
    if lo == 0.0:
        return 0.0
    if hi == 0.0:
        return 1.0
    if np.sign(lo) == np.sign(hi):
        raise SolverFailure(f"{label}: no sign change on [0, 1] (f(0)={lo:.3g}, f(1)={hi:.3g})")
    root = bisect(f, 0.0, 1.0, args=args, xtol=XTOL)
    logger.debug("%s: root %.10f", label, root)
    return float(root)


def equilibrium_not(params, e1):
    """
    Equilibrium [S1] of a NOT gate for input enzyme level ``e1``.

    Solves V_E1*e1*s/(K_mE1+s) = V_P1*(1-s)/(K_mP1+1-s) on [0, 1].

    Parameters:
        params (NotGateParams): Gate parameters.
        e1 (float): Input enzyme concentration in [0, 1].

    Returns:
        float: The unique root; exactly 1.0 when ``e1 == 0``.
    """
    if not isinstance(params, NotGateParams):
        raise GateParameterError("equilibrium_not needs NotGateParams")
    _check_input("e1", e1)
    if e1 == 0.0:
        return 1.0
    args = (
        params.v_input * e1, params.input_enzyme.k_m,
        params.v_bias, params.bias_enzyme.k_m,
    )
    return _bisect(not_balance, args, "NOT equilibrium")


def equilibrium_two_input(params, e2, e3):
    """
    Equilibrium [S2'] of an OR/AND gate for input levels ``e2`` and ``e3``.

    Solves V7 + V8 = V9 with the input velocities acting on S2 = 1 - S2'
    and the bias velocity on S2'.

    Parameters:
        params (TwoInputGateParams): Gate parameters (either mode).
        e2 (float): First input enzyme concentration in [0, 1].
        e3 (float): Second input enzyme concentration in [0, 1].

    Returns:
        float: The unique root; exactly 0.0 when both inputs are 0.
    """
    if not isinstance(params, TwoInputGateParams):
        raise GateParameterError("equilibrium_two_input needs TwoInputGateParams")
    _check_input("e2", e2)
    _check_input("e3", e3)
    if e2 == 0.0 and e3 == 0.0:
        return 0.0
    v_e2, v_e3 = params.v_inputs
    args = (
        v_e2 * e2, params.input_a.k_m,
        v_e3 * e3, params.input_b.k_m,
        params.v_bias, params.bias_enzyme.k_m,
    )
    return _bisect(two_input_balance, args, f"{params.kind} equilibrium")


def equilibrium(params, inputs):
    """Equilibrium output for either gate family; ``inputs`` is a sequence of levels."""
    inputs = tuple(float(x) for x in inputs)
    if len(inputs) != params.arity:
        raise GateParameterError(f"{params.kind} gate takes {params.arity} inputs, got {len(inputs)}")
    if isinstance(params, NotGateParams):
        return equilibrium_not(params, inputs[0])
    return equilibrium_two_input(params, *inputs)


def response_curve(params, levels=None):
    """
    Equilibrium output over a sweep of input concentrations.

    For a NOT gate the sweep drives E1. For a two-input gate the same level
    drives the second input while the first is held inserted (level 1), and
    a second column sweeps both inputs together.

    Parameters:
        params (NotGateParams | TwoInputGateParams): Gate parameters.
        levels (array-like, optional): Input levels; 101 points on [0, 1] by default.

    Returns:
        dict[str, np.ndarray]: ``input`` plus one or two output columns.
    """
    levels = np.linspace(0.0, 1.0, 101) if levels is None else np.asarray(levels, dtype=float)
    if isinstance(params, NotGateParams):
        return {"input": levels, "output": np.array([equilibrium_not(params, x) for x in levels])}
    return {
        "input": levels,
        "output_one_high": np.array([equilibrium_two_input(params, 1.0, x) for x in levels]),
        "output_both": np.array([equilibrium_two_input(params, x, x) for x in levels]),
    }
