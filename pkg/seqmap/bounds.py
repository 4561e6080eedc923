"""
Closed-form settle bounds of the NOT gate.

With bias rate V_P = k_cat(P1)*[P1]:

    t_plus  = -(K_m + 1) / V_P * ln(kappa)
    t_minus = -ln(kappa - (1 + K_m) * V_P) / (1 + K_m),   kappa > (1 + K_m) * V_P

t_plus bounds the rise of S1 from 0 to within kappa of 1 after E1 is
extracted; t_minus bounds the fall from 1 to within kappa of 0 after E1 is
inserted. The t_minus expression is only defined on part of the parameter
space; outside it the bound falls back to a simulated settle time.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np

from gates.errors import GateParameterError
from gates.params import NotGateParams

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class NotGateBounds:
    """
    Attributes:
        t_plus (float): Rise bound.
        t_minus (float | None): Fall bound, None when its domain is violated.
        t_max (float): max(t_plus, t_minus), or max(t_plus, t_minus_empirical)
            when the fall bound is undefined.
        t_minus_domain_ok (bool): Whether kappa > (1 + K_m) * V_P.
        t_minus_empirical (float | None): Simulated fall settle time used as
            the fallback.
    """

    t_plus: float
    t_minus: float | None
    t_max: float
    t_minus_domain_ok: bool
    t_minus_empirical: float | None = None


def _check_kappa(kappa):
    if not (0.0 < kappa < 1.0):
        raise ValueError(f"kappa must lie in (0, 1), got {kappa}")


def t_plus(v_bias, k_m, kappa):
    _check_kappa(kappa)
    if not v_bias > 0:
        raise GateParameterError(f"bias rate must be > 0, got {v_bias}")
    return -(k_m + 1.0) / v_bias * math.log(kappa)


def t_minus(v_bias, k_m, kappa):
    """Closed-form fall bound, or None when kappa <= (1 + K_m) * V_P."""
    _check_kappa(kappa)
    floor = (1.0 + k_m) * v_bias
    if not kappa > floor:
        return None
    return -math.log(kappa - floor) / (1.0 + k_m)


def lower_envelope(t, v_bias, k_m, t0=0.0):
    """h(t) = 1 - exp(-V_P (t - t0) / (K_m + 1)); stays below S1 on a rise from 0."""
    t = np.asarray(t, dtype=float)
    return 1.0 - np.exp(-v_bias * (t - t0) / (k_m + 1.0))


def upper_envelope(t, v_bias, k_m, t0=0.0):
    """l(t) = (1 + K_m) V_P + exp((t0 - t) / (1 + K_m)); stays above S1 on a fall from 1."""
    t = np.asarray(t, dtype=float)
    return (1.0 + k_m) * v_bias + np.exp((t0 - t) / (1.0 + k_m))


def not_gate_bounds(params, kappa, empirical=True):
    """
    Settle bounds of a NOT gate.

    t_plus uses the bias enzyme's K_m and t_minus the input enzyme's.

    Parameters:
        params (NotGateParams): Gate parameters.
        kappa (float): Error bound in (0, 1).
        empirical (bool): Simulate the fall transition when the t_minus
            formula is undefined.

    Returns:
        NotGateBounds
    """
    if not isinstance(params, NotGateParams):
        raise GateParameterError("not_gate_bounds needs NotGateParams")
    _check_kappa(kappa)
    rise = t_plus(params.v_bias, params.bias_enzyme.k_m, kappa)
    fall = t_minus(params.v_bias, params.input_enzyme.k_m, kappa)
    if fall is not None:
        return NotGateBounds(rise, fall, max(rise, fall), True)

    logger.info(
        "t_minus undefined: kappa=%g <= (1 + K_m) * V_P = %g", kappa,
        (1.0 + params.input_enzyme.k_m) * params.v_bias,
    )
    if not empirical:
        return NotGateBounds(rise, None, rise, False)

    # late import: settle uses the closed forms above for its horizon
    from seqmap.settle import TransitionScenario, empirical_settle_time

    measured = empirical_settle_time(params, TransitionScenario.worst_case(params, (1,)), kappa)
    return NotGateBounds(rise, None, max(rise, measured), False, measured)
