"""Steady state of the simulated RS latch on every input corner."""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass

from circuit.rs_latch import build_rs_latch
from circuit.simulate import simulate_circuit
from gates.threshold import LogicLevel, ThresholdConfig, threshold
from oracle.latch import encode_nand_latch_inputs, latch_reference
from seqmap.settle import settle_bound

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LatchCorner:
    prior: int
    x1: int
    x2: int
    q: float
    level: LogicLevel
    encoded: int
    raw: int

    @property
    def matches_encoded(self):
        return self.level is LogicLevel.from_bit(self.encoded)

    @property
    def matches_raw(self):
        return self.level is LogicLevel.from_bit(self.raw)

    def __str__(self):
        flag = "" if self.matches_raw else "  diverges from raw recurrence"
        return (f"prior={self.prior} X=({self.x1},{self.x2}) Q={self.q:.4f} -> {self.level} "
                f"encoded={self.encoded} raw={self.raw}{flag}")


def latch_corner_report(kappa=0.05, hold=None, dt_out=0.1, cfg=ThresholdConfig()):
    """
    Hold each raw input corner (X1, X2) on a latch preset to each stored
    state and read Q at the end.

    ``encoded`` is the recurrence on (NOT X1, X2), which the active-low latch
    realises; ``raw`` is the recurrence on (X1, X2) as written. Rows where
    the two disagree with the simulation are logged, not raised.

    Parameters:
        kappa (float): Error bound used for the settle bound.
        hold (float, optional): Hold time; 10 settle bounds by default.
        dt_out (float): Output sampling step.
        cfg (ThresholdConfig): Thresholds for reading Q.

    Returns:
        list[LatchCorner]: Eight rows, prior state major.
    """
    if hold is None:
        hold = 10.0 * settle_bound(build_rs_latch(), kappa)
    rows = []
    for prior, (x1, x2) in itertools.product((0, 1), itertools.product((0, 1), repeat=2)):
        latch = build_rs_latch(preset=prior)
        trace = simulate_circuit(latch, {"X1": float(x1), "X2": float(x2)}, hold, dt_out)
        q = float(trace.outputs["Q"][-1])
        row = LatchCorner(
            prior=prior, x1=x1, x2=x2, q=q,
            level=threshold(min(max(q, 0.0), 1.0), cfg),
            encoded=latch_reference([encode_nand_latch_inputs(x1, x2)], prior)[0],
            raw=latch_reference([(x1, x2)], prior)[0],
        )
        if not row.matches_raw:
            logger.warning("latch corner %s", row)
        rows.append(row)
    return rows
