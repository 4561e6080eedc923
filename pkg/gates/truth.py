"""Truth-table rows of single gates, read off their equilibria."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from gates.equilibrium import equilibrium
from gates.errors import ThresholdInfeasible
from gates.threshold import LogicLevel, ThresholdConfig, threshold
from oracle.boolean import eval_gate


@dataclass(frozen=True)
class TruthRow:
    inputs: tuple[int, ...]
    concentration: float
    level: LogicLevel
    expected: LogicLevel

    @property
    def match(self):
        return self.level is self.expected


def _bits(levels):
    bits = []
    for level in levels:
        if isinstance(level, LogicLevel):
            level = level.to_bit()
        if level not in (0, 1):
            raise ValueError(f"truth-table inputs must be 0 or 1, got {level!r}")
        bits.append(int(level))
    return tuple(bits)


def gate_truth_row(params, levels, cfg=ThresholdConfig()):
    """
    Thresholded equilibrium output of a gate for one Boolean input row.

    Inputs map to enzyme concentrations 0 (extracted) and 1 (inserted).

    Raises:
        ThresholdInfeasible: If the equilibrium lands in [tau0, tau1].
    """
    bits = _bits(levels)
    x = equilibrium(params, [float(b) for b in bits])
    level = threshold(x, cfg)
    if level is LogicLevel.INVALID:
        raise ThresholdInfeasible(
            f"threshold-infeasible parameters: {params.kind} output {x:.6f} on inputs {bits} "
            f"lies in [{cfg.tau0}, {cfg.tau1}]"
        )
    return level


def truth_table(params, cfg=ThresholdConfig()):
    """
    Every row of a gate's truth table.

    Invalid outputs are kept as rows (with ``level`` INVALID) rather than
    raised, so a table can show where a parameter set breaks.

    Returns:
        list[TruthRow]: Rows in binary counting order of the inputs.
    """
    rows = []
    for bits in itertools.product((0, 1), repeat=params.arity):
        x = equilibrium(params, [float(b) for b in bits])
        rows.append(TruthRow(
            inputs=bits,
            concentration=x,
            level=threshold(x, cfg),
            expected=LogicLevel.from_bit(eval_gate(params.kind.value, bits)),
        ))
    return rows
