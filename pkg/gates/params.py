"""
Parameter sets of the biochemical NOT, OR and AND gates and the rate
constraints that make them behave as logic.

Rates are compared at full insertion: an input enzyme contributes
V_E = k_cat * 1, the always-present bias enzyme V_P = k_cat * [P].
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from gates.errors import GateParameterError

DEFAULT_K_M = 0.1
# K_m = 0.1 puts the default AND gate's (1,1) equilibrium exactly on tau1
AND_DEFAULT_K_M = 0.01


class GateKind(enum.Enum):
    NOT = "NOT"
    OR = "OR"
    AND = "AND"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class EnzymeKinetics:
    k_cat: float
    k_m: float = DEFAULT_K_M

    def __post_init__(self):
        if not (math.isfinite(self.k_cat) and self.k_cat > 0):
            raise GateParameterError(f"k_cat must be > 0, got {self.k_cat}")
        if not (math.isfinite(self.k_m) and self.k_m > 0):
            raise GateParameterError(f"K_m must be > 0, got {self.k_m}")


def _check_level(level):
    if not (0.0 <= level <= 1.0):
        raise GateParameterError(f"bias concentration {level} outside [0, 1]")


@dataclass(frozen=True)
class NotGateParams:
    """NOT gate: E1 converts S1 -> S1', the bias enzyme P1 converts S1' -> S1."""

    input_enzyme: EnzymeKinetics = EnzymeKinetics(1.0)
    bias_enzyme: EnzymeKinetics = EnzymeKinetics(1.0)
    bias_level: float = 0.2

    def __post_init__(self):
        _check_level(self.bias_level)

    @property
    def kind(self):
        return GateKind.NOT

    @property
    def arity(self):
        return 1

    @property
    def v_input(self):
        return self.input_enzyme.k_cat

    @property
    def v_bias(self):
        return self.bias_enzyme.k_cat * self.bias_level


@dataclass(frozen=True)
class TwoInputGateParams:
    """OR/AND gate: E2 and E3 convert S2 -> S2', the bias enzyme P2 converts S2' -> S2."""

    kind: GateKind
    input_a: EnzymeKinetics
    input_b: EnzymeKinetics
    bias_enzyme: EnzymeKinetics
    bias_level: float

    def __post_init__(self):
        if self.kind not in (GateKind.OR, GateKind.AND):
            raise GateParameterError(f"two-input gate mode must be OR or AND, got {self.kind}")
        _check_level(self.bias_level)

    @classmethod
    def from_rates(cls, kind, v_e2, v_e3, v_p2, k_m=DEFAULT_K_M):
        """Gate with the given full-insertion rates and one shared K_m."""
        return cls(
            kind=GateKind(kind),
            input_a=EnzymeKinetics(v_e2, k_m),
            input_b=EnzymeKinetics(v_e3, k_m),
            bias_enzyme=EnzymeKinetics(v_p2, k_m),
            bias_level=1.0,
        )

    @property
    def arity(self):
        return 2

    @property
    def v_inputs(self):
        return self.input_a.k_cat, self.input_b.k_cat

    @property
    def v_bias(self):
        return self.bias_enzyme.k_cat * self.bias_level


GateParams = NotGateParams | TwoInputGateParams


def default_not():
    return NotGateParams()


def default_or():
    return TwoInputGateParams(
        kind=GateKind.OR,
        input_a=EnzymeKinetics(0.6),
        input_b=EnzymeKinetics(0.6),
        bias_enzyme=EnzymeKinetics(1.0),
        bias_level=0.2,
    )


def default_and():
    return TwoInputGateParams(
        kind=GateKind.AND,
        input_a=EnzymeKinetics(0.6, AND_DEFAULT_K_M),
        input_b=EnzymeKinetics(0.6, AND_DEFAULT_K_M),
        bias_enzyme=EnzymeKinetics(1.0, AND_DEFAULT_K_M),
        bias_level=0.9,
    )


def default_params(kind):
    kind = GateKind(str(kind).upper())
    return {GateKind.NOT: default_not, GateKind.OR: default_or, GateKind.AND: default_and}[kind]()


@dataclass(frozen=True)
class GateValidation:
    ok: bool
    violations: tuple[str, ...] = ()

    def __bool__(self):
        return self.ok

    def report(self):
        if self.ok:
            return "ok"
        return "violated: " + "; ".join(self.violations)


def validate_gate(params):
    """
    Check the rate constraints that make a parameter set a logic gate.

    NOT: V_P1 < V_E1 (and [P1] > 0). OR: V_P2 < V_E2 and V_P2 < V_E3.
    AND: V_P2 > V_E2, V_P2 > V_E3 and V_P2 < V_E2 + V_E3. All strict.

    Parameters:
        params (NotGateParams | TwoInputGateParams): Gate parameters.

    Returns:
        GateValidation: ``ok`` plus the text of every violated inequality.
    """
    violations = []
    if isinstance(params, NotGateParams):
        if not params.bias_level > 0:
            violations.append("[P1] > 0")
        if not params.v_bias < params.v_input:
            violations.append("V_P1 < V_E1")
    else:
        v_e2, v_e3 = params.v_inputs
        v_p2 = params.v_bias
        if params.kind is GateKind.OR:
            if not v_p2 < v_e2:
                violations.append("V_P2 < V_E2")
            if not v_p2 < v_e3:
                violations.append("V_P2 < V_E3")
        else:
            if not v_p2 > v_e2:
                violations.append("V_P2 > V_E2")
            if not v_p2 > v_e3:
                violations.append("V_P2 > V_E3")
            if not v_p2 < v_e2 + v_e3:
                violations.append("V_P2 < V_E2+V_E3")
    return GateValidation(ok=not violations, violations=tuple(violations))
