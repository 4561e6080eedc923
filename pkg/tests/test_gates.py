import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gates.equilibrium import equilibrium, equilibrium_not, equilibrium_two_input, response_curve
from gates.errors import GateParameterError, ThresholdInfeasible
from gates.network import single_gate_network
from gates.params import (
    EnzymeKinetics,
    GateKind,
    NotGateParams,
    TwoInputGateParams,
    default_params,
    validate_gate,
)
from gates.threshold import LogicLevel, ThresholdConfig, threshold
from gates.truth import gate_truth_row, truth_table
from kinetics.integrate import integrate
from oracle.boolean import eval_gate

GRID = np.linspace(0.0, 1.0, 21)


# ----------------------------------------------------------------------
# thresholds
# ----------------------------------------------------------------------
@pytest.mark.parametrize("x, level", [
    (0.05, LogicLevel.ZERO),
    (0.95, LogicLevel.ONE),
    (0.5, LogicLevel.INVALID),
    (0.2, LogicLevel.INVALID),
    (0.8, LogicLevel.INVALID),
])
def test_threshold(x, level):
    assert threshold(x) is level


def test_threshold_domain():
    with pytest.raises(ValueError):
        threshold(1.01)
    with pytest.raises(ValueError):
        threshold(-0.1)


@pytest.mark.parametrize("tau0, tau1", [(0.8, 0.2), (0.5, 0.5), (0.0, 0.8), (0.2, 1.0)])
def test_threshold_config_invariant(tau0, tau1):
    with pytest.raises(GateParameterError):
        ThresholdConfig(tau0, tau1)


@given(x=st.floats(min_value=0.0, max_value=1.0))
def test_threshold_invalid_only_inside_band(x):
    level = threshold(x)
    assert (level is LogicLevel.INVALID) == (0.2 <= x <= 0.8)


# ----------------------------------------------------------------------
# rate constraints
# ----------------------------------------------------------------------
def test_validate_and_ok():
    assert validate_gate(TwoInputGateParams.from_rates("AND", 0.6, 0.6, 0.9))


def test_validate_and_upper_bound():
    result = validate_gate(TwoInputGateParams.from_rates("AND", 0.6, 0.6, 1.3))
    assert not result
    assert result.violations == ("V_P2 < V_E2+V_E3",)


def test_validate_or_bias_too_fast():
    result = validate_gate(TwoInputGateParams.from_rates("OR", 0.6, 0.6, 0.9))
    assert "V_P2 < V_E2" in result.violations
    assert result.report().startswith("violated: ")


def test_validate_not():
    assert validate_gate(NotGateParams())
    slow = NotGateParams(EnzymeKinetics(0.1), EnzymeKinetics(1.0), 0.2)
    assert validate_gate(slow).violations == ("V_P1 < V_E1",)
    assert "[P1] > 0" in validate_gate(NotGateParams(bias_level=0.0)).violations


def test_defaults_satisfy_constraints():
    for kind in GateKind:
        assert validate_gate(default_params(kind)), kind


def test_parameter_errors():
    with pytest.raises(GateParameterError):
        EnzymeKinetics(0.0)
    with pytest.raises(GateParameterError):
        EnzymeKinetics(1.0, -0.1)
    with pytest.raises(GateParameterError):
        NotGateParams(bias_level=1.5)
    with pytest.raises(GateParameterError):
        TwoInputGateParams(GateKind.NOT, EnzymeKinetics(1), EnzymeKinetics(1), EnzymeKinetics(1), 0.5)


# ----------------------------------------------------------------------
# equilibria
# ----------------------------------------------------------------------
def test_not_equilibrium_examples(not_params):
    assert equilibrium_not(not_params, 0.0) == 1.0
    assert equilibrium_not(not_params, 1.0) == pytest.approx(0.022, abs=5e-4)
    assert equilibrium_not(not_params, 0.2) == pytest.approx(0.5, abs=1e-8)


def test_two_input_equilibrium_examples(or_params, and_params):
    assert equilibrium_two_input(or_params, 0.0, 0.0) == 0.0
    assert equilibrium_two_input(or_params, 1.0, 0.0) > 0.8
    assert equilibrium_two_input(and_params, 1.0, 0.0) < 0.2
    assert equilibrium_two_input(and_params, 1.0, 1.0) > 0.8


def test_equilibrium_argument_checks(not_params, or_params):
    with pytest.raises(GateParameterError):
        equilibrium_not(not_params, 1.5)
    with pytest.raises(GateParameterError):
        equilibrium_not(or_params, 1.0)
    with pytest.raises(GateParameterError):
        equilibrium(or_params, [1.0])


def test_not_equilibrium_strictly_decreasing(not_params):
    values = [equilibrium_not(not_params, e) for e in GRID]
    assert all(b < a for a, b in zip(values, values[1:]))


@pytest.mark.parametrize("kind", [GateKind.OR, GateKind.AND])
def test_two_input_equilibrium_nondecreasing(kind):
    params = default_params(kind)
    table = np.array([[equilibrium_two_input(params, a, b) for b in GRID] for a in GRID])
    assert np.all(np.diff(table, axis=0) >= -1e-8)
    assert np.all(np.diff(table, axis=1) >= -1e-8)


def test_response_curve_shapes(not_params, and_params):
    curve = response_curve(not_params)
    assert len(curve["input"]) == 101
    assert curve["output"][0] == 1.0
    curve = response_curve(and_params, GRID)
    assert set(curve) == {"input", "output_one_high", "output_both"}
    assert curve["output_both"][0] == 0.0


# ----------------------------------------------------------------------
# truth tables
# ----------------------------------------------------------------------
def test_truth_row_examples(not_params, or_params, and_params):
    assert gate_truth_row(not_params, [LogicLevel.ONE]) is LogicLevel.ZERO
    assert gate_truth_row(or_params, [0, 1]) is LogicLevel.ONE
    assert gate_truth_row(and_params, [1, 0]) is LogicLevel.ZERO


def test_truth_row_reports_infeasible_parameters():
    # valid rates, but the (1, 1) output settles near 0.56
    params = TwoInputGateParams.from_rates("AND", 0.6, 0.6, 1.15, k_m=0.1)
    assert validate_gate(params)
    with pytest.raises(ThresholdInfeasible, match="threshold-infeasible"):
        gate_truth_row(params, [1, 1])


@pytest.mark.parametrize("kind", list(GateKind))
def test_default_truth_tables_match_oracle(kind):
    rows = truth_table(default_params(kind))
    assert len(rows) == 2 ** default_params(kind).arity
    for row in rows:
        assert row.match, row
        assert row.level is LogicLevel.from_bit(eval_gate(kind.value, row.inputs))
        assert row.concentration < 0.05 or row.concentration > 0.95


def test_rejected_and_sets_fail_logic_contract():
    rng = np.random.default_rng(7)
    for _ in range(50):
        v_e2, v_e3 = rng.uniform(0.2, 1.0, size=2)
        v_p2 = (v_e2 + v_e3) * rng.uniform(1.0, 2.0)
        params = TwoInputGateParams.from_rates("AND", v_e2, v_e3, v_p2, k_m=rng.uniform(0.01, 0.1))
        assert not validate_gate(params)
        assert equilibrium_two_input(params, 1.0, 1.0) < 0.8


@pytest.mark.parametrize("kind", list(GateKind))
def test_dynamics_settle_on_equilibria(kind):
    params = default_params(kind)
    for bits in itertools.product((0.0, 1.0), repeat=params.arity):
        target = equilibrium(params, bits)
        for start in (0.0, 1.0):
            network, _ = single_gate_network(params, bits, initial=start)
            trace = integrate(network, 0.0, 200.0, 50.0)
            name = "S1" if kind is GateKind.NOT else "S2p"
            assert trace[name][-1] == pytest.approx(target, abs=1e-4)


@settings(max_examples=25, deadline=None)
@given(
    k_e=st.floats(min_value=0.5, max_value=2.0),
    level=st.floats(min_value=0.05, max_value=0.3),
    k_m=st.floats(min_value=0.01, max_value=0.2),
)
def test_not_equilibrium_is_a_root(k_e, level, k_m):
    params = NotGateParams(EnzymeKinetics(k_e, k_m), EnzymeKinetics(1.0, k_m), level)
    s = equilibrium_not(params, 1.0)
    forward = k_e * s / (k_m + s)
    backward = level * (1.0 - s) / (k_m + 1.0 - s)
    assert 0.0 <= s <= 1.0
    assert forward == pytest.approx(backward, abs=1e-6)
