import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.optimize import brentq

from gates.equilibrium import equilibrium_not, equilibrium_two_input
from gates.network import single_gate_network
from gates.params import EnzymeKinetics, NotGateParams, default_and, default_or
from kinetics.errors import KineticsDomainError, NetworkError, ScheduleError
from kinetics.integrate import ATOL, RTOL, integrate, sample_grid
from kinetics.michaelis import michaelis_rate
from kinetics.network import (
    CatalyzedConversion,
    ConservedPair,
    EnzymeSignal,
    ReactionNetwork,
    SpeciesRef,
    net_rate,
)
from kinetics.schedule import Schedule

unit = st.floats(min_value=0.0, max_value=1.0, allow_nan=False)
positive = st.floats(min_value=1e-3, max_value=10.0, allow_nan=False)


# ----------------------------------------------------------------------
# rate law
# ----------------------------------------------------------------------
def test_michaelis_rate_examples():
    assert michaelis_rate(1.0, 1.0, 0.1, 1.0) == pytest.approx(1.0 / 1.1)
    assert michaelis_rate(1.0, 0.0, 0.1, 0.7) == 0.0
    assert michaelis_rate(1.0, 1.0, 0.1, 0.0) == 0.0
    assert michaelis_rate(2.0, 0.5, 0.1, 0.1) == pytest.approx(0.5)


@pytest.mark.parametrize("args", [
    (1.0, 1.0, 0.0, 0.5),
    (1.0, 1.0, -0.1, 0.5),
    (-1.0, 1.0, 0.1, 0.5),
    (0.0, 1.0, 0.1, 0.5),
    (1.0, 1.5, 0.1, 0.5),
    (1.0, 1.0, 0.1, 1.2),
    (math.nan, 1.0, 0.1, 0.5),
    (1.0, 1.0, math.inf, 0.5),
])
def test_michaelis_rate_rejects_bad_arguments(args):
    with pytest.raises(KineticsDomainError):
        michaelis_rate(*args)


@settings(deadline=None)
@given(k_cat=positive, e=unit, k_m=positive, s1=unit, s2=unit)
def test_michaelis_rate_monotone_and_bounded(k_cat, e, k_m, s1, s2):
    lo, hi = sorted((s1, s2))
    v_lo = michaelis_rate(k_cat, e, k_m, lo)
    v_hi = michaelis_rate(k_cat, e, k_m, hi)
    assert 0.0 <= v_lo <= v_hi + 1e-12
    assert v_hi <= k_cat * e + 1e-12


# ----------------------------------------------------------------------
# schedules
# ----------------------------------------------------------------------
def test_schedule_is_right_continuous():
    s = Schedule.from_steps([(0.0, 1.0), (5.0, 0.0), (8.0, 1.0)])
    assert s.value_at(0.0) == 1.0
    assert s.value_at(4.999) == 1.0
    assert s.value_at(5.0) == 0.0
    assert s.value_at(100.0) == 1.0
    np.testing.assert_array_equal(s.values([0.0, 5.0, 7.9, 8.0]), [1.0, 0.0, 0.0, 1.0])


def test_schedule_merges_repeated_levels():
    s = Schedule.from_steps([(0.0, 1.0), (2.0, 1.0), (4.0, 0.0)])
    assert s.times == (0.0, 4.0)
    assert s.switch_points(0.0, 10.0) == [4.0]
    assert s.switch_points(0.0, 4.0) == []


def test_schedule_undefined_before_start():
    s = Schedule.from_steps([(1.0, 0.0)])
    with pytest.raises(ScheduleError):
        s.value_at(0.5)
    assert Schedule.constant(0.3).value_at(-1e9) == 0.3


@pytest.mark.parametrize("times, levels", [
    ((), ()),
    ((0.0, 0.0), (0.0, 1.0)),
    ((1.0, 0.0), (0.0, 1.0)),
    ((0.0,), (1.5,)),
    ((0.0,), (0.0, 1.0)),
])
def test_schedule_validation(times, levels):
    with pytest.raises(ScheduleError):
        Schedule(times, levels)


def test_schedule_shifted():
    s = Schedule.from_steps([(0.0, 0.0), (3.0, 1.0)]).shifted(2.0)
    assert s.times == (2.0, 5.0)


# ----------------------------------------------------------------------
# network
# ----------------------------------------------------------------------
def _not_network(e1=1.0, s=0.5):
    network, _ = single_gate_network(NotGateParams(), [e1], initial=s)
    return network


def test_net_rate_of_not_gate():
    network = _not_network(e1=1.0, s=0.5)
    pair = network.pair("S1")
    expected = -1.0 * 0.5 / 0.6 + 0.2 * 0.5 / 0.6
    assert net_rate(pair, network, 0.0) == pytest.approx(expected)


def test_net_rate_vanishes_at_rail():
    network = _not_network(e1=0.0, s=1.0)
    assert net_rate(network.pair("S1"), network, 0.0) == 0.0


def test_net_rate_vanishes_at_equilibrium():
    network = _not_network(e1=1.0, s=equilibrium_not(NotGateParams(), 1.0))
    assert net_rate(network.pair("S1"), network, 0.0) == pytest.approx(0.0, abs=1e-7)

    or_gate = default_or()
    s2 = 1.0 - equilibrium_two_input(or_gate, 1.0, 0.0)
    network, _ = single_gate_network(or_gate, [1.0, 0.0], initial=s2)
    assert net_rate(network.pair("S2"), network, 0.0) == pytest.approx(0.0, abs=1e-7)


def test_network_rejects_duplicates_and_unknowns():
    pair = ConservedPair("S", "Sp")
    enzyme = EnzymeSignal("E", 1.0, schedule=Schedule.constant(1.0))
    conv = CatalyzedConversion(SpeciesRef("S", "substrate"), SpeciesRef("S", "product"), "E")
    with pytest.raises(NetworkError):
        ReactionNetwork((pair, ConservedPair("S", "T")), (conv,), (enzyme,))
    with pytest.raises(NetworkError):
        ReactionNetwork((pair,), (CatalyzedConversion(conv.source, conv.target, "F"),), (enzyme,))
    with pytest.raises(NetworkError):
        CatalyzedConversion(SpeciesRef("S", "substrate"), SpeciesRef("S", "substrate"), "E")
    with pytest.raises(NetworkError):
        EnzymeSignal("E", 1.0)
    with pytest.raises(NetworkError):
        ConservedPair("S", "S")


def test_species_lookup():
    network = _not_network()
    assert network.species_names() == ["S1", "S1p"]
    assert network.species_ref("S1p") == SpeciesRef("S1", "product")
    with pytest.raises(NetworkError):
        network.species_ref("X")


# ----------------------------------------------------------------------
# integration
# ----------------------------------------------------------------------
def test_sample_grid_snaps_switches():
    times = sample_grid(0.0, 1.0, 0.1, [0.3])
    assert len(times) == 11
    assert times[3] == 0.3


def test_sample_grid_adds_off_grid_switches():
    times = sample_grid(0.0, 1.0, 0.3, [0.5, 0.6, 1.0])
    np.testing.assert_allclose(times, [0.0, 0.3, 0.5, 0.6, 0.9])
    assert 0.5 in times


def test_trace_has_sample_at_off_grid_switch():
    e1 = Schedule.from_steps([(0.0, 1.0), (5.0, 0.0)])
    network, _ = single_gate_network(NotGateParams(), [e1], initial=1.0)
    trace = integrate(network, 0.0, 10.0, 0.3)
    assert np.any(trace.times == 5.0)
    assert np.all(np.diff(trace.times) > 0)
    assert trace["E1"][trace.times == 5.0][0] == 0.0
    assert trace["E1"][trace.times < 5.0][-1] == 1.0


@pytest.mark.parametrize("params, inputs, initial, rail", [
    (NotGateParams(), [0.0], 0.5, 1.0),
    (NotGateParams(bias_level=0.0), [1.0], 0.5, 0.0),
    (default_or(), [0.0, 0.0], 0.0, 1.0),
    (default_and(), [0.0, 0.0], 0.0, 1.0),
])
@pytest.mark.parametrize("dt_out", [0.1, 50.0])
def test_long_run_toward_rail(params, inputs, initial, rail, dt_out):
    network, _ = single_gate_network(params, inputs, initial=initial)
    name = network.pairs[0].substrate_name
    s = integrate(network, 0.0, 200.0, dt_out)[name]
    assert s.min() >= 0.0 and s.max() <= 1.0
    assert s[-1] == pytest.approx(rail, abs=1e-6)


def test_halving_tolerances_barely_moves_result():
    network = _not_network(e1=0.0, s=0.0)
    coarse = integrate(network, 0.0, 5.0, 0.5)
    fine = integrate(network, 0.0, 5.0, 0.5, rtol=RTOL / 2, atol=ATOL / 2)
    assert abs(coarse["S1"][-1] - fine["S1"][-1]) < 1e-6


def test_constant_enzymes_relax_monotonically():
    s = integrate(_not_network(e1=1.0, s=1.0), 0.0, 20.0, 0.1)["S1"]
    assert np.all(np.diff(s) <= 1e-8)
    assert s[-1] == pytest.approx(equilibrium_not(NotGateParams(), 1.0), abs=1e-6)


def test_zero_schedules_keep_state():
    network, _ = single_gate_network(NotGateParams(bias_level=0.0), [0.0], initial=0.4)
    trace = integrate(network, 0.0, 10.0, 1.0)
    np.testing.assert_array_equal(trace["S1"], 0.4)
    np.testing.assert_allclose(trace["S1p"], 0.6)


def test_rise_matches_closed_form():
    # with E1 removed, ds/dt = V(1 - s)/(K + 1 - s), i.e. s - K ln(1 - s) = V t
    v, k = 0.2, 0.1
    trace = integrate(_not_network(e1=0.0, s=0.0), 0.0, 5.0, 0.5)
    for t, s in zip(trace.times[1:], trace["S1"][1:]):
        exact = brentq(lambda x: x - k * math.log(1.0 - x) - v * t, 0.0, 1.0 - 1e-12)
        assert s == pytest.approx(exact, abs=1e-6)


def test_trace_conserves_mass_and_stays_in_unit_interval():
    e1 = Schedule.from_steps([(0.0, 1.0), (5.0, 0.0), (12.0, 1.0)])
    network, _ = single_gate_network(NotGateParams(), [e1], initial=1.0)
    trace = integrate(network, 0.0, 20.0, 0.1)
    total = trace["S1"] + trace["S1p"]
    np.testing.assert_allclose(total, 1.0, atol=1e-9)
    assert trace["S1"].min() >= 0.0 and trace["S1"].max() <= 1.0
    np.testing.assert_array_equal(trace["E1"], e1.values(trace.times))
    assert trace.times[50] == 5.0


def test_integrate_rejects_bad_times():
    network = _not_network()
    with pytest.raises(ValueError):
        integrate(network, 1.0, 1.0, 0.1)
    with pytest.raises(ValueError):
        integrate(network, 0.0, 1.0, 0.0)


def test_integrate_needs_schedules_defined_at_start():
    network, _ = single_gate_network(NotGateParams(), [Schedule.from_steps([(2.0, 1.0)])])
    with pytest.raises(ScheduleError):
        integrate(network, 0.0, 5.0, 0.1)


def test_trace_csv_header(tmp_path):
    trace = integrate(_not_network(), 0.0, 1.0, 0.5)
    path = trace.to_csv(tmp_path / "trace.csv")
    text = path.read_bytes().decode()
    assert text.splitlines()[0] == "t,S1,S1p,E1,P1"
    assert "\r" not in text
    assert len(text.splitlines()) == 4


@settings(max_examples=20, deadline=None)
@given(e1=unit, s0=unit, k_cat=st.floats(min_value=0.5, max_value=3.0))
def test_not_gate_trace_stays_bounded(e1, s0, k_cat):
    params = NotGateParams(EnzymeKinetics(k_cat), EnzymeKinetics(1.0), 0.2)
    network, _ = single_gate_network(params, [e1], initial=s0)
    trace = integrate(network, 0.0, 10.0, 0.5)
    assert np.all((trace["S1"] >= 0.0) & (trace["S1"] <= 1.0))
    np.testing.assert_allclose(trace["S1"] + trace["S1p"], 1.0, atol=1e-9)
