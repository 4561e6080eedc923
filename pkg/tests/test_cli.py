import pytest

from circuit.netlist_io import parse_netlist
from cli.errors import EXIT_CONFIG, EXIT_FAIL, EXIT_OK
from cli.main import main

NOT_STEPS = {
    "gate": {"kind": "NOT"},
    "inputs": {"E1": {"steps": [[0, 1], [5, 0]]}},
    "simulation": {"t_end": 10, "dt_out": 0.5},
}
NOT_RANDOM = {
    "gate": {"kind": "NOT"},
    "inputs": {"E1": {"random": {"seed": 1, "segments": 6}}},
}
BAD_AND = {"gate": {"kind": "AND", "bias_enzyme": {"k_cat": 1.5, "k_m": 0.01}, "bias_level": 1.0}}


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


# ----------------------------------------------------------------------
# simulate
# ----------------------------------------------------------------------
def test_simulate_prints_csv(write_config, capsys):
    code, out, _ = run(capsys, "simulate", "--config", str(write_config(NOT_STEPS)))
    lines = out.splitlines()
    assert code == EXIT_OK
    assert lines[0] == "t,S1,S1p,E1,P1"
    assert len(lines) == 22
    assert lines[1].startswith("0,")


def test_simulate_latch_has_outputs(write_config, capsys):
    data = {
        "latch": {"preset": 1},
        "inputs": {"X1": {"steps": [[0, 1]]}, "X2": {"steps": [[0, 1]]}},
        "simulation": {"t_end": 5},
    }
    code, out, _ = run(capsys, "simulate", "--config", str(write_config(data)))
    header = out.splitlines()[0].split(",")
    assert code == EXIT_OK
    assert header[-2:] == ["Q", "Qn"]


def test_simulate_is_deterministic(write_config, tmp_path, capsys):
    data = {"gate": {"kind": "OR"},
            "inputs": {"E2": {"random": {"seed": 4, "segments": 5, "min_length": 20}},
                       "E3": {"random": {"seed": 4, "segments": 5, "min_length": 20}}}}
    config = str(write_config(data))
    first, second = tmp_path / "a.csv", tmp_path / "b.csv"
    assert run(capsys, "simulate", "--config", config, "--out", str(first))[0] == EXIT_OK
    assert run(capsys, "simulate", "--config", config, "--out", str(second))[0] == EXIT_OK
    assert first.read_bytes() == second.read_bytes()
    assert b"\r" not in first.read_bytes()

    third = tmp_path / "c.csv"
    _, out, _ = run(capsys, "simulate", "--config", config, "--out", str(third), "--seed", "9")
    assert out.startswith(f"Trace saved to {third}")
    assert third.read_bytes() != first.read_bytes()


# ----------------------------------------------------------------------
# configuration errors
# ----------------------------------------------------------------------
@pytest.mark.parametrize("data, message", [
    ({**NOT_STEPS, "thresholds": {"tau0": 0.8, "tau1": 0.2}}, "tau0 < tau1"),
    ({**NOT_STEPS, "bounds": {"kappa": 1.5}}, "bounds.kappa"),
    ({**NOT_STEPS, "colour": "red"}, "unknown key(s): colour"),
    ({"gate": {"kind": "XOR"}}, "gate.kind"),
    ({"gate": {"kind": "NOT"}, "latch": {}}, "exactly one of"),
    ({**NOT_STEPS, "inputs": {"E9": {"steps": [[0, 1]]}}}, "inputs.E9"),
    ({"gate": {"kind": "NOT"}, "inputs": {"E1": {"steps": [[0, 1]]}}}, "simulation.t_end"),
    ({"expression": {"text": "a &"}}, "expression"),
])
def test_config_errors_exit_2(write_config, capsys, data, message):
    code, _, err = run(capsys, "simulate", "--config", str(write_config(data)))
    assert code == EXIT_CONFIG
    assert err.startswith("config error: ")
    assert message in err


def test_json_syntax_error_has_location(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text('{\n  "gate": {"kind": "NOT",}\n}\n')
    code, _, err = run(capsys, "truth-table", "--config", str(path))
    assert code == EXIT_CONFIG
    assert "line 2, column" in err


def test_missing_config_file(tmp_path, capsys):
    code, _, err = run(capsys, "bounds", "--config", str(tmp_path / "nope.json"))
    assert code == EXIT_CONFIG
    assert "cannot read" in err


# ----------------------------------------------------------------------
# truth-table
# ----------------------------------------------------------------------
@pytest.mark.parametrize("kind", ["NOT", "OR", "AND"])
def test_truth_table_defaults(write_config, capsys, kind):
    code, out, _ = run(capsys, "truth-table", "--config", str(write_config({"gate": {"kind": kind}})))
    assert code == EXIT_OK
    assert "rate constraints: ok" in out.splitlines()[0]
    assert out.splitlines()[-1] == "all rows match"


def test_truth_table_reports_violating_gate(write_config, capsys):
    code, out, _ = run(capsys, "truth-table", "--config", str(write_config(BAD_AND)))
    assert code == EXIT_FAIL
    assert "V_P2 < V_E2+V_E3" in out
    assert out.rstrip().endswith("1 row(s) do not match")


def test_truth_table_of_expression(write_config, capsys):
    data = {"expression": {"text": "a ^ b", "style": "nand_only"}}
    code, out, _ = run(capsys, "truth-table", "--config", str(write_config(data)))
    assert code == EXIT_OK
    assert out.splitlines()[-1] == "all rows match"


def test_truth_table_rejects_latch(write_config, capsys):
    code, _, err = run(capsys, "truth-table", "--config", str(write_config({"latch": {}})))
    assert code == EXIT_CONFIG
    assert "combinational" in err


# ----------------------------------------------------------------------
# check-seqmap
# ----------------------------------------------------------------------
def test_check_seqmap_passes_with_auto_tau(write_config, capsys):
    code, out, _ = run(capsys, "check-seqmap", "--config", str(write_config(NOT_RANDOM)))
    lines = out.splitlines()
    assert code == EXIT_OK
    assert lines[0] == "PASS"
    assert lines[1].endswith("violations=0")


def test_check_seqmap_fails_with_short_tau(write_config, capsys):
    data = {
        "gate": {"kind": "NOT"},
        "inputs": {"E1": {"random": {"seed": 1, "segments": 6, "min_length": 40}}},
        "seqmap": {"tau": 0.16476},
    }
    code, out, _ = run(capsys, "check-seqmap", "--config", str(write_config(data)), "--limit", "3")
    assert code == EXIT_FAIL
    assert out.splitlines()[0] == "FAIL"
    assert "more" in out.splitlines()[-1]


def test_check_seqmap_trace_shorter_than_tau(write_config, capsys):
    data = {
        "gate": {"kind": "NOT"},
        "inputs": {"E1": {"steps": [[0, 0]]}},
        "simulation": {"t_end": 5},
        "seqmap": {"tau": 10},
    }
    code, out, _ = run(capsys, "check-seqmap", "--config", str(write_config(data)))
    assert code == EXIT_OK
    assert out.splitlines()[1] == "checked=0 unchecked=51 exceeding=0 violations=0"


def test_check_seqmap_rejects_tau_below_step(write_config, capsys):
    data = {**NOT_STEPS, "seqmap": {"tau": 0.1}}
    code, _, err = run(capsys, "check-seqmap", "--config", str(write_config(data)))
    assert code == EXIT_CONFIG
    assert "shorter than the sample step" in err


def test_check_seqmap_latch_prints_corners(write_config, capsys):
    data = {
        "latch": {"preset": 0},
        "inputs": {"X1": {"steps": [[0, 0], [140, 1]]}, "X2": {"steps": [[0, 1]]}},
        "simulation": {"t_end": 280},
    }
    code, out, _ = run(capsys, "check-seqmap", "--config", str(write_config(data)))
    assert code == EXIT_OK
    assert "latch corners (Q after holding X1, X2):" in out
    assert sum(line.startswith("prior=") for line in out.splitlines()) == 8


# ----------------------------------------------------------------------
# bounds, synth, curve
# ----------------------------------------------------------------------
def test_bounds_default_not_gate(write_config, capsys):
    code, out, _ = run(capsys, "bounds", "--config", str(write_config({"gate": {"kind": "NOT"}})))
    lines = out.splitlines()
    assert code == EXIT_OK
    assert lines[0] == "kappa   = 0.05"
    assert lines[1].startswith("t_plus  = 16.47")
    assert lines[2].startswith("t_minus = undefined (kappa <= (1 + K_m) * V_P = 0.22")
    assert lines[3].startswith("t_max   = 16.47")
    assert lines[4].startswith("simulated rise")


def test_bounds_with_defined_fall(write_config, capsys):
    data = {"gate": {"kind": "NOT", "bias_level": 0.1}, "bounds": {"kappa": 0.5}}
    code, out, _ = run(capsys, "bounds", "--config", str(write_config(data)), "--no-empirical")
    lines = out.splitlines()
    assert code == EXIT_OK
    assert lines[2].startswith("t_minus = 0.856")
    assert len(lines) == 4


def test_bounds_without_bias_is_config_error(write_config, capsys):
    data = {"gate": {"kind": "NOT", "bias_level": 0}}
    code, _, err = run(capsys, "bounds", "--config", str(write_config(data)))
    assert code == EXIT_CONFIG
    assert "bias rate must be > 0" in err


def test_bounds_need_not_gate(write_config, capsys):
    code, _, err = run(capsys, "bounds", "--config", str(write_config({"gate": {"kind": "OR"}})))
    assert code == EXIT_CONFIG
    assert "gate.kind" in err


def test_synth_to_stdout_and_file(write_config, tmp_path, capsys):
    config = str(write_config({"expression": {"text": "NOT(AND(a, b))"}}))
    code, out, _ = run(capsys, "synth", "--config", config)
    assert code == EXIT_OK
    netlist = parse_netlist(out)
    assert len(netlist.gates) == 2

    path = tmp_path / "nand.net"
    _, out, _ = run(capsys, "synth", "--config", config, "--out", str(path))
    assert out.strip() == f"Netlist saved to {path} (2 gates, depth 2)"
    assert parse_netlist(path.read_text()) == netlist


def test_synth_needs_expression(write_config, capsys):
    code, _, _ = run(capsys, "synth", "--config", str(write_config({"gate": {"kind": "NOT"}})))
    assert code == EXIT_CONFIG


def test_curve(write_config, capsys):
    config = str(write_config({"gate": {"kind": "NOT"}}))
    code, out, _ = run(capsys, "curve", "--config", config, "--points", "5")
    lines = out.splitlines()
    assert code == EXIT_OK
    assert lines[0] == "input,output"
    assert len(lines) == 6
    assert lines[1] == "0,1"
    assert run(capsys, "curve", "--config", config, "--points", "1")[0] == EXIT_CONFIG


# ----------------------------------------------------------------------
# batch
# ----------------------------------------------------------------------
def test_batch_writes_one_file_per_config(write_config, tmp_path, capsys):
    paths = [str(write_config(NOT_STEPS, "first.json")), str(write_config(NOT_STEPS, "second.json"))]
    out_dir = tmp_path / "traces"
    code, out, _ = run(capsys, "simulate", "--config", paths[0], "--config", paths[1],
                       "--jobs", "2", "--out", str(out_dir))
    assert code == EXIT_OK
    assert (out_dir / "first.csv").read_bytes() == (out_dir / "second.csv").read_bytes()
    assert out.index(f"== {paths[0]} (exit 0)") < out.index(f"== {paths[1]} (exit 0)")


def test_batch_exit_code_is_worst(write_config, capsys):
    paths = [str(write_config({"gate": {"kind": "NOT"}}, "ok.json")),
             str(write_config(BAD_AND, "bad.json"))]
    code, out, _ = run(capsys, "truth-table", "--config", paths[0], "--config", paths[1])
    assert code == EXIT_FAIL
    assert f"== {paths[1]} (exit 1)" in out


def test_jobs_must_be_positive(write_config, capsys):
    code, _, _ = run(capsys, "simulate", "--config", str(write_config(NOT_STEPS)), "--jobs", "0")
    assert code == EXIT_CONFIG
