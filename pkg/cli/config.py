"""
JSON scenario files.

A scenario names exactly one subject section and any of the optional
sections below; every field not given takes the default shown.

    {
      "gate":       {"kind": "NOT" | "OR" | "AND",
                     "input_enzymes": [{"k_cat": .., "k_m": ..}, ...],   # kind defaults
                     "bias_enzyme": {"k_cat": .., "k_m": ..},
                     "bias_level": .., "initial": 0.5},
      "expression": {"text": "NOT(AND(a, b))", "style": "direct",
                     "variables": null},                                  # expression's own
      "latch":      {"preset": null},                                     # 0 | 1
      "netlist":    {"path": "circuit.net"} | {"text": "..."},

      "inputs":     {"<input>": {"steps": [[t, level], ...]}
                              | {"random": {"seed": 0, "segments": 10,
                                            "min_length": "auto", "max_length": null}}},
      "simulation": {"t_end": null, "dt_out": 0.1},
      "thresholds": {"tau0": 0.2, "tau1": 0.8},
      "seqmap":     {"kappa": 0.05, "tau": "auto", "reference_delay": 0.0,
                     "initial_state": 0, "output": null},
      "bounds":     {"kappa": 0.05}
    }

``simulation.t_end`` defaults to the end of the random inputs; it is
required when every input is given as steps. ``min_length: "auto"`` is
twice the delay bound plus two sample steps.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from pathlib import Path

from circuit.errors import ExpressionError, NetlistError
from circuit.expr import parse_expr
from circuit.netlist import single_gate_netlist
from circuit.netlist_io import parse_netlist
from circuit.rs_latch import build_rs_latch
from circuit.synthesize import STYLES, synthesize
from cli.errors import ConfigError
from gates.errors import GateParameterError
from gates.params import (
    EnzymeKinetics,
    GateKind,
    NotGateParams,
    TwoInputGateParams,
    default_params,
)
from gates.threshold import ThresholdConfig
from kinetics.errors import ScheduleError
from kinetics.schedule import Schedule
from seqmap.settle import auto_tau
from seqmap.waveforms import random_waveforms

logger = logging.getLogger(__name__)

SUBJECTS = ("gate", "expression", "latch", "netlist")
SECTIONS = SUBJECTS + ("inputs", "simulation", "thresholds", "seqmap", "bounds")


@dataclass(frozen=True)
class RandomInput:
    seed: int = 0
    segments: int = 10
    min_length: float | str = "auto"
    max_length: float | None = None


@dataclass(frozen=True)
class SeqMapSettings:
    kappa: float = 0.05
    tau: float | str = "auto"
    reference_delay: float = 0.0
    initial_state: int = 0
    output: str | None = None


@dataclass
class ScenarioConfig:
    subject: str
    netlist: object
    gate: object = None
    expression: object = None
    steps: dict = field(default_factory=dict)
    random: dict = field(default_factory=dict)
    t_end: float | None = None
    dt_out: float = 0.1
    thresholds: ThresholdConfig = ThresholdConfig()
    seqmap: SeqMapSettings = SeqMapSettings()
    bounds_kappa: float = 0.05
    path: Path | None = None


# ----------------------------------------------------------------------
# field helpers
# ----------------------------------------------------------------------
def _section(data, name, default=None):
    value = data.get(name, default)
    if value is not None and not isinstance(value, dict):
        raise ConfigError("must be an object", name)
    return value if value is not None else {}


def _reject_unknown(section, allowed, where):
    unknown = sorted(set(section) - set(allowed))
    if unknown:
        raise ConfigError(f"unknown key(s): {', '.join(unknown)}", where)


def _number(section, key, where, default=None, required=False):
    if key not in section or section[key] is None:
        if required:
            raise ConfigError("is required", f"{where}.{key}")
        return default
    value = section[key]
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(f"must be a number, got {value!r}", f"{where}.{key}")
    return float(value)


def _integer(section, key, where, default=None):
    value = section.get(key, default)
    if value is None:
        return default
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigError(f"must be an integer, got {value!r}", f"{where}.{key}")
    return value


def _kinetics(entry, where, default):
    if entry is None:
        return default
    if not isinstance(entry, dict):
        raise ConfigError("must be an object with k_cat and k_m", where)
    _reject_unknown(entry, ("k_cat", "k_m"), where)
    return EnzymeKinetics(
        _number(entry, "k_cat", where, default.k_cat),
        _number(entry, "k_m", where, default.k_m),
    )


# ----------------------------------------------------------------------
# subject sections
# ----------------------------------------------------------------------
def parse_gate(section, where="gate"):
    _reject_unknown(section, ("kind", "input_enzymes", "bias_enzyme", "bias_level", "initial"), where)
    try:
        kind = GateKind(str(section.get("kind", "")).upper())
    except ValueError:
        raise ConfigError(f"must be one of NOT, OR, AND, got {section.get('kind')!r}", f"{where}.kind") from None
    base = default_params(kind)
    defaults = (base.input_enzyme,) if isinstance(base, NotGateParams) else (base.input_a, base.input_b)

    inputs = section.get("input_enzymes")
    if inputs is None:
        inputs = [None] * base.arity
    if not isinstance(inputs, list) or len(inputs) != base.arity:
        raise ConfigError(f"{kind.value} gate needs {base.arity} input enzyme(s)", f"{where}.input_enzymes")
    try:
        input_kinetics = [
            _kinetics(e, f"{where}.input_enzymes[{i}]", d) for i, (e, d) in enumerate(zip(inputs, defaults))
        ]
        bias = _kinetics(section.get("bias_enzyme"), f"{where}.bias_enzyme", base.bias_enzyme)
        level = _number(section, "bias_level", where, base.bias_level)
        if kind is GateKind.NOT:
            params = NotGateParams(input_kinetics[0], bias, level)
        else:
            params = TwoInputGateParams(kind, input_kinetics[0], input_kinetics[1], bias, level)
    except GateParameterError as e:
        raise ConfigError(str(e), where) from None
    initial = _number(section, "initial", where, 0.5)
    return params, initial


def _subject(data, base_dir):
    present = [name for name in SUBJECTS if name in data]
    if len(present) != 1:
        raise ConfigError(f"exactly one of {', '.join(SUBJECTS)} is required, found {present or 'none'}")
    subject = present[0]
    out = {"subject": subject}
    try:
        if subject == "gate":
            params, initial = parse_gate(_section(data, "gate"))
            out["gate"] = params
            out["netlist"] = single_gate_netlist(params, initial)
        elif subject == "expression":
            section = _section(data, "expression")
            _reject_unknown(section, ("text", "style", "variables"), "expression")
            if "text" not in section:
                raise ConfigError("is required", "expression.text")
            style = section.get("style", "direct")
            if style not in STYLES:
                raise ConfigError(f"must be one of {STYLES}, got {style!r}", "expression.style")
            expr = parse_expr(section["text"], section.get("variables"))
            out["expression"] = expr
            out["netlist"] = synthesize(expr, style, declared=section.get("variables"))
        elif subject == "latch":
            section = _section(data, "latch")
            _reject_unknown(section, ("preset",), "latch")
            preset = section.get("preset")
            if preset not in (None, 0, 1):
                raise ConfigError(f"must be null, 0 or 1, got {preset!r}", "latch.preset")
            out["netlist"] = build_rs_latch(preset)
        else:
            section = _section(data, "netlist")
            _reject_unknown(section, ("path", "text"), "netlist")
            if ("path" in section) == ("text" in section):
                raise ConfigError("give exactly one of path or text", "netlist")
            if "path" in section:
                path = Path(section["path"])
                path = path if path.is_absolute() or base_dir is None else base_dir / path
                try:
                    text = path.read_text()
                except OSError as e:
                    raise ConfigError(f"cannot read {path}: {e.strerror}", "netlist.path") from None
            else:
                text = section["text"]
            out["netlist"] = parse_netlist(text)
    except (ExpressionError, NetlistError) as e:
        raise ConfigError(str(e), subject) from None
    return out


# ----------------------------------------------------------------------
# remaining sections
# ----------------------------------------------------------------------
def _inputs(data, netlist):
    section = _section(data, "inputs")
    steps, random = {}, {}
    for name, spec in section.items():
        where = f"inputs.{name}"
        if name not in netlist.primary_inputs:
            raise ConfigError(
                f"not a primary input (have {', '.join(netlist.primary_inputs) or 'none'})", where
            )
        if not isinstance(spec, dict) or len(spec) != 1 or not {"steps", "random"} & set(spec):
            raise ConfigError("must be {\"steps\": [...]} or {\"random\": {...}}", where)
        if "steps" in spec:
            try:
                pairs = [(float(t), float(v)) for t, v in spec["steps"]]
                steps[name] = Schedule.from_steps(pairs)
            except (TypeError, ValueError) as e:
                raise ConfigError(str(e) or "steps must be [time, level] pairs", f"{where}.steps") from None
            if steps[name].start > 0:
                raise ConfigError("the first step must be at t <= 0", f"{where}.steps")
        else:
            r = spec["random"]
            if not isinstance(r, dict):
                raise ConfigError("must be an object", f"{where}.random")
            _reject_unknown(r, ("seed", "segments", "min_length", "max_length"), f"{where}.random")
            min_length = r.get("min_length", "auto")
            if min_length != "auto":
                min_length = _number(r, "min_length", f"{where}.random")
            random[name] = RandomInput(
                seed=_integer(r, "seed", f"{where}.random", 0),
                segments=_integer(r, "segments", f"{where}.random", 10),
                min_length=min_length,
                max_length=_number(r, "max_length", f"{where}.random"),
            )
    return steps, random


def _seqmap(data):
    section = _section(data, "seqmap")
    _reject_unknown(section, ("kappa", "tau", "reference_delay", "initial_state", "output"), "seqmap")
    kappa = _number(section, "kappa", "seqmap", 0.05)
    if not (0.0 < kappa < 1.0):
        raise ConfigError(f"kappa must lie in (0, 1), got {kappa}", "seqmap.kappa")
    tau = section.get("tau", "auto")
    if tau != "auto":
        tau = _number(section, "tau", "seqmap")
        if not tau > 0:
            raise ConfigError(f"tau must be > 0 or \"auto\", got {tau}", "seqmap.tau")
    delay = _number(section, "reference_delay", "seqmap", 0.0)
    if delay < 0:
        raise ConfigError(f"must be >= 0, got {delay}", "seqmap.reference_delay")
    initial = _integer(section, "initial_state", "seqmap", 0)
    if initial not in (0, 1):
        raise ConfigError(f"must be 0 or 1, got {initial}", "seqmap.initial_state")
    return SeqMapSettings(kappa, tau, delay, initial, section.get("output"))


def parse_config(data, path=None):
    """
    Validate a decoded scenario and build its objects.

    Raises:
        ConfigError: With the offending field path.
    """
    if not isinstance(data, dict):
        raise ConfigError("a scenario must be a JSON object")
    _reject_unknown(data, SECTIONS, "scenario")
    base_dir = Path(path).parent if path is not None else None
    subject = _subject(data, base_dir)
    netlist = subject["netlist"]
    try:
        steps, random = _inputs(data, netlist)
    except ScheduleError as e:
        raise ConfigError(str(e), "inputs") from None

    simulation = _section(data, "simulation")
    _reject_unknown(simulation, ("t_end", "dt_out"), "simulation")
    t_end = _number(simulation, "t_end", "simulation")
    dt_out = _number(simulation, "dt_out", "simulation", 0.1)
    if not dt_out > 0:
        raise ConfigError(f"must be > 0, got {dt_out}", "simulation.dt_out")
    if t_end is not None and not t_end > 0:
        raise ConfigError(f"must be > 0, got {t_end}", "simulation.t_end")

    thresholds = _section(data, "thresholds")
    _reject_unknown(thresholds, ("tau0", "tau1"), "thresholds")
    try:
        cfg = ThresholdConfig(
            _number(thresholds, "tau0", "thresholds", 0.2),
            _number(thresholds, "tau1", "thresholds", 0.8),
        )
    except GateParameterError as e:
        raise ConfigError(str(e), "thresholds") from None

    bounds = _section(data, "bounds")
    _reject_unknown(bounds, ("kappa",), "bounds")
    bounds_kappa = _number(bounds, "kappa", "bounds", 0.05)
    if not (0.0 < bounds_kappa < 1.0):
        raise ConfigError(f"kappa must lie in (0, 1), got {bounds_kappa}", "bounds.kappa")

    return ScenarioConfig(
        subject=subject["subject"],
        netlist=netlist,
        gate=subject.get("gate"),
        expression=subject.get("expression"),
        steps=steps,
        random=random,
        t_end=t_end,
        dt_out=dt_out,
        thresholds=cfg,
        seqmap=_seqmap(data),
        bounds_kappa=bounds_kappa,
        path=Path(path) if path is not None else None,
    )


def load_config(path):
    """Read and validate a scenario file."""
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as e:
        raise ConfigError(f"cannot read {path}: {e.strerror}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ConfigError(e.msg, f"line {e.lineno}, column {e.colno}") from None
    return parse_config(data, path)


def build_waveforms(config, tau=None, seed=None):
    """
    Schedules for every primary input plus the simulation end time.

    Parameters:
        config (ScenarioConfig): Parsed scenario.
        tau (float, optional): Delay bound, needed for ``min_length: "auto"``.
        seed (int, optional): Overrides every random seed.

    Returns:
        tuple[dict[str, Schedule], float]
    """
    schedules = dict(config.steps)
    ends = []
    # inputs with identical random settings share their segment boundaries
    groups = {}
    for name, spec in sorted(config.random.items()):
        groups.setdefault(spec, []).append(name)
    for offset, (spec, names) in enumerate(groups.items()):
        where = f"inputs.{names[0]}.random"
        min_length = spec.min_length
        if min_length == "auto":
            if tau is None:
                raise ConfigError("min_length \"auto\" needs a delay bound", where)
            min_length = 2.0 * (tau + config.dt_out)
        try:
            generated, end = random_waveforms(
                names, spec.segments, min_length, spec.max_length,
                seed=(spec.seed if seed is None else seed + offset), grid=config.dt_out,
            )
        except ValueError as e:
            raise ConfigError(str(e), where) from None
        schedules.update(generated)
        ends.append(end)

    t_end = config.t_end
    if t_end is None:
        if not ends:
            raise ConfigError("is required when no input is random", "simulation.t_end")
        t_end = max(ends)
        logger.info("simulation.t_end defaults to %g (end of the random inputs)", t_end)
    for name in config.netlist.primary_inputs:
        schedules.setdefault(name, Schedule.constant(0.0))
    return schedules, t_end


def resolve_tau(config):
    """``seqmap.tau`` as a number; ``"auto"`` is depth times the per-gate settle bound."""
    if config.seqmap.tau != "auto":
        return config.seqmap.tau
    tau = auto_tau(config.netlist, config.seqmap.kappa, config.dt_out)
    logger.info("seqmap.tau auto: %g (depth %d)", tau, config.netlist.depth())
    return tau
