"""Run one scenario, or many in a process pool."""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass
from pathlib import Path

from tqdm import tqdm

from circuit.errors import ExpressionError, NetlistError
from cli import bounds, check_seqmap, curve, simulate, synth, truth_table
from cli.config import load_config
from cli.errors import EXIT_CONFIG, EXIT_NUMERIC, ConfigError
from gates.errors import GateParameterError, SolverFailure
from kinetics.errors import IntegrationError, ScheduleError
from seqmap.errors import GridMismatch, NonSettling

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class JobResult:
    config: str
    code: int
    stdout: str = ""
    stderr: str = ""


COMMANDS = {
    "simulate": simulate,
    "truth-table": truth_table,
    "check-seqmap": check_seqmap,
    "bounds": bounds,
    "synth": synth,
    "curve": curve,
}


def run_one(command, config_path, options):
    """
    Load one scenario and run a command on it.

    Every failure is turned into an exit code: 2 for configuration
    problems, 3 for numerical ones.
    """
    module = COMMANDS[command]
    try:
        config = load_config(config_path)
        code, text = module.run(config, options)
        return JobResult(str(config_path), code, text)
    except (ConfigError, ExpressionError, NetlistError, ScheduleError, GridMismatch,
            GateParameterError, ValueError) as e:
        return JobResult(str(config_path), EXIT_CONFIG, stderr=f"config error: {e}")
    except (IntegrationError, SolverFailure, NonSettling) as e:
        return JobResult(str(config_path), EXIT_NUMERIC, stderr=f"numerical failure: {e}")


def _job_options(options, config_path, suffix):
    out = options.get("out")
    if out is None:
        return options
    directory = Path(out)
    directory.mkdir(parents=True, exist_ok=True)
    return {**options, "out": str(directory / (Path(config_path).stem + suffix))}


def run_batch(command, config_paths, options, jobs=1):
    """
    Run ``command`` on every config, ``jobs`` at a time, with a progress bar.

    Results are printed in the order the configs were given.

    Returns:
        int: The largest exit code.
    """
    suffix = getattr(COMMANDS[command], "OUT_SUFFIX", "")
    results = {}
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = {
            pool.submit(run_one, command, path, _job_options(options, path, suffix)): path
            for path in config_paths
        }
        for future in tqdm(as_completed(futures), total=len(futures), desc=command, unit="scenario"):
            results[futures[future]] = future.result()

    for path in config_paths:
        result = results[path]
        print(f"== {path} (exit {result.code})")
        if result.stdout:
            print(result.stdout)
        if result.stderr:
            print(result.stderr)
    worst = max(r.code for r in results.values())
    logger.info("batch of %d scenarios finished, worst exit code %d", len(config_paths), worst)
    return worst
