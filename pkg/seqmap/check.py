"""
Sequential-mapping check on sampled traces.

A trace satisfies the property when every sample whose output deviates from
the reference by more than kappa is back within kappa one delay tau later.
Lookahead uses the nearest grid point at or after ``t + tau``; samples with
no such point are counted as unchecked.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field

import numpy as np

from circuit.simulate import simulate_circuit
from seqmap.errors import GridMismatch
from seqmap.reference import reference_signal, select_output

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SeqMapSpec:
    """
    Attributes:
        kappa (float): Error bound in (0, 1).
        tau (float): Delay bound, > 0.
        reference (np.ndarray): Ideal output sampled on the trace grid.
    """

    kappa: float
    tau: float
    reference: np.ndarray = field(compare=False)

    def __post_init__(self):
        if not (0.0 < self.kappa < 1.0):
            raise ValueError(f"kappa must lie in (0, 1), got {self.kappa}")
        if not (math.isfinite(self.tau) and self.tau > 0):
            raise ValueError(f"tau must be > 0, got {self.tau}")
        object.__setattr__(self, "reference", np.asarray(self.reference, dtype=float))


@dataclass(frozen=True)
class Violation:
    t: float
    err: float
    err_after_tau: float

    def __str__(self):
        return f"t={self.t:.6g} err={self.err:.6g} err_after_tau={self.err_after_tau:.6g}"


@dataclass(frozen=True)
class Verdict:
    violations: tuple[Violation, ...]
    checked: int
    unchecked: int
    exceeding: int

    @property
    def passed(self):
        return not self.violations

    def __bool__(self):
        return self.passed


def check(times, output, spec):
    """
    Check a sampled output against its reference.

    Parameters:
        times (array-like): Strictly increasing sample instants.
        output (array-like): Sampled output S(t).
        spec (SeqMapSpec): kappa, tau and the sampled reference f(t).

    Returns:
        Verdict: One violation per sample t with |S(t)-f(t)| > kappa whose
        lookahead still has |S-f| >= kappa.

    Raises:
        GridMismatch: If the arrays differ in length, the times are not
            strictly increasing, or tau is shorter than one sample step.
    """
    times = np.asarray(times, dtype=float)
    output = np.asarray(output, dtype=float)
    reference = spec.reference
    if not (times.shape == output.shape == reference.shape) or times.ndim != 1:
        raise GridMismatch(
            f"times {times.shape}, output {output.shape} and reference {reference.shape} "
            "must be one-dimensional and equal in length"
        )
    if times.size > 1:
        steps = np.diff(times)
        if np.any(steps <= 0):
            raise GridMismatch("sample times must be strictly increasing")
        if spec.tau < steps.max() * (1 - 1e-9):
            raise GridMismatch(f"tau={spec.tau} is shorter than the sample step {steps.max():.6g}")

    err = np.abs(output - reference)
    eps = 1e-9 * np.maximum(1.0, np.abs(times))
    after = np.searchsorted(times, times + spec.tau - eps, side="left")
    has_lookahead = after < times.size

    checked = int(has_lookahead.sum())
    unchecked = int(times.size - checked)
    exceeding = err > spec.kappa
    idx = np.flatnonzero(exceeding & has_lookahead)
    err_after = err[after[idx]]
    bad = err_after >= spec.kappa
    violations = tuple(
        Violation(float(times[i]), float(err[i]), float(e))
        for i, e in zip(idx[bad], err_after[bad])
    )
    if unchecked:
        logger.warning("%d sample(s) within tau=%g of the trace end are unchecked", unchecked, spec.tau)
    logger.debug("checked %d samples: %d above kappa, %d violations",
                 checked, int(exceeding.sum()), len(violations))
    return Verdict(
        violations=violations,
        checked=checked,
        unchecked=unchecked,
        exceeding=int((exceeding & has_lookahead).sum()),
    )


def format_report(verdict, limit=None):
    """
    Line-based report: ``PASS|FAIL``, a counts line, then one line per
    violation (at most ``limit`` when given).
    """
    lines = [
        "PASS" if verdict.passed else "FAIL",
        f"checked={verdict.checked} unchecked={verdict.unchecked} "
        f"exceeding={verdict.exceeding} violations={len(verdict.violations)}",
    ]
    shown = verdict.violations if limit is None else verdict.violations[:limit]
    lines += [str(v) for v in shown]
    if len(shown) < len(verdict.violations):
        lines.append(f"... {len(verdict.violations) - len(shown)} more")
    return "\n".join(lines)


def check_circuit(netlist, waveforms, t_end, dt_out, kappa, tau, *,
                  reference_delay=0.0, initial_state=0, output=None):
    """
    Simulate a netlist, build its ideal reference and check one output.

    Returns:
        tuple[Verdict, Trace, np.ndarray]: The verdict, the simulated trace
        and the sampled reference.
    """
    name = select_output(netlist, output)
    trace = simulate_circuit(netlist, waveforms, t_end, dt_out)
    reference = reference_signal(
        netlist, waveforms, trace.times, reference_delay,
        initial_state=initial_state, output=name,
    )
    verdict = check(trace.times, trace.outputs[name], SeqMapSpec(kappa, tau, reference))
    return verdict, trace, reference
