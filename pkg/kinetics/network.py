"""
Reaction-network description: conserved substrate/product pairs, enzymes and
the conversions they catalyse.

Each ConservedPair is a single state variable ``s`` (the substrate fraction);
the product fraction is always ``1 - s`` so mass balance holds by
construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from functools import cached_property
from typing import Literal

import numpy as np

from kinetics.errors import NetworkError, ScheduleError
from kinetics.michaelis import michaelis_rate
from kinetics.schedule import Schedule

Slot = Literal["substrate", "product"]
DEFAULT_K_M = 0.1


@dataclass(frozen=True)
class SpeciesRef:
    """One slot (substrate or product) of a named conserved pair."""

    pair: str
    slot: Slot

    def __post_init__(self):
        if self.slot not in ("substrate", "product"):
            raise NetworkError(f"unknown species slot {self.slot!r}")

    def opposite(self):
        return SpeciesRef(self.pair, "product" if self.slot == "substrate" else "substrate")


@dataclass(frozen=True)
class ConservedPair:
    """Substrate/product couple with fixed total; ``s`` is the substrate fraction."""

    substrate_name: str
    product_name: str
    s: float = 0.5

    def __post_init__(self):
        if self.substrate_name == self.product_name:
            raise NetworkError(f"pair {self.substrate_name!r} needs two distinct species names")
        if not (0.0 <= self.s <= 1.0):
            raise NetworkError(f"pair {self.substrate_name!r}: s={self.s} outside [0, 1]")

    @property
    def name(self):
        return self.substrate_name

    @property
    def product(self):
        return 1.0 - self.s

    def level(self, slot):
        return self.s if slot == "substrate" else 1.0 - self.s


@dataclass(frozen=True)
class EnzymeSignal:
    """
    Enzyme with kinetic constants and the signal that sets its concentration.

    Exactly one of ``schedule`` (a piecewise-constant insertion profile) and
    ``source`` (a live species whose concentration the enzyme tracks, used
    for gate-to-gate coupling) is set.
    """

    name: str
    k_cat: float
    k_m: float = DEFAULT_K_M
    schedule: Schedule | None = None
    source: SpeciesRef | None = None

    def __post_init__(self):
        if not (math.isfinite(self.k_cat) and self.k_cat > 0):
            raise NetworkError(f"enzyme {self.name!r}: k_cat must be > 0, got {self.k_cat}")
        if not (math.isfinite(self.k_m) and self.k_m > 0):
            raise NetworkError(f"enzyme {self.name!r}: K_m must be > 0, got {self.k_m}")
        if (self.schedule is None) == (self.source is None):
            raise NetworkError(f"enzyme {self.name!r} needs exactly one of schedule or source")

    @property
    def coupled(self):
        return self.source is not None


@dataclass(frozen=True)
class CatalyzedConversion:
    """``source -> target`` within one pair, catalysed by ``enzyme``."""

    source: SpeciesRef
    target: SpeciesRef
    enzyme: str

    def __post_init__(self):
        if self.source.pair != self.target.pair:
            raise NetworkError(
                f"conversion {self.source.pair} -> {self.target.pair} crosses pairs"
            )
        if self.source.slot == self.target.slot:
            raise NetworkError(f"conversion on {self.source.pair!r} must change slot")

    @property
    def sign(self):
        """+1 when the conversion produces substrate, -1 when it consumes it."""
        return 1 if self.source.slot == "product" else -1


@dataclass(frozen=True)
class CompiledNetwork:
    """Index arrays consumed by the numba right-hand side."""

    conv_pair: np.ndarray
    conv_sign: np.ndarray
    conv_kcat: np.ndarray
    conv_km: np.ndarray
    conv_enzyme: np.ndarray
    coupled_enzyme: np.ndarray
    coupled_pair: np.ndarray
    coupled_product: np.ndarray


@dataclass(frozen=True)
class ReactionNetwork:
    """
    Container for pairs, enzymes and conversions.

    Immutable; safe to share read-only between concurrent integrations.
    """

    pairs: tuple[ConservedPair, ...]
    conversions: tuple[CatalyzedConversion, ...]
    enzymes: tuple[EnzymeSignal, ...]
    _pair_index: dict = field(init=False, repr=False, compare=False)
    _enzyme_index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "pairs", tuple(self.pairs))
        object.__setattr__(self, "conversions", tuple(self.conversions))
        object.__setattr__(self, "enzymes", tuple(self.enzymes))

        names = []
        for pair in self.pairs:
            names += [pair.substrate_name, pair.product_name]
        names += [enzyme.name for enzyme in self.enzymes]
        duplicates = sorted({n for n in names if names.count(n) > 1})
        if duplicates:
            raise NetworkError(f"duplicate names in network: {', '.join(duplicates)}")

        pair_index = {pair.name: i for i, pair in enumerate(self.pairs)}
        enzyme_index = {enzyme.name: i for i, enzyme in enumerate(self.enzymes)}
        for conv in self.conversions:
            if conv.source.pair not in pair_index:
                raise NetworkError(f"conversion refers to unknown pair {conv.source.pair!r}")
            if conv.enzyme not in enzyme_index:
                raise NetworkError(f"conversion refers to unknown enzyme {conv.enzyme!r}")
        for enzyme in self.enzymes:
            if enzyme.coupled and enzyme.source.pair not in pair_index:
                raise NetworkError(
                    f"enzyme {enzyme.name!r} is coupled to unknown pair {enzyme.source.pair!r}"
                )
        object.__setattr__(self, "_pair_index", pair_index)
        object.__setattr__(self, "_enzyme_index", enzyme_index)

    # ------------------------------------------------------------------
    # lookups
    # ------------------------------------------------------------------
    def pair(self, name):
        try:
            return self.pairs[self._pair_index[name]]
        except KeyError:
            raise NetworkError(f"no pair named {name!r}") from None

    def pair_index(self, name):
        return self._pair_index[name]

    def enzyme(self, name):
        try:
            return self.enzymes[self._enzyme_index[name]]
        except KeyError:
            raise NetworkError(f"no enzyme named {name!r}") from None

    def species_ref(self, species_name):
        """Resolve a species name to its pair slot."""
        for pair in self.pairs:
            if pair.substrate_name == species_name:
                return SpeciesRef(pair.name, "substrate")
            if pair.product_name == species_name:
                return SpeciesRef(pair.name, "product")
        raise NetworkError(f"no species named {species_name!r}")

    def species_names(self):
        names = []
        for pair in self.pairs:
            names += [pair.substrate_name, pair.product_name]
        return names

    # ------------------------------------------------------------------
    # state
    # ------------------------------------------------------------------
    def initial_state(self):
        return np.array([pair.s for pair in self.pairs], dtype=float)

    def with_state(self, state):
        """Copy of the network with every pair's ``s`` replaced from ``state``."""
        state = np.clip(np.asarray(state, dtype=float), 0.0, 1.0)
        pairs = tuple(replace(pair, s=float(v)) for pair, v in zip(self.pairs, state))
        return ReactionNetwork(pairs, self.conversions, self.enzymes)

    def check_schedules(self, t0):
        for enzyme in self.enzymes:
            if enzyme.schedule is not None and enzyme.schedule.start > t0:
                raise ScheduleError(
                    f"schedule of {enzyme.name!r} starts at {enzyme.schedule.start}, after t0={t0}"
                )

    def switch_points(self, t0, t_end):
        points = set()
        for enzyme in self.enzymes:
            if enzyme.schedule is not None:
                points.update(enzyme.schedule.switch_points(t0, t_end))
        return sorted(points)

    def scheduled_levels(self, t):
        """Enzyme concentrations at ``t``; coupled enzymes are left at 0."""
        return np.array(
            [0.0 if enzyme.coupled else enzyme.schedule.value_at(t) for enzyme in self.enzymes],
            dtype=float,
        )

    def enzyme_levels(self, t, state):
        """Effective enzyme concentrations at ``t`` for a given pair state."""
        levels = self.scheduled_levels(t)
        for i, enzyme in enumerate(self.enzymes):
            if enzyme.coupled:
                s = state[self._pair_index[enzyme.source.pair]]
                value = s if enzyme.source.slot == "substrate" else 1.0 - s
                levels[i] = min(max(value, 0.0), 1.0)
        return levels

    @cached_property
    def compiled(self):
        conv_enzymes = [self.enzyme(conv.enzyme) for conv in self.conversions]
        coupled = [(i, e) for i, e in enumerate(self.enzymes) if e.coupled]
        return CompiledNetwork(
            conv_pair=np.array([self._pair_index[c.source.pair] for c in self.conversions], dtype=np.int64),
            conv_sign=np.array([c.sign for c in self.conversions], dtype=np.int64),
            conv_kcat=np.array([e.k_cat for e in conv_enzymes], dtype=float),
            conv_km=np.array([e.k_m for e in conv_enzymes], dtype=float),
            conv_enzyme=np.array([self._enzyme_index[c.enzyme] for c in self.conversions], dtype=np.int64),
            coupled_enzyme=np.array([i for i, _ in coupled], dtype=np.int64),
            coupled_pair=np.array([self._pair_index[e.source.pair] for _, e in coupled], dtype=np.int64),
            coupled_product=np.array([int(e.source.slot == "product") for _, e in coupled], dtype=np.int64),
        )


def net_rate(pair, network, t):
    """
    Time derivative of a pair's substrate fraction, ds/dt.

    Sums the Michaelis-Menten velocities of every conversion that produces
    the substrate and subtracts those that consume it, with each enzyme's
    concentration taken from its schedule at ``t`` (or from its live source
    species for coupled enzymes). For the NOT-gate network this is V4 - V3.

    Parameters:
        pair (ConservedPair): The pair to differentiate; its ``s`` is used
            as the current substrate level.
        network (ReactionNetwork): Network containing a pair of that name.
        t (float): Time at which schedules are evaluated.

    Returns:
        float: ds/dt (1/time).
    """
    idx = network.pair_index(pair.name)
    state = network.initial_state()
    state[idx] = pair.s
    levels = network.enzyme_levels(t, state)

    rate = 0.0
    for conv in network.conversions:
        if conv.source.pair != pair.name:
            continue
        enzyme = network.enzyme(conv.enzyme)
        e_conc = levels[network._enzyme_index[enzyme.name]]
        v = michaelis_rate(enzyme.k_cat, e_conc, enzyme.k_m, pair.level(conv.source.slot))
        rate += conv.sign * v
    return rate
