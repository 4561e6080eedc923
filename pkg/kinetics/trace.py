from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

import numpy as np
import pandas as pd


@dataclass
class Trace:
    """
    Time-sampled concentrations of a simulated network.

    Attributes:
        times (np.ndarray): Strictly increasing sample instants (uniform step
            plus any schedule switch points).
        species (dict[str, np.ndarray]): Substrate and product columns, in
            pair order (substrate first).
        enzymes (dict[str, np.ndarray]): Effective enzyme concentrations.
        outputs (dict[str, np.ndarray]): Named circuit outputs; columns whose
            name already appears in ``species`` are not repeated on export.
    """

    times: np.ndarray
    species: dict[str, np.ndarray]
    enzymes: dict[str, np.ndarray]
    outputs: dict[str, np.ndarray] = field(default_factory=dict)

    def __len__(self):
        return len(self.times)

    def __getitem__(self, name):
        for table in (self.species, self.enzymes, self.outputs):
            if name in table:
                return table[name]
        raise KeyError(name)

    @property
    def dt(self):
        return float(self.times[1] - self.times[0]) if len(self.times) > 1 else 0.0

    def columns(self):
        names = ["t", *self.species, *self.enzymes]
        names += [n for n in self.outputs if n not in names]
        return names

    def to_frame(self):
        """Trace as a DataFrame with columns ``t, <species...>, <enzymes...>[, <outputs...>]``."""
        data = {"t": self.times}
        data.update(self.species)
        data.update(self.enzymes)
        for name, values in self.outputs.items():
            data.setdefault(name, values)
        return pd.DataFrame(data, columns=self.columns())

    def to_csv(self, path):
        """Write the trace as CSV: 12 significant digits, LF line endings."""
        path = Path(path)
        self.to_frame().to_csv(path, index=False, float_format="%.12g", lineterminator="\n")
        return path

    def window(self, t_start, t_stop=None):
        """Boolean mask of samples with ``t_start <= t`` (and ``t <= t_stop``)."""
        mask = self.times >= t_start
        if t_stop is not None:
            mask &= self.times <= t_stop
        return mask
