"""
Distance matrix value type.
"""
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class DistanceMatrix:
    """All-pairs shortest path lengths of a connected graph, with derived invariants"""

    n: int
    entries: np.ndarray
    transmissions: tuple[int, ...]
    diameter: int
    wiener: int

    @property
    def tr_min(self) -> int:
        return min(self.transmissions)

    @property
    def tr_max(self) -> int:
        return max(self.transmissions)

    def row(self, u: int) -> np.ndarray:
        return self.entries[u]

    def as_float(self) -> np.ndarray:
        return self.entries.astype(np.float64)

    def __hash__(self) -> int:
        return hash((self.n, self.entries.tobytes()))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DistanceMatrix):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.entries, other.entries)
