"""
Spectral result value type.
"""
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class SpectralResult:
    """Largest distance eigenvalue with its positive unit Perron vector"""

    rho: float
    perron: np.ndarray
    residual: float
    method: str
    iterations: int = 0

    @property
    def n(self) -> int:
        return len(self.perron)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SpectralResult):
            return NotImplemented
        return (self.rho == other.rho and self.residual == other.residual
                and np.array_equal(self.perron, other.perron))

    __hash__ = None
