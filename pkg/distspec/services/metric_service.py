"""
All-pairs distances and the transmission-based invariants.
"""
from fractions import Fraction
from typing import Optional

import numpy as np

from distspec.core.config import RunConfig
from distspec.core.exceptions import DisconnectedGraphError
from distspec.models.distance import DistanceMatrix
from distspec.models.graph import Graph
from distspec.services.base_service import BaseService
from distspec.services.graph_service import GraphService


class MetricService(BaseService):
    """Exact integer distance computations (BFS from every vertex)"""

    def __init__(self, config: Optional[RunConfig] = None):
        super().__init__(config)
        self.graphs = GraphService(self.config)

    def distances(self, g: Graph) -> DistanceMatrix:
        rows = []
        for source in range(g.n):
            row = g.bfs(source)
            if min(row) < 0:
                raise DisconnectedGraphError(g.n, len(self.graphs.components(g)))
            rows.append(row)
        entries = np.array(rows, dtype=np.int64).reshape(g.n, g.n)
        entries.setflags(write=False)
        transmissions = tuple(int(t) for t in entries.sum(axis=1))
        return DistanceMatrix(
            n=g.n,
            entries=entries,
            transmissions=transmissions,
            diameter=int(entries.max()),
            wiener=sum(transmissions) // 2,
        )

    @staticmethod
    def is_transmission_regular(d: DistanceMatrix) -> bool:
        return d.tr_min == d.tr_max

    @staticmethod
    def spectral_bounds(d: DistanceMatrix) -> tuple[float, float]:
        """(max(Tr_min, 2W/n), Tr_max): the sandwich around the distance spectral radius."""
        lower = max(Fraction(d.tr_min), Fraction(2 * d.wiener, d.n))
        return float(lower), float(d.tr_max)
