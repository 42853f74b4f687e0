"""
Seeded random graph corpora for the property suites.
"""
from typing import Iterator, Optional

import numpy as np

from distspec.core.config import RunConfig
from distspec.models.family import FamilyKind, FamilySpec
from distspec.models.graph import Graph
from distspec.services.base_service import BaseService
from distspec.services.graph_service import GraphService, pnc_spec


class CorpusService(BaseService):
    """Every corpus is a pure function of (seed, parameters)"""

    def __init__(self, config: Optional[RunConfig] = None):
        super().__init__(config)
        self.graphs = GraphService(self.config)

    def rng(self, seed: Optional[int] = None) -> np.random.Generator:
        return np.random.default_rng(self.config.seed if seed is None else seed)

    @staticmethod
    def random_connected(rng: np.random.Generator, n: int, density: float) -> Graph:
        """Random recursive spanning tree plus independent extra edges."""
        edges = {(int(rng.integers(0, v)), v) for v in range(1, n)}
        extra = rng.random((n, n)) < density
        edges |= {(u, v) for u in range(n) for v in range(u + 1, n) if extra[u, v]}
        return Graph.from_edges(n, edges)

    @staticmethod
    def random_forest(rng: np.random.Generator, n: int, components: int) -> Graph:
        """Random forest with exactly the given number of trees (1 <= components <= n)."""
        roots = set(int(r) for r in rng.choice(np.arange(1, n), size=components - 1, replace=False)) if components > 1 else set()
        edges = []
        start = 0
        for v in range(1, n):
            if v in roots:
                start = v
                continue
            edges.append((int(rng.integers(start, v)), v))
        return Graph.from_edges(n, edges)

    def corpus(self, size: int, max_n: int = 12, min_n: int = 2, seed: Optional[int] = None) -> list[Graph]:
        rng = self.rng(seed)
        return [self.random_connected(rng, int(rng.integers(min_n, max_n + 1)), float(rng.uniform(0.05, 0.7)))
                for _ in range(size)]

    def non_edge_pairs(self, count: int, max_n: int = 12, seed: Optional[int] = None) -> list[tuple[Graph, int, int]]:
        rng = self.rng(seed)
        pairs = []
        while len(pairs) < count:
            g = self.random_connected(rng, int(rng.integers(3, max_n + 1)), float(rng.uniform(0.05, 0.6)))
            missing = [(u, v) for u in range(g.n) for v in range(u + 1, g.n) if not g.has_edge(u, v)]
            if missing:
                u, v = missing[int(rng.integers(0, len(missing)))]
                pairs.append((g, u, v))
        return pairs

    def forest_complements(self, count: int, max_n: int = 10, seed: Optional[int] = None) -> Iterator[Graph]:
        """Complements of random forests with at least two trees; all have diameter at most 2."""
        rng = self.rng(seed)
        for _ in range(count):
            n = int(rng.integers(5, max_n + 1))
            c = int(rng.integers(2, n - 1))
            yield self.graphs.complement(self.random_forest(rng, n, c))

    def symmetric_corpus(self, max_n: int = 10) -> list[Graph]:
        """Named constructions, all with nontrivial automorphisms."""
        specs = []
        for n in range(3, max_n + 1):
            specs += [FamilySpec.of(FamilyKind.PATH, n), FamilySpec.of(FamilyKind.CYCLE, n),
                      FamilySpec.of(FamilyKind.STAR, n), FamilySpec.of(FamilyKind.COMPLETE, n)]
            specs += [pnc_spec(n, c) for c in range(2, n)]
            specs += [FamilySpec.of(FamilyKind.DOUBLE_STAR, n, a) for a in range(1, (n - 2) // 2 + 1)]
        specs += [FamilySpec.of(FamilyKind.KTILDE, k) for k in range(4, max_n + 1, 2)]
        return [self.graphs.construct(spec) for spec in specs]
