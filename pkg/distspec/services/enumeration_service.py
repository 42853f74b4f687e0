"""
Canonical labeling and isomorph-free generation of the graph families the
extremal checks quantify over.

Canonical form: the minimum adjacency code over the leaves of an
individualization-refinement search tree. Refinement splits cells by the
number of neighbours in every current cell; the target cell is the first
non-singleton. Automorphisms found at equal leaves prune siblings in the
same orbit, and a leaf equivalent to the first leaf abandons the subtree back
to the node where its path left the first path.

Generation: level-wise augmentation (add an edge, or for connected graphs by
size also a pendant vertex) with deduplication by canonical form.
"""
from dataclasses import dataclass
from math import comb
from typing import Callable, Iterable, Iterator, Optional, Sequence

from distspec.core.cache import EnumerationCache
from distspec.core.config import RunConfig
from distspec.core.performance import ComputePool, metrics_collector, timed
from distspec.models.enumeration import CanonicalForm, EnumMode, EnumScope
from distspec.models.family import FamilyKind, FamilySpec
from distspec.models.graph import Graph
from distspec.services.base_service import BaseService
from distspec.services.graph_service import GraphService, order_for_size
from distspec.utils.graph6 import to_graph6
from distspec.utils.validators import require

Cells = list[tuple[int, ...]]


def refine(rows: Sequence[int], cells: Cells) -> Cells:
    """Coarsest equitable refinement of an ordered partition."""
    while True:
        masks = [sum(1 << v for v in cell) for cell in cells]
        out: Cells = []
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                signature = tuple((rows[v] & mask).bit_count() for mask in masks)
                groups.setdefault(signature, []).append(v)
            out.extend(tuple(groups[signature]) for signature in sorted(groups))
        if len(out) == len(cells):
            return out
        cells = out


def adjacency_code(rows: Sequence[int], labeling: Sequence[int]) -> int:
    """Upper triangle of the relabelled graph in graph6 column order, first pair most significant."""
    code = 0
    for j in range(1, len(labeling)):
        row = rows[labeling[j]]
        for i in range(j):
            code = (code << 1) | (row >> labeling[i] & 1)
    return code


class _OrbitPartition:
    """Union-find over vertices"""

    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def absorb(self, perm: Sequence[int]) -> None:
        for x, y in enumerate(perm):
            rx, ry = self.find(x), self.find(y)
            if rx != ry:
                self.parent[max(rx, ry)] = min(rx, ry)

    def blocks(self) -> tuple[tuple[int, ...], ...]:
        grouped: dict[int, list[int]] = {}
        for v in range(len(self.parent)):
            grouped.setdefault(self.find(v), []).append(v)
        return tuple(sorted(tuple(b) for b in grouped.values()))


class _Search:
    def __init__(self, rows: Sequence[int], n: int):
        self.rows = rows
        self.n = n
        self.first_labeling: Optional[tuple[int, ...]] = None
        self.first_code = -1
        self.best_labeling: Optional[tuple[int, ...]] = None
        self.best_code = -1
        self.generators: list[tuple[int, ...]] = []

    def run(self) -> CanonicalForm:
        self._explore(refine(self.rows, [tuple(range(self.n))]), (), True, 0)
        orbits = _OrbitPartition(self.n)
        for perm in self.generators:
            orbits.absorb(perm)
        return CanonicalForm(self.n, self.best_code, orbits.blocks(), self.best_labeling)

    def _explore(self, cells: Cells, prefix: tuple[int, ...], on_first: bool, diverge: int) -> Optional[int]:
        """Returns the depth to unwind to when a subtree turns out equivalent to the first one."""
        depth = len(prefix)
        target = next((i for i, cell in enumerate(cells) if len(cell) > 1), None)
        if target is None:
            return self._leaf(tuple(cell[0] for cell in cells), diverge)
        cell = cells[target]
        explored: list[int] = []
        for v in cell:
            if explored and self._same_orbit(v, explored, prefix):
                continue
            explored.append(v)
            child_first = on_first and len(explored) == 1
            child = cells[:target] + [(v,), tuple(w for w in cell if w != v)] + cells[target + 1:]
            jump = self._explore(refine(self.rows, child), prefix + (v,), child_first,
                                 depth if on_first and not child_first else diverge)
            if jump is not None and jump < depth:
                return jump
        return None

    def _leaf(self, labeling: tuple[int, ...], diverge: int) -> Optional[int]:
        code = adjacency_code(self.rows, labeling)
        if self.first_labeling is None:
            self.first_labeling = self.best_labeling = labeling
            self.first_code = self.best_code = code
            return None
        if code == self.first_code:
            self._add_generator(self.first_labeling, labeling)
            return diverge
        if code == self.best_code:
            self._add_generator(self.best_labeling, labeling)
        elif code < self.best_code:
            self.best_code, self.best_labeling = code, labeling
        return None

    def _add_generator(self, source: Sequence[int], image: Sequence[int]) -> None:
        perm = [0] * self.n
        for a, b in zip(source, image):
            perm[a] = b
        if any(x != y for x, y in enumerate(perm)):
            self.generators.append(tuple(perm))

    def _same_orbit(self, v: int, explored: list[int], prefix: tuple[int, ...]) -> bool:
        orbits = _OrbitPartition(self.n)
        for perm in self.generators:
            if all(perm[p] == p for p in prefix):
                orbits.absorb(perm)
        root = orbits.find(v)
        return any(orbits.find(w) == root for w in explored)


def canonical_form(g: Graph) -> CanonicalForm:
    """Canonical form without scope checks; picklable for the worker pool."""
    if g.n == 1:
        return CanonicalForm(1, 0, ((0,),), (0,))
    return _Search(g.masks(), g.n).run()


def canonical_graph(g: Graph, form: Optional[CanonicalForm] = None) -> Graph:
    """The representative whose upper triangle is the canonical code."""
    form = form or canonical_form(g)
    position = {v: i for i, v in enumerate(form.labeling)}
    return Graph.from_edges(g.n, ((position[u], position[v]) for u, v in g.edges))


def partitions(total: int, smallest: int, largest: Optional[int] = None) -> Iterator[tuple[int, ...]]:
    """Non-increasing integer partitions of total with every part in [smallest, largest]."""
    largest = total if largest is None else largest
    if total == 0:
        yield ()
        return
    for first in range(min(total, largest), smallest - 1, -1):
        for rest in partitions(total - first, smallest, first):
            yield (first,) + rest


@dataclass(frozen=True)
class OrderBound:
    """n with C(n-1,2) < m <= C(n,2), s = m - C(n-1,2), and the order-pruning lower bound"""

    m: int
    n: int
    s: int

    def claim_bound(self, n_g: int) -> float:
        """2(n_G - 1) - 2m/n_G: a lower bound on rho for any order-n_G graph with m edges."""
        return 2 * (n_g - 1) - 2 * self.m / n_g


class EnumerationService(BaseService):
    """Isomorph-free streams over the four enumeration scopes"""

    def __init__(self, config: Optional[RunConfig] = None, cache: Optional[EnumerationCache] = None):
        super().__init__(config)
        self.graphs = GraphService(self.config)
        self.cache = cache or EnumerationCache(self.config.cache_dir)
        self.pool = ComputePool(self.config.workers)
        self._size_levels: dict[int, list[Graph]] = {1: [self.graphs.path(2)]}

    # -- canonical forms -------------------------------------------------------------------

    def canonical(self, g: Graph) -> CanonicalForm:
        self._check_limit("max_canonical_n", g.n, self.config.max_canonical_n)
        metrics_collector.increment("canonicalizations")
        return canonical_form(g)

    def canonical_graph(self, g: Graph) -> Graph:
        return canonical_graph(g, self.canonical(g))

    def canonical_graph6(self, g: Graph) -> str:
        return to_graph6(self.canonical_graph(g))

    def is_isomorphic(self, a: Graph, b: Graph) -> bool:
        return a.n == b.n and a.m == b.m and self.canonical(a).same_class(self.canonical(b))

    def orbits(self, g: Graph) -> tuple[tuple[int, ...], ...]:
        return self.canonical(g).orbits

    @staticmethod
    def prune_order_bound(m: int) -> OrderBound:
        require(m >= 3, "m >= 3", m=m)
        n, s = order_for_size(m)
        return OrderBound(m=m, n=n, s=s)

    # -- streams ---------------------------------------------------------------------------------

    def enumerate(self, scope: EnumScope) -> Iterator[Graph]:
        """Pairwise non-isomorphic canonical representatives, sorted by canonical code."""
        self.check_scope(scope)
        cached = self.cache.get(scope)
        if cached is not None:
            metrics_collector.increment("cache_hits")
            yield from cached
            return
        metrics_collector.increment("cache_misses")
        graphs = self._generate(scope)
        self._log_operation("enumerate", scope=scope.describe(), classes=len(graphs))
        self.cache.set(scope, graphs)
        yield from graphs

    def count(self, scope: EnumScope) -> int:
        return sum(1 for _ in self.enumerate(scope))

    def check_scope(self, scope: EnumScope) -> None:
        if scope.mode is EnumMode.BY_SIZE:
            require(scope.m is not None and scope.m >= 1, "BY_SIZE: m >= 1", m=scope.m)
            self._check_limit("max_size_edges", scope.m, self.config.max_size_edges)
        elif scope.mode is EnumMode.BY_ORDER_SIZE:
            require(scope.n is not None and scope.n >= 1, "BY_ORDER_SIZE: n >= 1", n=scope.n)
            require(scope.m is not None and 0 <= scope.m <= comb(scope.n, 2),
                    "BY_ORDER_SIZE: 0 <= m <= C(n,2)", n=scope.n, m=scope.m)
            self._check_limit("max_order_size_n", scope.n, self.config.max_order_size_n)
        elif scope.mode is EnumMode.FORESTS:
            require(scope.n is not None and scope.c is not None and 1 <= scope.c <= scope.n,
                    "FORESTS: 1 <= c <= n", n=scope.n, c=scope.c)
            self._check_limit("max_forest_n", scope.n, self.config.max_forest_n)
        else:
            require(scope.n is not None and scope.s is not None and 1 <= scope.s <= scope.n - 1,
                    "STRUCTURED_MIN: 1 <= s <= n - 1", n=scope.n, s=scope.s)
            self._check_limit("max_structured_n", scope.n, self.config.max_structured_n)

    @timed
    def _generate(self, scope: EnumScope) -> list[Graph]:
        if scope.mode is EnumMode.BY_SIZE:
            graphs = self._by_size(scope.m)
            if scope.max_n is not None:
                graphs = [g for g in graphs if g.n <= scope.max_n]
            return graphs
        if scope.mode is EnumMode.BY_ORDER_SIZE:
            return self._by_order_size(scope.n, scope.m)
        if scope.mode is EnumMode.FORESTS:
            return self._forests(scope.n, scope.c)
        return self._dedupe(g for _, g in self.structured_candidates(scope.n, scope.s, scope.include_all_forests))

    def _dedupe(self, candidates: Iterable[Graph]) -> list[Graph]:
        candidates = list(candidates)
        for g in candidates:
            self._check_limit("max_canonical_n", g.n, self.config.max_canonical_n)
        forms = self.pool.map(canonical_form, candidates)
        metrics_collector.increment("canonicalizations", len(candidates))
        seen: dict[tuple[int, int], Graph] = {}
        for g, form in zip(candidates, forms):
            if form.key not in seen:
                seen[form.key] = canonical_graph(g, form)
        return [seen[key] for key in sorted(seen)]

    def _augment(self, level: Iterable[Graph], extend: Callable[[Graph], Iterator[Graph]]) -> list[Graph]:
        return self._dedupe(h for g in level for h in extend(g))

    @staticmethod
    def _add_non_edges(g: Graph) -> Iterator[Graph]:
        edges = list(g.edges)
        for u in range(g.n):
            for v in range(u + 1, g.n):
                if not g.has_edge(u, v):
                    yield Graph.from_edges(g.n, edges + [(u, v)])

    @classmethod
    def _grow_connected(cls, g: Graph) -> Iterator[Graph]:
        yield from cls._add_non_edges(g)
        edges = list(g.edges)
        for v in range(g.n):
            yield Graph.from_edges(g.n + 1, edges + [(v, g.n)])

    def _grow_forest(self, g: Graph) -> Iterator[Graph]:
        component = [0] * g.n
        for index, vertices in enumerate(self.graphs.components(g)):
            for v in vertices:
                component[v] = index
        edges = list(g.edges)
        for u in range(g.n):
            for v in range(u + 1, g.n):
                if component[u] != component[v]:
                    yield Graph.from_edges(g.n, edges + [(u, v)])

    def _by_size(self, m: int) -> list[Graph]:
        """Connected graphs with m edges: every one arises from one with m-1 edges
        by adding a cycle edge or a pendant vertex."""
        top = max(self._size_levels)
        for k in range(top + 1, m + 1):
            self._size_levels[k] = self._augment(self._size_levels[k - 1], self._grow_connected)
        return self._size_levels[m]

    def _by_order_size(self, n: int, m: int) -> list[Graph]:
        total = comb(n, 2)
        sparse = min(m, total - m)
        level = [self.graphs.empty(n)]
        for _ in range(sparse):
            level = self._augment(level, self._add_non_edges)
        if sparse != m:
            level = self._dedupe(self.graphs.complement(g) for g in level)
        return [g for g in level if self.graphs.is_connected(g)]

    def _forests(self, n: int, c: int) -> list[Graph]:
        level = [self.graphs.empty(n)]
        for _ in range(n - c):
            level = self._augment(level, self._grow_forest)
        return level

    # -- structured minimizer candidates -------------------------------------------------------

    def structured_specs(self, n: int, s: int, include_all_forests: bool = False) -> list[FamilySpec]:
        """Complements of unions of cycles and exactly s+1 nontrivial paths on n vertices.

        Unless include_all_forests is set, the candidates whose complement is a
        linear forest are represented only by the balanced one, P_{n,s+1}.
        """
        paths_needed = s + 1
        specs: list[FamilySpec] = []
        for path_total in range(2 * paths_needed, n + 1):
            for cycles in partitions(n - path_total, 3):
                if not cycles and not include_all_forests:
                    continue
                for paths in partitions(path_total, 2):
                    if len(paths) != paths_needed:
                        continue
                    parts = [FamilySpec.of(FamilyKind.CYCLE, length) for length in cycles]
                    parts += [FamilySpec.of(FamilyKind.PATH, length) for length in paths]
                    specs.append(FamilySpec.complement(FamilySpec.union(*parts)))
        if not include_all_forests and n >= 2 * paths_needed:
            specs.insert(0, FamilySpec.of(FamilyKind.PNC, n, paths_needed))
        return specs

    def structured_candidates(self, n: int, s: int,
                              include_all_forests: bool = False) -> list[tuple[FamilySpec, Graph]]:
        return [(spec, self.graphs.construct(spec)) for spec in self.structured_specs(n, s, include_all_forests)]
