"""
Immutable simple undirected graphs.

Vertices are dense 0-indexed integers. Graphs up to 64 vertices store one
adjacency bit row per vertex; larger graphs (up to 512) fall back to
frozenset rows. Both expose the same interface and compare equal when their
vertex count and edge set agree.
"""
from abc import ABC, abstractmethod
from typing import Iterable, Iterator, Sequence

from distspec.utils.validators import require, validate_edges

BIT_ROW_MAX_N = 64
GRAPH_MAX_N = 512


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _normalise(edges: Iterable[Sequence[int]]) -> frozenset:
    return frozenset((min(u, v), max(u, v)) for u, v in edges)


class Graph(ABC):
    """Abstract immutable graph value"""

    __slots__ = ("n", "_edges")

    def __init__(self, n: int, edges: frozenset):
        self.n = n
        self._edges = edges

    @staticmethod
    def from_edges(n: int, edges: Iterable[Sequence[int]] = ()) -> "Graph":
        """Build a graph, picking the bit-row representation whenever it fits."""
        require(1 <= n <= GRAPH_MAX_N, f"1 <= n <= {GRAPH_MAX_N}", n=n)
        edge_set = _normalise(edges)
        validate_edges(n, edge_set)
        if n <= BIT_ROW_MAX_N:
            return BitGraph(n, edge_set)
        return SetGraph(n, edge_set)

    @staticmethod
    def from_masks(n: int, rows: Sequence[int]) -> "Graph":
        """Build from adjacency bit rows (must be symmetric and loop-free)."""
        edges = [(u, v) for u in range(n) for v in iter_bits(rows[u] >> (u + 1) << (u + 1))]
        return Graph.from_edges(n, edges)

    @property
    def m(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """Edges as sorted (u, v) pairs with u < v."""
        return tuple(sorted(self._edges))

    @property
    def edge_set(self) -> frozenset:
        return self._edges

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def degrees(self) -> list[int]:
        return [self.degree(v) for v in range(self.n)]

    def masks(self) -> tuple[int, ...]:
        """Adjacency rows as integers regardless of the storage representation."""
        return tuple(sum(1 << w for w in self.neighbors(v)) for v in range(self.n))

    @abstractmethod
    def neighbors(self, v: int) -> tuple[int, ...]:
        """Sorted neighbourhood N(v)."""

    @abstractmethod
    def has_edge(self, u: int, v: int) -> bool:
        """True iff uv is an edge."""

    @abstractmethod
    def bfs(self, source: int) -> list[int]:
        """Distances from source; -1 marks unreachable vertices."""

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self.n, self._edges))

    def __reduce__(self):
        return (Graph.from_edges, (self.n, self.edges))

    def __repr__(self) -> str:
        return f"{type(self).__name__}(n={self.n}, edges={list(self.edges)})"


class BitGraph(Graph):
    """Graph with one integer adjacency row per vertex (n <= 64)"""

    __slots__ = ("rows",)

    def __init__(self, n: int, edges: frozenset):
        super().__init__(n, edges)
        rows = [0] * n
        for u, v in edges:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        self.rows = tuple(rows)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(iter_bits(self.rows[v]))

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def masks(self) -> tuple[int, ...]:
        return self.rows

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def bfs(self, source: int) -> list[int]:
        dist = [-1] * self.n
        rows = self.rows
        visited = 1 << source
        frontier = visited
        level = 0
        while frontier:
            reached = 0
            for v in iter_bits(frontier):
                dist[v] = level
                reached |= rows[v]
            frontier = reached & ~visited
            visited |= frontier
            level += 1
        return dist


class SetGraph(Graph):
    """Generic representation for graphs beyond the bit-row width"""

    __slots__ = ("rows",)

    def __init__(self, n: int, edges: frozenset):
        super().__init__(n, edges)
        rows: list[set] = [set() for _ in range(n)]
        for u, v in edges:
            rows[u].add(v)
            rows[v].add(u)
        self.rows = tuple(frozenset(r) for r in rows)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(sorted(self.rows[v]))

    def degree(self, v: int) -> int:
        return len(self.rows[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.rows[u]

    def bfs(self, source: int) -> list[int]:
        dist = [-1] * self.n
        dist[source] = 0
        frontier = [source]
        level = 0
        while frontier:
            level += 1
            nxt = []
            for v in frontier:
                for w in self.rows[v]:
                    if dist[w] < 0:
                        dist[w] = level
                        nxt.append(w)
            frontier = nxt
        return dist
