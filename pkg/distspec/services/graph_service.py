"""
Graph constructions and the structural transformations used by the extremal arguments.

Labeling conventions (all 0-indexed):
    P_n        path 0-1-...-(n-1)
    C_n        path plus edge (n-1, 0)
    S_n        centre 0, leaves 1..n-1
    D_{n,a}    centre 0 with leaves 1..a, centre a+1 with leaves a+2..n-1, edge (0, a+1)
    A_n / B_n  path 0..n-2 plus vertex n-1 attached to vertex 1 / vertex 2
    P_{n,c}    complement of the union, in order, of the shorter then the longer paths
    K̃_{2a}     K_{2a} minus the matching (0,1), (2,3), ...
    G_m        K_{n-1} on 0..n-2 plus vertex n-1 adjacent to 0..s-1
Unions concatenate vertex blocks in argument order; joins add every cross edge.
"""
from dataclasses import dataclass
from enum import Enum
from math import comb
from typing import Iterable, Optional, Sequence

from distspec.core.config import RunConfig
from distspec.models.family import FamilyKind, FamilySpec
from distspec.models.graph import Graph, iter_bits
from distspec.services.base_service import BaseService
from distspec.utils.validators import require, validate_vertex

_ARITY = {
    FamilyKind.PATH: 1, FamilyKind.CYCLE: 1, FamilyKind.STAR: 1, FamilyKind.COMPLETE: 1,
    FamilyKind.DOUBLE_STAR: 2, FamilyKind.A_TREE: 1, FamilyKind.B_TREE: 1,
    FamilyKind.PNC: 2, FamilyKind.KTILDE: 1, FamilyKind.BH_GRAPH: 1,
}


class ComponentKind(str, Enum):
    PATH = "PATH"
    CYCLE = "CYCLE"
    OTHER = "OTHER"


@dataclass(frozen=True)
class Component:
    vertices: tuple[int, ...]
    edges: int
    kind: ComponentKind

    @property
    def order(self) -> int:
        return len(self.vertices)

    @property
    def nontrivial_path(self) -> bool:
        return self.kind is ComponentKind.PATH and self.order >= 2


@dataclass(frozen=True)
class StructureReport:
    is_connected: bool
    diameter_le_2: bool
    max_degree: int
    min_degree: int
    components: tuple[Component, ...]

    @property
    def component_kinds(self) -> tuple[ComponentKind, ...]:
        return tuple(c.kind for c in self.components)

    @property
    def path_components(self) -> int:
        return sum(1 for c in self.components if c.kind is ComponentKind.PATH)

    @property
    def nontrivial_path_components(self) -> int:
        return sum(1 for c in self.components if c.nontrivial_path)

    @property
    def cycle_components(self) -> int:
        return sum(1 for c in self.components if c.kind is ComponentKind.CYCLE)


def order_for_size(m: int) -> tuple[int, int]:
    """The unique n with C(n-1,2) < m <= C(n,2), and s = m - C(n-1,2)."""
    require(m >= 1, "m >= 1", m=m)
    n = 2
    while comb(n, 2) < m:
        n += 1
    return n, m - comb(n - 1, 2)


class GraphService(BaseService):
    """Pure graph operations; every method returns a new Graph"""

    def __init__(self, config: Optional[RunConfig] = None):
        super().__init__(config)

    # -- elementary constructions -------------------------------------------------

    @staticmethod
    def empty(n: int) -> Graph:
        return Graph.from_edges(n, ())

    @staticmethod
    def path(n: int) -> Graph:
        return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))

    @staticmethod
    def cycle(n: int) -> Graph:
        return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)] + [(n - 1, 0)])

    @staticmethod
    def star(n: int) -> Graph:
        return Graph.from_edges(n, ((0, i) for i in range(1, n)))

    @staticmethod
    def complete(n: int) -> Graph:
        return Graph.from_edges(n, ((u, v) for u in range(n) for v in range(u + 1, n)))

    # -- operations -----------------------------------------------------------------

    def complement(self, g: Graph) -> Graph:
        full = (1 << g.n) - 1
        rows = g.masks()
        return Graph.from_masks(g.n, [full & ~rows[v] & ~(1 << v) for v in range(g.n)])

    def disjoint_union(self, parts: Sequence[Graph]) -> Graph:
        require(len(parts) > 0, "parts non-empty")
        offset = 0
        edges = []
        for part in parts:
            edges.extend((u + offset, v + offset) for u, v in part.edges)
            offset += part.n
        return Graph.from_edges(offset, edges)

    def join(self, g: Graph, h: Graph) -> Graph:
        union = self.disjoint_union([g, h])
        cross = ((u, g.n + v) for u in range(g.n) for v in range(h.n))
        return Graph.from_edges(union.n, list(union.edges) + list(cross))

    def add_edge(self, g: Graph, u: int, v: int) -> Graph:
        validate_vertex(g.n, u, v)
        require(u != v and not g.has_edge(u, v), "uv is a non-edge", u=u, v=v)
        return Graph.from_edges(g.n, list(g.edges) + [(u, v)])

    def remove_edge(self, g: Graph, u: int, v: int) -> Graph:
        require(g.has_edge(u, v), "uv is an edge", u=u, v=v)
        target = (min(u, v), max(u, v))
        return Graph.from_edges(g.n, (e for e in g.edges if e != target))

    def relabel(self, g: Graph, order: Sequence[int]) -> Graph:
        """Vertex order[i] of g becomes vertex i."""
        require(sorted(order) == list(range(g.n)), "order is a permutation of the vertices")
        position = {v: i for i, v in enumerate(order)}
        return Graph.from_edges(g.n, ((position[u], position[v]) for u, v in g.edges))

    def identify_with_pendant(self, g: Graph, u: int, v: int) -> Graph:
        """G(uv): u absorbs N(v) and v is re-attached as a pendant vertex of u.

        Defined for edges that are not pendant edges. The edge count drops by
        |N(u) ∩ N(v)|, so it is unchanged when uv lies in no triangle.
        """
        validate_vertex(g.n, u, v)
        require(g.has_edge(u, v), "uv is an edge of g", u=u, v=v)
        require(g.degree(u) >= 2 and g.degree(v) >= 2, "uv is not a pendant edge", u=u, v=v)
        kept = [(a, b) for a, b in g.edges if v not in (a, b)]
        moved = [(u, w) for w in g.neighbors(v) if w != u]
        return Graph.from_edges(g.n, kept + moved + [(u, v)])

    def shift_neighbors(self, g: Graph, u: int, v: int, shifted: Iterable[int]) -> Graph:
        """G - {uw : w in S} + {vw : w in S} for S ⊆ N(u) minus ({v} ∪ N(v))."""
        shifted = sorted(set(shifted))
        require(len(shifted) > 0, "S is non-empty")
        allowed = set(g.neighbors(u)) - {v} - set(g.neighbors(v))
        require(set(shifted) <= allowed, "S ⊆ N(u) \\ ({v} ∪ N(v))", u=u, v=v, S=shifted)
        removed = {(min(u, w), max(u, w)) for w in shifted}
        kept = [e for e in g.edges if e not in removed]
        return Graph.from_edges(g.n, kept + [(v, w) for w in shifted])

    # -- family constructions -------------------------------------------------------

    def construct(self, spec: FamilySpec) -> Graph:
        """Resolve a FamilySpec to its labeled graph, rejecting out-of-domain parameters."""
        kind = spec.kind
        if kind is FamilyKind.COMPLEMENT_OF:
            require(len(spec.children) == 1, "complement takes exactly one argument")
            return self.complement(self.construct(spec.children[0]))
        if kind is FamilyKind.UNION_OF:
            require(len(spec.children) >= 1, "union takes at least one argument")
            return self.disjoint_union([self.construct(c) for c in spec.children])
        if kind is FamilyKind.JOIN_OF:
            require(len(spec.children) >= 2, "join takes at least two arguments")
            result = self.construct(spec.children[0])
            for child in spec.children[1:]:
                result = self.join(result, self.construct(child))
            return result

        require(len(spec.params) == _ARITY[kind],
                f"{kind.value} takes {_ARITY[kind]} integer parameter(s)", params=list(spec.params))
        p = spec.params
        if kind is FamilyKind.PATH:
            require(p[0] >= 1, "path: n >= 1", n=p[0])
            return self.path(p[0])
        if kind is FamilyKind.CYCLE:
            require(p[0] >= 3, "cycle: n >= 3", n=p[0])
            return self.cycle(p[0])
        if kind is FamilyKind.STAR:
            require(p[0] >= 2, "star: n >= 2", n=p[0])
            return self.star(p[0])
        if kind is FamilyKind.COMPLETE:
            require(p[0] >= 1, "complete: n >= 1", n=p[0])
            return self.complete(p[0])
        if kind is FamilyKind.DOUBLE_STAR:
            return self.double_star(*p)
        if kind is FamilyKind.A_TREE:
            require(p[0] >= 4, "a_tree: n >= 4", n=p[0])
            return self._path_with_pendant(p[0], 1)
        if kind is FamilyKind.B_TREE:
            require(p[0] >= 6, "b_tree: n >= 6", n=p[0])
            return self._path_with_pendant(p[0], 2)
        if kind is FamilyKind.PNC:
            return self.pnc(*p)
        if kind is FamilyKind.KTILDE:
            require(p[0] >= 2 and p[0] % 2 == 0, "ktilde: order even and >= 2", order=p[0])
            return self.complement(Graph.from_edges(p[0], ((2 * i, 2 * i + 1) for i in range(p[0] // 2))))
        if kind is FamilyKind.BH_GRAPH:
            return self.bh_graph(p[0])
        raise AssertionError(f"unhandled family {kind}")

    def double_star(self, n: int, a: int) -> Graph:
        require(a >= 1, "double_star: a >= 1", a=a)
        require(2 * a <= n - 2, "double_star: 2a <= n - 2", n=n, a=a)
        second = a + 1
        edges = [(0, i) for i in range(1, a + 1)] + [(0, second)]
        edges += [(second, i) for i in range(a + 2, n)]
        return Graph.from_edges(n, edges)

    def pnc(self, n: int, c: int) -> Graph:
        require(n >= 1, "pnc: n >= 1", n=n)
        require(1 <= c <= n, "pnc: 1 <= c <= n", n=n, c=c)
        return self.construct(pnc_spec(n, c))

    def bh_graph(self, m: int) -> Graph:
        require(m >= 3, "bh_graph: m >= 3", m=m)
        n, s = order_for_size(m)
        edges = [(u, v) for u in range(n - 1) for v in range(u + 1, n - 1)]
        edges += [(i, n - 1) for i in range(s)]
        return Graph.from_edges(n, edges)

    def _path_with_pendant(self, n: int, anchor: int) -> Graph:
        edges = [(i, i + 1) for i in range(n - 2)] + [(anchor, n - 1)]
        return Graph.from_edges(n, edges)

    # -- structure --------------------------------------------------------------------

    @staticmethod
    def components(g: Graph) -> list[tuple[int, ...]]:
        rows = g.masks()
        unseen = (1 << g.n) - 1
        found = []
        while unseen:
            start = (unseen & -unseen).bit_length() - 1
            block = 1 << start
            frontier = block
            while frontier:
                reached = 0
                for v in iter_bits(frontier):
                    reached |= rows[v]
                frontier = reached & ~block
                block |= frontier
            found.append(tuple(iter_bits(block)))
            unseen &= ~block
        return found

    def is_connected(self, g: Graph) -> bool:
        return len(self.components(g)) == 1

    def structure_queries(self, g: Graph) -> StructureReport:
        degrees = g.degrees()
        components = []
        for vertices in self.components(g):
            inside = set(vertices)
            edge_count = sum(1 for u, v in g.edges if u in inside)
            top = max(degrees[v] for v in vertices)
            if len(vertices) == 1 or (edge_count == len(vertices) - 1 and top <= 2):
                kind = ComponentKind.PATH
            elif edge_count == len(vertices) and all(degrees[v] == 2 for v in vertices):
                kind = ComponentKind.CYCLE
            else:
                kind = ComponentKind.OTHER
            components.append(Component(vertices, edge_count, kind))
        return StructureReport(
            is_connected=len(components) == 1,
            diameter_le_2=len(components) == 1 and self._diameter_le_2(g),
            max_degree=max(degrees),
            min_degree=min(degrees),
            components=tuple(components),
        )

    @staticmethod
    def _diameter_le_2(g: Graph) -> bool:
        rows = g.masks()
        full = (1 << g.n) - 1
        for u in range(g.n):
            reach = rows[u] | (1 << u)
            for w in iter_bits(rows[u]):
                reach |= rows[w]
            if reach != full:
                return False
        return True


def pnc_spec(n: int, c: int) -> FamilySpec:
    """P_{n,c} = complement((c + c⌊n/c⌋ - n) P_⌊n/c⌋ ∪ (n - c⌊n/c⌋) P_⌈n/c⌉)."""
    short = n // c
    longer = n - c * short
    paths = [FamilySpec.of(FamilyKind.PATH, short)] * (c - longer)
    paths += [FamilySpec.of(FamilyKind.PATH, short + 1)] * longer
    return FamilySpec.complement(FamilySpec.union(*paths))


graph_service = GraphService()
