"""
Unit tests for GraphService.
Constructions, transformations and structure queries.
"""

import unittest
import sys
import os

import networkx as nx

# Add repository root to path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from distspec.core.exceptions import ValidationError
from distspec.models.family import FamilyKind, FamilySpec
from distspec.models.graph import BitGraph, Graph, SetGraph
from distspec.services.graph_service import ComponentKind, GraphService, order_for_size, pnc_spec
from distspec.services.spectral_service import SpectralService
from distspec.utils.graph6 import from_networkx, to_networkx


def spec(kind, *params):
    return FamilySpec.of(kind, *params)


class TestGraphValue(unittest.TestCase):
    """Test the immutable graph value type."""

    def test_representation_choice(self):
        """Test bit rows up to 64 vertices and set rows beyond."""
        self.assertIsInstance(Graph.from_edges(64, [(0, 63)]), BitGraph)
        self.assertIsInstance(Graph.from_edges(65, [(0, 64)]), SetGraph)

    def test_equality_ignores_representation_details(self):
        """Test graphs compare by vertex count and edge set."""
        a = Graph.from_edges(3, [(1, 0), (2, 1)])
        b = Graph.from_edges(3, [(0, 1), (1, 2)])
        self.assertEqual(a, b)
        self.assertEqual(hash(a), hash(b))
        self.assertEqual(a.edges, ((0, 1), (1, 2)))

    def test_rejects_loops_and_bad_vertices(self):
        """Test domain errors name the violated constraint."""
        with self.assertRaises(ValidationError):
            Graph.from_edges(3, [(1, 1)])
        with self.assertRaises(ValidationError) as ctx:
            Graph.from_edges(3, [(0, 3)])
        self.assertIn("vertex", ctx.exception.constraint)
        with self.assertRaises(ValidationError):
            Graph.from_edges(0, [])

    def test_bfs_distances(self):
        """Test BFS on both representations agrees."""
        edges = [(i, i + 1) for i in range(69)]
        big = Graph.from_edges(70, edges)
        self.assertEqual(big.bfs(0)[69], 69)
        small = Graph.from_edges(4, [(0, 1), (2, 3)])
        self.assertEqual(small.bfs(0), [0, 1, -1, -1])


class TestGraphService(unittest.TestCase):
    """Test cases for GraphService constructions."""

    def setUp(self):
        """Set up test fixtures."""
        self.service = GraphService()

    def test_elementary_families(self):
        """Test path, cycle, star and complete graph labelings."""
        self.assertEqual(self.service.path(4).edges, ((0, 1), (1, 2), (2, 3)))
        self.assertEqual(self.service.cycle(5).degrees(), [2] * 5)
        self.assertEqual(self.service.star(5).degrees(), [4, 1, 1, 1, 1])
        self.assertEqual(self.service.complete(6).m, 15)

    def test_complement_of_path_is_path(self):
        """Test P_4 is self-complementary."""
        p4 = self.service.path(4)
        self.assertTrue(nx.is_isomorphic(to_networkx(p4), to_networkx(self.service.complement(p4))))

    def test_double_star(self):
        """Test D_{6,2} degrees and its domain."""
        g = self.service.construct(spec(FamilyKind.DOUBLE_STAR, 6, 2))
        self.assertEqual(g.degrees(), [3, 1, 1, 3, 1, 1])
        with self.assertRaises(ValidationError):
            self.service.construct(spec(FamilyKind.DOUBLE_STAR, 5, 2))

    def test_a_and_b_trees(self):
        """Test A_n and B_n attach the pendant at the second and third path vertex."""
        a = self.service.construct(spec(FamilyKind.A_TREE, 6))
        b = self.service.construct(spec(FamilyKind.B_TREE, 6))
        self.assertTrue(a.has_edge(1, 5))
        self.assertTrue(b.has_edge(2, 5))
        self.assertEqual(a.m, 5)
        with self.assertRaises(ValidationError):
            self.service.construct(spec(FamilyKind.B_TREE, 5))

    def test_pnc(self):
        """Test P_{9,2} is the complement of P_4 and P_5."""
        g = self.service.pnc(9, 2)
        self.assertEqual((g.n, g.m), (9, 29))
        expected = self.service.complement(self.service.disjoint_union([self.service.path(4), self.service.path(5)]))
        self.assertEqual(g, expected)
        self.assertEqual(self.service.pnc(5, 5), self.service.complete(5))
        self.assertEqual(pnc_spec(9, 2).label(), "complement(P_4 ∪ P_5)")

    def test_ktilde(self):
        """Test K̃_6 is 4-regular with 12 edges."""
        g = self.service.construct(spec(FamilyKind.KTILDE, 6))
        self.assertEqual(g.m, 12)
        self.assertEqual(set(g.degrees()), {4})
        with self.assertRaises(ValidationError):
            self.service.construct(spec(FamilyKind.KTILDE, 5))

    def test_bh_graph(self):
        """Test G_m is K_{n-1} plus a vertex of degree s."""
        g = self.service.bh_graph(29)
        self.assertEqual((g.n, g.m), (9, 29))
        self.assertEqual(g.degree(8), 1)

    def test_invalid_parameters(self):
        """Test out-of-domain parameters are rejected."""
        with self.assertRaises(ValidationError):
            self.service.construct(spec(FamilyKind.CYCLE, 2))
        with self.assertRaises(ValidationError):
            self.service.construct(spec(FamilyKind.PNC, 4, 5))
        with self.assertRaises(ValidationError):
            self.service.construct(FamilySpec(FamilyKind.PATH, (3, 4)))

    def test_join(self):
        """Test join adds every cross edge."""
        g = self.service.join(self.service.empty(2), self.service.empty(3))
        self.assertEqual(g.m, 6)
        self.assertTrue(nx.is_isomorphic(to_networkx(g), nx.complete_bipartite_graph(2, 3)))

    def test_identify_with_pendant_on_triangle(self):
        """Test C_3 becomes P_3 and the edge count drops by the common neighbours."""
        g = self.service.identify_with_pendant(self.service.cycle(3), 0, 1)
        self.assertEqual(g.edges, ((0, 1), (0, 2)))

    def test_identify_with_pendant_on_double_star(self):
        """Test the centre edge of D_{6,2} yields the star S_6."""
        d = self.service.double_star(6, 2)
        g = self.service.identify_with_pendant(d, 0, 3)
        self.assertEqual(g.m, 5)
        self.assertEqual(g.degree(0), 5)

    def test_identify_with_pendant_rejects_pendant_edge(self):
        """Test pendant edges are rejected."""
        with self.assertRaises(ValidationError):
            self.service.identify_with_pendant(self.service.path(4), 0, 1)

    def test_shift_neighbors(self):
        """Test moving the neighbour 0 from vertex 1 to vertex 3 on P_4."""
        g = self.service.shift_neighbors(self.service.path(4), 1, 3, [0])
        self.assertEqual(g.edges, ((0, 3), (1, 2), (2, 3)))
        with self.assertRaises(ValidationError):
            self.service.shift_neighbors(self.service.path(4), 1, 3, [2])

    def test_add_and_remove_edge(self):
        """Test edge insertion and deletion guard their preconditions."""
        p4 = self.service.path(4)
        c4 = self.service.add_edge(p4, 0, 3)
        self.assertEqual(c4, self.service.cycle(4))
        self.assertEqual(self.service.remove_edge(c4, 3, 0), p4)
        with self.assertRaises(ValidationError):
            self.service.add_edge(p4, 0, 1)

    def test_relabel(self):
        """Test relabel moves order[i] to position i."""
        g = self.service.relabel(self.service.star(3), [1, 0, 2])
        self.assertEqual(g.degree(1), 2)


class TestStructureQueries(unittest.TestCase):
    """Test component classification and the degree queries."""

    def setUp(self):
        self.service = GraphService()

    def test_complement_of_cycle_and_matchings(self):
        """Test complement(C_5 ∪ 2K_2) has the degree pattern n-2 / n-3."""
        inner = FamilySpec.union(spec(FamilyKind.CYCLE, 5), spec(FamilyKind.PATH, 2), spec(FamilyKind.PATH, 2))
        g = self.service.construct(FamilySpec.complement(inner))
        info = self.service.structure_queries(g)
        self.assertTrue(info.is_connected)
        self.assertTrue(info.diameter_le_2)
        self.assertEqual((info.max_degree, info.min_degree), (7, 6))

        parts = self.service.structure_queries(self.service.construct(inner))
        self.assertEqual(parts.component_kinds, (ComponentKind.CYCLE, ComponentKind.PATH, ComponentKind.PATH))
        self.assertEqual(parts.nontrivial_path_components, 2)
        self.assertEqual(parts.cycle_components, 1)

    def test_isolated_vertex_is_trivial_path(self):
        """Test K_1 components count as paths but not nontrivial ones."""
        info = self.service.structure_queries(Graph.from_edges(3, [(0, 1)]))
        self.assertEqual(info.path_components, 2)
        self.assertEqual(info.nontrivial_path_components, 1)
        self.assertFalse(info.is_connected)

    def test_order_for_size(self):
        """Test the order bracket C(n-1,2) < m <= C(n,2)."""
        self.assertEqual(order_for_size(29), (9, 1))
        self.assertEqual(order_for_size(37), (10, 1))
        self.assertEqual(order_for_size(21), (7, 6))


class TestFamilyLabels(unittest.TestCase):
    """Test the human-readable family notation."""

    def test_labels(self):
        """Test grouped unions, complements and two-parameter families."""
        union = FamilySpec.union(spec(FamilyKind.CYCLE, 5), spec(FamilyKind.PATH, 2), spec(FamilyKind.PATH, 2))
        self.assertEqual(FamilySpec.complement(union).label(), "complement(C_5 ∪ 2K_2)")
        self.assertEqual(spec(FamilyKind.PNC, 9, 2).label(), "P_{9,2}")
        self.assertEqual(spec(FamilyKind.PATH, 1).label(), "K_1")

    def test_expression(self):
        """Test the grammar form of a nested spec."""
        nested = FamilySpec.complement(FamilySpec.union(spec(FamilyKind.CYCLE, 3), spec(FamilyKind.PATH, 2)))
        self.assertEqual(nested.expression(), "complement(union(cycle:3,path:2))")


class TestPendantIdentificationRadius(unittest.TestCase):
    """Test G(uv) on a tree component strictly raises rho of the complement."""

    def setUp(self):
        self.graphs = GraphService()
        self.spectral = SpectralService()
        self.others = [
            [self.graphs.complete(1)],
            [self.graphs.path(2)],
            [self.graphs.cycle(3), self.graphs.complete(1)],
        ]

    def assertRadiusIncreases(self, tree, u, v):
        moved = self.graphs.identify_with_pendant(tree, u, v)
        for rest in self.others:
            before = self.graphs.complement(self.graphs.disjoint_union([tree] + rest))
            after = self.graphs.complement(self.graphs.disjoint_union([moved] + rest))
            rho_before = self.spectral.distance_spectral_radius(before).rho
            rho_after = self.spectral.distance_spectral_radius(after).rho
            self.assertGreater(rho_after, rho_before, msg=f"edge {u}{v}, {len(rest)} other parts")
            self.assertEqual(self.spectral.certify_strict_order(before, after), "a<b")

    def test_double_star_centre_edge(self):
        """Test D_{6,2} with its centre edge identified."""
        tree = self.graphs.double_star(6, 2)
        self.assertRadiusIncreases(tree, 0, 3)
        self.assertRadiusIncreases(tree, 3, 0)

    def test_every_inner_edge_of_a_caterpillar(self):
        """Test each non-pendant edge of a caterpillar and of P_6."""
        caterpillar = Graph.from_edges(8, [(0, 1), (1, 2), (2, 3), (3, 4), (1, 5), (2, 6), (3, 7)])
        for tree in (caterpillar, self.graphs.path(6)):
            inner = [(u, v) for u, v in tree.edges if tree.degree(u) >= 2 and tree.degree(v) >= 2]
            self.assertTrue(inner)
            for u, v in inner:
                self.assertRadiusIncreases(tree, u, v)


class TestConstructionInvariants(unittest.TestCase):
    """Property loops over the constructions and operations."""

    def setUp(self):
        self.service = GraphService()
        self.corpus = [from_networkx(g) for g in nx.graph_atlas_g()[1:300]]

    def test_complement_is_an_involution(self):
        """Test complement(complement(g)) == g over the small-graph atlas."""
        for g in self.corpus:
            self.assertEqual(self.service.complement(self.service.complement(g)), g)

    def test_join_counts(self):
        """Test join has n(g)+n(h) vertices and m(g)+m(h)+n(g)n(h) edges."""
        sample = self.corpus[::23]
        for g in sample:
            for h in sample:
                joined = self.service.join(g, h)
                self.assertEqual(joined.n, g.n + h.n)
                self.assertEqual(joined.m, g.m + h.m + g.n * h.n)

    def test_pnc_degrees_and_size(self):
        """Test P_{n,c} has C(n,2)-(n-c) edges and degrees n-3..n-2 (n-1 only once paths have one vertex)."""
        for n in range(2, 15):
            for c in range(1, n):
                g = self.service.pnc(n, c)
                degrees = [g.degree(v) for v in range(n)]
                self.assertEqual(g.n, n)
                self.assertEqual(g.m, n * (n - 1) // 2 - (n - c), msg=(n, c))
                self.assertGreaterEqual(min(degrees), n - 3, msg=(n, c))
                if 2 * c <= n:
                    self.assertLessEqual(max(degrees), n - 2, msg=(n, c))

    def test_ktilde_size(self):
        """Test K̃_{2a} has C(2a,2)-a edges and is (2a-2)-regular."""
        for a in range(1, 8):
            g = self.service.construct(spec(FamilyKind.KTILDE, 2 * a))
            self.assertEqual(g.m, a * (2 * a - 1) - a)
            self.assertEqual({g.degree(v) for v in range(2 * a)}, {2 * a - 2})


if __name__ == '__main__':
    unittest.main()
